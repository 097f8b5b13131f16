"""Equal-rank pairs (g, k) as Z/2 gradings of a root system.

Noncompactness is declared on simple roots and extended additively: a root
``sum c_i alpha_i`` is noncompact iff the sum of ``c_i`` over the marked
simple roots is odd.  Every marking gives a valid equal-rank pair, including
the empty one (``G`` compact).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import IndexOutOfRange
from .rootkit import Root, RootSystem, Weight, build_root_system, from_root_basis, rho

__all__ = [
    "COMPACT",
    "NONCOMPACT",
    "CompactPair",
    "make_pair",
    "rho_c",
    "rho_n",
    "dim_gk",
    "compact_simple_roots",
    "STANDARD_PAIRS",
    "standard_pair",
]

COMPACT = 0
NONCOMPACT = 1


@dataclass(frozen=True)
class CompactPair:
    rs: RootSystem
    noncompact_simple: frozenset[int]
    grading: Mapping[Root, int]

    @cached_property
    def compact_positive(self) -> tuple[Root, ...]:
        return tuple(b for b in self.rs.positive if self.grading[b] == COMPACT)

    @cached_property
    def noncompact_positive(self) -> tuple[Root, ...]:
        return tuple(b for b in self.rs.positive if self.grading[b] == NONCOMPACT)

    def __hash__(self) -> int:
        return hash((self.rs.cartan, self.noncompact_simple))

    def __repr__(self) -> str:
        return f"CompactPair(cartan={self.rs.cartan.entries}, noncompact_simple={sorted(self.noncompact_simple)})"


def _grade(root: Root, marks: frozenset[int]) -> int:
    return sum(root.coords[i - 1] for i in marks) % 2


def _check_pair(p: CompactPair) -> None:
    for b in p.rs.roots:
        if p.grading[-b] != p.grading[b]:
            raise AssertionError(f"grading not symmetric under negation at {b}")
        for g in p.rs.roots:
            s = tuple(x + y for x, y in zip(b.coords, g.coords))
            if not any(s) or (max(s) > 0 and min(s) < 0):
                continue
            sr = Root(s)
            if sr not in p.rs:
                continue
            if p.grading[sr] != (p.grading[b] + p.grading[g]) % 2:
                raise AssertionError(f"grading not additive at {b} + {g}")
            if p.grading[b] == p.grading[g] == COMPACT and p.grading[sr] != COMPACT:
                raise AssertionError("compact roots not closed")


def make_pair(rs: RootSystem, noncompact_simple: Iterable[int]) -> CompactPair:
    """Grade every root of ``rs`` from a set of 1-based noncompact simple indices."""
    marks = frozenset(int(i) for i in noncompact_simple)
    for i in marks:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"noncompact simple index {i} not in 1..{rs.rank}")
    grading = {b: _grade(b, marks) for b in rs.roots}
    p = CompactPair(rs=rs, noncompact_simple=marks, grading=grading)
    _check_pair(p)
    return p


def _half_sum(p: CompactPair, roots: Iterable[Root]) -> Weight:
    r = p.rs.rank
    total = [Fraction(0)] * r
    for b in roots:
        for i in range(r):
            total[i] += b.coords[i]
    return from_root_basis(p.rs, [t / 2 for t in total])


def rho_c(p: CompactPair) -> Weight:
    return _half_sum(p, p.compact_positive)


def rho_n(p: CompactPair) -> Weight:
    w = _half_sum(p, p.noncompact_positive)
    if rho_c(p) + w != rho(p.rs):
        raise AssertionError("rho_c + rho_n != rho")
    return w


def dim_gk(p: CompactPair) -> int:
    """``dim G/K`` for an equal-rank pair: the number of noncompact roots."""
    return 2 * len(p.noncompact_positive)


def compact_simple_roots(p: CompactPair) -> tuple[Root, ...]:
    """Simple roots of the compact subsystem: indecomposable positive compact roots.

    These need not be simple in the full system (e.g. ``C2`` with its short
    simple root marked).
    """
    pos = set(p.compact_positive)
    out = []
    for b in p.compact_positive:
        decomposable = any(
            Root(tuple(x - y for x, y in zip(b.coords, g.coords))) in pos
            for g in pos
            if g != b and all(x >= y for x, y in zip(b.coords, g.coords))
        )
        if not decomposable:
            out.append(b)
    return tuple(out)


# name -> (Cartan matrix, noncompact simple indices)
STANDARD_PAIRS: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    "SL(2,R)": (((2,),), (1,)),
    "SU(2)": (((2,),), ()),
    "SU(2,1)": (((2, -1), (-1, 2)), (2,)),
    "SU(3)": (((2, -1), (-1, 2)), ()),
    # alpha_1 long, alpha_2 short
    "Sp(4,R)": (((2, -1), (-2, 2)), (1,)),
    "Sp(1,1)": (((2, -1), (-2, 2)), (2,)),
    "Sp(2)": (((2, -1), (-2, 2)), ()),
    "G2(2)": (((2, -1), (-3, 2)), (1,)),
    "SU(2,2)": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (2,)),
    "SU(3,1)": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (3,)),
    "SO(5,2)": (((2, -1, 0), (-1, 2, -1), (0, -2, 2)), (1,)),
    "Sp(6,R)": (((2, -1, 0), (-1, 2, -2), (0, -1, 2)), (3,)),
    "SU(4)": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), ()),
}


def standard_pair(name: str) -> CompactPair:
    cartan, marks = STANDARD_PAIRS[name]
    return make_pair(build_root_system(cartan), marks)
