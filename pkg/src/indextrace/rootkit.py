"""Finite root systems from Cartan matrices, with exact rational arithmetic.

Conventions
-----------
* Cartan entries are ``a[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``.
* Roots are integer vectors in the simple-root basis.
* Weights are rational vectors in the fundamental-weight basis.  A vector
  with root coordinates ``r`` has fundamental coordinates ``A r``.
* The invariant form is ``B = D A`` with ``D`` positive diagonal, scaled per
  simple factor so that short roots have ``(alpha, alpha) = 2``.

Simple-root indices in the public API are 1-based, matching the usual
``alpha_1, ..., alpha_r`` labelling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import CapExceeded, DimensionMismatch, IndexOutOfRange, NotFiniteType

__all__ = [
    "CartanMatrix",
    "Root",
    "Weight",
    "RootSystem",
    "build_root_system",
    "inner_product",
    "positive_roots",
    "rho",
    "reflect",
    "weyl_order",
    "rescale_form",
    "to_root_basis",
    "from_root_basis",
    "coroot_pairing",
]

ROOT_CAP = 500

Vector = tuple[Fraction, ...]


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(map(Fraction, row)) for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def _inverse(rows: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    n = len(rows)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [v / p for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


@dataclass(frozen=True)
class CartanMatrix:
    """Validated integer Cartan matrix of finite type (possibly reducible)."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        object.__setattr__(self, "entries", rows)
        self._validate()

    def _validate(self) -> None:
        a = self.entries
        r = len(a)
        if r == 0:
            raise NotFiniteType("Cartan matrix must have rank >= 1")
        if any(len(row) != r for row in a):
            raise DimensionMismatch(f"Cartan matrix is not square: {a}")
        for i in range(r):
            if a[i][i] != 2:
                raise NotFiniteType(f"diagonal entry a[{i+1}][{i+1}] = {a[i][i]} != 2")
            for j in range(r):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise NotFiniteType(f"off-diagonal entry a[{i+1}][{j+1}] > 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise NotFiniteType(f"a[{i+1}][{j+1}] and a[{j+1}][{i+1}] disagree on zero")
                if a[i][j] * a[j][i] not in (0, 1, 2, 3):
                    raise NotFiniteType(f"a[{i+1}][{j+1}]*a[{j+1}][{i+1}] not in {{0,1,2,3}}")
        for k in range(1, r + 1):
            if _det([row[:k] for row in a[:k]]) <= 0:
                raise NotFiniteType(f"leading principal minor of size {k} is not positive")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def symmetrizer(self) -> tuple[Fraction, ...]:
        """Diagonal ``d`` with ``d_i a_ij = d_j a_ji``; smallest ``d_i`` per component is 1."""
        a = self.entries
        r = self.rank
        d: list[Fraction | None] = [None] * r
        for start in range(r):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            component = [start]
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(r):
                    if j == i or a[i][j] == 0:
                        continue
                    want = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = want
                        component.append(j)
                        queue.append(j)
                    elif d[j] != want:
                        raise NotFiniteType("Cartan matrix is not symmetrizable")
            low = min(d[i] for i in component)
            for i in component:
                d[i] = d[i] / low
        return tuple(d)  # type: ignore[arg-type]


@dataclass(frozen=True, order=True)
class Root:
    """A root as an integer vector in the simple-root basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c > 0 for c in self.coords) and any(c < 0 for c in self.coords):
            raise ValueError(f"root coordinates have mixed sign: {self.coords}")

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return "+".join(
            (f"{c}a{i+1}" if c != 1 else f"a{i+1}")
            for i, c in enumerate(self.coords) if c
        ) or "0"


Number = Union[int, Fraction, str]


@dataclass(frozen=True)
class Weight:
    """Rational weight in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Number]):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls([0] * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> Weight:
        """The fundamental weight ``omega_i`` (1-based)."""
        if not 1 <= i <= rank:
            raise IndexOutOfRange(f"fundamental weight index {i} not in 1..{rank}")
        return cls([int(j == i - 1) for j in range(rank)])

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: Weight) -> None:
        if self.rank != other.rank:
            raise DimensionMismatch(f"weights of rank {self.rank} and {other.rank}")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> Weight:
        return Weight(-a for a in self.coords)

    def __mul__(self, k: Number) -> Weight:
        k = Fraction(k)
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    roots: tuple[Root, ...]
    form: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @cached_property
    def positive(self) -> tuple[Root, ...]:
        return tuple(b for b in self.roots if b.is_positive)

    @cached_property
    def cartan_inverse(self) -> tuple[Vector, ...]:
        return _inverse(self.cartan.entries)

    @cached_property
    def _root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def covectors(self) -> dict[Root, Vector]:
        """Per root ``a``: the vector ``((omega_1, a), ..., (omega_r, a))``."""
        inv = self.cartan_inverse
        r = self.rank
        out = {}
        for a in self.roots:
            ba = [sum((self.form[i][j] * a.coords[j] for j in range(r)), Fraction(0)) for i in range(r)]
            out[a] = tuple(sum((inv[j][i] * ba[j] for j in range(r)), Fraction(0)) for i in range(r))
        return out

    def __contains__(self, root: Root) -> bool:
        return root in self._root_set

    def simple_root(self, i: int) -> Root:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple root index {i} not in 1..{self.rank}")
        return Root(tuple(int(j == i - 1) for j in range(self.rank)))


def _reflect_root(a: tuple[tuple[int, ...], ...], coords: tuple[int, ...], i: int) -> tuple[int, ...]:
    n = sum(a[i][j] * coords[j] for j in range(len(coords)))
    return tuple(c - n if j == i else c for j, c in enumerate(coords))


def build_root_system(cartan: CartanMatrix | Sequence[Sequence[int]], cap: int = ROOT_CAP) -> RootSystem:
    """Generate every root by breadth-first reflection closure of the simple roots.

    Raises :class:`NotFiniteType` if more than ``cap`` roots appear.
    """
    if not isinstance(cartan, CartanMatrix):
        cartan = CartanMatrix(cartan)
    a = cartan.entries
    r = cartan.rank
    simple = [tuple(int(j == i) for j in range(r)) for i in range(r)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(r):
            gamma = _reflect_root(a, beta, i)
            if gamma not in seen:
                seen.add(gamma)
                if len(seen) > cap:
                    raise NotFiniteType(f"reflection closure exceeded {cap} roots")
                queue.append(gamma)
    # positive roots first, each half ordered by height
    roots = tuple(sorted((Root(c) for c in seen), key=lambda b: (b.height < 0, abs(b.height), b.coords)))
    d = cartan.symmetrizer()
    form = tuple(tuple(d[i] * a[i][j] for j in range(r)) for i in range(r))
    return RootSystem(cartan=cartan, roots=roots, form=form)


def rescale_form(rs: RootSystem, factor: Number) -> RootSystem:
    """Same roots, invariant form multiplied by ``factor`` (> 0)."""
    f = Fraction(factor)
    if f <= 0:
        raise ValueError("form scale must be positive")
    return RootSystem(rs.cartan, rs.roots, tuple(tuple(f * v for v in row) for row in rs.form))


def to_root_basis(rs: RootSystem, x: Weight | Root | Sequence[Number]) -> Vector:
    """Simple-root coordinates of a weight (exact, via the inverse Cartan matrix)."""
    if isinstance(x, Root):
        vec = tuple(Fraction(c) for c in x.coords)
        if len(vec) != rs.rank:
            raise DimensionMismatch(f"root of rank {len(vec)} in rank-{rs.rank} system")
        return vec
    coords = x.coords if isinstance(x, Weight) else tuple(Fraction(c) for c in x)
    if len(coords) != rs.rank:
        raise DimensionMismatch(f"weight of rank {len(coords)} in rank-{rs.rank} system")
    inv = rs.cartan_inverse
    return tuple(sum(inv[i][j] * coords[j] for j in range(rs.rank)) for i in range(rs.rank))


def from_root_basis(rs: RootSystem, vec: Sequence[Number]) -> Weight:
    if len(vec) != rs.rank:
        raise DimensionMismatch(f"vector of length {len(vec)} in rank-{rs.rank} system")
    a = rs.cartan.entries
    v = [Fraction(c) for c in vec]
    return Weight(sum(a[i][j] * v[j] for j in range(rs.rank)) for i in range(rs.rank))


def _form(rs: RootSystem, u: Vector, v: Vector) -> Fraction:
    b = rs.form
    return sum((u[i] * b[i][j] * v[j] for i in range(rs.rank) for j in range(rs.rank) if u[i] and v[j]),
               Fraction(0))


def inner_product(rs: RootSystem, a: Weight | Root, b: Weight | Root) -> Fraction:
    """Invariant form ``(a, b)``; arguments may be weights or roots."""
    if isinstance(a, Weight) and isinstance(b, Root) and a.rank == rs.rank and b in rs:
        return sum((c * v for c, v in zip(a.coords, rs.covectors[b]) if c and v), Fraction(0))
    return _form(rs, to_root_basis(rs, a), to_root_basis(rs, b))


def coroot_pairing(rs: RootSystem, w: Weight | Root, beta: Root) -> Fraction:
    """``<w, beta^vee> = 2 (w, beta) / (beta, beta)``."""
    return 2 * inner_product(rs, w, beta) / inner_product(rs, beta, beta)


def positive_roots(rs: RootSystem) -> list[Root]:
    return list(rs.positive)


def rho(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots, in fundamental-weight coordinates.

    Checked against the all-ones vector; a mismatch means the root generation
    is broken.
    """
    half = [Fraction(sum(b.coords[i] for b in rs.positive), 2) for i in range(rs.rank)]
    w = from_root_basis(rs, half)
    if any(c != 1 for c in w.coords):
        raise AssertionError(f"rho has fundamental coordinates {w}, expected all 1")
    return w


def reflect(rs: RootSystem, w: Weight, simple_index: int) -> Weight:
    """Simple reflection ``s_i(w) = w - <w, alpha_i^vee> alpha_i`` (1-based ``i``)."""
    if not 1 <= simple_index <= rs.rank:
        raise IndexOutOfRange(f"simple index {simple_index} not in 1..{rs.rank}")
    if w.rank != rs.rank:
        raise DimensionMismatch(f"weight of rank {w.rank} in rank-{rs.rank} system")
    i = simple_index - 1
    a = rs.cartan.entries
    ci = w.coords[i]
    # alpha_i in fundamental coordinates is column i of A
    return Weight(w.coords[j] - ci * a[j][i] for j in range(rs.rank))


def weyl_order(rs: RootSystem, cap: int = 100_000) -> int:
    """Order of the Weyl group, as the size of the (free) orbit of rho."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    start = rho(rs)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, rs.rank + 1):
            v = reflect(rs, w, i)
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise CapExceeded(f"Weyl orbit exceeded cap {cap}")
                queue.append(v)
    return len(seen)
