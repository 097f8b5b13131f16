from fractions import Fraction

import pytest

from indextrace.errors import IndexOutOfRange
from indextrace.pairs import (
    COMPACT,
    NONCOMPACT,
    STANDARD_PAIRS,
    compact_simple_roots,
    dim_gk,
    make_pair,
    rho_c,
    rho_n,
    standard_pair,
)
from indextrace.rootkit import Root, Weight, build_root_system, from_root_basis, rho

A2 = [[2, -1], [-1, 2]]


def test_sl2r():
    p = make_pair(build_root_system([[2]]), {1})
    assert p.compact_positive == ()
    assert p.noncompact_positive == (Root((1,)),)
    assert dim_gk(p) == 2
    assert rho_c(p) == Weight([0])
    assert rho_n(p) == Weight([1])  # alpha/2 = omega


def test_su21():
    rs = build_root_system(A2)
    p = make_pair(rs, {2})
    assert set(p.compact_positive) == {Root((1, 0))}
    assert set(p.noncompact_positive) == {Root((0, 1)), Root((1, 1))}
    assert dim_gk(p) == 4
    assert rho_c(p) == from_root_basis(rs, (Fraction(1, 2), 0))
    assert rho_n(p) == from_root_basis(rs, (Fraction(1, 2), 1))


def test_all_compact():
    p = make_pair(build_root_system(A2), set())
    assert len(p.compact_positive) == 3
    assert dim_gk(p) == 0
    assert rho_c(p) == rho(p.rs)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        make_pair(build_root_system(A2), {3})
    with pytest.raises(IndexOutOfRange):
        make_pair(build_root_system(A2), {0})


@pytest.mark.parametrize("name", sorted(STANDARD_PAIRS))
def test_grading_additive_exhaustive(name):
    p = standard_pair(name)
    roots = {b.coords: b for b in p.rs.roots}
    for b in p.rs.roots:
        for g in p.rs.roots:
            s = tuple(x + y for x, y in zip(b.coords, g.coords))
            if s in roots:
                assert p.grading[roots[s]] == (p.grading[b] + p.grading[g]) % 2
                if p.grading[b] == p.grading[g] == COMPACT:
                    assert p.grading[roots[s]] == COMPACT


@pytest.mark.parametrize("name", sorted(STANDARD_PAIRS))
def test_rho_partition_and_even_dim(name):
    p = standard_pair(name)
    assert rho_c(p) + rho_n(p) == rho(p.rs)
    assert dim_gk(p) % 2 == 0
    assert dim_gk(p) == sum(1 for b in p.rs.roots if p.grading[b] == NONCOMPACT)


@pytest.mark.parametrize("name,dim", [("SL(2,R)", 2), ("SU(2,1)", 4), ("Sp(4,R)", 6), ("Sp(1,1)", 4),
                                      ("G2(2)", 8), ("SU(2,2)", 8), ("SU(3,1)", 6), ("SO(5,2)", 10),
                                      ("Sp(6,R)", 12), ("SU(4)", 0)])
def test_dim_symmetric_space(name, dim):
    # dim G - dim K for the named real forms
    assert dim_gk(standard_pair(name)) == dim


def test_compact_simple_roots_may_be_nonsimple():
    p = standard_pair("Sp(1,1)")
    assert set(compact_simple_roots(p)) == {Root((1, 0)), Root((1, 2))}
    p = standard_pair("G2(2)")
    assert set(compact_simple_roots(p)) == {Root((0, 1)), Root((2, 3))}
