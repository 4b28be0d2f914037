"""Integer lattices: validation, reduction, exact enumeration."""

import pytest

from oracles import brute_force_coset, brute_force_short, frac_det
from hermlat.lattice import (
    BudgetExceeded,
    EnumerationResult,
    GramMatrix,
    canonical_rep,
    direct_sum,
    enumerate_coset,
    enumerate_short,
    inner,
    lll_reduce,
    norm,
    unit_pair_count,
    validate,
)
from hermlat.roots import d_gram, gamma_gram, identity_gram


def test_gram_validation():
    with pytest.raises(ValueError):
        GramMatrix([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        GramMatrix([[1, 0], [0]])
    with pytest.raises(ValueError):
        GramMatrix([[True, 0], [0, 1]])


def test_determinant_and_minors():
    G = GramMatrix([[2, 1], [1, 1]])
    assert G.determinant() == 1
    assert G.leading_principal_minors() == [2, 1]
    assert G.is_positive_definite()
    assert not GramMatrix([[0, 1], [1, 0]]).is_positive_definite()
    assert not GramMatrix([[-1, 0], [0, 1]]).is_positive_definite()


def test_determinant_matches_fraction_elimination():
    for G in (gamma_gram(12), d_gram(8), identity_gram(5)):
        assert G.determinant() == int(frac_det(G.gram))
    assert d_gram(8).determinant() == 4


def test_validate_report(vn):
    rep = validate(vn(1), "unimodular")
    assert rep["determinant"] == 1 and rep["positive_definite"]
    assert rep["parity"] == "odd" and rep["rank"] == 4
    assert rep["meets_expectation"]

    rep3 = validate(vn(3), "unimodular")
    assert rep3["rank"] == 12 and rep3["determinant"] == 1
    assert rep3["positive_definite"] and rep3["parity"] == "odd"

    small = validate(GramMatrix([[2, 1], [1, 1]]), "positive_definite")
    assert small["determinant"] == 1 and small["meets_expectation"]

    assert not validate(GramMatrix([[2, 0], [0, 2]]), "unimodular")["meets_expectation"]


def test_inner_norm(vn):
    for n in (1, 2, 3, 5):
        G = vn(n)
        e3 = tuple(1 if i == 2 * n else 0 for i in range(4 * n))
        assert norm(G, e3) == 2
    w = (0,) * 6 + (1,) * 6
    assert norm(vn(3), w) == 12
    assert inner(identity_gram(2), (1, 0), (0, 1)) == 0
    with pytest.raises(ValueError):
        norm(identity_gram(2), (1, 0, 0))


def test_direct_sum():
    assert direct_sum(identity_gram(4), identity_gram(4)).gram == identity_gram(8).gram
    S = direct_sum(gamma_gram(8), identity_gram(4))
    assert S.rank == 12 and S.determinant() == 1
    D = direct_sum(d_gram(8), d_gram(8))
    assert D.rank == 16 and D.determinant() == 16


def test_lll_identity():
    G2, U = lll_reduce(identity_gram(4))
    assert sorted(G2.diagonal()) == [1, 1, 1, 1]
    assert G2.determinant() == 1


def test_lll_contract(vn):
    G = vn(3)
    G2, U = lll_reduce(G)
    r = G.rank
    # U^T G U = G' and |det U| = 1
    for i in range(r):
        col_i = [U[k][i] for k in range(r)]
        for j in range(r):
            col_j = [U[k][j] for k in range(r)]
            assert inner(G, col_i, col_j) == G2.entry(i, j)
    assert abs(frac_det(U)) == 1
    assert G2.determinant() == G.determinant()


def test_lll_gamma12_reaches_minimum():
    G2, _ = lll_reduce(gamma_gram(12))
    assert min(G2.diagonal()) == 2


def test_enumerate_short_examples():
    res = enumerate_short(identity_gram(2), 1)
    assert set(res.pairs) == {(1, 0), (0, 1)}
    e8 = gamma_gram(8)
    assert len(enumerate_short(e8, 2).pairs) == 120
    assert len(enumerate_short(d_gram(8), 2).pairs) == 56


def test_enumerate_short_vs_brute_force(vn):
    for G in (vn(1), GramMatrix([[2, 1], [1, 1]]), d_gram(4)):
        for bound in (1, 2, 4, 7):
            got = set(enumerate_short(G, bound).pairs)
            assert got == brute_force_short(G.gram, bound)


def test_enumerate_short_invariants(vn):
    G = vn(2)
    res = enumerate_short(G, 4)
    assert res.bound == 4
    seen = set()
    for v in res.pairs:
        assert 0 < norm(G, v) <= 4
        assert canonical_rep(v) == v
        assert v not in seen
        seen.add(v)
    assert list(res.pairs) == sorted(res.pairs)
    with pytest.raises(ValueError):
        enumerate_short(G, 0)


def test_enumerate_coset_examples(vn):
    got = enumerate_coset(identity_gram(4), (1, 1, 1, 1), 4)
    assert len(got.pairs) == 8
    assert all(norm(identity_gram(4), v) == 4 for v in got.pairs)

    e8 = gamma_gram(8)
    z = enumerate_coset(e8, (0,) * 8, 0)
    assert z.pairs == ((0,) * 8,)

    from hermlat.charvec import char_rep

    V3 = vn(3)
    res = enumerate_coset(V3, char_rep(V3), 4)
    assert len(res.pairs) == 12


def test_enumerate_coset_vs_brute_force():
    G = GramMatrix([[2, 1, 0], [1, 2, 1], [0, 1, 3]])
    for c in ((0, 0, 0), (1, 0, 1), (1, 1, 1)):
        for bound in (0, 3, 8, 12):
            got = set(enumerate_coset(G, c, bound).pairs)
            assert got == brute_force_coset(G.gram, c, bound)


def test_coset_zero_membership():
    G = identity_gram(3)
    assert (0, 0, 0) in enumerate_coset(G, (0, 0, 0), 5).pairs
    assert (0, 0, 0) in enumerate_coset(G, (2, 0, -4), 5).pairs
    assert all(any(v) for v in enumerate_coset(G, (1, 0, 0), 5).pairs)


def test_unit_pair_count(vn):
    assert unit_pair_count(identity_gram(12)) == 12
    assert unit_pair_count(gamma_gram(12)) == 0
    assert unit_pair_count(vn(1)) == 4


def test_budget_exceeded(vn):
    with pytest.raises(BudgetExceeded):
        enumerate_short(vn(5), 8, max_nodes=50)
    try:
        enumerate_short(vn(5), 8, max_nodes=50)
    except BudgetExceeded as exc:
        assert exc.nodes >= 50 and exc.budget == 50


def test_enumeration_result_round_trip():
    res = enumerate_short(identity_gram(2), 2)
    back = EnumerationResult.from_json_dict(res.to_json_dict())
    assert back == res


def test_canonical_rep():
    assert canonical_rep((-1, 2)) == (1, -2)
    assert canonical_rep((0, -3, 1)) == (0, 3, -1)
    assert canonical_rep((0, 0)) == (0, 0)
