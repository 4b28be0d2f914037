"""The rank-4 hermitian family, reduction, and the scalar-restriction map."""

import pytest

from oracles import symbolic_family_det
from hermlat.forms import (
    CyclicForm,
    HermitianForm,
    aug_form,
    b_sequence,
    build_form,
    build_form_power,
    flatten_vector,
    form_det,
    module_basis_vector,
    rational_congruence_check,
    reduce_form,
    sesq_eval,
    substitute_power,
    transfer,
)
from hermlat.ring import CyclicElement, LaurentPoly, sym_power

t = sym_power(1)
L = build_form(t)
L1_MATRIX = ((7, 6, 3, 2), (6, 7, 2, 3), (3, 2, 2, 0), (2, 3, 0, 2))


def test_entry_11_of_family():
    assert L.entry(0, 0) == LaurentPoly({0: 3, 1: 1, -1: 1, 2: 1, -2: 1})


def test_family_at_zero():
    F = build_form(LaurentPoly.zero())
    rows = [
        (1, 0, 1, 0),
        (0, 1, 0, 1),
        (1, 0, 2, 0),
        (0, 1, 0, 2),
    ]
    for i in range(4):
        for j in range(4):
            assert F.entry(i, j) == LaurentPoly.const(rows[i][j])


def test_family_rejects_non_self_conjugate():
    with pytest.raises(ValueError):
        build_form(LaurentPoly.monomial(1))


def test_hermitian_validation():
    bad = [[LaurentPoly.monomial(1)]]
    with pytest.raises(ValueError):
        HermitianForm(bad)


def test_b_sequence():
    assert [b_sequence(k) for k in (1, 2, 3, 4)] == [1, 5, 21, 85]
    with pytest.raises(ValueError):
        b_sequence(0)


def test_power_family():
    assert build_form_power(1).entry(0, 0) == L.entry(0, 0)
    assert build_form_power(2).entry(0, 0) == build_form(sym_power(5)).entry(0, 0)
    assert build_form_power(3).entry(3, 3) == LaurentPoly.const(2)


def test_substitute_power_on_form():
    assert substitute_power(L, 1).entry(0, 0) == L.entry(0, 0)
    F5 = substitute_power(L, 5)
    assert F5.entry(0, 0) == LaurentPoly({0: 3, 5: 1, -5: 1, 10: 1, -10: 1})
    assert F5.entry(0, 0) == build_form_power(2).entry(0, 0)


def test_det_is_one():
    assert form_det(L) == LaurentPoly.one()
    assert form_det(build_form(LaurentPoly.zero())) == LaurentPoly.one()
    assert form_det(build_form(sym_power(2))) == LaurentPoly.one()


def test_det_symbolic_oracle():
    # determinant over Z[a] collapses to 1, independently of any substitution
    assert symbolic_family_det() == [1]


def test_aug_form():
    assert aug_form(L).gram == L1_MATRIX
    F0 = build_form(LaurentPoly.zero())
    assert aug_form(F0).gram == ((1, 0, 1, 0), (0, 1, 0, 1), (1, 0, 2, 0), (0, 1, 0, 2))
    for k in (1, 2, 3):
        assert aug_form(build_form_power(k)).gram == L1_MATRIX


def test_reduce_form():
    R1 = reduce_form(L, 1)
    assert R1.constant_matrix().gram == L1_MATRIX
    assert reduce_form(L, 2).entry(0, 0).coeffs == (5, 2)
    for k in (1, 2, 3):
        assert reduce_form(build_form_power(k), b_sequence(k)).is_constant()
    assert not reduce_form(build_form_power(2), 3).is_constant()


def test_sesq_eval_convention():
    # linear in the first slot, conjugate-linear in the second
    e1 = [LaurentPoly.one(), LaurentPoly.zero(), LaurentPoly.zero(), LaurentPoly.zero()]
    xe1 = [LaurentPoly.monomial(1), LaurentPoly.zero(), LaurentPoly.zero(), LaurentPoly.zero()]
    assert sesq_eval(L, e1, e1) == L.entry(0, 0)
    assert sesq_eval(L, xe1, xe1) == L.entry(0, 0)
    assert sesq_eval(L, xe1, e1) == LaurentPoly.monomial(1) * L.entry(0, 0)
    assert sesq_eval(L, e1, xe1) == LaurentPoly.monomial(-1) * L.entry(0, 0)


def test_sesq_eval_norm_element_absorption():
    # <N v, e> = N * aug(<v, e>)
    n = 3
    Ln = reduce_form(L, n)
    N = CyclicElement.norm_element(n)
    one, zero = CyclicElement.one(n), CyclicElement.zero(n)
    v = [zero, zero, one, one]
    Nv = [zero, zero, N, N]
    e1 = module_basis_vector(4, 0, n)
    base = sesq_eval(Ln, v, e1)
    assert sesq_eval(Ln, Nv, e1) == CyclicElement(n, (base.aug(),) * n)


def test_transfer_matches_sesq_pi():
    # each transfer entry is the identity coefficient of the hermitian pairing
    n = 3
    Ln = reduce_form(L, n)
    G = transfer(Ln)
    for i in range(4):
        for j in range(n):
            for i2 in range(4):
                for j2 in range(n):
                    u = module_basis_vector(4, i, n)
                    u[i] = CyclicElement.monomial(n, j)
                    v = module_basis_vector(4, i2, n)
                    v[i2] = CyclicElement.monomial(n, j2)
                    assert G.entry(i * n + j, i2 * n + j2) == sesq_eval(Ln, u, v).pi()


def test_transfer_small_n():
    assert transfer(reduce_form(L, 1)).gram == L1_MATRIX
    assert transfer(reduce_form(L, 2)).diagonal() == (5, 5, 5, 5, 2, 2, 2, 2)
    assert transfer(reduce_form(L, 3)).diagonal() == (3,) * 6 + (2,) * 6


def test_transfer_at_constant_form_is_block_identity():
    # constant entries spread to c * I_n blocks
    Rn = reduce_form(build_form_power(2), b_sequence(2))
    G = transfer(Rn)
    n = b_sequence(2)
    base = Rn.constant_matrix()
    for i in range(4):
        for i2 in range(4):
            for j in range(n):
                for j2 in range(n):
                    want = base.entry(i, i2) if j == j2 else 0
                    assert G.entry(i * n + j, i2 * n + j2) == want


def test_flatten_vector():
    n = 3
    v = [CyclicElement.zero(n)] * 2 + [CyclicElement.norm_element(n)] * 2
    assert flatten_vector(v) == (0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1)
    e2x = module_basis_vector(4, 1, n)
    e2x[1] = CyclicElement.monomial(n, 2)
    assert flatten_vector(e2x) == (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0)


def test_rational_congruence():
    for a in (t, LaurentPoly.zero(), sym_power(3), sym_power(5), sym_power(21)):
        assert rational_congruence_check(a)


def test_form_json_round_trip():
    data = L.to_json_dict()
    back = HermitianForm.from_json_dict(data)
    assert back.to_json_dict() == data
    Rn = reduce_form(L, 4)
    assert CyclicForm.from_json_dict(Rn.to_json_dict()).to_json_dict() == Rn.to_json_dict()
