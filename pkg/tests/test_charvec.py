"""Characteristic vectors, defect, standardness certificates, witness family."""

import pytest

from hermlat.charvec import (
    CharReport,
    char_rep,
    char_witness,
    check_orthonormal_certificate,
    defect,
    defect_certificate_check,
    floor3_multiplier,
    fold_coeffs,
    is_characteristic,
    is_standard,
    min_characteristic,
    orthonormal_certificate,
    specific_criterion,
    wa_norm,
    witness_vector,
)
from hermlat.lattice import GramMatrix, direct_sum, norm
from hermlat.ring import LaurentPoly, sym_power
from hermlat.roots import gamma_gram, identity_gram


def test_char_rep_examples(vn):
    assert char_rep(identity_gram(4)) == (1, 1, 1, 1)
    assert char_rep(gamma_gram(8)) == (0,) * 8
    for n in (1, 2, 3, 4):
        c = char_rep(vn(n))
        w = char_witness(n)
        assert all((a - b) % 2 == 0 for a, b in zip(c, w))


def test_char_rep_even_determinant_rejected():
    with pytest.raises(ValueError):
        char_rep(GramMatrix([[2, 0], [0, 2]]))


def test_is_characteristic(vn):
    V3 = vn(3)
    w = char_witness(3)
    assert is_characteristic(V3, w)
    w1 = list(w)
    w1[0] -= 2
    assert is_characteristic(V3, w1)
    assert not is_characteristic(identity_gram(2), (1, 0))


def test_min_characteristic_i4():
    rep = min_characteristic(identity_gram(4))
    assert rep.min_norm == 4 and rep.mu == 16 and rep.defect == 0
    assert rep.is_standard
    assert len(rep.minimizers) == 8


def test_min_characteristic_direct_sum():
    rep = min_characteristic(direct_sum(gamma_gram(8), identity_gram(4)))
    assert rep.mu == 16 and rep.defect == 1


def test_min_characteristic_v3(vn):
    rep = min_characteristic(vn(3))
    assert rep.min_norm == 4 and rep.mu == 24 and rep.defect == 1
    expected = set()
    w = char_witness(3)
    for i in range(3):
        for mods in ((0,), (1,), (0, 3), (1, 2)):
            v = list(w)
            for m in mods:
                v[m * 3 + i] -= 2
            expected.add(tuple(v) if next(c for c in v if c) > 0 else tuple(-c for c in v))
    assert set(rep.minimizers) == expected


def test_mu_counts_zero_vector_once():
    rep = min_characteristic(gamma_gram(8))
    assert rep.min_norm == 0 and rep.mu == 1 and rep.defect == 1
    assert rep.minimizers == ((0,) * 8,)


def test_defect_examples(vn):
    assert defect(vn(1)) == 0
    assert defect(gamma_gram(16)) == 2
    assert defect(vn(3)) == 1


def test_is_standard_small_n(vn):
    ok, cert = is_standard(vn(2))
    assert ok and cert["kind"] == "orthonormal_basis" and len(cert["columns"]) == 8
    assert check_orthonormal_certificate(vn(2), cert)


def test_is_standard_v3_witness(vn):
    ok, cert = is_standard(vn(3))
    assert not ok
    assert cert["kind"] == "characteristic_witness"
    assert cert["norm"] == 4 and cert["rank"] == 12
    assert is_characteristic(vn(3), cert["vector"])


def test_is_standard_even_lattice():
    ok, cert = is_standard(gamma_gram(8))
    assert not ok and cert["norm"] == 0
    assert cert["vector"] == [0] * 8


def test_orthonormal_certificate_checker(vn):
    cert = orthonormal_certificate(vn(1))
    assert check_orthonormal_certificate(vn(1), cert)
    bad = {"kind": "orthonormal_basis", "columns": [[1, 0, 0, 0]] * 4}
    assert not check_orthonormal_certificate(vn(1), bad)
    assert not check_orthonormal_certificate(vn(1), {"kind": "other"})


def test_defect_certificate_examples(vn):
    V6 = vn(6)
    w0 = witness_vector(6, floor3_multiplier(6))
    assert defect_certificate_check(V6, w0, 2)
    assert defect_certificate_check(vn(3), witness_vector(3, (1,)), 1)
    assert not defect_certificate_check(identity_gram(4), (1, 1, 1, 1), 1)
    assert not defect_certificate_check(identity_gram(4), (1, 1, 1), 0)


def test_char_witness_shape():
    assert char_witness(3) == (0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        char_witness(0)


def test_witness_vector_and_fold():
    assert fold_coeffs(3, (1, 0, 0, 2)) == [3, 0, 0]
    assert witness_vector(2, (1,)) == (-2, 0, 0, 0, 1, 1, 1, 1)


def test_wa_norm_closed_form(vn):
    # the 4n-8 identity needs n >= 3: below that the cyclic autocorrelations
    # of the constant multiplier wrap around (checked against direct norms)
    for n in (3, 5, 9, 12):
        assert wa_norm(n, (1,)) == 4 * n - 8
    for n in (1, 2, 3, 5, 9, 12):
        assert wa_norm(n, ()) == 4 * n
    for n in (9, 10, 14):
        assert wa_norm(n, (1, 0, 0, 1, 0, 0, 1)) == 4 * n - 24
    assert wa_norm(1, (1,)) == norm(vn(1), witness_vector(1, (1,)))
    assert wa_norm(2, (1,)) == norm(vn(2), witness_vector(2, (1,)))


def test_wa_norm_matches_direct_eval(vn):
    # the closed form against honest Gram arithmetic, several multipliers
    cases = [(3, (1,)), (4, (1, 2)), (5, (0, 1, 1)), (6, (1, 0, 0, 1)), (2, (1, 1))]
    for n, a in cases:
        G = vn(n)
        assert norm(G, witness_vector(n, a)) == wa_norm(n, a)
        assert is_characteristic(G, witness_vector(n, a))


def test_floor3_multiplier():
    assert floor3_multiplier(6) == [1, 0, 0, 1]
    assert floor3_multiplier(9) == [1, 0, 0, 1, 0, 0, 1]
    assert floor3_multiplier(2) == [0]


def test_specific_criterion_examples():
    holds, m, fn = specific_criterion(sym_power(1))
    assert holds and m == 1 and fn(5) == 12 and fn(9) == 28
    holds0, _, fn0 = specific_criterion(LaurentPoly.zero())
    assert not holds0 and fn0 is None
    holds1, m1, fn1 = specific_criterion(LaurentPoly({0: 1, 1: 1, -1: 1}))
    assert holds1 and m1 == 1 and fn1(5) == 4 * 5 - 8


def test_specific_criterion_domain():
    _, m, fn = specific_criterion(sym_power(5))
    assert m == 5
    with pytest.raises(ValueError):
        fn(20)
    assert fn(21) == 4 * 21 - 8
    with pytest.raises(ValueError):
        specific_criterion(LaurentPoly.monomial(2))


def test_char_report_round_trip(vn):
    rep = min_characteristic(vn(3))
    assert CharReport.from_json_dict(rep.to_json_dict()) == rep
