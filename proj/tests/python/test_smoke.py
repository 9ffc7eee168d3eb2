import pytest

pe = pytest.importorskip("period_engine")


def test_clausen_identity():
    f = pe.hypergeometric(["1/8", "3/8"], ["1"], 16)
    g = pe.hypergeometric(["1/4", "1/2", "3/4"], ["1", "1"], 16)
    assert f * f == g


def test_series_reversion_roundtrip():
    z = pe.Series.variable()
    f = z + z * z
    g = f.reverse(10)
    assert f.compose(g) == z
    assert g.coeff(2) == "-1"
    assert g.coeff(4) == "-5"


def test_elliptic_yukawa_is_one():
    import json

    lpf = pe.builtin_operator("lpf")
    y = json.loads(pe.yukawa(lpf, 12))
    assert y["algebraic"]["exponent"] == "-1"
    assert y["algebraic"]["den"] == ["1", "-1"]
    assert y["flat"]["coeffs"][0] == "1"
    assert all(c == "0" for c in y["flat"]["coeffs"][1:])


def test_fricke_operator_symmetry():
    lpf = pe.builtin_operator("lpf")
    assert lpf.pullback_affine("-1", "1") == lpf


def test_symmetric_square_matches_k3():
    tri = pe.builtin_operator("ltriangular")
    assert tri.symmetric_square() == pe.builtin_operator("lk3")
    assert pe.builtin_operator("lk3").is_symmetric_square() is not None


def test_j_expansion_744():
    le8 = pe.builtin_operator("le8")
    _, z_of_q = pe.mirror_map(le8, 8)
    one = pe.Series.constant("1")
    j = one / (z_of_q * (one - z_of_q))
    # in the arithmetic gauge q -> q/432 the constant term is 744
    from fractions import Fraction

    assert Fraction(j.coeff(0)) * 432 == 744


def test_toric_mirror_pair():
    delta = [(2, -1), (-1, 2), (-1, -1)]
    dual = pe.polar_dual(delta)
    assert sorted(dual) == [(-1, -1), (0, 1), (1, 0)]
    assert pe.lattice_point_count(delta) == 10
    assert pe.lattice_point_count(dual) == 4
    monos = pe.anticanonical_monomials(dual)
    assert "z1*z2*z3" in monos and "z1^3" in monos


def test_identity_suite_exposes_all_names():
    names = pe.identity_names()
    assert "clausen" in names and "poincare" in names
    rid, passed, _ = pe.run_identity("clausen")
    assert rid == "clausen" and passed
