import random

import pytest

from bbcrystal.cartan import RE, IM, ISO, BCDatum, InvalidDatum, Weight


def test_validate_accepts_sl2():
    d = BCDatum([[2]], [1])
    assert d.tag(0) == RE
    assert d.validate().ok


def test_validate_accepts_isotropic():
    d = BCDatum([[0]], [1])
    assert d.tag(0) == ISO


def test_validate_rejects_broken_matrix():
    # oracle by hand: a_01 = 0 but a_10 = -2 breaks (iii); D A has
    # (DA)_01 = 0 != -2 = (DA)_10 so (iv) also fails
    report = BCDatum([[2, 0], [-2, 0]], [1, 1], check=False).validate()
    assert not report.ok
    assert any("(iii)" in v for v in report.violations)
    assert any("(iv)" in v for v in report.violations)
    with pytest.raises(InvalidDatum):
        BCDatum([[2, 0], [-2, 0]], [1, 1])


def test_validate_rejects_odd_diagonal():
    report = BCDatum([[-1]], [1], check=False).validate()
    assert not report.ok and any("(i)" in v for v in report.violations)


def test_pairing_examples():
    sl2 = BCDatum([[2]], [1])
    alpha0 = Weight((0,), (1,))
    assert sl2.pairing(0, alpha0) == -2  # <h_0, -alpha_0> = -2
    # pairing(i, alpha_j) = a_ij read through an offset of -1
    assert sl2.pairing(0, Weight((0,), (-1,))) == 2
    w = Weight((3,), (1,))
    assert sl2.pairing(0, w) == 1
    im = BCDatum([[-2]], [2])
    assert im.bilinear(0, Weight((0,), (-1,))) == -4


def test_pairing_linear_in_weight():
    rng = random.Random(3)
    d = BCDatum([[2, -1], [-1, 0]], [1, 1])
    for _ in range(100):
        dom1 = tuple(rng.randint(0, 4) for _ in range(2))
        dom2 = tuple(rng.randint(0, 4) for _ in range(2))
        off1 = tuple(rng.randint(0, 4) for _ in range(2))
        off2 = tuple(rng.randint(0, 4) for _ in range(2))
        both = Weight(tuple(a + b for a, b in zip(dom1, dom2)),
                      tuple(a + b for a, b in zip(off1, off2)))
        for i in range(2):
            assert d.pairing(i, both) == d.pairing(i, Weight(dom1, off1)) + d.pairing(
                i, Weight(dom2, off2)
            )


def test_symmetrizer_identity_after_validation():
    for A, D in [
        ([[2, -1], [-1, 2]], [1, 1]),
        ([[2, -1], [-1, 0]], [1, 1]),
        ([[2, -2], [-1, -2]], [1, 2]),
    ]:
        d = BCDatum(A, D)
        for i in range(d.n):
            for j in range(d.n):
                assert d.D[i] * d.A[i][j] == d.D[j] * d.A[j][i]


def test_iinf_up_to():
    real1 = BCDatum([[2]], [1])
    assert real1.iinf_up_to(5) == [(0, 1)]
    iso1 = BCDatum([[0]], [1])
    assert iso1.iinf_up_to(3) == [(0, 1), (0, 2), (0, 3)]
    mixed = BCDatum([[2, -1], [-1, 0]], [1, 1])
    assert mixed.iinf_up_to(2) == [(0, 1), (1, 1), (1, 2)]


def test_dominance_is_offset_positivity():
    assert Weight((2, 1), (0, 3)).dominated()
    assert not Weight((2, 1), (1, -1)).dominated()
