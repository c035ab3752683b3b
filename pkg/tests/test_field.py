import pytest

from qmpoly import GF, GuardExceeded, field
from qmpoly.field import is_irreducible, smallest_irreducible

# fields with q <= 64 get the exhaustive axiom treatment
SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2),
                (2, 4), (2, 6)]


def test_prime_field_basics(gf2, gf3):
    assert gf2.add(1, 1) == 0
    assert gf2.modulus is None
    assert gf3.inv(2) == 2  # 2*2 = 4 = 1 mod 3
    assert gf3.mul(2, 2) == 1


def test_gf4_modulus_is_the_unique_irreducible_quadratic():
    # brute-force every monic quadratic x^2 + c1 x + c0 over F_2
    reducible = set()
    for c0 in range(2):
        for c1 in range(2):
            for a in range(2):
                if (a * a + c1 * a + c0) % 2 == 0:
                    reducible.add((c0, c1))
    irreducibles = [(c0, c1) for c0 in range(2) for c1 in range(2)
                    if (c0, c1) not in reducible]
    assert irreducibles == [(1, 1)]
    assert field(2, 2).modulus == (1, 1, 1)


def test_gf4_multiplication_against_polynomial_oracle(gf4):
    # carry-less multiply mod x^2 + x + 1, done by hand, bit encoding
    def oracle(a, b):
        prod = 0
        for i in range(2):
            if (b >> i) & 1:
                prod ^= a << i
        for i in range(2, 4):
            if (prod >> i) & 1:
                prod ^= 0b111 << (i - 2)
        return prod & 0b11

    for a in range(4):
        for b in range(4):
            assert gf4.mul(a, b) == oracle(a, b)
    assert gf4.mul(2, 2) == 3


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, e):
    f = field(p, e)
    els = list(f.elements())
    assert f.q <= 64
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_inverses_and_frobenius_exhaustive(p, e):
    f = field(p, e)
    for a in f.elements():
        if a:
            assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, f.q) == a


def test_modulus_has_no_root_and_divides_nothing_smaller():
    for p, e in [(2, 3), (3, 2), (2, 4)]:
        coeffs = smallest_irreducible(p, e)
        assert len(coeffs) == e + 1 and coeffs[-1] == 1
        for a in range(p):
            acc = 0
            for c in reversed(coeffs):
                acc = (acc * a + c) % p
            assert acc != 0
        assert is_irreducible(coeffs, p)


def test_powers():
    f = field(3, 2)
    g = 3  # the polynomial x
    acc = 1
    for k in range(12):
        assert f.pow(g, k) == acc
        acc = f.mul(acc, g)
    assert f.pow(g, -1) == f.inv(g)
    assert f.pow(0, 0) == 1
    assert f.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        f.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rejects_nonprime_characteristic():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)
    with pytest.raises(ValueError):
        GF(2, 0)


def test_order_guard():
    with pytest.raises(GuardExceeded) as exc:
        GF(2, 20)
    assert exc.value.needed == 2 ** 20


def test_field_identity_and_cache():
    assert field(2, 3) is field(2, 3)
    assert field(2, 3) == GF(2, 3)
    assert field(2) != field(3)
