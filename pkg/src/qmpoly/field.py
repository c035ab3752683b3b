"""Exact arithmetic in small finite fields GF(p^e).

Elements are plain ints in [0, q): the integer a stands for the
polynomial a0 + a1*x + a2*x^2 + ... where a0, a1, ... are the base-p
digits of a.  Prime fields (e = 1) therefore encode residues directly;
0 is always the additive identity and 1 the multiplicative identity.

Extension fields reduce modulo a monic irreducible polynomial chosen
deterministically: candidates are ordered by their coefficient vector
read as a base-p integer (constant term = least significant digit) and
the first irreducible one wins.  Canonical forms built downstream are
therefore reproducible across runs.

Multiplication, inversion and powers go through log/antilog tables over
a primitive element, built once per field.  Addition is digitwise mod p
(a plain XOR in characteristic 2).  Table-backed arithmetic keeps the
inner loops of lattice enumeration cheap.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import GuardExceeded

DEFAULT_MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _undigits(digs, p: int) -> int:
    out = 0
    for d in reversed(digs):
        out = out * p + d
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    # Remainder of num modulo the monic polynomial den, over F_p.
    # Coefficient order is low degree first; num is consumed.
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            num[i] = 0
            for j in range(d):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return num[:d]


def is_irreducible(coeffs, p: int) -> bool:
    """Trial-division irreducibility test for a monic polynomial over F_p.

    Checks for roots in F_p first, then divides by every monic
    polynomial of degree 2 .. deg/2.
    """
    e = len(coeffs) - 1
    if e <= 0:
        return False
    if e == 1:
        return True
    for a in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    for d in range(2, e // 2 + 1):
        for enc in range(p ** d):
            den = _digits(enc, p, d) + [1]
            if not any(_poly_rem(list(coeffs), den, p)):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """The monic irreducible of degree e over F_p with the smallest
    coefficient encoding."""
    for enc in range(p ** e):
        coeffs = tuple(_digits(enc, p, e)) + (1,)
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError(f"no irreducible of degree {e} over F_{p}")


class GF:
    """The finite field GF(p^e) acting on integer-encoded elements.

    Parameters
    ----------
    p : prime characteristic
    e : extension degree (1 for prime fields)
    max_order : guard on q = p^e; table construction is O(q)
    """

    def __init__(self, p: int, e: int = 1, *, max_order: int = DEFAULT_MAX_ORDER):
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        q = p ** e
        if q > max_order:
            raise GuardExceeded(
                f"field order {q} exceeds the guard {max_order}",
                needed=q, guard=max_order)
        self.p = p
        self.e = e
        self.q = q
        self.modulus: tuple[int, ...] | None = (
            smallest_irreducible(p, e) if e > 1 else None)
        self._exp, self._log = self._build_tables()

    def _raw_mul(self, a: int, b: int) -> int:
        # Direct polynomial product mod the modulus; only used while
        # bootstrapping the log tables.
        if self.e == 1:
            return (a * b) % self.p
        p = self.p
        da = _digits(a, p, self.e)
        db = _digits(b, p, self.e)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        return _undigits(_poly_rem(prod, list(self.modulus), p), p)

    def _build_tables(self):
        q = self.q
        for g in range(1, q):
            exp = [1]
            acc = 1
            while True:
                acc = self._raw_mul(acc, g)
                if acc == 1:
                    break
                exp.append(acc)
            if len(exp) == q - 1:
                log = [-1] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise AssertionError("multiplicative group has no generator")

    # -- arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, shift = 0, 1
        for _ in range(self.e):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out, shift = 0, 1
        for _ in range(self.e):
            out += ((-a) % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    # -- identity -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


@lru_cache(maxsize=None)
def field(p: int, e: int = 1) -> GF:
    """Shared GF instances, one per (p, e)."""
    return GF(p, e)
