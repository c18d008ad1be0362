"""Exact arithmetic in GF(q) for prime powers q = p^n.

Elements are represented as integers in 0..q-1: the base-p value of the
little-endian coefficient vector of the residue polynomial (for n = 1
this is just the residue itself).  Zero is 0, one is 1.

Construction is fully deterministic: the modulus is the monic
irreducible polynomial of degree n over Z_p with the smallest base-p
encoding of its coefficient vector, and the primitive element xi is the
generator of F*_q with the smallest integer encoding.  Multiplication
and inversion run off precomputed exp/log tables for xi.
"""

from __future__ import annotations

from .errors import NotAPrimePowerError

__all__ = ["FieldTable", "make_field", "factor_prime_power", "is_prime_power"]


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, n) with q = p^n, or raise NotAPrimePowerError."""
    if q < 2:
        raise NotAPrimePowerError(f"{q} is not a prime power (must be >= 2)")
    p = None
    for cand in range(2, q + 1):
        if cand * cand > q:
            break
        if q % cand == 0:
            p = cand
            break
    if p is None:  # q itself is prime
        return q, 1
    n = 0
    rest = q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise NotAPrimePowerError(f"{q} has at least two distinct prime factors")
    return p, n


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except NotAPrimePowerError:
        return False
    return True


# ----------------------------------------------------------------------
# Polynomial helpers over Z_p (coefficient tuples, little-endian)
# ----------------------------------------------------------------------

def _enc_digits(enc: int, p: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        digits.append(enc % p)
        enc //= p
    return tuple(digits)


def _digits_enc(digits, p: int) -> int:
    enc = 0
    for d in reversed(digits):
        enc = enc * p + d
    return enc


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num / den over Z_p.  den must be monic."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]]


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...],
                  modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    return tuple(_poly_mod(prod, modulus, p))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            divisor = _enc_digits(enc, p, d) + (1,)
            if not any(_poly_mod(list(poly), divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for enc in range(p ** n):
        cand = _enc_digits(enc, p, n) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {n} over Z_{p}")


# ----------------------------------------------------------------------
# Field table
# ----------------------------------------------------------------------

class FieldTable:
    """A concrete GF(q) with exp/log tables for the primitive element xi.

    Attributes
    ----------
    q, p, n : int
        Field order, characteristic, extension degree (q = p^n).
    modulus : tuple[int, ...]
        Monic irreducible of degree n, little-endian coefficients
        (length n + 1).  For n = 1 this is the sentinel (0, 1) and is
        never used.
    xi : int
        Canonical primitive element (smallest-encoding generator).
    exp : tuple[int, ...]
        exp[j] = xi^j for j in 0..q-2; exp[0] = 1.
    log : tuple[int, ...]
        Inverse of exp on nonzero elements; log[0] = -1 (unused).
    """

    def __init__(self, q: int, p: int, n: int, modulus: tuple[int, ...],
                 xi: int, exp: tuple[int, ...], log: tuple[int, ...]):
        self.q = q
        self.p = p
        self.n = n
        self.modulus = modulus
        self.xi = xi
        self.exp = exp
        self.log = log

    def __repr__(self) -> str:
        return f"FieldTable(q={self.q}, p={self.p}, n={self.n}, xi={self.xi})"

    def elements(self) -> range:
        """All element encodings 0..q-1."""
        return range(self.q)

    def units(self) -> tuple[int, ...]:
        """Nonzero elements in exponent order: xi^0, xi^1, ..., xi^(q-2)."""
        return self.exp

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        p = self.p
        res = 0
        scale = 1
        while a or b:
            res += ((a + b) % p) * scale
            a //= p
            b //= p
            scale *= p
        return res

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        p = self.p
        res = 0
        scale = 1
        while a:
            res += ((p - a % p) % p) * scale
            a //= p
            scale *= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_xi(self, j: int) -> int:
        """xi^j, with j taken modulo q-1."""
        return self.exp[j % (self.q - 1)]


def _raw_mul(p: int, n: int, modulus: tuple[int, ...]):
    """Multiplication on encodings without tables (used during setup)."""
    if n == 1:
        return lambda a, b: (a * b) % p

    def mul(a: int, b: int) -> int:
        pa = _enc_digits(a, p, n)
        pb = _enc_digits(b, p, n)
        return _digits_enc(_poly_mul_mod(pa, pb, modulus, p), p)

    return mul


def make_field(q: int) -> FieldTable:
    """Build the canonical GF(q).

    Deterministic: repeated calls with the same q produce identical
    tables.  Raises NotAPrimePowerError when q is not a prime power.
    """
    p, n = factor_prime_power(q)
    modulus = _smallest_irreducible(p, n) if n > 1 else (0, 1)
    mul = _raw_mul(p, n, modulus)

    xi = None
    for cand in range(2, q):
        order = 1
        acc = cand
        while acc != 1:
            acc = mul(acc, cand)
            order += 1
            if order > q - 1:
                raise AssertionError("element order exceeded group order")
        if order == q - 1:
            xi = cand
            break
    if xi is None:
        if q == 2:
            xi = 1  # F*_2 is trivial; its only element generates it
        else:
            raise AssertionError(f"no generator found for GF({q})")

    exp = [1] * (q - 1)
    for j in range(1, q - 1):
        exp[j] = mul(exp[j - 1], xi)
    log = [-1] * q
    for j, e in enumerate(exp):
        log[e] = j

    return FieldTable(q, p, n, modulus, xi, tuple(exp), tuple(log))
