"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Scalars are plain Python values (Fraction over the rationals, int residues
in [0, p) over a prime field); the field object supplies the arithmetic so
polynomial code stays representation-agnostic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = ["Field", "RationalField", "PrimeField", "QQ", "GF"]

MAX_MODULUS = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Base interface for exact scalar arithmetic."""

    kind: str = ""
    modulus: int | None = None

    def normalize(self, a):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def random_scalar(self, rng):
        raise NotImplementedError

    def __call__(self, a):
        return self.normalize(a)


class RationalField(Field):
    """The rationals; Fraction keeps lowest terms with positive denominator."""

    kind = "exact-rationals"

    def normalize(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise TypeError(f"cannot coerce {a!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def random_scalar(self, rng):
        # small integers keep certificate arithmetic readable
        return Fraction(rng.randint(-9, 9))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """F_p for a prime p < 2^31; residues stored in [0, p)."""

    kind = "prime-field"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        if p >= MAX_MODULUS:
            raise ValueError(f"modulus must be < 2^31, got {p}")
        self.modulus = p

    def normalize(self, a):
        if isinstance(a, int):
            return a % self.modulus
        if isinstance(a, Fraction):
            return self.div(a.numerator % self.modulus, a.denominator % self.modulus)
        raise TypeError(f"cannot coerce {a!r} into F_{self.modulus}")

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def inv(self, a):
        # extended Euclid; deterministic and branch-free enough to trust
        p = self.modulus
        a %= p
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{p}")
        r0, r1 = p, a
        s0, s1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % p

    def random_scalar(self, rng):
        return rng.randrange(min(self.modulus, 2**20))

    def __repr__(self):
        return f"F_{self.modulus}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Fp", self.modulus))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)
