"""Sparse multivariate polynomials over an exact field.

A polynomial is an immutable tuple of (coeff, monomial) terms kept strictly
descending under the ring's monomial order.  Monomials are dense exponent
tuples, one slot per ring variable.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .fields import Field
from .orders import GREVLEX, OrderSpec

__all__ = [
    "Term", "Monomial", "PolynomialRing", "Polynomial", "leading_term",
    "mono_mul", "mono_div", "mono_lcm", "mono_divides", "mono_degree",
]

Monomial = tuple


class Term(NamedTuple):
    coeff: object
    monomial: Monomial


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b as a monomial, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


class PolynomialRing:
    """k[x_0, ..., x_n] with a fixed multiplicative monomial order."""

    __slots__ = ("field", "names", "order", "nvars", "_key", "_index", "_key_cache")

    def __init__(self, field: Field, names, order: OrderSpec = GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        self.field = field
        self.names = names
        self.order = order
        self.nvars = len(names)
        raw_key = order.key_function(self.nvars)  # validates weight length
        cache = {}

        def cached_key(mono, _raw=raw_key, _cache=cache):
            k = _cache.get(mono)
            if k is None:
                k = _cache[mono] = _raw(mono)
            return k

        self._key = cached_key
        self._key_cache = cache
        self._index = {n: i for i, n in enumerate(names)}

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}; {self.order}]"

    # -- construction ------------------------------------------------------
    def monomial_key(self, mono: Monomial):
        return self._key(mono)

    def polynomial(self, pairs: Iterable) -> "Polynomial":
        """Build a polynomial from (coeff, monomial) pairs, combining equal
        monomials and dropping zeros."""
        acc = {}
        field = self.field
        for coeff, mono in pairs:
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {self!r}")
            c = field.normalize(coeff)
            if mono in acc:
                acc[mono] = field.add(acc[mono], c)
            else:
                acc[mono] = c
        terms = tuple(
            Term(c, m)
            for m, c in sorted(acc.items(), key=lambda mc: self._key(mc[0]), reverse=True)
            if c != 0
        )
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.normalize(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (Term(c, (0,) * self.nvars),))

    def variable(self, which) -> "Polynomial":
        i = self._index[which] if isinstance(which, str) else which
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, (Term(self.field.one, mono),))

    def monomial(self, mono: Monomial, coeff=1) -> "Polynomial":
        return self.polynomial([(coeff, mono)])

    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    # -- derived rings -----------------------------------------------------
    def with_order(self, order: OrderSpec) -> "PolynomialRing":
        if order == self.order:
            return self
        return PolynomialRing(self.field, self.names, order)

    def append_variable(self, name: str, order: OrderSpec | None = None) -> "PolynomialRing":
        if name in self._index:
            raise ValueError(f"variable {name!r} already present")
        return PolynomialRing(self.field, self.names + (name,), order or self.order)

    def drop_last_variable(self, order: OrderSpec | None = None) -> "PolynomialRing":
        if self.nvars < 2:
            raise ValueError("cannot drop the only variable")
        return PolynomialRing(self.field, self.names[:-1], order or self.order)


class Polynomial:
    """Immutable sparse polynomial; terms strictly descending in ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- basic queries -----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lead_term(self) -> Term:
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0]

    @property
    def lead_monomial(self) -> Monomial:
        return self.lead_term.monomial

    @property
    def lead_coeff(self):
        return self.lead_term.coeff

    def total_degree(self) -> int:
        """Max total degree of any term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(t.monomial) for t in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = mono_degree(self.terms[0].monomial)
        return all(mono_degree(t.monomial) == d for t in self.terms)

    def drop_lead(self) -> "Polynomial":
        return Polynomial(self.ring, self.terms[1:])

    # -- arithmetic ---------------------------------------------------------
    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check_ring(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        # linear merge of two descending term lists
        field = self.ring.field
        key = self.ring._key
        out = []
        i, j = 0, 0
        a, b = self.terms, other.terms
        while i < len(a) and j < len(b):
            ma, mb = a[i].monomial, b[j].monomial
            if ma == mb:
                c = field.add(a[i].coeff, b[j].coeff)
                if c != 0:
                    out.append(Term(c, ma))
                i += 1
                j += 1
            elif key(ma) > key(mb):
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Polynomial(self.ring, tuple(out))

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple(Term(neg(t.coeff), t.monomial) for t in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scalar_mul(other)
        self._check_ring(other)
        field = self.ring.field
        acc = {}
        for ta in self.terms:
            for tb in other.terms:
                m = mono_mul(ta.monomial, tb.monomial)
                c = field.mul(ta.coeff, tb.coeff)
                if m in acc:
                    acc[m] = field.add(acc[m], c)
                else:
                    acc[m] = c
        key = self.ring._key
        terms = tuple(
            Term(c, m)
            for m, c in sorted(acc.items(), key=lambda mc: key(mc[0]), reverse=True)
            if c != 0
        )
        return Polynomial(self.ring, terms)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scalar_mul(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.normalize(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring, tuple(Term(field.mul(c, t.coeff), t.monomial) for t in self.terms)
        )

    def monomial_mul(self, coeff, mono: Monomial) -> "Polynomial":
        """Multiply by coeff * x^mono; term order is preserved by
        multiplicativity, so no re-sort happens."""
        field = self.ring.field
        coeff = field.normalize(coeff)
        if coeff == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            tuple(
                Term(field.mul(coeff, t.coeff), mono_mul(t.monomial, mono))
                for t in self.terms
            ),
        )

    def submul(self, coeff, mono: Monomial, f: "Polynomial") -> "Polynomial":
        """self - coeff * x^mono * f as a single merge; the reduction step."""
        field = self.ring.field
        key = self.ring._key
        a = self.terms
        b = f.terms
        out = []
        i = j = 0
        if j < len(b):
            mb = mono_mul(b[j].monomial, mono)
            kb = key(mb)
        while i < len(a) and j < len(b):
            ka = key(a[i].monomial)
            if ka > kb:
                out.append(a[i])
                i += 1
                continue
            if ka == kb:
                c = field.sub(a[i].coeff, field.mul(coeff, b[j].coeff))
                if c != 0:
                    out.append(Term(c, a[i].monomial))
                i += 1
            else:
                out.append(Term(field.neg(field.mul(coeff, b[j].coeff)), mb))
            j += 1
            if j < len(b):
                mb = mono_mul(b[j].monomial, mono)
                kb = key(mb)
        out.extend(a[i:])
        neg = field.neg
        mul = field.mul
        while j < len(b):
            out.append(Term(neg(mul(coeff, b[j].coeff)), mono_mul(b[j].monomial, mono)))
            j += 1
        return Polynomial(self.ring, tuple(out))

    def monic(self) -> "Polynomial":
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.lead_coeff
        if lc == self.ring.field.one:
            return self
        return self.scalar_mul(self.ring.field.inv(lc))

    # -- conversions --------------------------------------------------------
    def reorder(self, ring: PolynomialRing) -> "Polynomial":
        """Re-sort into another ring over the same field and variables."""
        if ring.field != self.ring.field or ring.names != self.ring.names:
            raise ValueError("reorder requires the same field and variables")
        return ring.polynomial((t.coeff, t.monomial) for t in self.terms)

    def substitute(self, ring: PolynomialRing, images: list) -> "Polynomial":
        """Evaluate at x_i -> images[i], landing in the images' ring."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        out = ring.zero()
        for t in self.terms:
            piece = ring.constant(t.coeff)
            for e, img in zip(t.monomial, images):
                if e:
                    piece = piece * img**e
            out = out + piece
        return out

    # -- identity ------------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"<{self}>"

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for t in self.terms:
            c = t.coeff
            # symmetric lift keeps prime-field output readable
            if field.kind == "prime-field" and c > field.modulus // 2:
                c = c - field.modulus
            negative = c < 0
            mag = -c if negative else c
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(self.ring.names, t.monomial)
                if e
            )
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)


def leading_term(f: Polynomial) -> Term:
    """Largest term of f under its ring's order; rejects the zero polynomial."""
    return f.lead_term
