"""Multiplicative monomial orders, realized as sort-key functions.

Every order maps an exponent vector to a tuple key so that larger monomials
get larger keys.  All keys here are translation-consistent, which is exactly
multiplicativity: x^A > x^B implies x^(A+C) > x^(B+C).

The weight order follows the one-parameter-subgroup convention: x^A > x^B
iff W.A < W.B, i.e. the *smallest* weight wins.  Ties are broken by a
tiebreak order (grevlex by default), since a bare weight functional is only
total in degrees where no two monomials share a weight.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "OrderSpec", "LEX", "GREVLEX", "eliminate_order", "weight_order",
    "compare", "LT", "EQ", "GT",
]

LT, EQ, GT = -1, 0, 1

_KINDS = ("lex", "grevlex", "eliminate", "weight")


@dataclass(frozen=True)
class OrderSpec:
    kind: str
    block: int = 0
    weights: tuple[int, ...] = ()
    tiebreak: "OrderSpec | None" = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "eliminate" and self.block < 1:
            raise ValueError("eliminate order needs at least one leading variable")
        if self.kind == "weight":
            if not self.weights:
                raise ValueError("weight order needs a weight vector")
            if self.tiebreak is not None and self.tiebreak.kind == "weight":
                raise ValueError("weight tiebreak must be a plain order")

    def key_function(self, nvars: int):
        """Return a key callable on exponent vectors of length nvars."""
        if self.kind == "lex":
            return lambda a: a
        if self.kind == "grevlex":
            return lambda a: (sum(a), tuple(-e for e in reversed(a)))
        if self.kind == "eliminate":
            k = self.block
            if k >= nvars:
                raise ValueError(f"cannot eliminate {k} of {nvars} variables")
            return lambda a: (sum(a[:k]), sum(a), tuple(-e for e in reversed(a)))
        # weight
        w = self.weights
        if len(w) != nvars:
            raise ValueError(f"weight vector has {len(w)} entries for {nvars} variables")
        tb = (self.tiebreak or GREVLEX).key_function(nvars)
        return lambda a: (-sum(wi * ai for wi, ai in zip(w, a)), tb(a))

    @property
    def is_well_order(self) -> bool:
        """True when every variable exceeds 1, so division chains terminate
        on inhomogeneous input.  Weight orders are only safe degree by
        degree and therefore require homogeneous input."""
        return self.kind != "weight"

    def __str__(self):
        if self.kind == "lex":
            return "lex"
        if self.kind == "grevlex":
            return "grevlex"
        if self.kind == "eliminate":
            return f"elim:{self.block}"
        ws = ",".join(str(w) for w in self.weights)
        return f"weight:{ws}"


LEX = OrderSpec("lex")
GREVLEX = OrderSpec("grevlex")


def eliminate_order(k: int) -> OrderSpec:
    """Order projecting away the first k variables: total degree in them
    first, ties by grevlex on everything."""
    return OrderSpec("eliminate", block=k)


def weight_order(weights, tiebreak: OrderSpec = GREVLEX) -> OrderSpec:
    return OrderSpec("weight", weights=tuple(int(w) for w in weights), tiebreak=tiebreak)


def compare(a, b, order: OrderSpec) -> int:
    """Compare exponent vectors under order; returns GT, EQ or LT."""
    if len(a) != len(b):
        raise ValueError(f"exponent vectors of different lengths: {len(a)} vs {len(b)}")
    key = order.key_function(len(a))
    ka, kb = key(tuple(a)), key(tuple(b))
    if ka == kb:
        return EQ
    return GT if ka > kb else LT
