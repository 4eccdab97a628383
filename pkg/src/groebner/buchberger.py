"""Groebner bases of ideals: completion, the pair criteria, and membership.

This is the rank-1 face of the module engine.  Basis elements come back
monic with a transform matrix over the original generators, so every basis
element can be re-expanded exactly as a combination of the input.
"""

from __future__ import annotations

from .division import divide
from .modules import (
    BuchbergerOptions,
    DeadlineExceeded,
    SPair,
    as_module_elements,
    module_buchberger,
)
from .orders import OrderSpec
from .poly import Polynomial, mono_degree, mono_div, mono_lcm, mono_mul

__all__ = [
    "GroebnerBasis", "buchberger", "is_groebner", "pair_filter",
    "BuchbergerOptions", "DeadlineExceeded", "SPair",
]


class GroebnerBasis:
    """Reduced (or raw) basis with provenance.

    elements   monic polynomials, canonically sorted when reduced
    transform  row i writes elements[i] as sum(transform[i][j] * generators[j])
    """

    def __init__(self, ring, elements, transform, generators, reduced, complete):
        self.ring = ring
        self.order = ring.order
        self.elements = list(elements)
        self.transform = [tuple(row) for row in transform]
        self.generators = list(generators)
        self.reduced = reduced
        self.complete = complete

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def normal_form(self, g: Polynomial) -> Polynomial:
        g = g.reorder(self.ring) if g.ring != self.ring else g
        return divide(g, self.elements).remainder

    def contains(self, g: Polynomial) -> bool:
        return self.normal_form(g).is_zero

    def lead_monomials(self):
        return [f.lead_monomial for f in self.elements]

    def max_degree(self) -> int:
        return max(f.total_degree() for f in self.elements)

    def expand_transform_row(self, i: int) -> Polynomial:
        acc = self.ring.zero()
        for coeff, gen in zip(self.transform[i], self.generators):
            acc = acc + coeff * gen
        return acc


def buchberger(gens, order: OrderSpec | None = None, opts: BuchbergerOptions | None = None,
               **kwargs) -> GroebnerBasis:
    """Complete generators to a Groebner basis under the given order.

    The order defaults to the generators' ring order; passing one re-sorts
    the input into a ring copy first.  Keyword arguments are shorthand for
    BuchbergerOptions fields.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("cannot complete an empty generating list")
    if kwargs:
        if opts is not None:
            raise ValueError("pass either opts or keyword options, not both")
        opts = BuchbergerOptions(**kwargs)
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
        if g.is_zero:
            raise ValueError("zero generator")
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [g.reorder(ring) for g in gens]

    _, elements = as_module_elements(gens)
    result = module_buchberger(elements, opts)
    polys = [e.comps[0] for e in result.elements]
    return GroebnerBasis(ring, polys, result.transform, gens, result.reduced, result.complete)


def is_groebner(F, order: OrderSpec | None = None) -> bool:
    """True when every S-pair of the list reduces to zero against it."""
    F = list(F)
    if not F:
        raise ValueError("empty list")
    ring = F[0].ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        F = [f.reorder(ring) for f in F]
    for f in F:
        if f.is_zero:
            raise ValueError("zero polynomial in candidate basis")
    from .division import s_polynomial

    for j in range(len(F)):
        for i in range(j):
            s = s_polynomial(F[i], F[j])
            if s.is_zero:
                continue
            if not divide(s, F).remainder.is_zero:
                return False
    return True


def pair_filter(pairs, leads):
    """Prune an S-pair list without losing the syzygy-generation property.

    Two prunings apply: pairs with coprime leads (lcm equals the product),
    and pairs whose lcm is properly divisible through a third lead whose two
    sub-pairs survive.  The properly-divides requirement keeps the rule
    well-founded, so no circular drops can occur.
    """
    pairs = list(pairs)
    surviving = []
    present = set()
    for p in pairs:
        present.add((p.i, p.j))

    kept = set(present)
    for p in sorted(pairs, key=lambda p: (-mono_degree(p.lcm), -p.i, -p.j)):
        if p.lcm == mono_mul(leads[p.i], leads[p.j]):
            kept.discard((p.i, p.j))
            continue
        dropped = False
        for k in range(len(leads)):
            if k in (p.i, p.j):
                continue
            if mono_div(p.lcm, leads[k]) is None:
                continue
            a = (min(p.i, k), max(p.i, k))
            b = (min(k, p.j), max(k, p.j))
            lcm_a = mono_lcm(leads[a[0]], leads[a[1]])
            lcm_b = mono_lcm(leads[b[0]], leads[b[1]])
            if lcm_a == p.lcm or lcm_b == p.lcm:
                continue
            if a in kept and b in kept:
                dropped = True
                break
        if dropped:
            kept.discard((p.i, p.j))

    for p in pairs:
        if (p.i, p.j) in kept:
            surviving.append(p)
    return surviving
