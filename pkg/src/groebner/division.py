"""Multivariate division with remainder and quotients, plus S-polynomials.

Division picks the least-index divisor whose lead term divides the current
lead, subtracts the matching multiple, and moves irreducible lead terms to
the remainder.  The result satisfies g = sum(quotients[i] * F[i]) + remainder
exactly, and no remainder term is divisible by any divisor lead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, Term, mono_div, mono_lcm

__all__ = ["DivisionResult", "divide", "s_polynomial", "normal_form"]


@dataclass(frozen=True)
class DivisionResult:
    remainder: Polynomial
    quotients: tuple
    reduction_steps: int


def divide(g: Polynomial, divisors) -> DivisionResult:
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    ring = g.ring
    for f in divisors:
        if f.ring != ring:
            raise ValueError("divisor ring does not match dividend ring")
        if f.is_zero:
            raise ValueError("zero divisor")
    if not ring.order.is_well_order:
        # weight orders only totalize degree by degree
        if not g.is_homogeneous() or any(not f.is_homogeneous() for f in divisors):
            raise ValueError("division under a weight order needs homogeneous input")
    field = ring.field
    lead_monos = [f.lead_monomial for f in divisors]
    lead_coeffs = [f.lead_coeff for f in divisors]

    quotients = [{} for _ in divisors]
    remainder_terms = []
    work = g
    steps = 0
    while not work.is_zero:
        t = work.lead_term
        for i, lm in enumerate(lead_monos):
            q = mono_div(t.monomial, lm)
            if q is not None:
                c = field.div(t.coeff, lead_coeffs[i])
                bucket = quotients[i]
                bucket[q] = field.add(bucket[q], c) if q in bucket else c
                work = work.submul(c, q, divisors[i])
                break
        else:
            remainder_terms.append(t)
            work = work.drop_lead()
        steps += 1

    remainder = Polynomial(ring, tuple(remainder_terms))
    qpolys = tuple(
        Polynomial(
            ring,
            tuple(
                Term(c, m)
                for m, c in sorted(b.items(), key=lambda mc: ring._key(mc[0]), reverse=True)
            ),
        )
        for b in quotients
    )
    return DivisionResult(remainder, qpolys, steps)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Cancel the lead terms of f and g at the lcm of their lead monomials."""
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of a zero polynomial")
    field = f.ring.field
    lcm = mono_lcm(f.lead_monomial, g.lead_monomial)
    return f.monomial_mul(
        field.inv(f.lead_coeff), mono_div(lcm, f.lead_monomial)
    ) - g.monomial_mul(field.inv(g.lead_coeff), mono_div(lcm, g.lead_monomial))


def normal_form(g: Polynomial, basis) -> Polynomial:
    """Remainder of g on division by a Groebner basis; canonical modulo the
    ideal, and zero exactly when g lies in it."""
    elements = getattr(basis, "elements", basis)
    if not elements:
        return g
    return divide(g, elements).remainder
