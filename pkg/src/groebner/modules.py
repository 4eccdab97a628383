"""Free modules, module monomial orders, and the Buchberger completion engine.

Everything Groebner-shaped in this package funnels through one engine that
works over a free module; ideals are the rank-1 case.  The engine keeps a
transformation row per basis element expressing it in the input generators,
which is what powers membership certificates and syzygy pushforward.

Module monomials are pairs (monomial, component).  An order on them must be
multiplicative; the three implementations here are position-over-term,
term-over-position, and the Schreyer order induced by a list of elements of
the target module (compare images of the module monomials, break ties by
smaller component index).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import NamedTuple

from .poly import (
    Polynomial,
    PolynomialRing,
    mono_degree,
    mono_div,
    mono_lcm,
    mono_mul,
)

__all__ = [
    "FreeModule", "ModuleTerm", "ModuleElement",
    "ModuleOrder", "PositionOverTerm", "TermOverPosition", "SchreyerOrder",
    "BuchbergerOptions", "DeadlineExceeded", "CapInterrupted", "SPair",
    "ModuleGroebnerBasis", "module_divide", "ModuleDivisionResult",
    "module_buchberger", "is_module_groebner", "syzygies",
    "syzygy_generators", "minimalize_generators", "as_module_elements",
]


class DeadlineExceeded(RuntimeError):
    """Raised when a completion run exceeds its wall-clock budget."""


class CapInterrupted(RuntimeError):
    """Raised when a degree cap stops a computation that needs completeness."""


class ModuleTerm(NamedTuple):
    coeff: object
    monomial: tuple
    component: int


# ---------------------------------------------------------------------------
# module orders
# ---------------------------------------------------------------------------

class ModuleOrder:
    """Key-function interface on module monomials (monomial, component)."""

    ring: PolynomialRing

    def key(self, mono, comp):
        raise NotImplementedError


@dataclass(frozen=True)
class PositionOverTerm(ModuleOrder):
    ring: PolynomialRing

    def key(self, mono, comp):
        return (-comp, self.ring.monomial_key(mono))


@dataclass(frozen=True)
class TermOverPosition(ModuleOrder):
    ring: PolynomialRing

    def key(self, mono, comp):
        return (self.ring.monomial_key(mono), -comp)


class SchreyerOrder(ModuleOrder):
    """Order induced by a list F of module elements: compare the images
    x^A * in(f_i) in the target module, break ties by smaller index i."""

    def __init__(self, leads, target_order: ModuleOrder):
        self.leads = tuple(leads)  # ModuleTerm per source basis element
        self.target_order = target_order
        self.ring = target_order.ring

    def key(self, mono, comp):
        lt = self.leads[comp]
        return (
            self.target_order.key(mono_mul(mono, lt.monomial), lt.component),
            -comp,
        )

    def __eq__(self, other):
        return (
            isinstance(other, SchreyerOrder)
            and self.leads == other.leads
            and self.target_order == other.target_order
        )

    def __hash__(self):
        return hash((self.leads, self.target_order))


# ---------------------------------------------------------------------------
# free modules and their elements
# ---------------------------------------------------------------------------

class FreeModule:
    """Graded free module over a polynomial ring with a module order."""

    __slots__ = ("ring", "shifts", "rank", "order")

    def __init__(self, ring: PolynomialRing, shifts, order: ModuleOrder | None = None):
        self.ring = ring
        self.shifts = tuple(shifts)
        self.rank = len(self.shifts)
        if self.rank < 1:
            raise ValueError("a free module needs rank at least 1")
        self.order = order if order is not None else TermOverPosition(ring)

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.shifts == other.shifts
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.ring, self.shifts, self.order))

    def __repr__(self):
        return f"{self.ring!r}^{self.rank}{list(self.shifts)}"

    def element(self, comps) -> "ModuleElement":
        comps = tuple(comps)
        if len(comps) != self.rank:
            raise ValueError(f"expected {self.rank} components, got {len(comps)}")
        for p in comps:
            if p.ring != self.ring:
                raise ValueError("component ring does not match module ring")
        return ModuleElement(self, comps)

    def zero(self) -> "ModuleElement":
        z = self.ring.zero()
        return ModuleElement(self, (z,) * self.rank)

    def basis_element(self, i: int, scale=1) -> "ModuleElement":
        comps = [self.ring.zero()] * self.rank
        comps[i] = self.ring.constant(scale)
        return ModuleElement(self, tuple(comps))


class ModuleElement:
    """Immutable element of a free module, stored componentwise."""

    __slots__ = ("module", "comps")

    def __init__(self, module: FreeModule, comps: tuple):
        self.module = module
        self.comps = comps

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.comps)

    def lead_term(self) -> ModuleTerm:
        order = self.module.order
        best = None
        best_key = None
        for ci, p in enumerate(self.comps):
            if p.is_zero:
                continue
            t = p.lead_term
            k = order.key(t.monomial, ci)
            if best_key is None or k > best_key:
                best_key = k
                best = ModuleTerm(t.coeff, t.monomial, ci)
        if best is None:
            raise ValueError("zero module element has no lead term")
        return best

    def degree(self) -> int:
        """Degree of a homogeneous element (term degree plus shift)."""
        degs = {
            p.total_degree() + s
            for p, s in zip(self.comps, self.module.shifts)
            if not p.is_zero
        }
        if not degs:
            raise ValueError("zero element has no degree")
        return max(degs)

    def is_homogeneous(self) -> bool:
        degs = set()
        for p, s in zip(self.comps, self.module.shifts):
            if p.is_zero:
                continue
            if not p.is_homogeneous():
                return False
            degs.add(p.total_degree() + s)
        return len(degs) <= 1

    def _check(self, other: "ModuleElement"):
        if self.module != other.module:
            raise ValueError("module mismatch")

    def __add__(self, other):
        self._check(other)
        return ModuleElement(
            self.module, tuple(a + b for a, b in zip(self.comps, other.comps))
        )

    def __sub__(self, other):
        self._check(other)
        return ModuleElement(
            self.module, tuple(a - b for a, b in zip(self.comps, other.comps))
        )

    def __neg__(self):
        return ModuleElement(self.module, tuple(-a for a in self.comps))

    def monomial_mul(self, coeff, mono) -> "ModuleElement":
        return ModuleElement(
            self.module, tuple(p.monomial_mul(coeff, mono) for p in self.comps)
        )

    def scalar_mul(self, c) -> "ModuleElement":
        return ModuleElement(self.module, tuple(p.scalar_mul(c) for p in self.comps))

    def monic(self) -> "ModuleElement":
        lc = self.lead_term().coeff
        if lc == self.module.ring.field.one:
            return self
        return self.scalar_mul(self.module.ring.field.inv(lc))

    def apply(self, targets):
        """Evaluate against targets: sum of comps[i] * targets[i]."""
        if len(targets) != self.module.rank:
            raise ValueError("target count does not match rank")
        acc = None
        for c, t in zip(self.comps, targets):
            if c.is_zero:
                continue
            piece = _scale(t, c)
            acc = piece if acc is None else acc + piece
        if acc is None:
            return _zero_like(targets[0])
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.module == other.module
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.module, self.comps))

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self.comps) + ")"


def _scale(target, poly: Polynomial):
    if isinstance(target, Polynomial):
        return target * poly
    out = target.module.zero()
    for t in poly.terms:
        out = out + target.monomial_mul(t.coeff, t.monomial)
    return out


def _zero_like(target):
    if isinstance(target, Polynomial):
        return target.ring.zero()
    return target.module.zero()


def as_module_elements(polys):
    """Wrap polynomials as elements of the rank-1 module S(0)."""
    ring = polys[0].ring
    m0 = FreeModule(ring, (0,), TermOverPosition(ring))
    return m0, [m0.element((p,)) for p in polys]


# ---------------------------------------------------------------------------
# division in a module
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModuleDivisionResult:
    remainder: ModuleElement
    quotients: tuple  # one Polynomial per divisor
    steps: int


def module_divide(g: ModuleElement, divisors) -> ModuleDivisionResult:
    """Least-index division of g by a list of module elements.

    Works on one mutable component list, with each component's lead key
    cached, so a reduction step only touches the components the chosen
    divisor actually has.
    """
    divisors = list(divisors)
    module = g.module
    ring = module.ring
    field = ring.field
    order = module.order
    leads = [f.lead_term() for f in divisors]
    by_component = {}
    for i, lt in enumerate(leads):
        by_component.setdefault(lt.component, []).append(i)

    comps = list(g.comps)
    keys = [
        None if p.is_zero else order.key(p.lead_monomial, ci)
        for ci, p in enumerate(comps)
    ]
    quotients = [{} for _ in divisors]
    rem_terms = [[] for _ in comps]
    steps = 0
    while True:
        best_ci = -1
        best_key = None
        for ci, k in enumerate(keys):
            if k is not None and (best_key is None or k > best_key):
                best_key = k
                best_ci = ci
        if best_ci < 0:
            break
        t = comps[best_ci].lead_term
        for i in by_component.get(best_ci, ()):
            q = mono_div(t.monomial, leads[i].monomial)
            if q is not None:
                c = field.div(t.coeff, leads[i].coeff)
                bucket = quotients[i]
                bucket[q] = field.add(bucket[q], c) if q in bucket else c
                for ci2, fp in enumerate(divisors[i].comps):
                    if fp.is_zero:
                        continue
                    updated = comps[ci2].submul(c, q, fp)
                    comps[ci2] = updated
                    keys[ci2] = (
                        None if updated.is_zero else order.key(updated.lead_monomial, ci2)
                    )
                break
        else:
            rem_terms[best_ci].append(t)
            shorter = comps[best_ci].drop_lead()
            comps[best_ci] = shorter
            keys[best_ci] = (
                None if shorter.is_zero else order.key(shorter.lead_monomial, best_ci)
            )
        steps += 1

    remainder = ModuleElement(
        module, tuple(Polynomial(ring, tuple(ts)) for ts in rem_terms)
    )
    qpolys = tuple(ring.polynomial((c, m) for m, c in b.items()) for b in quotients)
    return ModuleDivisionResult(remainder, qpolys, steps)


# ---------------------------------------------------------------------------
# completion
# ---------------------------------------------------------------------------

class SPair(NamedTuple):
    i: int
    j: int
    lcm: tuple
    sugar_degree: int


@dataclass
class BuchbergerOptions:
    """Knobs for the completion loop."""

    reduce: bool = True
    reduce_incrementally: bool = False
    degree_cap: int | None = None
    select_seed: int | None = None
    deadline: float | None = None  # absolute time.monotonic() stamp
    track_transform: bool = True

    def check_deadline(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise DeadlineExceeded("completion exceeded its time budget")


class ModuleGroebnerBasis:
    """Completion output: monic basis elements plus transform rows writing
    each element as a combination of the original generators."""

    def __init__(self, module, elements, transform, generators, reduced, complete):
        self.module = module
        self.elements = list(elements)
        self.transform = [tuple(row) for row in transform]
        self.generators = list(generators)
        self.reduced = reduced
        self.complete = complete

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def normal_form(self, g: ModuleElement) -> ModuleElement:
        return module_divide(g, self.elements).remainder

    def contains(self, g: ModuleElement) -> bool:
        return self.normal_form(g).is_zero

    def expand_transform_row(self, i: int) -> ModuleElement:
        """Recombine row i against the original generators; equals elements[i]."""
        row = self.transform[i]
        acc = self.module.zero()
        for coeff_poly, gen in zip(row, self.generators):
            acc = acc + _scale(gen, coeff_poly)
        return acc


def _pair_degree(lt_i, lt_j, lcm, shifts):
    return mono_degree(lcm) + shifts[lt_i.component]


def _make_pair(i, j, leads, sugars, shifts):
    li, lj = leads[i], leads[j]
    if li.component != lj.component:
        return None
    lcm = mono_lcm(li.monomial, lj.monomial)
    sugar = max(
        sugars[i] + mono_degree(lcm) - mono_degree(li.monomial),
        sugars[j] + mono_degree(lcm) - mono_degree(lj.monomial),
    )
    return SPair(i, j, lcm, sugar)


def module_buchberger(gens, opts: BuchbergerOptions | None = None,
                      groebner_prefix: int = 0) -> ModuleGroebnerBasis:
    """Complete a generating list to a Groebner basis of the submodule.

    With opts.reduce the output is the unique reduced basis (monic, minimal
    leads, fully tail-reduced) sorted by (degree, descending lead).  Without
    it the input generators survive, monic-scaled, as a prefix of the basis,
    which the syzygy machinery relies on.

    groebner_prefix asserts that the first so-many generators are already a
    basis of what they generate, so their mutual pairs can be skipped; pass
    it only when that is actually known.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("cannot complete an empty generating list")
    module = gens[0].module
    ring = module.ring
    field = ring.field
    opts = opts or BuchbergerOptions()
    for g in gens:
        if g.module != module:
            raise ValueError("generators live in different modules")
        if g.is_zero:
            raise ValueError("zero generator")
    if not ring.order.is_well_order:
        for g in gens:
            if not g.is_homogeneous():
                raise ValueError(
                    "weight orders are only total degree by degree; "
                    "generators must be homogeneous"
                )

    rank_one = module.rank == 1
    rng = random.Random(opts.select_seed) if opts.select_seed is not None else None

    basis = []
    transform = []
    leads = []
    sugars = []

    track = opts.track_transform

    def append_element(elem, row):
        lc = elem.lead_term().coeff
        if lc != field.one:
            c = field.inv(lc)
            elem = elem.scalar_mul(c)
            if track:
                row = tuple(p.scalar_mul(c) for p in row)
        basis.append(elem)
        transform.append(row)
        leads.append(elem.lead_term())
        sugars.append(elem.degree() if elem.is_homogeneous() else elem_total_degree(elem))
        if opts.reduce_incrementally:
            # keep older tails small by reducing them against the new lead;
            # skip any element whose own lead the reduction would consume
            new = basis[-1]
            for k in range(len(basis) - 1):
                div = module_divide(basis[k], [new])
                rem = div.remainder
                if rem.is_zero or rem == basis[k] or rem.lead_term() != basis[k].lead_term():
                    continue
                basis[k] = rem
                if track:
                    q = div.quotients[0]
                    transform[k] = tuple(
                        rp - q * np for rp, np in zip(transform[k], transform[-1])
                    )

    def elem_total_degree(elem):
        return max(
            p.total_degree() + s
            for p, s in zip(elem.comps, module.shifts)
            if not p.is_zero
        )

    nident = len(gens)
    for idx, g in enumerate(gens):
        if track:
            row = [ring.zero()] * nident
            row[idx] = ring.one()
            append_element(g, tuple(row))
        else:
            append_element(g, ())

    pending = {}
    for j in range(len(basis)):
        for i in range(j):
            if j < groebner_prefix:
                continue
            p = _make_pair(i, j, leads, sugars, module.shifts)
            if p is not None:
                pending[(i, j)] = p

    complete = True

    def select_pair():
        if rng is not None:
            k = rng.choice(sorted(pending))
            return pending.pop(k)
        best = min(
            pending.values(),
            key=lambda p: (_pair_degree(leads[p.i], leads[p.j], p.lcm, module.shifts), p.i, p.j),
        )
        return pending.pop((best.i, best.j))

    while pending:
        opts.check_deadline()
        pair = select_pair()
        i, j = pair.i, pair.j
        li, lj = leads[i], leads[j]

        if opts.degree_cap is not None:
            if _pair_degree(li, lj, pair.lcm, module.shifts) > opts.degree_cap:
                complete = False
                continue

        # coprime-lead criterion; valid for ideals only, where the product
        # trick applies
        if rank_one and pair.lcm == mono_mul(li.monomial, lj.monomial):
            continue

        # chain criterion: some other lead divides the lcm and both
        # sub-pairs have already been handled
        skip = False
        for k, lk in enumerate(leads):
            if k == i or k == j:
                continue
            if lk.component != li.component:
                continue
            if mono_div(pair.lcm, lk.monomial) is None:
                continue
            a = (min(i, k), max(i, k))
            b = (min(k, j), max(k, j))
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue

        u = mono_div(pair.lcm, li.monomial)
        v = mono_div(pair.lcm, lj.monomial)
        s_elem = basis[i].monomial_mul(field.one, u) - basis[j].monomial_mul(field.one, v)
        if s_elem.is_zero:
            continue
        div = module_divide(s_elem, basis)
        rem = div.remainder
        if rem.is_zero:
            continue

        if track:
            row = [ring.zero()] * nident
            for col in range(nident):
                acc = transform[i][col].monomial_mul(field.one, u) - transform[j][
                    col
                ].monomial_mul(field.one, v)
                for q, trow in zip(div.quotients, transform):
                    if not q.is_zero:
                        acc = acc - q * trow[col]
                row[col] = acc
            row = tuple(row)
        else:
            row = ()

        new_index = len(basis)
        append_element(rem, row)
        for k in range(new_index):
            p = _make_pair(k, new_index, leads, sugars, module.shifts)
            if p is not None:
                pending[(k, new_index)] = p

    if opts.reduce:
        basis, transform = _interreduce(module, basis, transform)
        reduced = True
    else:
        reduced = False

    return ModuleGroebnerBasis(module, basis, transform, gens, reduced, complete)


def _interreduce(module, basis, transform):
    """Minimal leads, full tail reduction, canonical sort."""
    order = module.order
    idxs = sorted(
        range(len(basis)),
        key=lambda i: (
            mono_degree(basis[i].lead_term().monomial) + module.shifts[basis[i].lead_term().component],
            tuple(_neg_key(order.key(basis[i].lead_term().monomial, basis[i].lead_term().component))),
        ),
    )
    kept = []
    for i in idxs:
        lt = basis[i].lead_term()
        if any(
            kl.component == lt.component and mono_div(lt.monomial, kl.monomial) is not None
            for kl in (basis[k].lead_term() for k in kept)
        ):
            continue
        kept.append(i)

    elements = [basis[i] for i in kept]
    rows = [transform[i] for i in kept]
    reduced_elements = []
    reduced_rows = []
    for pos, elem in enumerate(elements):
        others = elements[:pos] + elements[pos + 1:]
        other_rows = rows[:pos] + rows[pos + 1:]
        if others:
            div = module_divide(elem, others)
            rem = div.remainder
            row = list(rows[pos])
            for q, orow in zip(div.quotients, other_rows):
                if not q.is_zero:
                    row = [rp - q * op for rp, op in zip(row, orow)]
            reduced_elements.append(rem)
            reduced_rows.append(tuple(row))
        else:
            reduced_elements.append(elem)
            reduced_rows.append(rows[pos])

    paired = sorted(
        zip(reduced_elements, reduced_rows),
        key=lambda er: (
            mono_degree(er[0].lead_term().monomial)
            + module.shifts[er[0].lead_term().component],
            tuple(_neg_key(module.order.key(er[0].lead_term().monomial, er[0].lead_term().component))),
        ),
    )
    elements = [e for e, _ in paired]
    rows = [r for _, r in paired]
    return elements, rows


def _neg_key(key):
    """Order-reversing wrapper so sorted() puts larger keys first."""
    if isinstance(key, tuple):
        return tuple(_neg_key(k) for k in key)
    return -key


def is_module_groebner(elements) -> bool:
    """Check whether all defined S-pairs reduce to zero against the list."""
    elements = list(elements)
    if any(e.is_zero for e in elements):
        raise ValueError("zero element in basis")
    field = elements[0].module.ring.field
    leads = [e.lead_term() for e in elements]
    for j in range(len(elements)):
        for i in range(j):
            li, lj = leads[i], leads[j]
            if li.component != lj.component:
                continue
            lcm = mono_lcm(li.monomial, lj.monomial)
            s = elements[i].monomial_mul(
                field.inv(li.coeff), mono_div(lcm, li.monomial)
            ) - elements[j].monomial_mul(field.inv(lj.coeff), mono_div(lcm, lj.monomial))
            if s.is_zero:
                continue
            if not module_divide(s, elements).remainder.is_zero:
                return False
    return True


# ---------------------------------------------------------------------------
# syzygies
# ---------------------------------------------------------------------------

def syzygy_module_for(elements, ambient_order: ModuleOrder | None = None) -> FreeModule:
    """Free module whose basis maps onto the given elements, carrying the
    Schreyer order they induce."""
    module = elements[0].module
    leads = [e.lead_term() for e in elements]
    shifts = tuple(e.degree() if e.is_homogeneous() else 0 for e in elements)
    order = SchreyerOrder(leads, ambient_order or module.order)
    return FreeModule(module.ring, shifts, order)


def _chain_filtered_pairs(leads):
    """Pair set that still generates the trivial-syzygy module.

    Drops (i, j) when a third lead divides their lcm and both sub-lcms are
    proper divisors; the identity
    t_ij = (L/L_ik) t_ik + (L/L_kj) t_kj makes the dropped pair redundant,
    and proper divisibility keeps the recursion well-founded.  The coprime
    shortcut is *not* applied: those trivial syzygies are needed."""
    alive = set()
    by_lcm = []
    for j in range(len(leads)):
        for i in range(j):
            if leads[i].component != leads[j].component:
                continue
            alive.add((i, j))
            by_lcm.append((i, j, mono_lcm(leads[i].monomial, leads[j].monomial)))
    by_lcm.sort(key=lambda t: -mono_degree(t[2]))
    for i, j, lcm in by_lcm:
        for k in range(len(leads)):
            if k in (i, j) or leads[k].component != leads[i].component:
                continue
            if mono_div(lcm, leads[k].monomial) is None:
                continue
            a = (min(i, k), max(i, k))
            b = (min(k, j), max(k, j))
            if a not in alive or b not in alive:
                continue
            if mono_lcm(leads[a[0]].monomial, leads[a[1]].monomial) == lcm:
                continue
            if mono_lcm(leads[b[0]].monomial, leads[b[1]].monomial) == lcm:
                continue
            alive.discard((i, j))
            break
    return alive


def _syzygies_of_basis(basis_elements, check_lead: bool = True, pair_subset=None):
    """Syzygies of a Groebner basis via the Schreyer construction.

    With all pairs (the default) the output is a Groebner basis of the
    syzygy module under the induced order; a pair_subset that still
    generates the trivial syzygies yields a generating set."""
    elements = list(basis_elements)
    module = elements[0].module
    ring = module.ring
    field = ring.field
    m1 = syzygy_module_for(elements)
    leads = [e.lead_term() for e in elements]
    out = []
    for j in range(len(elements)):
        for i in range(j):
            li, lj = leads[i], leads[j]
            if li.component != lj.component:
                continue
            if pair_subset is not None and (i, j) not in pair_subset:
                continue
            lcm = mono_lcm(li.monomial, lj.monomial)
            u = mono_div(lcm, li.monomial)
            v = mono_div(lcm, lj.monomial)
            ci = field.inv(li.coeff)
            cj = field.inv(lj.coeff)
            s = elements[i].monomial_mul(ci, u) - elements[j].monomial_mul(cj, v)
            t_ij = m1.basis_element(i).monomial_mul(ci, u) - m1.basis_element(j).monomial_mul(cj, v)
            if s.is_zero:
                out.append(t_ij)
                continue
            div = module_divide(s, elements)
            if not div.remainder.is_zero:
                raise ValueError("input list is not a Groebner basis")
            q_elem = m1.zero()
            for k, q in enumerate(div.quotients):
                if not q.is_zero:
                    q_elem = q_elem + _scale(m1.basis_element(k), q)
            syz = t_ij - q_elem
            if check_lead:
                assert syz.lead_term()[1:] == t_ij.lead_term()[1:], (
                    "syzygy lead drifted from the trivial syzygy lead"
                )
            out.append(syz)
    return out


def syzygy_generators(elements, opts: BuchbergerOptions | None = None,
                      lex_sort: bool = False):
    """Generators of Syz(elements) for an arbitrary generating list.

    Complete to a reduced basis F with transform T (so F = T * elements),
    divide each input back through F to get quotients Q, and combine:
    syzygies of F pushed through T, plus the conversion relations, the
    nonzero rows of (Id - Q T).  Any relation h among the inputs splits as
    h = h (Id - Q T) + (h Q) T with h Q a syzygy of F, so these generate.
    """
    run = opts or BuchbergerOptions()
    run = BuchbergerOptions(
        reduce=True,
        degree_cap=run.degree_cap,
        select_seed=run.select_seed,
        deadline=run.deadline,
    )
    basis = module_buchberger(elements, run)
    if not basis.complete:
        raise CapInterrupted("degree cap interrupted the completion")
    if lex_sort:
        order = sorted(
            range(len(basis.elements)),
            key=lambda i: basis.elements[i].lead_term().monomial,
            reverse=True,
        )
        felems = [basis.elements[i] for i in order]
        rows = [basis.transform[i] for i in order]
    else:
        felems = basis.elements
        rows = basis.transform

    ring = felems[0].module.ring
    target = syzygy_module_for(elements)
    pairs = _chain_filtered_pairs([e.lead_term() for e in felems])
    out = []
    for s in _syzygies_of_basis(felems, pair_subset=pairs):
        comps = [ring.zero()] * target.rank
        for k, coeff_poly in enumerate(s.comps):
            if coeff_poly.is_zero:
                continue
            for col in range(target.rank):
                t = rows[k][col]
                if not t.is_zero:
                    comps[col] = comps[col] + coeff_poly * t
        pushed = target.element(comps)
        if not pushed.is_zero:
            out.append(pushed)

    for a, g in enumerate(elements):
        div = module_divide(g, felems)
        if not div.remainder.is_zero:
            raise AssertionError("generator failed to divide through its own basis")
        comps = [ring.zero()] * target.rank
        comps[a] = ring.one()
        for q, row in zip(div.quotients, rows):
            if q.is_zero:
                continue
            for col in range(target.rank):
                t = row[col]
                if not t.is_zero:
                    comps[col] = comps[col] - q * t
        elem = target.element(comps)
        if not elem.is_zero:
            out.append(elem)
    return out


def syzygies(F, opts: BuchbergerOptions | None = None):
    """Generators of the syzygy module of F.

    When F is already a Groebner basis (or a ModuleGroebnerBasis), the
    Schreyer construction applies directly and the output is a Groebner
    basis of the syzygy module under the induced order.  A plain generating
    list is completed first and the syzygies are carried back onto the
    original generators through the transform.
    """
    if isinstance(F, ModuleGroebnerBasis):
        return _syzygies_of_basis(F.elements)

    elements = list(F)
    if not elements:
        return []
    if isinstance(elements[0], Polynomial):
        _, elements = as_module_elements(elements)

    if is_module_groebner(elements):
        return _syzygies_of_basis(elements)
    return syzygy_generators(elements, opts)


# ---------------------------------------------------------------------------
# minimal generators
# ---------------------------------------------------------------------------

def minimalize_generators(items, opts: BuchbergerOptions | None = None):
    """Trim a homogeneous generating list to a minimal one.

    Candidates are scanned by ascending degree (ties by input position) and
    kept only when they fail to reduce to zero against a basis of what was
    already kept; graded Nakayama makes the survivor count intrinsic.  The
    working basis grows incrementally, pairing each kept candidate against
    the prior completed prefix only.
    """
    items = list(items)
    if not items:
        return []
    wrap = isinstance(items[0], Polynomial)
    if wrap:
        _, elements = as_module_elements(items)
    else:
        elements = items
    elements = [e for e in elements if not e.is_zero]
    if not elements:
        return []
    for e in elements:
        if not e.is_homogeneous():
            raise ValueError("minimal generators need homogeneous input")

    base = opts or BuchbergerOptions()
    run = BuchbergerOptions(
        reduce=False,
        degree_cap=base.degree_cap,
        select_seed=base.select_seed,
        deadline=base.deadline,
        track_transform=False,
    )
    order = sorted(range(len(elements)), key=lambda i: (elements[i].degree(), i))
    kept = []
    working = []
    for i in order:
        cand = elements[i]
        if working and module_divide(cand, working).remainder.is_zero:
            continue
        kept.append(cand)
        completed = module_buchberger(
            working + [cand], run, groebner_prefix=len(working)
        )
        working = completed.elements
    if wrap:
        return [e.comps[0] for e in kept]
    return kept
