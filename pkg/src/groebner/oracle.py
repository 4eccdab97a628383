"""Brute-force ground truth via degree-truncated linear algebra.

A Macaulay matrix in degree d has one row per monomial multiple of a
generator landing in degree d and one column per degree-d monomial.  Its
row space is the degree-d slice of the ideal, so ranks answer dimension and
membership questions without any Groebner machinery.  Everything here is
exact Gaussian elimination with first-nonzero pivoting; this module is a
test instrument, so it stays deliberately simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .orders import OrderSpec
from .poly import Polynomial, PolynomialRing, mono_mul

__all__ = [
    "MacaulayMatrix", "macaulay_matrix", "monomials_of_degree",
    "ideal_dim_in_degree", "membership_in_degree", "initial_ideal_in_degree",
    "row_reduce", "rank_of_rows", "invert_matrix",
]

DEFAULT_CELL_BUDGET = 4_000_000


def monomials_of_degree(nvars: int, d: int) -> list:
    """All exponent vectors of total degree d, in no particular order."""
    if d < 0:
        return []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, nvars)
    return out


def sorted_monomials(ring: PolynomialRing, d: int, order: OrderSpec | None = None) -> list:
    key = (order or ring.order).key_function(ring.nvars)
    return sorted(monomials_of_degree(ring.nvars, d), key=key, reverse=True)


@dataclass
class MacaulayMatrix:
    ring: PolynomialRing
    degree: int
    columns: list     # degree-d monomials, descending under the column order
    rows: list        # coefficient vectors over the field

    @property
    def column_index(self):
        return {m: i for i, m in enumerate(self.columns)}


def coefficient_vector(f: Polynomial, column_index) -> list:
    vec = [f.ring.field.zero] * len(column_index)
    for t in f.terms:
        vec[column_index[t.monomial]] = t.coeff
    return vec


def macaulay_matrix(gens, d: int, order: OrderSpec | None = None,
                    max_cells: int = DEFAULT_CELL_BUDGET) -> MacaulayMatrix:
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("Macaulay matrices need homogeneous generators")
    columns = sorted_monomials(ring, d, order)
    col_index = {m: i for i, m in enumerate(columns)}

    rows = []
    n_rows = sum(
        comb(d - g.total_degree() + ring.nvars - 1, ring.nvars - 1)
        for g in gens
        if g.total_degree() <= d
    )
    if n_rows * len(columns) > max_cells:
        raise MemoryError(
            f"Macaulay matrix would need {n_rows}x{len(columns)} cells, "
            f"over the {max_cells} budget"
        )
    for g in gens:
        dg = g.total_degree()
        if dg > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - dg):
            vec = [ring.field.zero] * len(columns)
            for t in g.terms:
                vec[col_index[mono_mul(t.monomial, m)]] = t.coeff
            rows.append(vec)
    return MacaulayMatrix(ring, d, columns, rows)


def row_reduce(rows, field):
    """In-place reduced row echelon form; returns the pivot column list.

    Pivots take the first nonzero entry scanning left to right, top rows
    first, with no reordering heuristics, so runs are reproducible.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [
                    field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank_of_rows(rows, field) -> int:
    work = [list(r) for r in rows]
    return len(row_reduce(work, field))


def ideal_dim_in_degree(gens, d: int, max_cells: int = DEFAULT_CELL_BUDGET) -> int:
    """dim_k of the degree-d slice of the ideal, by exact row reduction."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return 0
    mat = macaulay_matrix(gens, d, max_cells=max_cells)
    return rank_of_rows(mat.rows, mat.ring.field)


def membership_in_degree(g: Polynomial, gens) -> bool:
    """Is the homogeneous g in the span of the ideal's degree-deg(g) slice?"""
    if g.is_zero:
        return True
    if not g.is_homogeneous():
        raise ValueError("degree-truncated membership needs homogeneous input")
    gens = [f for f in gens if not f.is_zero]
    if not gens:
        return False
    d = g.total_degree()
    mat = macaulay_matrix(gens, d)
    base = rank_of_rows(mat.rows, mat.ring.field)
    extended = mat.rows + [coefficient_vector(g, mat.column_index)]
    return rank_of_rows(extended, mat.ring.field) == base


def initial_ideal_in_degree(gens, d: int, order: OrderSpec | None = None) -> list:
    """Lead monomials of a degree-d basis of the ideal with distinct leads.

    Gaussian elimination with columns sorted descending under the order
    turns pivot columns into exactly the degree-d slice of the initial
    ideal.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return []
    mat = macaulay_matrix(gens, d, order=order)
    work = [list(r) for r in mat.rows]
    pivots = row_reduce(work, mat.ring.field)
    return [mat.columns[c] for c in pivots]


def invert_matrix(matrix, field):
    """Inverse of a square matrix over the field, or None when singular."""
    n = len(matrix)
    work = [list(row) + [field.one if i == j else field.zero for j in range(n)]
            for i, row in enumerate(matrix)]
    pivots = row_reduce(work, field)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in work]
