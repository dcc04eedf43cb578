"""Exact solving of zero-dimensional pure-difference ideals.

Solutions of such ideals have coordinates that are either zero or roots of
unity, so everything stays inside a cyclotomic field Q(ww_m). The solver
leans on the decomposition stack: each primary component contributes one
point (read off its prime's character) with multiplicity the component's
degree. The same back-substitution core extends partial characters to
their saturated lattice, which is where new roots of unity are born.
"""

from __future__ import annotations

from math import lcm

from .cyclo import RootOfUnity
from .groebner import is_unit_ideal, reduced_gb, saturate_variables, zero_dim_degree
from .lattice import (
    PartialCharacter,
    lattice_saturation,
    quotient_group_order,
    solve_integral,
)
from .poly import Binomial, BinomialIdeal
from .ring import RingContext, lex_order, vector_split


class SolutionSet:
    """Solutions with multiplicity; a point repeats once per multiplicity.

    Coordinates are RootOfUnity values embedded into the common field
    Q(ww_field_order), or None for an exact zero (never conflated with 1).
    """

    __slots__ = ("field_order", "points")

    def __init__(self, field_order: int, points):
        object.__setattr__(self, "field_order", field_order)
        object.__setattr__(self, "points", tuple(tuple(p) for p in points))

    def __setattr__(self, name, value):
        raise AttributeError("SolutionSet is immutable")

    def __reduce__(self):
        return (SolutionSet, (self.field_order, self.points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def counts(self):
        """Distinct points in order of first appearance, with multiplicity."""
        out = []
        for p in self.points:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def __repr__(self):
        return f"SolutionSet({len(self.points)} points, field {self.field_order})"


def solve_univariate_power(n: int, rhs: RootOfUnity):
    """The n solutions of x^n = rhs, in the fixed order
    ww_{mn}^k, ww_{mn}^{m+k}, ..., ww_{mn}^{(n-1)m+k} for rhs = ww_m^k."""
    if n < 1:
        raise ValueError("exponent must be positive")
    m, k = rhs.canonical()
    return [RootOfUnity(m * n, j * m + k) for j in range(n)]


def _monomial_value(exp, coords):
    acc = RootOfUnity.one()
    for i, e in enumerate(exp):
        if e:
            acc = acc * (coords[i] ** e)
    return acc


def _holds_at(g: Binomial, coords) -> bool:
    lhs = _monomial_value(g.lead, coords)
    rhs = g.coeff * _monomial_value(g.trail, coords)
    return (lhs / rhs).is_one


def _solve_points(ideal: BinomialIdeal):
    """Points of a zero-dimensional ideal saturated at all its variables.

    Every coordinate of every solution is a nonzero root of unity, so a lex
    basis back-substitutes cleanly: walk variables from the lex-last one
    upward, at each step solving the smallest-degree relation that has
    become univariate and filtering against every fully evaluated element.
    """
    ring = ideal.ring
    n = ring.nvars
    gb = reduced_gb(ideal, lex_order(n))
    if gb.is_unit:
        return []
    elements = []
    for g in gb.elements:
        if g.is_monomial:
            raise AssertionError("monomial in a variable-saturated proper ideal")
        elements.append(g)
    by_head = [[] for _ in range(n)]
    for g in elements:
        head = min(i for i in range(n) if g.lead[i] or g.trail[i])
        by_head[head].append(g)
    points = []
    coords = [None] * n

    def rec(i: int):
        if i < 0:
            points.append(tuple(coords))
            return
        best = None
        for g in by_head[i]:
            a = g.lead[i] - g.trail[i]
            if a > 0 and (best is None or a < best[0]):
                best = (a, g)
        if best is None:
            raise AssertionError(f"no univariate relation for {ring.names[i]}")
        a, g = best
        rest_lead = tuple(0 if j == i else e for j, e in enumerate(g.lead))
        rest_trail = tuple(0 if j == i else e for j, e in enumerate(g.trail))
        rhs = g.coeff * _monomial_value(rest_trail, coords) / _monomial_value(rest_lead, coords)
        for val in solve_univariate_power(a, rhs):
            coords[i] = val
            if all(_holds_at(h, coords) for h in by_head[i]):
                rec(i - 1)
        coords[i] = None

    rec(n - 1)
    return points


def _root_key(v: RootOfUnity):
    c = v.canonical()
    return (c[0], c[1])


def _point_key(point):
    return tuple((0, 0, 0) if v is None else (1,) + _root_key(v) for v in point)


def saturate_character(chi: PartialCharacter):
    """All extensions of chi to the saturation of its lattice.

    Writing the old basis in coordinates of the saturated basis turns the
    extension problem into a zero-dimensional lattice ideal in rank-many
    fresh variables; its points are the extension values. The number of
    extensions is the group order |Sat(L)/L|.
    """
    if chi.rank == 0:
        return [chi]
    n = chi.n
    l_cols = [[row[i] for row in chi.basis] for i in range(n)]
    sat_cols = lattice_saturation(l_cols)
    r = len(sat_cols[0])
    k = solve_integral(sat_cols, l_cols)
    ring = RingContext(tuple(f"t{i+1}" for i in range(r)), chi.field_order())
    gens = []
    for j, val in enumerate(chi.values):
        kj = tuple(k[i][j] for i in range(r))
        plus, minus = vector_split(kj)
        gens.append(Binomial(plus, minus, val))
    pure = all(v.is_one for v in chi.values)
    if pure and any(g.is_proper and not g.coeff.is_one for g in gens):
        raise AssertionError("pure-difference character produced a mixed system")
    j_ideal, _ = saturate_variables(BinomialIdeal(ring, gens), range(r))
    if pure and not j_ideal.is_pure_difference():
        raise AssertionError("saturation left the pure-difference world")
    sat_rows = [tuple(col[i] for col in sat_cols) for i in range(r)]
    out = []
    for pt in sorted(_solve_points(j_ideal), key=_point_key):
        out.append(PartialCharacter(n, sat_rows, pt))
    count = quotient_group_order(l_cols)
    if len(out) != count:
        raise AssertionError(f"found {len(out)} extensions, group order is {count}")
    for tau in out:
        for vec, val in zip(chi.basis, chi.values):
            got = tau.value_of(vec)
            if got is None or not (got / val).is_one:
                raise AssertionError("extension disagrees with the character")
    return out


def binomial_solve(ideal: BinomialIdeal) -> SolutionSet:
    """All solutions of a zero-dimensional pure-difference ideal, exactly.

    Each primary component is a cellular ideal whose prime fixes one point:
    cell variables take the character's values on the unit vectors, the
    nilpotent variables are zero. The component's degree is the point's
    multiplicity, so the total count equals the degree of the input.
    """
    ideal.require_pure_difference("solving")
    degree = zero_dim_degree(ideal)
    if is_unit_ideal(ideal):
        return SolutionSet(1, ())
    from .decomp import primary_decomposition

    report = primary_decomposition(ideal)
    n = ideal.ring.nvars
    points = []
    total = 0
    for comp in report.components:
        mult = zero_dim_degree(comp.ideal)
        tau = comp.character
        cell = sorted(comp.cellular.cell_indices)
        if tau is None or tau.rank != len(cell):
            raise AssertionError("primary component of a zero-dimensional ideal "
                                 "must have a full-rank character")
        coords = [None] * n
        for pos, i in enumerate(cell):
            unit = tuple(1 if q == pos else 0 for q in range(len(cell)))
            coords[i] = tau.value_of(unit)
            if coords[i] is None:
                raise AssertionError("saturated character missing a unit vector")
        points.extend([tuple(coords)] * mult)
        total += mult
    if total != degree:
        raise AssertionError(f"multiplicity count {total} does not match degree {degree}")
    m = 1
    for p in points:
        for v in p:
            if v is not None:
                m = lcm(m, v.canonical()[0])
    embedded = []
    for p in sorted(points, key=_point_key):
        embedded.append(tuple(
            None if v is None else RootOfUnity(*v.canonical()).embed(m) for v in p))
    return SolutionSet(m, embedded)
