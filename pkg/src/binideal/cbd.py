"""Commuting birth-and-death ideals on bounded regular grids.

The state graph is the grid {0..n_1} x ... x {0..n_m} (m = 2 or 3) with a
forward and a backward transition variable per edge: R/L along axis 1, U/D
along axis 2, F/B along axis 3. Each unit square contributes four degree-2
pure differences saying the two paths between opposite corners commute.
"""

from __future__ import annotations

from itertools import product

from .poly import Binomial, BinomialIdeal
from .ring import RingContext

# (plus letter, minus letter) per axis; a vertex lists its variables in
# R,L,D,U,F,B order, skipping directions that leave the grid.
_AXIS_LETTERS = (("R", "L"), ("U", "D"), ("F", "B"))
_VERTEX_ORDER = (("R", 0, +1), ("L", 0, -1), ("D", 1, -1), ("U", 1, +1),
                 ("F", 2, +1), ("B", 2, -1))


class Grid:
    """A bounded grid plus its transition-variable ring."""

    __slots__ = ("dims", "names", "index", "ring")

    def __init__(self, dims):
        dims = tuple(int(d) for d in dims)
        if len(dims) not in (2, 3):
            raise ValueError("grids must have 2 or 3 axes")
        if any(d < 1 for d in dims):
            raise ValueError("every axis needs at least one edge")
        object.__setattr__(self, "dims", dims)
        names = []
        for v in self.vertices():
            for letter, axis, step in _VERTEX_ORDER:
                if axis >= len(dims):
                    continue
                if step > 0 and v[axis] >= dims[axis]:
                    continue
                if step < 0 and v[axis] == 0:
                    continue
                names.append(self._name(letter, v))
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "index", {nm: i for i, nm in enumerate(names)})
        object.__setattr__(self, "ring", RingContext(tuple(names)))

    def __setattr__(self, name, value):
        raise AttributeError("Grid is immutable")

    def _name(self, letter: str, vertex) -> str:
        if all(d <= 9 for d in self.dims):
            return letter + "".join(str(c) for c in vertex)
        return letter + "_" + "_".join(str(c) for c in vertex)

    def vertices(self):
        return product(*(range(d + 1) for d in self.dims))

    def variable(self, letter: str, vertex) -> str:
        nm = self._name(letter, vertex)
        if nm not in self.index:
            raise KeyError(f"no edge variable {nm}")
        return nm


def enumerate_squares(grid: Grid):
    """(base vertex, axis pair a < b) for every axis-aligned unit square."""
    dims = grid.dims
    m = len(dims)
    out = []
    for a in range(m):
        for b in range(a + 1, m):
            for v in grid.vertices():
                if v[a] < dims[a] and v[b] < dims[b]:
                    out.append((v, a, b))
    return out


def _shift(v, axis, by=1):
    return tuple(c + (by if i == axis else 0) for i, c in enumerate(v))


def square_relations(grid: Grid, base, a: int, b: int):
    """The four path-commutation binomials of one square, as name pairs
    (((p, q), (r, s)) meaning p*q - r*s) in the order the 2-axis script
    prints them."""
    ap, am = _AXIS_LETTERS[a]
    bp, bm = _AXIS_LETTERS[b]
    v = tuple(base)
    va = _shift(v, a)
    vb = _shift(v, b)
    vab = _shift(va, b)
    g = grid.variable
    return [
        ((g(bp, v), g(ap, vb)), (g(ap, v), g(bp, va))),
        ((g(ap, vb), g(bm, vab)), (g(bm, vb), g(ap, v))),
        ((g(bm, vab), g(am, va)), (g(am, vab), g(bm, vb))),
        ((g(am, va), g(bp, v)), (g(bp, va), g(am, vab))),
    ]


def grid_generator_terms(dims):
    """All generators of the grid ideal as ((p,q),(r,s)) name pairs,
    square by square."""
    grid = Grid(dims)
    terms = []
    for base, a, b in enumerate_squares(grid):
        terms.extend(square_relations(grid, base, a, b))
    return grid, terms


def cbd_ideal(dims):
    """The commuting birth-and-death ideal of the grid, with its ring."""
    grid, terms = grid_generator_terms(dims)
    n = len(grid.names)
    gens = []
    for (p, q), (r, s) in terms:
        lead = [0] * n
        trail = [0] * n
        lead[grid.index[p]] += 1
        lead[grid.index[q]] += 1
        trail[grid.index[r]] += 1
        trail[grid.index[s]] += 1
        gens.append(Binomial(tuple(lead), tuple(trail)))
    return grid, BinomialIdeal(grid.ring, gens)


def render_ideal_file(dims) -> str:
    """The grid ideal in the plain text ideal-file format."""
    grid, terms = grid_generator_terms(dims)
    lines = [f"# commuting birth-and-death ideal, grid {'x'.join(map(str, dims))}",
             "ring " + " ".join(grid.names)]
    for (p, q), (r, s) in terms:
        lines.append(f"{p}*{q}-{r}*{s}")
    return "\n".join(lines) + "\n"


def render_m2(dims) -> str:
    """Macaulay2-style listing (ring + ideal) of the grid ideal."""
    grid, terms = grid_generator_terms(dims)
    gens = [f"{p}*{q}-{r}*{s}" for (p, q), (r, s) in terms]
    return ("S = QQ[" + ",".join(grid.names) + "]\n"
            + "I = ideal(" + ",".join(gens) + ")\n")
