"""Integer lattices and partial characters.

Lattices are stored as generator rows in Z^n. A partial character pairs a
lattice basis with root-of-unity values, one per basis row; values on the
rest of the lattice follow by multiplicativity. Saturations (all extensions
to the saturated lattice) come from a Smith decomposition of the coordinate
matrix of the old basis in the new one.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import RootOfUnity
from .poly import Binomial, BinomialIdeal
from .ring import RingContext, vector_split


# ---------------------------------------------------------------------------
# integer matrix normal forms


def hnf_rows(a):
    """Row Hermite form: returns (H, U) with U unimodular, U*A = H.

    Pivots positive, entries above a pivot reduced to [0, pivot), zero rows
    last. A is a list of row lists; inputs are never mutated.
    """
    h = [list(row) for row in a]
    m = len(h)
    n = len(h[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        piv = None
        while True:
            rows = [i for i in range(r, m) if h[i][c]]
            if not rows:
                break
            rows.sort(key=lambda i: (abs(h[i][c]), i))
            p = rows[0]
            if len(rows) == 1:
                piv = p
                break
            q = rows[1]
            f = h[q][c] // h[p][c]
            for k in range(n):
                h[q][k] -= f * h[p][k]
            for k in range(m):
                u[q][k] -= f * u[p][k]
        if piv is None:
            continue
        if piv != r:
            h[piv], h[r] = h[r], h[piv]
            u[piv], u[r] = u[r], u[piv]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            f = h[i][c] // h[r][c]
            if f:
                for k in range(n):
                    h[i][k] -= f * h[r][k]
                for k in range(m):
                    u[i][k] -= f * u[r][k]
        r += 1
    return h, u


def left_kernel(a):
    """Basis (rows) of {u : u*A = 0}; saturated by construction."""
    if not a:
        return []
    h, u = hnf_rows(a)
    out = []
    for i, row in enumerate(h):
        if not any(row):
            out.append(tuple(u[i]))
    return out


def right_kernel(a):
    """Basis (rows) of {v : A*v = 0}."""
    if not a:
        return []
    at = [list(col) for col in zip(*a)]
    return left_kernel(at)


def saturation_basis(rows, n):
    """Basis of Sat(L) = (L tensor Q) meet Z^n for L spanned by `rows`."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    w = right_kernel(rows)
    if not w:
        # full rank: saturation is all of Z^n
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return right_kernel([list(v) for v in w])


def lattice_rank(rows):
    h, _ = hnf_rows([list(r) for r in rows]) if rows else ([], [])
    return sum(1 for row in h if any(row))


def solve_in_rowspan(rows, target):
    """Integer u with u*rows = target, or None.

    Works through the Hermite form: substitution on pivot columns decides
    rational solvability, then integrality is checked coordinatewise.
    """
    rows = [list(r) for r in rows]
    target = list(target)
    if not rows:
        return () if not any(target) else None
    h, u = hnf_rows(rows)
    n = len(target)
    w = [Fraction(0)] * len(rows)
    rem = [Fraction(t) for t in target]
    for i, row in enumerate(h):
        piv = next((c for c in range(n) if row[c]), None)
        if piv is None:
            break
        if rem[piv]:
            coef = rem[piv] / row[piv]
            w[i] = coef
            for c in range(n):
                rem[c] -= coef * row[c]
    if any(rem):
        return None
    out = []
    for j in range(len(rows)):
        s = Fraction(0)
        for i in range(len(rows)):
            if w[i]:
                s += w[i] * u[i][j]
        if s.denominator != 1:
            return None
        out.append(int(s))
    return tuple(out)


def smith_normal_form(a):
    """(D, P, Q) with P*A*Q = D diagonal, d1 | d2 | ...; all integer."""
    d = [list(row) for row in a]
    m = len(d)
    n = len(d[0]) if m else 0
    p = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    q = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        for k in range(n):
            d[dst][k] += f * d[src][k]
        for k in range(m):
            p[dst][k] += f * p[src][k]

    def add_col(dst, src, f):
        for row in d:
            row[dst] += f * row[src]
        for row in q:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        # find smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, m):
            if d[i][t]:
                add_row(i, t, -(d[i][t] // d[t][t]))
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if d[t][j]:
                add_col(j, t, -(d[t][j] // d[t][t]))
                if d[t][j]:
                    dirty = True
        if dirty:
            continue
        if any(d[i][t] for i in range(t + 1, m)) or any(
            d[t][j] for j in range(t + 1, n)
        ):
            continue
        # divisibility sweep: d[t][t] must divide the rest of the block
        culprit = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t]:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            add_row(t, culprit, 1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            p[t] = [-x for x in p[t]]
        t += 1
    return d, p, q


def invariant_factors(a):
    d, _, _ = smith_normal_form(a)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i]:
            out.append(abs(d[i][i]))
    return out


def quotient_order(rows, n):
    """|Z^n / L| for L spanned by rows; 0 when the index is infinite."""
    rows = [list(r) for r in rows if any(r)]
    if lattice_rank(rows) < n:
        return 0
    facs = invariant_factors(rows)
    out = 1
    for f in facs:
        out *= f
    return out


# ---------------------------------------------------------------------------
# partial characters


def _root_to_frac(r: RootOfUnity) -> Fraction:
    return Fraction(r.exponent, r.order)


def _frac_to_root(q: Fraction) -> RootOfUnity:
    q = q - (q.numerator // q.denominator)  # reduce mod 1
    return RootOfUnity(q.denominator, q.numerator)


class PartialCharacter:
    """Root-of-unity valued character on a lattice inside Z^n.

    basis: tuple of independent integer row vectors; values: one root of
    unity per row. The value on a general lattice vector is the product of
    basis values with the vector's (unique) integer coordinates.
    """

    __slots__ = ("n", "basis", "values")

    def __init__(self, n: int, basis, values):
        basis = tuple(tuple(b) for b in basis)
        values = tuple(values)
        if len(basis) != len(values):
            raise ValueError("one value per basis vector required")
        if basis and lattice_rank(basis) != len(basis):
            raise ValueError("character basis must be independent")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("PartialCharacter is immutable")

    def __reduce__(self):
        return (PartialCharacter, (self.n, self.basis, self.values))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def field_order(self) -> int:
        out = 1
        for v in self.values:
            out = out * v.order // gcd(out, v.order)
        return out

    def value_of(self, vector):
        """Value on a lattice member, or None if the vector is outside."""
        coords = solve_in_rowspan(self.basis, vector)
        if coords is None:
            return None
        out = RootOfUnity.one()
        for c, v in zip(coords, self.values):
            out = out * (v ** c)
        return out

    def canonical(self):
        """Hashable form, identical for equal characters: Hermite basis
        with transported values."""
        if not self.basis:
            return (self.n, (), ())
        h, u = hnf_rows([list(b) for b in self.basis])
        rows = []
        vals = []
        for i, row in enumerate(h):
            if not any(row):
                continue
            rows.append(tuple(row))
            v = RootOfUnity.one()
            for j, c in enumerate(u[i]):
                v = v * (self.values[j] ** c)
            vals.append(v.canonical())
        return (self.n, tuple(rows), tuple(vals))

    def __eq__(self, other):
        if not isinstance(other, PartialCharacter):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def is_saturated(self) -> bool:
        if not self.basis:
            return True
        sat = saturation_basis(self.basis, self.n)
        return quotient_order_relative(self.basis, sat) == 1

    def saturations(self):
        """All extensions to the saturated lattice; the count equals the
        index of the lattice in its saturation."""
        if not self.basis:
            return [self]
        sat = saturation_basis(self.basis, self.n)
        coords = []
        for b in self.basis:
            c = solve_in_rowspan(sat, b)
            if c is None:
                raise AssertionError("basis escapes its own saturation")
            coords.append(list(c))
        r = len(sat)
        # coords is square full rank: the basis and its saturation share rank
        d, p, q = smith_normal_form(coords)
        # solve C*x = t over Q/Z with C the coordinate matrix: x = Q*y,
        # d_i * y_i = (P*t)_i, giving d_i choices per diagonal entry
        t = [_root_to_frac(v) for v in self.values]
        pt = []
        for i in range(r):
            s = Fraction(0)
            for j in range(r):
                s += p[i][j] * t[j]
            pt.append(s)
        choices = [[]]
        for i in range(r):
            di = d[i][i]
            if di == 0:
                raise AssertionError("coordinate matrix lost rank")
            new = []
            for prefix in choices:
                for k in range(di):
                    new.append(prefix + [(pt[i] + k) / di])
            choices = new
        out = []
        for y in choices:
            x = []
            for i in range(r):
                s = Fraction(0)
                for j in range(r):
                    s += q[i][j] * y[j]
                x.append(_frac_to_root(s))
            out.append(PartialCharacter(self.n, sat, x))
        out.sort(key=lambda ch: ch.canonical())
        return out


def quotient_order_relative(sub_rows, super_rows):
    """Index [super : sub] of lattices with equal rank; 0 if ranks differ."""
    sub = [list(r) for r in sub_rows if any(r)]
    sup = [list(r) for r in super_rows if any(r)]
    if lattice_rank(sub) != lattice_rank(sup):
        return 0
    coords = []
    for b in sub:
        c = solve_in_rowspan(sup, b)
        if c is None:
            return 0
        coords.append(list(c))
    facs = invariant_factors(coords)
    if len(facs) != len(sup):
        return 0
    out = 1
    for f in facs:
        out *= f
    return out


# ---------------------------------------------------------------------------
# characters <-> ideals


def lattice_ideal(chi: PartialCharacter, ring: RingContext) -> BinomialIdeal:
    """Lattice ideal of a character: binomials of a basis, saturated at all
    variables of `ring` (which must match the character's ambient rank)."""
    from .groebner import reduced_gb, saturate_variables

    if ring.nvars != chi.n:
        raise ValueError("ring size does not match character ambient")
    gens = []
    for b, v in zip(chi.basis, chi.values):
        plus, minus = vector_split(b)
        gens.append(Binomial(plus, minus, v))
    ideal = BinomialIdeal(ring, gens)
    sat, _ = saturate_variables(ideal, tuple(range(ring.nvars)))
    return BinomialIdeal(sat.ring, reduced_gb(sat).elements, normalize=False)


def character_from_ideal(ideal: BinomialIdeal) -> PartialCharacter:
    """Character of a lattice ideal (proper binomials only, saturated at
    all variables). The reduced-basis vectors span the full lattice; a
    Hermite pass turns them into an independent basis with values."""
    from .groebner import reduced_gb

    gb = reduced_gb(ideal)
    vectors = []
    values = []
    for g in gb.elements:
        if g.is_monomial:
            raise ValueError("monomial in a lattice ideal basis")
        vec = tuple(a - b for a, b in zip(g.lead, g.trail))
        vectors.append(vec)
        values.append(g.coeff)
    n = ideal.ring.nvars
    if not vectors:
        return PartialCharacter(n, (), ())
    h, u = hnf_rows([list(v) for v in vectors])
    rows = []
    vals = []
    for i, row in enumerate(h):
        v = RootOfUnity.one()
        for j, c in enumerate(u[i]):
            v = v * (values[j] ** c)
        if any(row):
            rows.append(tuple(row))
            vals.append(v)
        elif not v.is_one:
            raise AssertionError("inconsistent values on a lattice relation")
    return PartialCharacter(n, rows, vals)


# ---------------------------------------------------------------------------
# column-convention entry points
#
# The row-based helpers above are the workhorses. Externally lattices are
# handed around as matrices whose columns generate the lattice, so these
# wrappers transpose on the way in and out.


def _transpose(a):
    return [list(col) for col in zip(*a)]


def hermite_normal_form(a):
    """Column Hermite form: (H, U) with A*U = H and U unimodular."""
    if not a or not a[0]:
        return [list(r) for r in a], []
    ht, ut = hnf_rows(_transpose(a))
    return _transpose(ht), _transpose(ut)


def lattice_saturation(a):
    """Sat(L) of the lattice spanned by the columns of A, as a column basis.

    Sat(L) = {m : d*m in L for some nonzero d}; computed as the integer
    kernel of the integer kernel. The result is the canonical (Hermite)
    basis, one column per basis vector; an n x 0 matrix for the zero lattice.
    """
    n = len(a)
    rows = [r for r in (_transpose(a) if a and a[0] else []) if any(r)]
    sat = saturation_basis(rows, n)
    if not sat:
        return [[] for _ in range(n)]
    h, _ = hnf_rows([list(r) for r in sat])
    return _transpose([row for row in h if any(row)])


def quotient_group_order(a):
    """|Sat(L)/L| for the lattice spanned by the columns of A."""
    n = len(a)
    rows = [r for r in (_transpose(a) if a and a[0] else []) if any(r)]
    if not rows:
        return 1
    sat = saturation_basis(rows, n)
    return quotient_order_relative(rows, sat)


def solve_integral(lsat, l):
    """The integer matrix K with L = Lsat*K, columns resolved one by one.

    Raises ValueError when some column of L is outside the lattice spanned
    by the columns of Lsat; K is unique because those columns are a basis.
    """
    sat_rows = [list(r) for r in _transpose(lsat)] if lsat and lsat[0] else []
    cols = _transpose(l) if l and l[0] else []
    out_cols = []
    for col in cols:
        u = solve_in_rowspan(sat_rows, list(col))
        if u is None:
            raise ValueError("column does not lie in the target lattice")
        out_cols.append(list(u))
    if not out_cols:
        return [[] for _ in range(len(sat_rows))]
    return _transpose(out_cols)
