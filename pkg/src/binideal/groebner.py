"""Groebner bases and ideal operations for binomial ideals.

Everything expressible with two-term elements (reduced bases, elimination,
colon and saturation by a monomial) runs on the fast backend; intersection
needs an auxiliary variable and three-or-four-term intermediates, so it runs
on the dense engine and returns a GenericIdeal.
"""

from __future__ import annotations

from .backend import buchberger_fast, normal_form_fast
from .cyclo import CyclotomicNumber, RootOfUnity
from .errors import NotZeroDimensionalError, UnitIdealError
from .generic_engine import GPoly, buchberger as generic_buchberger, _key_fn
from .poly import ZERO, Binomial, BinomialIdeal, GenericIdeal, GenericPolynomial
from .ring import (
    RingContext,
    TermOrder,
    degrevlex_order,
    elimination_order,
    mono_divides,
    mono_is_one,
    mono_mul,
    mono_div,
    mono_support,
)

_SCAN_CAP = 1_000_000


def _encode(g: Binomial):
    if g.is_monomial:
        return (g.lead, None, 1, 0)
    return (g.lead, g.trail, g.coeff.order, g.coeff.exponent)


def _decode(enc, field_order: int) -> Binomial:
    lead, trail, cord, cexp = enc
    if trail is None:
        return Binomial(lead)
    coeff = RootOfUnity(cord, cexp)
    if field_order % coeff.order == 0:
        coeff = coeff.embed(field_order)
    return Binomial(lead, trail, coeff)


class GroebnerBasis:
    """Reduced Groebner basis: canonical for (ideal, term order)."""

    __slots__ = ("ring", "order", "elements", "_encs")

    def __init__(self, ring: RingContext, order: TermOrder, elements):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "_encs", tuple(_encode(g) for g in self.elements))

    def __setattr__(self, name, value):
        raise AttributeError("GroebnerBasis is immutable")

    def __reduce__(self):
        return (GroebnerBasis, (self.ring, self.order, self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def is_unit(self) -> bool:
        return any(g.is_monomial and mono_is_one(g.lead) for g in self.elements)

    @property
    def leads(self):
        return tuple(g.lead for g in self.elements)

    def normal_form(self, b: Binomial) -> Binomial:
        b = b.normalized(self.order)
        if b.is_zero:
            return ZERO
        out = normal_form_fast(
            _encode(b), self._encs, self.ring.nvars, self.order.core_spec()
        )
        if out is None:
            return ZERO
        return _decode(out, self.ring.field_order)

    def contains(self, b: Binomial) -> bool:
        return self.normal_form(b).is_zero

    def contains_monomial(self, exp) -> bool:
        return self.normal_form(Binomial(tuple(exp))).is_zero


def reduced_gb(ideal: BinomialIdeal, order: TermOrder | None = None) -> GroebnerBasis:
    if order is None:
        order = degrevlex_order(ideal.ring.nvars)
    key = ("gb", order.blocks)
    hit = ideal.cache_get(key)
    if hit is not None:
        return hit
    encs = [_encode(g) for g in ideal.gens]
    out = buchberger_fast(encs, ideal.ring.nvars, order.core_spec())
    gb = GroebnerBasis(
        ideal.ring, order, [_decode(e, ideal.ring.field_order) for e in out]
    )
    ideal.cache_put(key, gb)
    return gb


def normal_form(ideal: BinomialIdeal, b: Binomial, order=None) -> Binomial:
    return reduced_gb(ideal, order).normal_form(b)


def ideal_member(b: Binomial, ideal: BinomialIdeal) -> bool:
    return reduced_gb(ideal).contains(b)


def ideal_contains(big: BinomialIdeal, small: BinomialIdeal) -> bool:
    gb = reduced_gb(big)
    return all(gb.contains(g) for g in small.gens)


def ideal_equal(a: BinomialIdeal, b: BinomialIdeal) -> bool:
    if a.ring.names != b.ring.names:
        return False
    return reduced_gb(a).elements == reduced_gb(b).elements


def is_unit_ideal(ideal: BinomialIdeal) -> bool:
    if ideal.contains_unit_generator():
        return True
    return reduced_gb(ideal).is_unit


# ---------------------------------------------------------------------------
# elimination and ring restriction


def eliminate(ideal: BinomialIdeal, drop: tuple[int, ...]) -> BinomialIdeal:
    """Generators of the intersection with the subring avoiding `drop` vars.

    Result lives in the same ring; its degrevlex basis cache is pre-seeded
    (on monomials clear of `drop`, the elimination order's trailing block
    and the plain degrevlex order agree).
    """
    drop = tuple(sorted(set(drop)))
    if not drop:
        return ideal
    order = elimination_order(drop, ideal.ring.nvars)
    gb = reduced_gb(ideal, order)
    dset = set(drop)
    kept = []
    for g in gb.elements:
        if any(g.lead[i] for i in dset):
            continue
        if g.is_proper and any(g.trail[i] for i in dset):
            continue
        kept.append(g)
    out = BinomialIdeal(ideal.ring, kept, normalize=False)
    out.cache_put(
        ("gb", degrevlex_order(ideal.ring.nvars).blocks),
        GroebnerBasis(ideal.ring, degrevlex_order(ideal.ring.nvars), kept),
    )
    return out


def restrict_to_vars(ideal: BinomialIdeal, keep: tuple[int, ...]):
    """Project onto k[kept vars] after eliminating the rest.

    Returns (sub_ideal, keep) with keep sorted; generator exponents are the
    projections, which is exact because eliminated coordinates are zero.
    """
    keep = tuple(sorted(set(keep)))
    drop = tuple(i for i in range(ideal.ring.nvars) if i not in set(keep))
    elim = eliminate(ideal, drop)
    sub_ring = RingContext(
        tuple(ideal.ring.names[i] for i in keep), ideal.ring.field_order
    )

    def proj(exp):
        return tuple(exp[i] for i in keep)

    gens = []
    for g in elim.gens:
        if g.is_monomial:
            gens.append(Binomial(proj(g.lead)))
        else:
            gens.append(Binomial(proj(g.lead), proj(g.trail), g.coeff))
    out = BinomialIdeal(sub_ring, gens, normalize=False)
    out.cache_put(
        ("gb", degrevlex_order(sub_ring.nvars).blocks),
        GroebnerBasis(sub_ring, degrevlex_order(sub_ring.nvars), gens),
    )
    return out, keep


def _aux_name(ring: RingContext) -> str:
    k = 0
    while f"_t{k}" in ring.names:
        k += 1
    return f"_t{k}"


def _widen(exp, t_deg: int):
    return tuple(exp) + (t_deg,)


def _widen_binomial(g: Binomial, t_lead: int, t_trail: int) -> Binomial:
    if g.is_monomial:
        return Binomial(_widen(g.lead, t_lead))
    return Binomial(_widen(g.lead, t_lead), _widen(g.trail, t_trail), g.coeff)


def _narrow_ideal(ext: BinomialIdeal, base_ring: RingContext, t_idx: int):
    gens = []
    for g in ext.gens:
        lead = g.lead[:t_idx]
        if g.is_monomial:
            gens.append(Binomial(lead))
        else:
            gens.append(Binomial(lead, g.trail[:t_idx], g.coeff))
    out = BinomialIdeal(base_ring, gens, normalize=False)
    out.cache_put(
        ("gb", degrevlex_order(base_ring.nvars).blocks),
        GroebnerBasis(base_ring, degrevlex_order(base_ring.nvars), gens),
    )
    return out


# ---------------------------------------------------------------------------
# colon and saturation by a monomial


def colon_monomial(ideal: BinomialIdeal, m: tuple[int, ...]) -> BinomialIdeal:
    """(I : x^m), computed as (I meet <x^m>) / x^m; stays two-term throughout."""
    if mono_is_one(m):
        return ideal
    if ideal.is_trivial:
        return ideal
    ring = ideal.ring
    ext_ring = ring.extended((_aux_name(ring),))
    t_idx = ring.nvars
    ext_gens = [_widen_binomial(g, 1, 1) for g in ideal.gens]
    ext_gens.append(Binomial(_widen(m, 1), _widen(m, 0)))
    ext = BinomialIdeal(ext_ring, ext_gens)
    elim = eliminate(ext, (t_idx,))
    gens = []
    for g in elim.gens:
        lead = mono_div(g.lead[:t_idx], m)
        if g.is_monomial:
            gens.append(Binomial(lead))
        else:
            gens.append(Binomial(lead, mono_div(g.trail[:t_idx], m), g.coeff))
    out = BinomialIdeal(ideal.ring, gens, normalize=False)
    # dividing a reduced basis of (I meet <x^m>) by x^m gives a reduced basis
    out.cache_put(
        ("gb", degrevlex_order(ideal.ring.nvars).blocks),
        GroebnerBasis(ideal.ring, degrevlex_order(ideal.ring.nvars), gens),
    )
    return out


def saturate_monomial(
    ideal: BinomialIdeal, m: tuple[int, ...], with_witness: bool = False
):
    """(I : x^m^inf) plus, optionally, the least s with (I : x^(s*m)) stable.

    The witness is the max over the saturation's generators of the least
    power e with x^(e*m) * g in I; membership in e is monotone, so a linear
    scan finds each minimum.
    """
    if mono_is_one(m) or ideal.is_trivial:
        return ideal, (0 if with_witness else None)
    ring = ideal.ring
    ext_ring = ring.extended((_aux_name(ring),))
    t_idx = ring.nvars
    ext_gens = [_widen_binomial(g, 0, 0) for g in ideal.gens]
    ext_gens.append(Binomial(_widen(m, 1), _widen((0,) * ring.nvars, 0)))
    ext = BinomialIdeal(ext_ring, ext_gens)
    elim = eliminate(ext, (t_idx,))
    sat = _narrow_ideal(elim, ring, t_idx)
    if not with_witness:
        return sat, None
    return sat, saturation_witness(ideal, m, sat)


def saturation_witness(ideal: BinomialIdeal, m, sat: BinomialIdeal) -> int:
    """Least s with (I : x^(s*m)) = (I : x^m^inf), given the saturation.

    Per generator g of the saturation, membership of x^(e*m)*g in I is
    monotone in e, so a linear scan finds each minimum; s is their max.
    """
    gb_i = reduced_gb(ideal)
    s = 0
    for g in sat.gens:
        e = 0
        cur = g
        while not gb_i.contains(cur):
            e += 1
            if e > _SCAN_CAP:
                raise RuntimeError("saturation witness scan exceeded cap")
            if cur.is_monomial:
                cur = Binomial(mono_mul(cur.lead, m))
            else:
                cur = Binomial(mono_mul(cur.lead, m), mono_mul(cur.trail, m), cur.coeff)
        s = max(s, e)
    return s


def saturate_variables(
    ideal: BinomialIdeal, idxs, with_witness: bool = False
):
    m = tuple(1 if i in set(idxs) else 0 for i in range(ideal.ring.nvars))
    return saturate_monomial(ideal, m, with_witness)


# ---------------------------------------------------------------------------
# intersection (dense engine)


def _as_gpoly_dicts(part, ring: RingContext):
    if isinstance(part, BinomialIdeal):
        return [g.to_generic(ring.field_order).terms for g in part.gens]
    return [p.terms for p in part.polys]


def generic_reduced_gb(gideal: GenericIdeal, order: TermOrder | None = None):
    ring = gideal.ring
    if order is None:
        order = degrevlex_order(ring.nvars)
    key = ("ggb", order.blocks)
    hit = gideal.cache_get(key)
    if hit is not None:
        return hit
    out = generic_buchberger([p.terms for p in gideal.polys], order.core_spec())
    gideal.cache_put(key, out)
    return out


def intersect_pair(a, b) -> GenericIdeal:
    """Intersection of two ideals (either flavor) in a shared ring."""
    ring = a.ring
    if b.ring.names != ring.names or b.ring.field_order != ring.field_order:
        raise ValueError("intersection needs a shared ring")
    ext_ring = ring.extended((_aux_name(ring),))
    t_idx = ring.nvars
    gens = []
    for terms in _as_gpoly_dicts(a, ring):
        gens.append({_widen(e, 1): c for e, c in terms.items()})
    for terms in _as_gpoly_dicts(b, ring):
        g = {_widen(e, 0): c for e, c in terms.items()}
        for e, c in terms.items():
            g[_widen(e, 1)] = -c
        gens.append(g)
    if not gens:
        return GenericIdeal(ring, [])
    order = elimination_order((t_idx,), ext_ring.nvars)
    gb = generic_buchberger(gens, order.core_spec())
    kept = []
    for p in gb:
        if all(e[t_idx] == 0 for e, _ in p.terms):
            kept.append(
                GenericPolynomial({e[:t_idx]: c for e, c in p.terms})
            )
        elif p.terms[0][0][t_idx] == 0:
            raise AssertionError("elimination order violated")
    out = GenericIdeal(ring, kept)
    base_order = degrevlex_order(ring.nvars)
    key = _key_fn(base_order.core_spec())
    out.cache_put(
        ("ggb", base_order.blocks),
        [GPoly.from_dict(p.terms, key) for p in out.polys],
    )
    return out


def intersect_many(parts) -> GenericIdeal:
    """Balanced pairwise fold; parts are BinomialIdeal or GenericIdeal."""
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one ideal")
    while len(parts) > 1:
        nxt = []
        for i in range(0, len(parts) - 1, 2):
            nxt.append(intersect_pair(parts[i], parts[i + 1]))
        if len(parts) % 2:
            nxt.append(parts[-1])
        parts = nxt
    only = parts[0]
    if isinstance(only, BinomialIdeal):
        gb = _monic_generic_gb_of_binomial(only)
        out = GenericIdeal(
            only.ring,
            [GenericPolynomial(dict(p.terms)) for p in gb],
        )
        out.cache_put(("ggb", degrevlex_order(only.ring.nvars).blocks), gb)
        return out
    return only


def _monic_generic_gb_of_binomial(ideal: BinomialIdeal):
    order = degrevlex_order(ideal.ring.nvars)
    key = _key_fn(order.core_spec())
    out = []
    for g in reduced_gb(ideal, order).elements:
        out.append(GPoly.from_dict(g.to_generic(ideal.ring.field_order).terms, key))
    return out


def intersection_equals(ideal: BinomialIdeal, parts) -> bool:
    """Exact test: does the intersection of `parts` equal `ideal`?

    Compares reduced degrevlex bases termwise; both sides are canonical.
    """
    lhs = _monic_generic_gb_of_binomial(ideal)
    rhs = generic_reduced_gb(intersect_many(parts))
    if len(lhs) != len(rhs):
        return False
    for p, q in zip(lhs, rhs):
        if len(p.terms) != len(q.terms):
            return False
        for (e1, c1), (e2, c2) in zip(p.terms, q.terms):
            if e1 != e2 or c1 != c2:
                return False
    return True


# ---------------------------------------------------------------------------
# numerical invariants


def _pure_power_bounds(gb: GroebnerBasis):
    n = gb.ring.nvars
    bounds = [None] * n
    for lead in gb.leads:
        sup = mono_support(lead)
        if len(sup) == 1:
            i = sup[0]
            k = lead[i]
            if bounds[i] is None or k < bounds[i]:
                bounds[i] = k
    return bounds


def zero_dim_degree(ideal: BinomialIdeal) -> int:
    """Vector-space dimension of the quotient; requires zero-dimensionality."""
    gb = reduced_gb(ideal)
    if gb.is_unit:
        return 0
    bounds = _pure_power_bounds(gb)
    if any(b is None for b in bounds):
        missing = [
            gb.ring.names[i] for i, b in enumerate(bounds) if b is None
        ]
        raise NotZeroDimensionalError(
            "no pure power of " + ", ".join(missing) + " in the lead ideal"
        )
    leads = gb.leads
    if all(len(mono_support(l)) <= 1 for l in leads):
        out = 1
        for b in bounds:
            out *= b
        return out
    n = gb.ring.nvars
    count = 0
    partial = [0] * n

    def rec(depth: int):
        nonlocal count
        if depth == n:
            count += 1
            return
        for e in range(bounds[depth]):
            partial[depth] = e
            blocked = False
            for lead in leads:
                if all(lead[i] <= partial[i] for i in range(depth + 1)) and all(
                    lead[i] == 0 for i in range(depth + 1, n)
                ):
                    blocked = True
                    break
            if not blocked:
                rec(depth + 1)
        partial[depth] = 0

    rec(0)
    return count


def dimension(ideal: BinomialIdeal) -> int:
    """Krull dimension of the quotient ring (-1 for the unit ideal)."""
    gb = reduced_gb(ideal)
    if gb.is_unit:
        return -1
    supports = []
    for lead in gb.leads:
        s = frozenset(mono_support(lead))
        supports.append(s)
    # drop supersets: hitting a subset hits them for free
    supports = sorted(set(supports), key=lambda s: (len(s), sorted(s)))
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    n = ideal.ring.nvars
    if not minimal:
        return n
    best = [n + 1]

    def rec(rest, size):
        if size >= best[0]:
            return
        if not rest:
            best[0] = size
            return
        pivot = min(rest, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pivot):
            rec([s for s in rest if v not in s], size + 1)

    rec(minimal, 0)
    return n - best[0]


def minimal_power_in(ideal: BinomialIdeal, var_idx: int) -> int:
    """Least d with x_i^d in the ideal; the variable must be nilpotent mod it."""
    gb = reduced_gb(ideal)
    n = ideal.ring.nvars
    bounds = _pure_power_bounds(gb)
    start = bounds[var_idx]
    if start is None:
        raise ValueError(f"variable {ideal.ring.names[var_idx]} is not nilpotent")
    e = start
    while e <= _SCAN_CAP:
        exp = tuple(e if i == var_idx else 0 for i in range(n))
        if gb.contains_monomial(exp):
            return e
        e += 1
    raise RuntimeError("nilpotency scan exceeded cap")
