"""Groebner engine for dense-coefficient polynomials.

Independent of the two-term fast path: polynomials are sorted term lists
with exact cyclotomic coefficients. Used for operations that leave the
two-term world (ideal intersection via an auxiliary variable) and as a
cross-check engine in the test suite.
"""

from __future__ import annotations

from .cyclo import CyclotomicNumber
from .errors import ExponentOverflowError
from .ring import EXPONENT_CAP


def _key_fn(order_spec):
    def key(exp):
        parts = []
        for kind, idxs in order_spec:
            if kind == 0:
                parts.extend(exp[i] for i in idxs)
            else:
                parts.append(sum(exp[i] for i in idxs))
                parts.extend(-exp[i] for i in reversed(idxs))
        return tuple(parts)

    return key


class GPoly:
    """Immutable sorted term list: ((exp, coeff), ...) descending by key."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    @staticmethod
    def from_dict(d, key):
        items = [(e, c) for e, c in d.items() if not c.is_zero]
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return GPoly(tuple(items))

    @property
    def is_zero(self):
        return not self.terms

    @property
    def lead(self):
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        return self.terms[0][1]

    def monic(self):
        lc = self.terms[0][1]
        if lc.is_one:
            return self
        inv = lc.inverse()
        return GPoly(tuple((e, c * inv) for e, c in self.terms))


def _mono_mul(a, b):
    out = tuple(x + y for x, y in zip(a, b))
    for x in out:
        if x > EXPONENT_CAP:
            raise ExponentOverflowError("exponent cap exceeded")
    return out


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _divides(p, a):
    return all(x <= y for x, y in zip(p, a))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _combine(f, scale, shift, g, key):
    """f - scale * x^shift * g, both GPoly, merge of sorted lists."""
    out = []
    it_f = iter(f.terms)
    it_g = iter(g.terms)
    tf = next(it_f, None)
    tg_raw = next(it_g, None)
    tg = (_mono_mul(tg_raw[0], shift), tg_raw[1] * scale) if tg_raw else None
    while tf is not None or tg is not None:
        if tg is None or (tf is not None and key(tf[0]) > key(tg[0])):
            out.append(tf)
            tf = next(it_f, None)
        elif tf is None or key(tg[0]) > key(tf[0]):
            out.append((tg[0], -tg[1]))
            tg_raw = next(it_g, None)
            tg = (_mono_mul(tg_raw[0], shift), tg_raw[1] * scale) if tg_raw else None
        else:
            c = tf[1] - tg[1]
            if not c.is_zero:
                out.append((tf[0], c))
            tf = next(it_f, None)
            tg_raw = next(it_g, None)
            tg = (_mono_mul(tg_raw[0], shift), tg_raw[1] * scale) if tg_raw else None
    return GPoly(tuple(out))


def reduce_full(f, basis, key, skip=-1):
    """Normal form of f against basis: reduce the largest reducible term."""
    while not f.is_zero:
        hit = None
        for pos, (exp, coeff) in enumerate(f.terms):
            for gi, g in enumerate(basis):
                if gi == skip or g is None or g.is_zero:
                    continue
                if _divides(g.lead, exp):
                    hit = (exp, coeff, g)
                    break
            if hit is not None:
                break
        if hit is None:
            return f
        exp, coeff, g = hit
        scale = coeff * g.lead_coeff.inverse()
        f = _combine(f, scale, _mono_sub(exp, g.lead), g, key)
    return f


def _spoly(f, g, key):
    w = _lcm(f.lead, g.lead)
    a = _combine(
        GPoly(()), CyclotomicNumber.from_rational(-1, 1), _mono_sub(w, f.lead), f, key
    )
    # a = x^(w-lf) * f
    scale = f.lead_coeff * g.lead_coeff.inverse()
    return _combine(a, scale, _mono_sub(w, g.lead), g, key)


def _update_pairs(leads, pairs, t):
    """Same Gebauer-Moeller pruning as the two-term engine."""
    h_lead = leads[t]
    cand = [i for i in range(t) if leads[i] is not None]
    lcms = {i: _lcm(leads[i], h_lead) for i in cand}
    kept = []
    for i in cand:
        li = lcms[i]
        coprime = all(x == 0 or y == 0 for x, y in zip(leads[i], h_lead))
        if coprime:
            kept.append(i)
            continue
        divided = False
        for j in cand:
            if j == i:
                continue
            lj = lcms[j]
            if lj != li and _divides(lj, li):
                divided = True
                break
            if lj == li and j < i:
                divided = True
                break
        if not divided:
            kept.append(i)
    new_pairs = [
        (i, t)
        for i in kept
        if not all(x == 0 or y == 0 for x, y in zip(leads[i], h_lead))
    ]
    out = []
    for (i, j) in pairs:
        lij = _lcm(leads[i], leads[j])
        if not _divides(h_lead, lij):
            out.append((i, j))
            continue
        if _lcm(leads[i], h_lead) == lij or _lcm(leads[j], h_lead) == lij:
            out.append((i, j))
    out.extend(new_pairs)
    return out


def buchberger(polys, order_spec):
    """Reduced Groebner basis of GenericPolynomial-style term dicts.

    polys: iterable of {exp: CyclotomicNumber}; returns list of GPoly,
    monic, sorted ascending by lead key.
    """
    key = _key_fn(order_spec)
    todo = [GPoly.from_dict(p, key) for p in polys]
    basis = []
    leads = []
    pairs = []
    unit = False
    width = 0

    def absorb(f):
        nonlocal pairs, unit, width
        nf = reduce_full(f, basis, key)
        if nf.is_zero:
            return
        width = len(nf.lead)
        if not any(nf.lead):
            unit = True
            return
        basis.append(nf.monic())
        leads.append(nf.lead)
        pairs = _update_pairs(leads, pairs, len(basis) - 1)

    for f in todo:
        absorb(f)
        if unit:
            break

    while pairs and not unit:
        best = 0
        best_key = None
        for idx, (i, j) in enumerate(pairs):
            k = (key(_lcm(leads[i], leads[j])), i, j)
            if best_key is None or k < best_key:
                best_key = k
                best = idx
        i, j = pairs.pop(best)
        absorb(_spoly(basis[i], basis[j], key))

    if unit:
        one = CyclotomicNumber.from_rational(1, 1)
        return [GPoly(((tuple([0] * width), one),))]

    order_idx = sorted(range(len(basis)), key=lambda i: key(basis[i].lead))
    alive = [True] * len(basis)
    for pos, i in enumerate(order_idx):
        if not alive[i]:
            continue
        for i2 in order_idx[:pos]:
            if alive[i2] and _divides(basis[i2].lead, basis[i].lead):
                alive[i] = False
                break
    kept = [basis[i] for i in order_idx if alive[i]]
    reduced = []
    for pos, el in enumerate(kept):
        nf = reduce_full(el, kept, key, skip=pos)
        if not nf.is_zero:
            reduced.append(nf.monic())
    reduced.sort(key=lambda p: key(p.lead))
    return reduced


def normal_form(poly_dict, basis, order_spec):
    """NF of one term dict against a list of GPoly (a Groebner basis)."""
    key = _key_fn(order_spec)
    return reduce_full(GPoly.from_dict(poly_dict, key), basis, key)
