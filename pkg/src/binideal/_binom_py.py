"""Pure-Python binomial reduction core.

Fast-path Buchberger working only with (at most) two-term elements: an
element is (lead, trail, cord, cexp) where lead/trail are exponent tuples,
trail None marks a plain monomial, and (cord, cexp) encode the trailing
root-of-unity coefficient; the lead coefficient is always 1. S-polynomials
and remainders of such elements stay in this shape, which is what makes the
specialization sound.

The compiled twin (_binom_cy) implements the same algorithm with the same
tie-breaks; outputs must be identical element-for-element.
"""

from __future__ import annotations

from math import gcd

from .errors import ExponentOverflowError
from .ring import EXPONENT_CAP

# coefficient helpers: roots of unity as canonical (order, exponent) pairs


def _c_canon(o: int, e: int) -> tuple[int, int]:
    e %= o
    if e == 0:
        return (1, 0)
    g = gcd(e, o)
    return (o // g, e // g)


def _c_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    o = a[0] * b[0] // gcd(a[0], b[0])
    return _c_canon(o, a[1] * (o // a[0]) + b[1] * (o // b[0]))


def _c_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    o = a[0] * b[0] // gcd(a[0], b[0])
    return _c_canon(o, a[1] * (o // a[0]) - b[1] * (o // b[0]))


def _key_fn(order_spec):
    def key(exp):
        parts = []
        for kind, idxs in order_spec:
            if kind == 0:  # lex
                parts.extend(exp[i] for i in idxs)
            else:  # degrevlex
                parts.append(sum(exp[i] for i in idxs))
                parts.extend(-exp[i] for i in reversed(idxs))
        return tuple(parts)

    return key


def _madd(a, b):
    out = tuple(x + y for x, y in zip(a, b))
    for x in out:
        if x > EXPONENT_CAP:
            raise ExponentOverflowError("exponent cap exceeded in reduction")
    return out


def _msub_add(a, p, q):
    # a - p + q, all coordinates must stay nonnegative (exact by construction)
    out = tuple(x - y + z for x, y, z in zip(a, p, q))
    for x in out:
        if x > EXPONENT_CAP:
            raise ExponentOverflowError("exponent cap exceeded in reduction")
    return out


def _divides(p, a):
    return all(x <= y for x, y in zip(p, a))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


_C_ONE = (1, 0)


def _orient(u, v, cu, cv, key):
    """Normalize cu*x^u - cv*x^v to monic two-term form (or monomial/None)."""
    ku, kv = key(u), key(v)
    if ku > kv:
        return (u, v, _c_div(cv, cu))
    if ku < kv:
        return (v, u, _c_div(cu, cv))
    if _c_div(cv, cu) == _C_ONE:
        return None
    return (u, None, _C_ONE)


def _normal_form(f, basis, key, skip=-1):
    """Fully reduce element f against basis (list scan order fixed).

    skip: basis index to ignore (used during inter-reduction).
    Returns an element tuple or None for zero.
    """
    if f is None:
        return None
    lead, trail, coeff = f
    # head reduction
    changed = True
    while changed:
        changed = False
        for gi, g in enumerate(basis):
            if gi == skip or g is None:
                continue
            p = g[0]
            if not _divides(p, lead):
                continue
            if g[1] is None:  # monomial reducer
                if trail is None:
                    return None
                lead, trail, coeff = trail, None, _C_ONE
            else:
                q, d = g[1], g[2]
                new = _msub_add(lead, p, q)
                if trail is None:
                    lead = new
                else:
                    got = _orient(new, trail, d, _c_mul(coeff, (1, 0)), key)
                    # element was x^lead - coeff x^trail; after replacing lead:
                    # d*x^new - coeff*x^trail
                    if got is None:
                        return None
                    lead, trail, coeff = got
            changed = True
            break
    if trail is None:
        return (lead, None, _C_ONE)
    # tail reduction
    changed = True
    while changed:
        changed = False
        for gi, g in enumerate(basis):
            if gi == skip or g is None:
                continue
            p = g[0]
            if not _divides(p, trail):
                continue
            if g[1] is None:
                return (lead, None, _C_ONE)
            q, d = g[1], g[2]
            trail = _msub_add(trail, p, q)
            coeff = _c_mul(coeff, d)
            changed = True
            break
    return (lead, trail, coeff)


def _spoly(f, g, key):
    fl, ft, fc = f
    gl, gt, gc = g
    w = _lcm(fl, gl)
    if ft is None and gt is None:
        return None
    if ft is None:  # monomial f kills g's lead
        return (_msub_add(w, gl, gt), None, _C_ONE)
    if gt is None:
        return (_msub_add(w, fl, ft), None, _C_ONE)
    u = _msub_add(w, gl, gt)  # carries gc
    v = _msub_add(w, fl, ft)  # carries fc
    return _orient(u, v, gc, fc, key)


def _update_pairs(basis, pairs, t):
    """Gebauer-Moeller update after appending basis[t]. Deterministic order."""
    h_lead = basis[t][0]
    # candidate new pairs (i, t)
    cand = [i for i in range(t) if basis[i] is not None]
    lcms = {i: _lcm(basis[i][0], h_lead) for i in cand}
    kept = []
    for pos, i in enumerate(cand):
        li = lcms[i]
        coprime = all(x == 0 or y == 0 for x, y in zip(basis[i][0], h_lead))
        if coprime:
            kept.append(i)  # dropped later (product criterion) but blocks others
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
                # equal lcm: keep only the first
                divided = True
                break
        if not divided:
            kept.append(i)
    new_pairs = []
    for i in kept:
        coprime = all(x == 0 or y == 0 for x, y in zip(basis[i][0], h_lead))
        if not coprime:
            new_pairs.append((i, t))
    # prune old pairs via chain criterion with h
    out = []
    for (i, j) in pairs:
        lij = _lcm(basis[i][0], basis[j][0])
        if not _divides(h_lead, lij):
            out.append((i, j))
            continue
        if _lcm(basis[i][0], h_lead) == lij or _lcm(basis[j][0], h_lead) == lij:
            out.append((i, j))
    out.extend(new_pairs)
    return out


def buchberger(gens, nvars, order_spec):
    """Reduced Groebner basis of binomial/monomial generators.

    gens: list of (lead, trail|None, cord, cexp); returns the same encoding,
    canonically sorted ascending by the order key of the lead.
    """
    key = _key_fn(order_spec)
    basis = []
    pairs = []
    todo = []
    for (lead, trail, cord, cexp) in gens:
        if lead is None:
            continue
        if trail is None:
            todo.append((tuple(lead), None, _C_ONE))
        else:
            el = _orient(tuple(lead), tuple(trail), _C_ONE, _c_canon(cord, cexp), key)
            # encoding means x^lead - c x^trail: coefficients 1 and c
            if el is not None:
                todo.append(el)

    unit = False
    for el in todo:
        nf = _normal_form(el, basis, key)
        if nf is None:
            continue
        if nf[1] is None and not any(nf[0]):
            unit = True
            break
        basis.append(nf)
        pairs = _update_pairs(basis, pairs, len(basis) - 1)

    while pairs and not unit:
        # normal strategy: smallest lcm, then smallest (i, j)
        best = 0
        best_key = None
        for idx, (i, j) in enumerate(pairs):
            k = (key(_lcm(basis[i][0], basis[j][0])), i, j)
            if best_key is None or k < best_key:
                best_key = k
                best = idx
        i, j = pairs.pop(best)
        s = _spoly(basis[i], basis[j], key)
        nf = _normal_form(s, basis, key)
        if nf is None:
            continue
        if nf[1] is None and not any(nf[0]):
            unit = True
            break
        basis.append(nf)
        pairs = _update_pairs(basis, pairs, len(basis) - 1)

    if unit:
        zero = tuple([0] * nvars)
        return [(zero, None, 1, 0)]

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(basis)), key=lambda i: key(basis[i][0]))
    alive = [True] * len(basis)
    for pos, i in enumerate(order_idx):
        if not alive[i]:
            continue
        for i2 in order_idx[:pos]:
            if alive[i2] and _divides(basis[i2][0], basis[i][0]):
                alive[i] = False
                break
    kept = [basis[i] for i in order_idx if alive[i]]

    # inter-reduce tails against the minimal set
    reduced = []
    for pos, el in enumerate(kept):
        nf = _normal_form(el, kept, key, skip=pos)
        if nf is not None:
            reduced.append(nf)

    reduced.sort(key=lambda el: (key(el[0]), () if el[1] is None else key(el[1])))
    return [
        (el[0], el[1], el[2][0] if el[1] is not None else 1,
         el[2][1] if el[1] is not None else 0)
        for el in reduced
    ]


def normal_form(f, basis_enc, nvars, order_spec):
    """Reduce one element against a (Groebner) basis; None means zero."""
    key = _key_fn(order_spec)
    basis = []
    for (lead, trail, cord, cexp) in basis_enc:
        basis.append(
            (tuple(lead), tuple(trail) if trail is not None else None, _c_canon(cord, cexp))
        )
    lead, trail, cord, cexp = f
    if lead is None:
        return None
    if trail is None:
        el = (tuple(lead), None, _C_ONE)
    else:
        el = _orient(tuple(lead), tuple(trail), _C_ONE, _c_canon(cord, cexp), key)
        if el is None:
            return None
    nf = _normal_form(el, basis, key)
    if nf is None:
        return None
    return (nf[0], nf[1], nf[2][0] if nf[1] is not None else 1,
            nf[2][1] if nf[1] is not None else 0)
