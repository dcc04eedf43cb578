"""Cellular, radical, prime, and primary decomposition of binomial ideals.

Everything here rests on one splitting move: for a variable x that is a
zerodivisor but not nilpotent modulo I, and s large enough that the colon
chain stabilizes, I = (I : x^inf) meet (I + <x^s>). Recursing on such
variables ends in cellular ideals, where every variable is either a
nonzerodivisor (a cell variable) or nilpotent. A cellular ideal meets the
subring on its cell variables in a lattice ideal; the partial character of
that lattice, and the characters of its colon ideals by standard monomials
in the nilpotent variables, carry all the prime and primary structure.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from math import lcm

from .generic_engine import normal_form as _generic_nf
from .groebner import (
    GroebnerBasis,
    _monic_generic_gb_of_binomial,
    _pure_power_bounds,
    colon_monomial,
    generic_reduced_gb,
    ideal_equal,
    intersect_many,
    intersect_pair,
    is_unit_ideal,
    minimal_power_in,
    reduced_gb,
    restrict_to_vars,
    saturate_monomial,
    saturate_variables,
    saturation_witness,
)
from .lattice import (
    PartialCharacter,
    character_from_ideal,
    lattice_ideal,
    solve_in_rowspan,
)
from .poly import Binomial, BinomialIdeal
from .ring import RingContext, degrevlex_order


class TimeoutExceeded(RuntimeError):
    """Raised when a decomposition runs past its deadline.

    `partial` holds a report over the components found so far (deduplicated
    but not pruned), or None when nothing was finished.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class _Budget:
    __slots__ = ("deadline",)

    def __init__(self, timeout):
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise TimeoutExceeded("decomposition timed out")


_NO_BUDGET = _Budget(None)


# ---------------------------------------------------------------------------
# domain records


class CellularStructure:
    """Cell variables of a cellular ideal plus nilpotency exponents.

    `cell_indices` are the nonzerodivisor variables; `nilpotency` maps every
    remaining index i to the least d with x_i^d in the ideal.
    """

    __slots__ = ("cell_indices", "nilpotency")

    def __init__(self, cell_indices, nilpotency):
        object.__setattr__(self, "cell_indices", frozenset(cell_indices))
        object.__setattr__(
            self, "nilpotency", tuple(sorted((int(i), int(d)) for i, d in dict(nilpotency).items()))
        )

    def __setattr__(self, name, value):
        raise AttributeError("CellularStructure is immutable")

    def __bool__(self):
        return True

    def __reduce__(self):
        return (CellularStructure, (tuple(self.cell_indices), dict(self.nilpotency)))

    @property
    def nilpotent_indices(self):
        return tuple(i for i, _ in self.nilpotency)

    def exponent(self, i: int) -> int:
        return dict(self.nilpotency)[i]

    def monomial_part(self, nvars: int):
        """Generators x_i^(d_i) over the nilpotent variables."""
        out = []
        for i, d in self.nilpotency:
            out.append(Binomial(tuple(d if j == i else 0 for j in range(nvars))))
        return tuple(out)

    def __repr__(self):
        return f"CellularStructure(cells={sorted(self.cell_indices)}, nilpotency={dict(self.nilpotency)})"


class NotCellular:
    """Falsy verdict from is_cellular; carries the offending variable."""

    __slots__ = ("witness",)

    def __init__(self, witness: int):
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("NotCellular is immutable")

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotCellular(witness={self.witness})"


class Component:
    """One piece of a decomposition plus everything established about it."""

    __slots__ = ("ideal", "cellular", "character", "prime", "primary", "monomial", "toric")

    def __init__(self, ideal, cellular=None, character=None, prime=False, primary=False,
                 monomial=False, toric=False):
        self.ideal = ideal
        self.cellular = cellular
        self.character = character
        self.prime = prime
        self.primary = primary
        self.monomial = monomial
        self.toric = toric

    def __repr__(self):
        tags = [t for t, on in (("prime", self.prime), ("primary", self.primary),
                                ("monomial", self.monomial), ("toric", self.toric)) if on]
        return f"Component({len(self.ideal.gens)} gens{', ' + ' '.join(tags) if tags else ''})"


class DecompositionReport:
    """Canonical ordered component list for one decomposition kind."""

    __slots__ = ("kind", "components", "field_order")

    def __init__(self, kind, components, field_order):
        self.kind = kind
        self.components = tuple(components)
        self.field_order = field_order

    def ideals(self):
        return tuple(c.ideal for c in self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __repr__(self):
        return f"DecompositionReport({self.kind}, {len(self.components)} components, field {self.field_order})"


# ---------------------------------------------------------------------------
# variable classification and the splitting tree


def _unitvec(i: int, n: int):
    return tuple(1 if j == i else 0 for j in range(n))


def _require_proper(ideal: BinomialIdeal, what: str):
    if is_unit_ideal(ideal):
        raise ValueError(f"{what} is undefined for the unit ideal")


def _classify(ideal: BinomialIdeal, known: dict):
    """Extend `known` var tags ('n' nilpotent / 'c' cell) over all variables.

    Stops at the first variable that is a zerodivisor but not nilpotent and
    returns (classes, i, saturation); returns (classes, None, None) when the
    ideal is cellular. Scan order is by index, so the branch variable is
    reproducible.
    """
    n = ideal.ring.nvars
    classes = dict(known)
    gb = reduced_gb(ideal)
    bounds = _pure_power_bounds(gb)
    for g in gb.elements:
        if g.is_monomial:
            sup = [i for i, e in enumerate(g.lead) if e]
            if len(sup) == 1:
                classes.setdefault(sup[0], "n")
    for i in range(n):
        if i in classes:
            continue
        sat, _ = saturate_monomial(ideal, _unitvec(i, n))
        if is_unit_ideal(sat):
            classes[i] = "n"
        elif ideal_equal(sat, ideal):
            classes[i] = "c"
        else:
            return classes, i, sat
    # a variable without a pure-power lead can never be nilpotent
    for i in range(n):
        if classes.get(i) == "n" and bounds[i] is None:
            raise AssertionError("nilpotent variable without a pure-power lead")
    return classes, None, None


def _expand_node(ideal: BinomialIdeal, known: dict, mode: str):
    """One splitting step: returns ('leaf', ideal, classes) or a pair of
    children ('split', colon_child, colon_known, sum_child, sum_known)."""
    classes, i, sat = _classify(ideal, known)
    if i is None:
        return ("leaf", ideal, classes)
    n = ideal.ring.nvars
    if mode == "s":
        s = saturation_witness(ideal, _unitvec(i, n), sat)
        extra = Binomial(tuple(s if j == i else 0 for j in range(n)))
    else:
        extra = Binomial(_unitvec(i, n))
    sum_child = ideal.with_extra([extra])
    colon_known = dict(classes)
    colon_known[i] = "c"
    sum_known = {j: t for j, t in classes.items() if t == "n"}
    sum_known[i] = "n"
    if is_unit_ideal(sum_child):
        sum_child, sum_known = None, None
    return ("split", sat, colon_known, sum_child, sum_known)


def _expand_task(args):
    ideal, known, mode = args
    return _expand_node(ideal, known, mode)


def _run_tree(ideal: BinomialIdeal, mode: str, jobs: int, budget: _Budget, sink: list):
    """Evaluate the splitting tree; leaves land in `sink` as (ideal, classes).

    With jobs > 1 the frontier is expanded in parallel; the caller sorts the
    leaves afterwards, so scheduling never shows in the output.
    """
    pending = [(ideal, {})]
    pool = None
    try:
        while pending:
            budget.check()
            if jobs > 1 and len(pending) > 1:
                if pool is None:
                    pool = ProcessPoolExecutor(max_workers=jobs)
                batch, pending = pending[:jobs], pending[jobs:]
                results = list(pool.map(_expand_task, [(i, k, mode) for i, k in batch]))
            else:
                i, k = pending.pop()
                results = [_expand_node(i, k, mode)]
            for res in results:
                if res[0] == "leaf":
                    sink.append((res[1], res[2]))
                else:
                    _, ca, ka, cb, kb = res
                    pending.append((ca, ka))
                    if cb is not None:
                        pending.append((cb, kb))
    finally:
        if pool is not None:
            pool.shutdown(wait=False, cancel_futures=True)


def _leaf_structure(ideal: BinomialIdeal, classes: dict) -> CellularStructure:
    cells = [i for i, t in classes.items() if t == "c"]
    nil = {i: minimal_power_in(ideal, i) for i, t in classes.items() if t == "n"}
    return CellularStructure(cells, nil)


def is_cellular(ideal: BinomialIdeal):
    """CellularStructure when every variable is a nonzerodivisor or nilpotent,
    else a falsy NotCellular carrying the lowest variable that is neither."""
    _require_proper(ideal, "cellularity")
    classes, i, _ = _classify(ideal, {})
    if i is not None:
        return NotCellular(i)
    return _leaf_structure(ideal, classes)


# ---------------------------------------------------------------------------
# canonical assembly: embed, dedup, prune, sort


def _ideal_key(ideal: BinomialIdeal):
    return tuple(g.key() for g in reduced_gb(ideal).elements)


def _is_monomial_ideal(ideal: BinomialIdeal) -> bool:
    return all(g.is_monomial for g in reduced_gb(ideal).elements)


def _generic_contains(candidate: BinomialIdeal, gideal) -> bool:
    """Does `candidate` contain every element of the generic ideal?"""
    basis = _monic_generic_gb_of_binomial(candidate)
    spec = degrevlex_order(candidate.ring.nvars).core_spec()
    for p in generic_reduced_gb(gideal):
        rem = _generic_nf(dict(p.terms), basis, spec)
        if rem.terms:
            return False
    return True


def _prune_by_intersection(comps: list, budget: _Budget) -> list:
    """Drop components containing the intersection of all the others.

    A component containing another (deduplicated, hence strictly) is
    redundant outright, so the cheap inclusion sweep runs first; the
    intersection test only sees what survives. One candidate is removed
    per sweep (removals change the others' intersection), flagged via
    prefix/suffix intersection chains so each sweep costs a linear number
    of pairwise intersections.
    """
    comps = _prune_to_minimal(comps)
    while len(comps) > 1:
        budget.check()
        k = len(comps)
        pre = [None] * (k + 1)
        suf = [None] * (k + 1)
        for i in range(k):
            pre[i + 1] = comps[i].ideal if pre[i] is None else intersect_pair(pre[i], comps[i].ideal)
        for i in range(k - 1, -1, -1):
            suf[i] = comps[i].ideal if suf[i + 1] is None else intersect_pair(comps[i].ideal, suf[i + 1])
        removed = False
        for i in range(k):
            if i == 0:
                others = suf[1]
            elif i == k - 1:
                others = pre[k - 1]
            else:
                others = intersect_pair(pre[i], suf[i + 1])
            if isinstance(others, BinomialIdeal):
                others = intersect_many([others])
            if _generic_contains(comps[i].ideal, others):
                del comps[i]
                removed = True
                break
        if not removed:
            break
    return comps


def _prune_to_minimal(comps: list) -> list:
    """Keep inclusion-minimal ideals (for minimal-prime lists).

    Entries are deduplicated before this runs, so containing any other
    entry means strict containment, which disqualifies a prime.
    """
    from .groebner import ideal_contains

    return [
        c for c in comps
        if not any(o is not c and ideal_contains(c.ideal, o.ideal) for o in comps)
    ]


def _assemble(kind: str, input_ideal: BinomialIdeal, comps: list, prune: str,
              budget: _Budget = _NO_BUDGET) -> DecompositionReport:
    m = input_ideal.ring.field_order
    for c in comps:
        m = lcm(m, c.ideal.ring.field_order)
    seen = {}
    for c in comps:
        c.ideal = c.ideal.embedded(m)
        key = _ideal_key(c.ideal)
        if key not in seen:
            seen[key] = c
    comps = [seen[key] for key in sorted(seen)]
    if prune == "intersection":
        comps = _prune_by_intersection(comps, budget)
    elif prune == "minimal":
        comps = _prune_to_minimal(comps)
    input_embedded = input_ideal.embedded(m)
    if not input_embedded.has_monomial_gen():
        toric, _ = saturate_variables(input_embedded, range(input_embedded.ring.nvars))
        toric_key = _ideal_key(toric)
        for c in comps:
            c.toric = _ideal_key(c.ideal) == toric_key
    for c in comps:
        c.monomial = _is_monomial_ideal(c.ideal)
    comps.sort(key=lambda c: (not c.toric, _ideal_key(c.ideal)))
    return DecompositionReport(kind, comps, m)


# ---------------------------------------------------------------------------
# cellular decomposition


def _cellular_components(ideal: BinomialIdeal, jobs: int, budget: _Budget,
                         sink: list) -> list:
    """Irredundant cellular components, embedded into a common field.

    The splitting tree can emit redundant leaves; downstream passes
    (associated primes, primary decomposition) must only ever see the
    pruned list, or they pick up primes of ideals that merely contain
    the input.
    """
    _run_tree(ideal, "s", jobs, budget, sink)
    comps = _leaf_components(sink)
    m = ideal.ring.field_order
    for c in comps:
        m = lcm(m, c.ideal.ring.field_order)
    seen = {}
    for c in comps:
        c.ideal = c.ideal.embedded(m)
        key = _ideal_key(c.ideal)
        if key not in seen:
            seen[key] = c
    comps = [seen[key] for key in sorted(seen)]
    return _prune_by_intersection(comps, budget)


def cellular_decomposition(ideal: BinomialIdeal, *, jobs: int = 1,
                           timeout: float | None = None) -> DecompositionReport:
    """Split into cellular components whose intersection is the input.

    Redundant components (ones containing the intersection of the others)
    are pruned; the toric component, when the input has no monomial
    generators, sorts first.
    """
    _require_proper(ideal, "cellular decomposition")
    budget = _Budget(timeout)
    sink = []
    try:
        comps = _cellular_components(ideal, jobs, budget, sink)
    except TimeoutExceeded as exc:
        exc.partial = _partial_report("cellular", ideal, _leaf_components(sink))
        raise
    return _assemble("cellular", ideal, comps, "dedup", budget)


def _leaf_components(sink: list) -> list:
    out = []
    for leaf, classes in sorted(sink, key=lambda lc: _ideal_key(lc[0])):
        out.append(Component(leaf, cellular=_leaf_structure(leaf, classes)))
    return out


def _partial_report(kind: str, input_ideal: BinomialIdeal, comps: list):
    try:
        m = input_ideal.ring.field_order
        for c in comps:
            m = lcm(m, c.ideal.ring.field_order)
        return DecompositionReport(kind + "-partial", comps, m)
    except Exception:
        return None


# ---------------------------------------------------------------------------
# characters of cellular ideals and their colon ideals


def _embed_exponent(exp, keep, n: int):
    out = [0] * n
    for pos, e in zip(keep, exp):
        out[pos] = e
    return tuple(out)


def _widen_from_subring(g: Binomial, keep, n: int) -> Binomial:
    if g.is_monomial:
        return Binomial(_embed_exponent(g.lead, keep, n))
    return Binomial(_embed_exponent(g.lead, keep, n), _embed_exponent(g.trail, keep, n), g.coeff)


def _cell_character(ideal: BinomialIdeal, cell_sorted) -> PartialCharacter:
    """Character of the lattice ideal cut out on the cell variables."""
    sub, _ = restrict_to_vars(ideal, tuple(cell_sorted))
    chi = character_from_ideal(sub)
    if ideal.is_pure_difference():
        for v in chi.values:
            if not v.is_one:
                raise AssertionError("pure-difference ideal produced a nontrivial character value")
    return chi


def _saturations_of(chi: PartialCharacter):
    from .solve import saturate_character

    return saturate_character(chi)


def _prime_from_character(base_ring: RingContext, cell_sorted, tau: PartialCharacter):
    """M(E) + the lattice ideal of tau, as an ideal of the full ring.

    The variable monomials and the widened lattice basis form a reduced
    basis already (their leads live on disjoint variables), so the result
    carries its basis cache from birth.
    """
    n = base_ring.nvars
    m_field = lcm(base_ring.field_order, tau.field_order())
    cell = tuple(cell_sorted)
    sub_ring = RingContext(tuple(base_ring.names[i] for i in cell), m_field)
    lat = lattice_ideal(tau, sub_ring)
    full_ring = base_ring.with_field_order(m_field)
    gens = [Binomial(_unitvec(i, n)) for i in range(n) if i not in set(cell)]
    widened = [_widen_from_subring(g, cell, n) for g in lat.gens]
    gens.extend(widened)
    order = degrevlex_order(n)
    gens = sorted((g.normalized(order) for g in gens), key=lambda g: order.key(g.lead))
    out = BinomialIdeal(full_ring, gens, normalize=False)
    out.cache_put(("gb", order.blocks), GroebnerBasis(full_ring, order, gens))
    return out, widened


def _standard_colon_characters(ideal: BinomialIdeal, structure: CellularStructure,
                               budget: _Budget):
    """Yield (m, character of (I : x^m) on the cells) over standard monomials.

    m runs over monomials in the nilpotent variables, componentwise below
    the nilpotency exponents and outside the ideal. The colon ideals are
    chained along the enumeration path, one single-variable colon per step.
    """
    n = ideal.ring.nvars
    cell = tuple(sorted(structure.cell_indices))
    nil = list(structure.nilpotency)
    cur = [0] * n

    def walk(pos: int, colon_ideal: BinomialIdeal):
        budget.check()
        if pos == len(nil):
            yield tuple(cur), colon_ideal
            return
        i, d = nil[pos]
        yield from walk(pos + 1, colon_ideal)
        step = _unitvec(i, n)
        deeper = colon_ideal
        for e in range(1, d):
            deeper = colon_monomial(deeper, step)
            if is_unit_ideal(deeper):
                break
            cur[i] = e
            yield from walk(pos + 1, deeper)
        cur[i] = 0

    for m, colon_ideal in walk(0, ideal):
        yield m, _cell_character(colon_ideal, cell)


def _associated_prime_items(ideal: BinomialIdeal, structure: CellularStructure,
                            budget: _Budget):
    """(prime, tau, cells, widened lattice generators) per associated prime."""
    cell = tuple(sorted(structure.cell_indices))
    chars = {}
    for _, chi in _standard_colon_characters(ideal, structure, budget):
        chars.setdefault(chi.canonical(), chi)

    items = []
    seen = set()
    for key in sorted(chars):
        budget.check()
        for tau in _saturations_of(chars[key]):
            prime, widened = _prime_from_character(ideal.ring, cell, tau)
            pkey = _ideal_key(prime)
            if pkey in seen:
                continue
            seen.add(pkey)
            items.append((prime, tau, cell, widened))
    return items


def cellular_associated_primes(ideal: BinomialIdeal, structure: CellularStructure | None = None):
    """Associated primes of a cellular ideal, as a list of prime ideals."""
    _require_proper(ideal, "associated primes")
    if structure is None:
        structure = is_cellular(ideal)
    if not structure:
        raise ValueError("input is not cellular")
    return [item[0] for item in _associated_prime_items(ideal, structure, _NO_BUDGET)]


# ---------------------------------------------------------------------------
# radical


def _cellular_radical(ideal: BinomialIdeal, structure: CellularStructure) -> BinomialIdeal:
    n = ideal.ring.nvars
    cell = tuple(sorted(structure.cell_indices))
    sub, keep = restrict_to_vars(ideal, cell)
    gens = [Binomial(_unitvec(i, n)) for i, _ in structure.nilpotency]
    gens.extend(_widen_from_subring(g, keep, n) for g in sub.gens)
    out = BinomialIdeal(ideal.ring, gens)
    return BinomialIdeal(ideal.ring, reduced_gb(out).elements, normalize=False)


def binomial_radical(ideal: BinomialIdeal, *, jobs: int = 1,
                     timeout: float | None = None) -> BinomialIdeal:
    """Radical: nilpotent variables drop to power one and the lattice part on
    the cells is radical already; non-cellular inputs intersect the radicals
    of their cellular components."""
    _require_proper(ideal, "the radical")
    structure = is_cellular(ideal)
    if structure:
        return _cellular_radical(ideal, structure)
    budget = _Budget(timeout)
    sink = []
    _run_tree(ideal, "s", jobs, budget, sink)
    rads = []
    m = ideal.ring.field_order
    for leaf, classes in sorted(sink, key=lambda lc: _ideal_key(lc[0])):
        rads.append(_cellular_radical(leaf, _leaf_structure(leaf, classes)))
        m = lcm(m, rads[-1].ring.field_order)
    inter = intersect_many([r.embedded(m) for r in rads])
    return inter.require_binomial()


# ---------------------------------------------------------------------------
# minimal primes


def minimal_primes(ideal: BinomialIdeal, *, jobs: int = 1,
                   timeout: float | None = None) -> DecompositionReport:
    """All minimal primes, each cellular of the form M(E) + lattice ideal.

    The splitting tree adds bare variables (power one) on its monomial
    branches; at each cellular leaf the character of the lattice part is
    saturated and one prime per saturation emitted, then non-minimal
    entries are pruned.
    """
    _require_proper(ideal, "minimal primes")
    budget = _Budget(timeout)
    sink = []
    comps = []
    try:
        _run_tree(ideal, "1", jobs, budget, sink)
        for leaf, classes in sorted(sink, key=lambda lc: _ideal_key(lc[0])):
            budget.check()
            structure = _leaf_structure(leaf, classes)
            cell = tuple(sorted(structure.cell_indices))
            chi = _cell_character(leaf, cell)
            for tau in _saturations_of(chi):
                prime, _ = _prime_from_character(ideal.ring, cell, tau)
                pstruct = CellularStructure(cell, {i: 1 for i in range(ideal.ring.nvars)
                                                   if i not in structure.cell_indices})
                comps.append(Component(prime, cellular=pstruct, character=tau,
                                       prime=True, primary=True))
    except TimeoutExceeded as exc:
        exc.partial = _partial_report("minimal-primes", ideal, comps)
        raise
    return _assemble("minimal-primes", ideal, comps, "minimal", budget)


# ---------------------------------------------------------------------------
# associated primes


def associated_primes(ideal: BinomialIdeal, *, jobs: int = 1,
                      timeout: float | None = None) -> DecompositionReport:
    """Union of the associated primes of all cellular components."""
    _require_proper(ideal, "associated primes")
    budget = _Budget(timeout)
    sink = []
    comps = []
    try:
        for cc in _cellular_components(ideal, jobs, budget, sink):
            for prime, tau, cell, _ in _associated_prime_items(cc.ideal, cc.cellular, budget):
                pstruct = CellularStructure(cell, {i: 1 for i in range(ideal.ring.nvars)
                                                   if i not in set(cell)})
                comps.append(Component(prime, cellular=pstruct, character=tau,
                                       prime=True, primary=True))
    except TimeoutExceeded as exc:
        exc.partial = _partial_report("associated-primes", ideal, comps)
        raise
    return _assemble("associated-primes", ideal, comps, "dedup", budget)


# ---------------------------------------------------------------------------
# hull (minimal primary part of a cellular ideal with prime radical)


def hull(ideal: BinomialIdeal, structure: CellularStructure | None = None) -> BinomialIdeal:
    """Strip embedded components off a cellular ideal whose radical is prime.

    A standard monomial in the nilpotent variables witnesses an embedded
    component when the colon by it enlarges the lattice on the cells;
    adding all witnesses leaves exactly the minimal primary component.
    """
    _require_proper(ideal, "hull")
    if structure is None:
        structure = is_cellular(ideal)
    if not structure:
        raise ValueError("hull needs a cellular input")
    cell = tuple(sorted(structure.cell_indices))
    own = _cell_character(ideal, cell)
    if not own.is_saturated():
        raise ValueError("hull needs a prime radical (saturated cell character)")
    own_rows = [list(r) for r in own.basis]
    witnesses = []
    for m, chi in _standard_colon_characters(ideal, structure, _NO_BUDGET):
        if not any(m):
            continue
        for row in chi.basis:
            if solve_in_rowspan(own_rows, list(row)) is None:
                witnesses.append(Binomial(m))
                break
    if not witnesses:
        return ideal
    out = ideal.with_extra(witnesses)
    return BinomialIdeal(ideal.ring, reduced_gb(out).elements, normalize=False)


# ---------------------------------------------------------------------------
# primary decomposition


def _primary_over(leaf: BinomialIdeal, structure: CellularStructure,
                  tau: PartialCharacter, widened_lattice_gens, m_field: int):
    """Primary component of a cellular `leaf` over the prime of `tau`.

    Adding the lattice part of the prime can break cellularity, so the sum
    is re-saturated at the cell variables before taking the hull.
    """
    cell = tuple(sorted(structure.cell_indices))
    base = leaf.embedded(m_field)
    r = BinomialIdeal(base.ring, list(base.gens) + list(widened_lattice_gens))
    q0, _ = saturate_variables(r, cell)
    if is_unit_ideal(q0):
        raise AssertionError("cellularization of a primary candidate collapsed")
    nil = {i: minimal_power_in(q0, i) for i in range(base.ring.nvars) if i not in set(cell)}
    q_structure = CellularStructure(cell, nil)
    q = hull(q0, q_structure)
    nil_q = {i: minimal_power_in(q, i) for i in nil}
    return q, CellularStructure(cell, nil_q)


def primary_decomposition(ideal: BinomialIdeal, *, jobs: int = 1,
                          timeout: float | None = None) -> DecompositionReport:
    """Minimal primary decomposition of a pure-difference binomial ideal.

    Per cellular component and associated prime P, the component plus the
    lattice part of P is cellularized and hulled; redundant results are
    pruned and the survivors intersect to the input.
    """
    _require_proper(ideal, "primary decomposition")
    ideal.require_pure_difference("primary decomposition")
    budget = _Budget(timeout)
    sink = []
    comps = []
    try:
        for cc in _cellular_components(ideal, jobs, budget, sink):
            for prime, tau, cell, widened in _associated_prime_items(cc.ideal, cc.cellular, budget):
                budget.check()
                m_field = prime.ring.field_order
                q, q_structure = _primary_over(cc.ideal, cc.cellular, tau, widened, m_field)
                comps.append(Component(q, cellular=q_structure, character=tau,
                                       prime=ideal_equal(q, prime), primary=True))
    except TimeoutExceeded as exc:
        exc.partial = _partial_report("primary", ideal, comps)
        raise
    return _assemble("primary", ideal, comps, "intersection", budget)
