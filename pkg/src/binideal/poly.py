"""Binomials, generic polynomials and ideal wrappers.

A Binomial is x^lead - coeff * x^trail with coeff a root of unity; the lead
coefficient is always 1 (normalization drops the global unit, which never
changes the ideal). Degenerate kinds: Monomial (trail is None) and Zero
(module-level singleton). Pure-difference means coeff == 1.
"""

from __future__ import annotations

from typing import Optional

from .cyclo import CyclotomicNumber, RootOfUnity
from .errors import NotBinomialError, NotPureDifferenceError
from .ring import RingContext, TermOrder, degrevlex_order, mono_is_one

_ONE = RootOfUnity.one()


class Binomial:
    __slots__ = ("lead", "trail", "coeff")

    def __init__(self, lead, trail=None, coeff: RootOfUnity = _ONE):
        object.__setattr__(self, "lead", tuple(lead) if lead is not None else None)
        object.__setattr__(self, "trail", tuple(trail) if trail is not None else None)
        object.__setattr__(self, "coeff", coeff)

    def __setattr__(self, name, value):
        raise AttributeError("Binomial is immutable")

    def __reduce__(self):
        return (Binomial, (self.lead, self.trail, self.coeff))

    # -- kinds ------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.lead is None

    @property
    def is_monomial(self) -> bool:
        return self.lead is not None and self.trail is None

    @property
    def is_proper(self) -> bool:
        return self.trail is not None

    @property
    def is_pure_difference(self) -> bool:
        return self.is_proper and self.coeff.is_one

    def normalized(self, order: TermOrder) -> "Binomial":
        """Orient so the lead is maximal; collapse equal monomials."""
        if self.is_zero or self.is_monomial:
            return self
        cmp = order.compare(self.lead, self.trail)
        if cmp > 0:
            return self
        if cmp < 0:
            return Binomial(self.trail, self.lead, self.coeff.inverse())
        if self.coeff.is_one:
            return ZERO
        return Binomial(self.lead)  # (1 - c) is a unit

    def key(self) -> tuple:
        if self.is_zero:
            return (0,)
        if self.is_monomial:
            return (1, self.lead)
        return (2, self.lead, self.trail, self.coeff.canonical())

    def embedded(self, field_order: int) -> "Binomial":
        if not self.is_proper or self.coeff.order == field_order:
            return self
        return Binomial(self.lead, self.trail, self.coeff.embed(field_order))

    def __eq__(self, other):
        if not isinstance(other, Binomial):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(("Binomial",) + self.key())

    def __repr__(self):
        if self.is_zero:
            return "Binomial.ZERO"
        if self.is_monomial:
            return f"Binomial(mono {self.lead})"
        return f"Binomial({self.lead} - {self.coeff.render()}*{self.trail})"

    # -- conversions -------------------------------------------------------
    def to_generic(self, field_order: int) -> "GenericPolynomial":
        if self.is_zero:
            return GenericPolynomial({})
        one = CyclotomicNumber.from_rational(1, field_order)
        if self.is_monomial:
            return GenericPolynomial({self.lead: one})
        if self.lead == self.trail:
            c = one - self.coeff.to_field().embed(field_order)
            return GenericPolynomial({} if c.is_zero else {self.lead: c})
        c = -(self.coeff.to_field().embed(field_order))
        return GenericPolynomial({self.lead: one, self.trail: c})


ZERO = Binomial(None)


def monomial(exp) -> Binomial:
    return Binomial(tuple(exp))


def binomial(lead, trail, coeff: RootOfUnity = _ONE) -> Binomial:
    return Binomial(tuple(lead), tuple(trail), coeff)


class GenericPolynomial:
    """Sparse polynomial with cyclotomic coefficients; oracle-path currency."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        object.__setattr__(
            self, "terms", {e: c for e, c in terms.items() if not c.is_zero}
        )

    def __setattr__(self, name, value):
        raise AttributeError("GenericPolynomial is immutable")

    def __reduce__(self):
        return (GenericPolynomial, (self.terms,))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def nterms(self) -> int:
        return len(self.terms)

    def as_binomial(self, order: TermOrder, field_order: int) -> Optional[Binomial]:
        """Convert back when the support has at most two monomials and the
        trailing/leading coefficient ratio is a root of unity; else None."""
        if not self.terms:
            return ZERO
        items = sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
        if len(items) == 1:
            return Binomial(items[0][0])
        if len(items) != 2:
            return None
        (lead, cl), (trail, ct) = items
        ratio = -(ct / cl)
        root = ratio.as_root_of_unity()
        if root is None:
            return None
        return Binomial(lead, trail, root)

    def __eq__(self, other):
        if not isinstance(other, GenericPolynomial):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __repr__(self):
        return f"GenericPolynomial({self.terms})"


class BinomialIdeal:
    """Immutable generator presentation plus cached Groebner bases.

    The cache is keyed by term order; presentations never mutate, so entries
    are never invalidated. Writes hold a lock so concurrent readers on
    threads see a consistent dict.
    """

    def __init__(self, ring: RingContext, gens, normalize: bool = True):
        import threading

        self.ring = ring
        order = degrevlex_order(ring.nvars)
        cleaned = []
        for g in gens:
            if not isinstance(g, Binomial):
                raise TypeError("generators must be Binomial")
            if g.is_proper and ring.field_order % g.coeff.order:
                raise ValueError(
                    "coefficient order does not divide the ring field order; embed first"
                )
            g = g.embedded(ring.field_order) if g.is_proper else g
            if normalize:
                g = g.normalized(order)
            if not g.is_zero:
                cleaned.append(g)
        seen = set()
        uniq = []
        for g in cleaned:
            if g not in seen:
                seen.add(g)
                uniq.append(g)
        self.gens: tuple[Binomial, ...] = tuple(uniq)
        self._cache = {}
        self._lock = threading.Lock()

    # -- plumbing ----------------------------------------------------------
    def cache_get(self, key):
        return self._cache.get(key)

    def cache_put(self, key, value):
        with self._lock:
            self._cache[key] = value

    def __reduce__(self):
        return (_rebuild_ideal, (self.ring, self.gens))

    def __repr__(self):
        return f"BinomialIdeal({self.ring.names}, {len(self.gens)} gens)"

    # -- predicates ----------------------------------------------------------
    @property
    def is_trivial(self) -> bool:
        return not self.gens

    def has_monomial_gen(self) -> bool:
        return any(g.is_monomial for g in self.gens)

    def is_pure_difference(self) -> bool:
        """Monomial generators allowed; every proper binomial has coeff 1."""
        return all(not g.is_proper or g.coeff.is_one for g in self.gens)

    def require_pure_difference(self, what: str):
        if not self.is_pure_difference():
            raise NotPureDifferenceError(
                f"{what} requires a pure-difference ideal (unit coefficients 1)"
            )

    def contains_unit_generator(self) -> bool:
        return any(g.is_monomial and mono_is_one(g.lead) for g in self.gens)

    # -- construction helpers -------------------------------------------------
    def with_extra(self, extra) -> "BinomialIdeal":
        return BinomialIdeal(self.ring, list(self.gens) + list(extra))

    def embedded(self, field_order: int) -> "BinomialIdeal":
        if field_order == self.ring.field_order:
            return self
        ring = self.ring.with_field_order(field_order)
        return BinomialIdeal(ring, [g for g in self.gens])


def _rebuild_ideal(ring, gens):
    return BinomialIdeal(ring, gens, normalize=False)


class GenericIdeal:
    """Generator list of generic polynomials (intersection results etc.)."""

    def __init__(self, ring: RingContext, polys):
        self.ring = ring
        self.polys = tuple(p for p in polys if not p.is_zero)
        self._cache = {}

    def cache_get(self, key):
        return self._cache.get(key)

    def cache_put(self, key, value):
        self._cache[key] = value

    def to_binomial_ideal(self) -> Optional[BinomialIdeal]:
        order = degrevlex_order(self.ring.nvars)
        gens = []
        for p in self.polys:
            b = p.as_binomial(order, self.ring.field_order)
            if b is None:
                return None
            gens.append(b)
        return BinomialIdeal(self.ring, gens)

    def require_binomial(self) -> BinomialIdeal:
        out = self.to_binomial_ideal()
        if out is None:
            raise NotBinomialError("ideal has an irreducibly non-binomial generator")
        return out
