"""Ring contexts, term orders and exponent-vector helpers.

Monomials are plain tuples of nonnegative ints, one slot per variable.
Sums are checked against a loud overflow cap so runaway exponent growth
fails instead of silently producing garbage in the compiled core.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import ExponentOverflowError

# Exponents stay well below int64 territory; additions are checked against this.
EXPONENT_CAP = 1 << 40

RESERVED_PREFIX = "_"


@dataclass(frozen=True)
class RingContext:
    """Variable names plus the cyclotomic order of the coefficient field."""

    names: tuple[str, ...]
    field_order: int = 1

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if self.field_order < 1:
            raise ValueError("field order must be positive")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def with_field_order(self, m: int) -> "RingContext":
        if m == self.field_order:
            return self
        return RingContext(self.names, m)

    def join_field(self, m: int) -> "RingContext":
        from math import gcd

        lcm = self.field_order * m // gcd(self.field_order, m)
        return self.with_field_order(lcm)

    def extended(self, extra: tuple[str, ...]) -> "RingContext":
        return RingContext(self.names + extra, self.field_order)


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """A product of blocks; each block is ('lex'|'degrevlex', variable indices).

    Monomials compare block by block: the first block whose restrictions
    differ decides. A single block over all variables gives plain lex or
    degrevlex; a leading block over a subset gives an elimination order for
    that subset.
    """

    blocks: tuple[tuple[str, tuple[int, ...]], ...]

    def key(self, exp: tuple[int, ...]):
        parts = []
        for kind, idxs in self.blocks:
            if kind == "lex":
                parts.extend(exp[i] for i in idxs)
            else:  # degrevlex
                parts.append(sum(exp[i] for i in idxs))
                parts.extend(-exp[i] for i in reversed(idxs))
        return tuple(parts)

    def compare(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka > kb:
            return 1
        if ka < kb:
            return -1
        return 0

    def core_spec(self) -> tuple:
        # flat encoding consumed by the reduction engines
        return tuple((0 if kind == "lex" else 1, idxs) for kind, idxs in self.blocks)


def lex_order(nvars: int) -> TermOrder:
    return TermOrder((("lex", tuple(range(nvars))),))

def degrevlex_order(nvars: int) -> TermOrder:
    return TermOrder((("degrevlex", tuple(range(nvars))),))

def elimination_order(front: tuple[int, ...], nvars: int) -> TermOrder:
    """Eliminates the `front` variables: any monomial touching them dominates."""
    front = tuple(sorted(front))
    back = tuple(i for i in range(nvars) if i not in set(front))
    blocks = []
    if front:
        blocks.append(("degrevlex", front))
    if back:
        blocks.append(("degrevlex", back))
    return TermOrder(tuple(blocks))


# ---------------------------------------------------------------------------
# exponent vectors


def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = tuple(x + y for x, y in zip(a, b))
    for x in out:
        if x > EXPONENT_CAP:
            raise ExponentOverflowError(f"exponent {x} exceeds cap {EXPONENT_CAP}")
    return out


def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError("non-exact monomial division")
    return out


def mono_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_deg(a: tuple[int, ...]) -> int:
    return sum(a)


def mono_is_one(a: tuple[int, ...]) -> bool:
    return all(x == 0 for x in a)


def mono_support(a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(a) if x)


def mono_coprime(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def vector_split(v: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Signed vector -> (positive part, negative part), both nonnegative."""
    plus = tuple(x if x > 0 else 0 for x in v)
    minus = tuple(-x if x < 0 else 0 for x in v)
    return plus, minus
