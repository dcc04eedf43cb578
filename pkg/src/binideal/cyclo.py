"""Exact arithmetic with roots of unity and cyclotomic field elements.

Roots of unity are pairs (order m, exponent k) meaning the primitive m-th
root to the k-th power; k is reduced mod m but the pair is deliberately not
gcd-normalized, so an element remembers the ambient group it was created in.
Equality embeds both sides into the lcm order first.

Field elements are residues mod the m-th cyclotomic polynomial: a tuple of
phi(m) rationals, coefficient i belonging to ww_m^i. All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("order must be positive")
    count = 0
    for k in range(1, m + 1):
        if gcd(k, m) == 1:
            count += 1
    return count


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division in Z[x]; remainder must vanish. Coefficients ascending.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial.

    Computed as (x^m - 1) divided by the product of all lower cyclotomic
    polynomials at proper divisors of m; integer arithmetic throughout.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_polynomial(d)
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                if a:
                    for j, b in enumerate(phi_d):
                        new[i + j] += a * b
            den = new
    return tuple(_poly_divide_exact(num, den))


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[Fraction, ...], ...]:
    # Row i is the residue of x^(phi(m)+i) mod Phi_m, for products of residues.
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    # x^deg = -(phi[0] + phi[1] x + ... ) since Phi is monic
    cur = [Fraction(-phi[i]) for i in range(deg)]
    rows.append(tuple(cur))
    for _ in range(deg - 1):
        nxt = [Fraction(0)] + cur[:-1]
        top = cur[-1]
        if top:
            for i in range(deg):
                nxt[i] += top * -phi[i]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


class RootOfUnity:
    """ww_m^k, the k-th power of the primitive m-th root of unity."""

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int = 1):
        if order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "exponent", exponent % order)

    def __setattr__(self, name, value):
        raise AttributeError("RootOfUnity is immutable")

    def __reduce__(self):
        return (RootOfUnity, (self.order, self.exponent))

    @staticmethod
    def one(order: int = 1) -> "RootOfUnity":
        return RootOfUnity(order, 0)

    @staticmethod
    def minus_one() -> "RootOfUnity":
        return RootOfUnity(2, 1)

    def canonical(self) -> tuple[int, int]:
        # Smallest-order representation of the same complex number.
        g = gcd(self.exponent, self.order)
        if self.exponent == 0:
            return (1, 0)
        return (self.order // g, self.exponent // g)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    def embed(self, order: int) -> "RootOfUnity":
        """Rewrite in the group of order `order`; requires self.order | order."""
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        return RootOfUnity(order, self.exponent * (order // self.order))

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = self.order * other.order // gcd(self.order, other.order)
        a = self.embed(m)
        b = other.embed(m)
        return RootOfUnity(m, a.exponent + b.exponent)

    def __pow__(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * n)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(("RootOfUnity", self.canonical()))

    def __repr__(self):
        return f"RootOfUnity({self.order}, {self.exponent})"

    def render(self) -> str:
        if self.exponent == 0:
            return "1"
        if self.order == 2 and self.exponent == 1:
            return "-1"
        if self.exponent == 1:
            return f"ww_{self.order}"
        return f"ww_{self.order}^{self.exponent}"

    def to_field(self) -> "CyclotomicNumber":
        return CyclotomicNumber.from_root(self)


class CyclotomicNumber:
    """Element of Q(ww_m): residue mod the m-th cyclotomic polynomial."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = totient(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    def __reduce__(self):
        return (CyclotomicNumber, (self.order, self.coeffs))

    @staticmethod
    def from_rational(q, order: int = 1) -> "CyclotomicNumber":
        deg = totient(order)
        return CyclotomicNumber(order, (Fraction(q),) + (Fraction(0),) * (deg - 1))

    @staticmethod
    def from_root(root: RootOfUnity) -> "CyclotomicNumber":
        m = root.order
        deg = totient(m)
        vec = [Fraction(0)] * deg
        e = root.exponent
        if e < deg:
            vec[e] = Fraction(1)
            return CyclotomicNumber(m, vec)
        # reduce x^e mod Phi_m via the reduction table
        rows = _reduction_rows(m)
        if e - deg < len(rows):
            return CyclotomicNumber(m, rows[e - deg])
        # e can reach 2*deg-2 at most after products; for a bare root walk down
        cur = list(rows[-1])
        steps = e - deg - (len(rows) - 1)
        for _ in range(steps):
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                row0 = rows[0]
                for i in range(deg):
                    cur[i] += top * row0[i]
        return CyclotomicNumber(m, cur)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self):
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def embed(self, order: int) -> "CyclotomicNumber":
        """Re-express in Q(ww_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        step = order // self.order
        out = CyclotomicNumber.from_rational(0, order)
        for i, c in enumerate(self.coeffs):
            if c:
                term = CyclotomicNumber.from_root(RootOfUnity(order, i * step))
                out = out + term.scale(c)
        return out

    def scale(self, q) -> "CyclotomicNumber":
        q = Fraction(q)
        return CyclotomicNumber(self.order, tuple(c * q for c in self.coeffs))

    @staticmethod
    def _join(a: "CyclotomicNumber", b: "CyclotomicNumber"):
        m = a.order * b.order // gcd(a.order, b.order)
        return a.embed(m), b.embed(m)

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        a, b = CyclotomicNumber._join(self, other)
        return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        return self + (-other)

    def __mul__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        a, b = CyclotomicNumber._join(self, other)
        deg = len(a.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        if deg > 1:
            rows = _reduction_rows(a.order)
            for i in range(deg, 2 * deg - 1):
                c = prod[i]
                if c:
                    row = rows[i - deg]
                    for k in range(deg):
                        prod[k] += c * row[k]
        return CyclotomicNumber(a.order, prod[:deg])

    def inverse(self) -> "CyclotomicNumber":
        """Extended Euclid against Phi_m over Q."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        r = self.is_rational()
        if r is not None:
            out = [Fraction(1) / r] + [Fraction(0)] * (len(self.coeffs) - 1)
            return CyclotomicNumber(self.order, out)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        # invariants: s*self + t*Phi = r  (t never needed)
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                break
            # divide r0 by r1
            q = [Fraction(0)] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            for i in range(len(q) - 1, -1, -1):
                c = rem[i + len(r1) - 1] / r1[-1]
                q[i] = c
                if c:
                    for j, d in enumerate(r1):
                        rem[i + j] -= c * d
            while rem and rem[-1] == 0:
                rem.pop()
            qs1 = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        qs1[i + j] += x * y
            new_s = [Fraction(0)] * max(len(s0), len(qs1))
            for i, x in enumerate(s0):
                new_s[i] += x
            for i, x in enumerate(qs1):
                new_s[i] -= x
            r0, s0, r1, s1 = r1, s1, rem, new_s
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        rows = _reduction_rows(self.order) if deg > 1 else ()
        for i, c in enumerate(inv):
            if not c:
                continue
            if i < deg:
                out[i] += c
            else:
                row = rows[i - deg]
                for k in range(deg):
                    out[k] += c * row[k]
        return CyclotomicNumber(self.order, out)

    def __truediv__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = CyclotomicNumber._join(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # hash via the smallest cyclotomic field containing the value
        m = self.order
        best = self
        for d in range(1, m):
            if m % d == 0:
                try:
                    cand = _try_descend(self, d)
                except ValueError:
                    cand = None
                if cand is not None:
                    best = cand
                    break
        return hash(("CyclotomicNumber", best.order, best.coeffs))

    def as_root_of_unity(self):
        """Return an equal RootOfUnity, or None if the value is not one."""
        m = self.order
        for cand_order in (m, 2 * m):
            for k in range(cand_order):
                if self == CyclotomicNumber.from_root(RootOfUnity(cand_order, k)):
                    return RootOfUnity(cand_order, k)
        return None

    def render(self) -> str:
        """Polynomial in ww_m, highest power first, compact signs: -ww_3-1."""
        if self.is_zero:
            return "0"
        name = f"ww_{self.order}"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = name
            else:
                mono = f"{name}^{i}"
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_frac_str(mag)}*{mono}"
            else:
                body = _frac_str(mag)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {self.coeffs})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _try_descend(value: CyclotomicNumber, d: int):
    # Return the same value expressed in Q(ww_d) if it lies there, else None.
    deg = totient(d)
    # brute basis match: embed each basis vector of Q(ww_d) and solve by elimination
    basis = []
    for i in range(deg):
        vec = [Fraction(0)] * deg
        vec[i] = Fraction(1)
        basis.append(CyclotomicNumber(d, vec).embed(value.order).coeffs)
    target = list(value.coeffs)
    n = len(target)
    # Gaussian elimination on the deg x n system (columns = basis, rows = coords)
    rows = [[basis[j][i] for j in range(deg)] + [target[i]] for i in range(n)]
    sol = [Fraction(0)] * deg
    pivot_rows = []
    for col in range(deg):
        pr = None
        for r in range(n):
            if r in pivot_rows:
                continue
            if rows[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        pivot_rows.append(pr)
        pv = rows[pr][col]
        for r in range(n):
            if r != pr and rows[r][col] != 0:
                f = rows[r][col] / pv
                for c in range(deg + 1):
                    rows[r][c] -= f * rows[pr][c]
    for idx, pr in enumerate(pivot_rows):
        lead = None
        for c in range(deg):
            if rows[pr][c] != 0:
                lead = c
                break
        if lead is not None:
            sol[lead] = rows[pr][deg] / rows[pr][lead]
    # verify
    cand = CyclotomicNumber(d, sol)
    if cand.embed(value.order) == value:
        return cand
    return None
