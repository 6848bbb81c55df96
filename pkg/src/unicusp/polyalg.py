"""Sparse multivariate polynomials with exact rational coefficients, and the
recursive construction of the curves P_s = 0 realizing the Fibonacci families.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exactmath import fib

Coeff = Union[int, Fraction]
Monomial = tuple  # exponent vector aligned with Poly.variables


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide`; carries quotient and nonzero remainder."""

    def __init__(self, quotient: Poly, remainder: Poly):
        super().__init__(f"not divisible, remainder has {len(remainder.terms)} term(s), "
                         f"leading {remainder.leading_term_str()}")
        self.quotient = quotient
        self.remainder = remainder


class Poly:
    """Immutable sparse polynomial: exponent tuple -> nonzero coefficient.

    Monomials are ordered degree-lexicographically (total degree first, then
    exponents compared left to right).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Monomial, Coeff] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not match variables {self.variables}")
            if c:
                clean[tuple(mono)] = _norm(c)
        self.terms = clean

    # construction helpers
    @classmethod
    def const(cls, variables, c: Coeff) -> Poly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name: str) -> Poly:
        variables = tuple(variables)
        mono = tuple(1 if v == name else 0 for v in variables)
        if sum(mono) != 1:
            raise ValueError(f"{name!r} not among {variables}")
        return cls(variables, {mono: 1})

    @classmethod
    def gens(cls, *names: str) -> tuple[Poly, ...]:
        return tuple(cls.var(names, n) for n in names)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.variables, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __neg__(self) -> Poly:
        return Poly(self.variables, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.variables, out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    @staticmethod
    def _key(m: Monomial) -> tuple:
        return (sum(m), m)

    def leading(self) -> tuple[Monomial, Coeff]:
        m = max(self.terms, key=self._key)
        return m, self.terms[m]

    def leading_term_str(self) -> str:
        if not self.terms:
            return "0"
        m, c = self.leading()
        return Poly(self.variables, {m: c}).to_text()

    def substitute(self, mapping: Mapping[str, Poly | Coeff], variables: Iterable[str] | None = None) -> Poly:
        """Replace variables by polynomials over ``variables`` (default: same ring)."""
        target = tuple(variables) if variables is not None else self.variables
        images = []
        for v in self.variables:
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, Poly):
                    img = Poly.const(target, img)
                elif img.variables != target:
                    raise ValueError(f"image of {v} lives over {img.variables}, expected {target}")
            else:
                img = Poly.var(target, v)
            images.append(img)
        result = Poly(target)
        cache: dict[tuple[int, int], Poly] = {}
        for mono, c in self.terms.items():
            term = Poly.const(target, c)
            for k, e in enumerate(mono):
                if e:
                    if (k, e) not in cache:
                        cache[(k, e)] = images[k] ** e
                    term = term * cache[(k, e)]
            result = result + term
        return result

    def to_text(self) -> str:
        """Canonical text form: terms in decreasing monomial order, explicit exponents."""
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self._key, reverse=True):
            c = self.terms[m]
            factors = [f"{v}^{e}" for v, e in zip(self.variables, m) if e]
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r}, vars={self.variables})"


def divide(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Multivariate division by one polynomial: (quotient, remainder)."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    den = num._coerce(den)
    lm, lc = den.leading()
    rest = [(m, c) for m, c in den.terms.items() if m != lm]
    work = dict(num.terms)
    heap = [(-sum(m), tuple(-e for e in m)) for m in work]
    heapq.heapify(heap)
    quot: dict[Monomial, Coeff] = {}
    rem: dict[Monomial, Coeff] = {}
    while heap:
        _, neg = heapq.heappop(heap)
        m = tuple(-e for e in neg)
        c = work.pop(m, 0)
        if not c:
            continue
        if all(e >= f for e, f in zip(m, lm)):
            qm = tuple(e - f for e, f in zip(m, lm))
            if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
                qc = c // lc
            else:
                qc = _norm(Fraction(c) / lc)
            quot[qm] = quot.get(qm, 0) + qc
            for rm, rc in rest:
                t = tuple(e + f for e, f in zip(qm, rm))
                if t not in work:
                    heapq.heappush(heap, (-sum(t), tuple(-e for e in t)))
                    work[t] = 0
                work[t] = work[t] - qc * rc
        else:
            rem[m] = c
    return Poly(num.variables, quot), Poly(num.variables, rem)


def exact_divide(num: Poly, den: Poly) -> Poly:
    """num / den, raising :class:`NotDivisible` with the remainder if inexact."""
    q, r = divide(num, den)
    if not r.is_zero():
        raise NotDivisible(q, r)
    if q * den != num:  # re-multiplication check
        raise ArithmeticError("division self-check failed")
    return q


# -- the Fibonacci curve construction ------------------------------------------

VARS = ("x", "y")


def seeds() -> dict[str, Poly]:
    x, y = Poly.gens(*VARS)
    p_m1 = y - x ** 2
    return {
        "P_-1": p_m1,
        "Q_-1": y,
        "P_0": (y - x ** 2) ** 2 - 2 * x * y ** 2 * (y - x ** 2) + y ** 5,
        "Q_0": p_m1,
        "G": x * y - x ** 3 - y ** 3,
    }


@dataclass
class KashiwaraPair:
    s: int
    P: Poly
    Q: Poly
    exponent_used: int | None  # power of G in the recursion (None for the seeds)
    degree: int
    stated_exponent: int | None = None
    note: str = ""

    @property
    def exponent_discrepancy(self) -> bool:
        return self.stated_exponent is not None and self.exponent_used != self.stated_exponent


class ConstructionError(RuntimeError):
    pass


def kashiwara_sequence(smax: int) -> list[KashiwaraPair]:
    """Build P_s, Q_s for -1 <= s <= smax.

    For s >= 1, P_s = (G^e + Q_s^3) / Q_{s-1} with Q_s = P_{s-1}.  The
    exponent e = F(2s+1) is tried first; if that division is inexact every
    Fibonacci exponent F(2s+1) .. F(2s+5) is tried and the unique one that
    divides exactly is used.
    """
    if smax < 1:
        raise ValueError("smax must be >= 1")
    sd = seeds()
    G = sd["G"]
    pairs = [
        KashiwaraPair(-1, sd["P_-1"], sd["Q_-1"], None, sd["P_-1"].total_degree()),
        KashiwaraPair(0, sd["P_0"], sd["Q_0"], None, sd["P_0"].total_degree()),
    ]
    for s in range(1, smax + 1):
        q_s = pairs[-1].P
        q_prev = pairs[-1].Q
        cube = q_s ** 3
        stated = fib(2 * s + 1)
        results: dict[int, Poly] = {}
        failures: list[int] = []
        for idx in range(2 * s + 1, 2 * s + 6):
            e = fib(idx)
            if e in results or e in failures:
                continue
            try:
                results[e] = exact_divide(G ** e + cube, q_prev)
            except NotDivisible:
                failures.append(e)
        if not results:
            raise ConstructionError(f"s={s}: no exponent F({2 * s + 1})..F({2 * s + 5}) divides exactly")
        if len(results) > 1:
            raise ConstructionError(f"s={s}: exact division for several exponents {sorted(results)}")
        (e, p_s), = results.items()
        note = ""
        if e != stated:
            note = (f"exponent F({2 * s + 1}) = {stated} leaves a nonzero remainder; "
                    f"exact division needs {e}")
        pairs.append(KashiwaraPair(s, p_s, q_s, e, p_s.total_degree(), stated, note))
    return pairs


def verify_recursion(pair: KashiwaraPair, prev: KashiwaraPair) -> bool:
    """P_s * Q_{s-1} == G^e + Q_s^3 for a constructed pair."""
    G = seeds()["G"]
    return pair.P * prev.Q == G ** pair.exponent_used + pair.Q ** 3


def verify_parametrization_b(d: int) -> bool:
    """(zy - x^2)^(d/2) - x y^(d-1) vanishes on [1 + t^(d-1) : t^(d/2) : t^d]."""
    if d < 4 or d % 2:
        raise ValueError(f"d must be even and >= 4, got {d}")
    z, x, y = Poly.gens("z", "x", "y")
    curve = (z * y - x ** 2) ** (d // 2) - x * y ** (d - 1)
    (t,) = Poly.gens("t")
    image = curve.substitute({"z": 1 + t ** (d - 1), "x": t ** (d // 2), "y": t ** d}, variables=("t",))
    return image.is_zero()


@dataclass(frozen=True)
class PencilCheck:
    s: int
    identity_holds: bool  # F(2s+3) F(2s+1) == F(2s+2)^2 + 1
    stated_fiber_degree: int
    measured_degrees: tuple[int, int] | None  # (deg P_s, deg Q_s)
    stated_exponents_balance: bool | None  # deg(P^F(2s+1)) == deg(Q^F(2s+3))
    measured_fiber_degree: int | None  # deg P_s * deg Q_s
    measured_identity_holds: bool | None  # deg P * deg Q == F(2s+4)^2 + 1

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.measured_identity_holds is not False


def pencil_degree_check(s: int, pair: KashiwaraPair | None = None) -> PencilCheck:
    """Fibonacci degree bookkeeping for the pencil P_s^e1 / Q_s^e2."""
    lo, mid, hi = fib(2 * s + 1), fib(2 * s + 2), fib(2 * s + 3)
    identity = hi * lo == mid * mid + 1
    if pair is None:
        return PencilCheck(s, identity, hi * lo, None, None, None, None)
    dp, dq = pair.P.total_degree(), pair.Q.total_degree()
    balance = dp * lo == dq * hi
    measured = dp * dq
    return PencilCheck(s, identity, hi * lo, (dp, dq), balance, measured,
                       measured == fib(2 * s + 4) ** 2 + 1)
