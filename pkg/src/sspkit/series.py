"""Exact truncated graded power series and specializations.

Coefficients are exact rationals (gmpy2.mpq, falling back to Fraction).
A :class:`GradedSeries` is a polynomial in one grading variable ``t``
truncated at a caller-chosen degree ``D``; all arithmetic is exact modulo
degrees above the truncation.

A :class:`Specialization` is a finite list of rational variable values.
Each variable carries a grade ``g``: the variable stands for ``v * t^g``,
so its k-th power sum contributes ``v^k * t^{g*k}``.  A Laurent variable
contributes both ``v`` and ``1/v`` at the same grade.  With y-type
alphabets at grade 1 and Laurent x-type alphabets at grade 0, every
summation identity in this package becomes degree-finite.

The generating functions H, G, E and Gbar route grade-0 content through
closed-form rational prefactors (exp of a graded series is only defined
for zero constant term); grade-0 pairs whose geometric expansion diverges
are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

try:
    from gmpy2 import mpq as _mpq

    def RAT(a, b=None):
        return _mpq(a) if b is None else _mpq(a, b)

except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

    def RAT(a, b=None):
        return _mpq(a) if b is None else _mpq(a, b)


ZERO = RAT(0)
ONE = RAT(1)


class FormalConvergenceError(ValueError):
    """A grade-0 geometric expansion would diverge."""


def rat_from_str(s: str):
    return RAT(str(s))


class GradedSeries:
    """Truncated power series in t with exact rational coefficients."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Sequence, trunc: int):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        c = [RAT(x) for x in coeffs[: trunc + 1]]
        c += [ZERO] * (trunc + 1 - len(c))
        self.coeffs = c
        self.trunc = trunc

    @classmethod
    def constant(cls, value, trunc: int) -> "GradedSeries":
        return cls([RAT(value)], trunc)

    @classmethod
    def zero(cls, trunc: int) -> "GradedSeries":
        return cls([], trunc)

    @classmethod
    def monomial(cls, value, degree: int, trunc: int) -> "GradedSeries":
        c = [ZERO] * (trunc + 1)
        if 0 <= degree <= trunc:
            c[degree] = RAT(value)
        return cls(c, trunc)

    def __getitem__(self, d: int):
        return self.coeffs[d] if 0 <= d <= self.trunc else ZERO

    def __eq__(self, other):
        if isinstance(other, GradedSeries):
            d = min(self.trunc, other.trunc)
            return self.coeffs[: d + 1] == other.coeffs[: d + 1] and self.trunc == other.trunc
        return NotImplemented

    def same_coeffs(self, other: "GradedSeries") -> bool:
        """Coefficientwise equality up to the common truncation."""
        d = min(self.trunc, other.trunc)
        return self.coeffs[: d + 1] == other.coeffs[: d + 1]

    def __hash__(self):
        return hash((self.trunc, tuple(self.coeffs)))

    def __add__(self, other):
        other = _coerce(other, self.trunc)
        d = min(self.trunc, other.trunc)
        return GradedSeries([self[i] + other[i] for i in range(d + 1)], d)

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-_coerce(other, self.trunc))

    def __rsub__(self, other):
        return _coerce(other, self.trunc) - self

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            r = RAT(other)
            return GradedSeries([c * r for c in self.coeffs], self.trunc)
        d = min(self.trunc, other.trunc)
        out = [ZERO] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if a == 0:
                continue
            for j in range(d + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return GradedSeries(out, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedSeries):
            return self * other.reciprocal()
        return self * (ONE / RAT(other))

    def truncate(self, d: int) -> "GradedSeries":
        return GradedSeries(self.coeffs[: d + 1], min(d, self.trunc))

    def exp(self) -> "GradedSeries":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term")
        out = GradedSeries.constant(1, self.trunc)
        term = GradedSeries.constant(1, self.trunc)
        fact = ONE
        for m in range(1, self.trunc + 1):
            term = term * self
            fact = fact * m
            out = out + term * (ONE / fact)
        return out

    def reciprocal(self) -> "GradedSeries":
        """Multiplicative inverse; constant term must be nonzero."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("reciprocal requires nonzero constant term")
        inv = [ONE / c0]
        for d in range(1, self.trunc + 1):
            s = ZERO
            for i in range(1, d + 1):
                s += self[i] * inv[d - i]
            inv.append(-s / c0)
        return GradedSeries(inv, self.trunc)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "GradedSeries":
        return cls([rat_from_str(s) for s in data["coeffs"]], int(data["trunc"]))

    def __repr__(self):
        terms = [f"({c})t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"


def _coerce(x, trunc: int) -> GradedSeries:
    if isinstance(x, GradedSeries):
        return x
    return GradedSeries.constant(x, trunc)


# ---------------------------------------------------------------------------
# Specializations


@dataclass(frozen=True)
class Var:
    value: object  # rational
    grade: int = 1
    laurent: bool = False

    def __post_init__(self):
        if self.laurent and self.value == 0:
            raise ValueError("Laurent variable must be nonzero")
        if self.grade < 0:
            raise ValueError("grade must be nonnegative")


class Specialization:
    """A finite list of graded rational variable values (possibly empty)."""

    __slots__ = ("vars",)

    def __init__(self, vars: Iterable[Var] = ()):
        self.vars = tuple(vars)

    @classmethod
    def variables(cls, values, grade: int = 1) -> "Specialization":
        return cls(Var(RAT(str(v)) if isinstance(v, str) else RAT(v), grade, False) for v in values)

    @classmethod
    def laurent(cls, values, grade: int = 0) -> "Specialization":
        return cls(Var(RAT(str(v)) if isinstance(v, str) else RAT(v), grade, True) for v in values)

    @classmethod
    def empty(cls) -> "Specialization":
        return cls(())

    def is_empty(self) -> bool:
        return not self.vars

    def union(self, *others: "Specialization") -> "Specialization":
        vs = list(self.vars)
        for o in others:
            vs.extend(o.vars)
        return Specialization(vs)

    def effective(self) -> Tuple[Tuple[object, int], ...]:
        """Expanded (value, grade) pairs; a Laurent entry yields v and 1/v."""
        out = []
        for v in self.vars:
            out.append((RAT(v.value), v.grade))
            if v.laurent:
                out.append((ONE / RAT(v.value), v.grade))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Specialization) and self.vars == other.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        if not self.vars:
            return "Specialization(empty)"
        bits = [f"{v.value}@{v.grade}{'L' if v.laurent else ''}" for v in self.vars]
        return "Specialization(" + ", ".join(bits) + ")"

    def to_json(self) -> dict:
        return {
            "vars": [
                {"v": str(v.value), "grade": v.grade, "laurent": v.laurent} for v in self.vars
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "Specialization":
        return cls(
            Var(rat_from_str(d["v"]), int(d.get("grade", 1)), bool(d.get("laurent", False)))
            for d in data.get("vars", [])
        )


EMPTY_SPEC = Specialization.empty()


def power_sum(s: Specialization, k: int, D: int) -> GradedSeries:
    """p_k of a specialization as a graded series truncated at D."""
    if k < 1:
        raise ValueError("power sums are indexed by k >= 1")
    out = [ZERO] * (D + 1)
    for v, g in s.effective():
        d = g * k
        if d <= D:
            out[d] += v**k
    return GradedSeries(out, D)


def _geometric_log_pairs(pairs, D: int, sign_alternating: bool, reject_label: str):
    """Split variable pairs into a grade-0 rational prefactor and an exp argument.

    Each pair (c, G) contributes sum_k (+-1)^{k-1}-free log-series
    ``sum_k s_k c^k t^{Gk} / k`` to the exponent, where ``s_k = 1`` or
    ``(-1)^{k-1}``.  Grade-0 pairs are folded into the closed forms
    ``1/(1-c)`` resp. ``(1+c)`` and rejected if ``|c| >= 1``.
    """
    prefactor = ONE
    arg = [ZERO] * (D + 1)
    for c, G in pairs:
        if G == 0:
            if abs(c) >= 1:
                raise FormalConvergenceError(
                    f"{reject_label}: grade-0 pair with |product| = {abs(c)} >= 1"
                )
            prefactor *= (ONE + c) if sign_alternating else ONE / (ONE - c)
        else:
            k = 1
            sign = ONE
            while G * k <= D:
                arg[G * k] += sign * c**k / k
                if sign_alternating:
                    sign = -sign
                k += 1
    return prefactor, GradedSeries(arg, D)


def H(a: Specialization, b: Specialization, D: int) -> GradedSeries:
    """H(a;b) = exp(sum_k p_k(a) p_k(b) / k), truncated at D."""
    pairs = [(va * vb, ga + gb) for va, ga in a.effective() for vb, gb in b.effective()]
    pref, arg = _geometric_log_pairs(pairs, D, False, "H")
    return arg.exp() * pref


def E(a: Specialization, b: Specialization, D: int) -> GradedSeries:
    """E(a;b) = exp(sum_k (-1)^(k-1) p_k(a) p_k(b) / k), truncated at D."""
    pairs = [(va * vb, ga + gb) for va, ga in a.effective() for vb, gb in b.effective()]
    pref, arg = _geometric_log_pairs(pairs, D, True, "E")
    return arg.exp() * pref


def G(b: Specialization, D: int) -> GradedSeries:
    """G(b) = exp(-sum_k (p_k(b)^2 - p_{2k}(b)) / 2k), truncated at D.

    For finite variable alphabets this is the product of (1 - y_i y_j)
    over i < j.
    """
    eff = b.effective()
    pairs = [
        (eff[i][0] * eff[j][0], eff[i][1] + eff[j][1])
        for i in range(len(eff))
        for j in range(i + 1, len(eff))
    ]
    pref, arg = _geometric_log_pairs(pairs, D, False, "G")
    return (-arg).exp() * (ONE / pref)


def Gbar(b: Specialization, D: int) -> GradedSeries:
    """Gbar(b) = exp(-sum_k (p_k(b)^2 + p_{2k}(b)) / 2k), truncated at D."""
    eff = b.effective()
    pairs = [
        (eff[i][0] * eff[j][0], eff[i][1] + eff[j][1])
        for i in range(len(eff))
        for j in range(i, len(eff))
    ]
    pref, arg = _geometric_log_pairs(pairs, D, False, "Gbar")
    return (-arg).exp() * (ONE / pref)


def h_numeric(spec: Specialization, z):
    """H(spec; z) for a single numeric (complex) value z: prod 1/(1 - v z).

    Grades are ignored; this is the generating-function evaluation used by
    the numeric correlation kernels.
    """
    out = complex(1.0)
    for v, _g in spec.effective():
        out /= 1.0 - float(v) * z
    return out


def dumps(series: GradedSeries) -> str:
    return json.dumps(series.to_json())
