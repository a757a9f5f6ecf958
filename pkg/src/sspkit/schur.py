"""Schur, skew Schur and (universal) symplectic characters at specializations.

Everything is exact: inputs are rational specializations, outputs are
graded series (or plain rationals for the Laurent-polynomial evaluations).
Two independent routes exist for each nontrivial object and are
cross-checked in the test suite:

* Schur / skew Schur: Jacobi-Trudi determinants over complete homogeneous
  values (primary) vs semistandard-tableau enumeration (oracle).
* sp polynomials: Weyl-type determinant (primary) vs symplectic-tableau
  enumeration (oracle and fallback for degenerate denominators).
* Universal symplectic SP: Jacobi-Trudi-type determinant (primary) vs the
  signed skew expansion over Frobenius-staircase partitions.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from . import partitions as pt
from .partitions import Partition
from .series import ONE, RAT, ZERO, GradedSeries, Specialization, power_sum
from .tableaux import enumerate_symplectic_tableaux


class DegenerateDenominator(ZeroDivisionError):
    """Weyl denominator vanished; caller should use the tableau route."""


# ---------------------------------------------------------------------------
# complete homogeneous values

_h_cache: Dict[Tuple[Specialization, int], List[GradedSeries]] = {}


def complete_homogeneous(s: Specialization, m: int, D: int) -> GradedSeries:
    """h_m at a specialization; h_0 = 1 and h_m = 0 for m < 0."""
    if m < 0:
        return GradedSeries.zero(D)
    if m == 0:
        return GradedSeries.constant(1, D)
    key = (s, D)
    hs = _h_cache.get(key)
    if hs is None:
        hs = [GradedSeries.constant(1, D)]
        _h_cache[key] = hs
    while len(hs) <= m:
        # Newton: m h_m = sum_{k=1}^{m} p_k h_{m-k}
        mm = len(hs)
        acc = GradedSeries.zero(D)
        for k in range(1, mm + 1):
            pk = power_sum(s, k, D)
            if not pk.is_zero():
                acc = acc + pk * hs[mm - k]
        hs.append(acc * RAT(1, mm))
    return hs[m]


def _det_series(rows: List[List[GradedSeries]], D: int) -> GradedSeries:
    """Exact determinant by cofactor expansion with column-subset memoization.

    Division-free, so truncation (a ring with zero divisors) is safe.
    """
    n = len(rows)
    if n == 0:
        return GradedSeries.constant(1, D)
    memo: Dict[Tuple[int, ...], GradedSeries] = {}

    def minor(r: int, cols: Tuple[int, ...]) -> GradedSeries:
        if not cols:
            return GradedSeries.constant(1, D)
        got = memo.get(cols)
        if got is not None:
            return got
        acc = GradedSeries.zero(D)
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


_skew_cache: Dict[Tuple, GradedSeries] = {}


def schur_eval(lam: Partition, s: Specialization, D: int) -> GradedSeries:
    """s_lambda(s) via the Jacobi-Trudi determinant det[h_{lam_i + j - i}]."""
    return skew_schur_eval(lam, (), s, D)


def skew_schur_eval(lam: Partition, mu: Partition, s: Specialization, D: int) -> GradedSeries:
    """s_{lam/mu}(s) via det[h_{lam_i - mu_j - i + j}]; zero unless mu <= lam."""
    lam = pt.partition(lam)
    mu = pt.partition(mu)
    key = (lam, mu, s, D)
    got = _skew_cache.get(key)
    if got is not None:
        return got
    if not pt.contains(lam, mu):
        out = GradedSeries.zero(D)
    else:
        n = len(lam)
        if n == 0:
            out = GradedSeries.constant(1, D)
        else:
            rows = [
                [
                    complete_homogeneous(s, lam[i] - pt.part(mu, j + 1) - i + j, D)
                    for j in range(n)
                ]
                for i in range(n)
            ]
            out = _det_series(rows, D)
    _skew_cache[key] = out
    return out


# ---------------------------------------------------------------------------
# symplectic Schur polynomials (Laurent evaluations)


def _det_rational(m: List[List]) -> object:
    """Exact determinant of a rational matrix by Gaussian elimination."""
    n = len(m)
    a = [row[:] for row in m]
    det = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = ONE / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def sp_tableau_eval(lam: Partition, x: Sequence) -> object:
    """Generating-function route: sum over SpTab_n(lam) of x^wt(P)."""
    lam = pt.partition(lam)
    xs = [RAT(str(v)) if isinstance(v, str) else RAT(v) for v in x]
    n = len(xs)
    if len(lam) > n:
        return ZERO
    total = ZERO
    for tab in enumerate_symplectic_tableaux(lam, n):
        w = tab.weight()
        term = ONE
        for xi, wi in zip(xs, w):
            term *= xi**wi
        total += term
    return total


def sp_poly_eval(lam: Partition, x: Sequence) -> object:
    """sp_lambda(x^+-) exactly, via the Weyl-type determinant.

    Falls back to tableau enumeration when the denominator degenerates
    (repeated x_i, x_i = +-1, or x_i x_j = 1).
    """
    lam = pt.partition(lam)
    xs = [RAT(str(v)) if isinstance(v, str) else RAT(v) for v in x]
    n = len(xs)
    if len(lam) > n:
        raise ValueError("sp_lambda requires l(lambda) <= n")
    if n == 0:
        return ONE
    denom = ONE
    for i in range(n):
        for j in range(i + 1, n):
            denom *= (xs[i] - xs[j]) * (ONE - ONE / (xs[i] * xs[j]))
    for xi in xs:
        denom *= xi - ONE / xi
    if denom == 0:
        return sp_tableau_eval(lam, xs)
    rows = []
    for i in range(n):
        row = []
        for j in range(1, n + 1):
            e = pt.part(lam, j) + n - j + 1
            row.append(xs[i] ** e - xs[i] ** (-e))
        rows.append(row)
    return _det_rational(rows) / denom


# ---------------------------------------------------------------------------
# universal symplectic characters


_sp_cache: Dict[Tuple, GradedSeries] = {}


def SP_eval(lam: Partition, s: Specialization, D: int) -> GradedSeries:
    """SP_lambda(s) via the Jacobi-Trudi-type determinant.

    Row i (1-based), column 1 holds h_{lam_i - i + 1}; column j >= 2 holds
    h_{lam_i - i + j} + h_{lam_i - i - j + 2}.
    """
    lam = pt.partition(lam)
    key = (lam, s, D)
    got = _sp_cache.get(key)
    if got is not None:
        return got
    ell = len(lam)
    if ell == 0:
        return GradedSeries.constant(1, D)
    rows = []
    for i in range(1, ell + 1):
        base = lam[i - 1] - i
        row = [complete_homogeneous(s, base + 1, D)]
        for j in range(2, ell + 1):
            row.append(
                complete_homogeneous(s, base + j, D)
                + complete_homogeneous(s, base - j + 2, D)
            )
        rows.append(row)
    out = _det_series(rows, D)
    _sp_cache[key] = out
    return out


def SP_frobenius_eval(lam: Partition, s: Specialization, D: int) -> GradedSeries:
    """Cross-check route: signed skew expansion over Frobenius-staircase shapes."""
    lam = pt.partition(lam)
    acc = GradedSeries.zero(D)
    for alpha in pt.enumerate_frobenius_staircase(pt.size(lam)):
        if not pt.contains(lam, alpha):
            continue
        term = skew_schur_eval(lam, alpha, s, D)
        if pt.size(alpha) % 4 == 2:
            term = -term
        acc = acc + term
    return acc


def SP_laurent_consistency(lam: Partition, x: Sequence) -> bool:
    """Check SP at the Laurent specialization of x equals sp_lambda(x^+-)."""
    lam = pt.partition(lam)
    xs = [RAT(str(v)) if isinstance(v, str) else RAT(v) for v in x]
    if len(lam) > len(xs):
        raise ValueError("consistency is only asserted for l(lambda) <= n")
    spec = Specialization.laurent(xs, grade=0)
    lhs = SP_eval(lam, spec, 0)[0]
    rhs = sp_poly_eval(lam, xs)
    return lhs == rhs


def SP_laurent_value(lam: Partition, x: Sequence) -> object:
    """Raw SP determinant value at the Laurent specialization of x.

    No length restriction; for l(lambda) > n this is the raw projection,
    which may be 0 or (a sign times) a shorter sp polynomial.
    """
    lam = pt.partition(lam)
    xs = [RAT(str(v)) if isinstance(v, str) else RAT(v) for v in x]
    spec = Specialization.laurent(xs, grade=0)
    return SP_eval(lam, spec, 0)[0]
