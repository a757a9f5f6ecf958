"""Littlewood-Richardson and Newell-Littlewood coefficients; down-up Schur
functions with two independent evaluation routes.

LR coefficients come from iterated Pieri expansion combined with the
Jacobi-Trudi alternating sum (exact integers, memoized).  NL coefficients
are the triple sum of LR coefficients.  The down-up functions T_{lam,mu}
are evaluated either through the finite skew-product sum over common
subdiagrams (primary) or through the NL expansion in Schur functions
restricted by the length-triangle bounds (cross route).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Dict, Tuple

from . import partitions as pt
from .partitions import Partition
from .schur import schur_eval, skew_schur_eval
from .series import GradedSeries, Specialization


@lru_cache(maxsize=None)
def _pieri_row(mu: Partition, r: int) -> Tuple[Partition, ...]:
    """Partitions lam with lam/mu a horizontal r-strip (s_mu * h_r expansion)."""
    if r == 0:
        return (mu,)
    out = []
    rows = len(mu) + 1

    def rec(i: int, rem: int, acc):
        if i > rows:
            if rem == 0:
                out.append(pt.partition(acc))
            return
        lo = pt.part(mu, i)
        hi = pt.part(mu, i - 1) if i > 1 else lo + rem
        for v in range(lo, min(hi, lo + rem) + 1):
            nxt = acc + (v,)
            # prefix must stay weakly decreasing
            if len(nxt) > 1 and nxt[-2] < v:
                continue
            rec(i + 1, rem - (v - lo), nxt)

    rec(1, r, ())
    return tuple(out)


@lru_cache(maxsize=None)
def _schur_times_h(mu: Partition, hs: Tuple[int, ...]) -> Tuple[Tuple[Partition, int], ...]:
    """Expansion of s_mu * h_{hs_1} * ... * h_{hs_k} in the Schur basis."""
    state: Dict[Partition, int] = {mu: 1}
    for r in hs:
        new: Dict[Partition, int] = {}
        for p, c in state.items():
            for q in _pieri_row(p, r):
                new[q] = new.get(q, 0) + c
        state = new
    return tuple(sorted(state.items()))


@lru_cache(maxsize=None)
def _schur_product(mu: Partition, nu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """s_mu * s_nu in the Schur basis via the Jacobi-Trudi alternating sum."""
    n = len(nu)
    if n == 0:
        return ((mu, 1),)
    acc: Dict[Partition, int] = {}
    for sigma in permutations(range(n)):
        hs = []
        ok = True
        for i in range(n):
            e = nu[i] + sigma[i] - i
            if e < 0:
                ok = False
                break
            if e > 0:
                hs.append(e)
        if not ok:
            continue
        sign = _perm_sign(sigma)
        for p, c in _schur_times_h(mu, tuple(sorted(hs, reverse=True))):
            acc[p] = acc.get(p, 0) + sign * c
    return tuple(sorted((p, c) for p, c in acc.items() if c != 0))


def _perm_sign(sigma) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu}; zero unless |lam| = |mu| + |nu| and mu, nu <= lam."""
    lam, mu, nu = pt.partition(lam), pt.partition(mu), pt.partition(nu)
    if pt.size(lam) != pt.size(mu) + pt.size(nu):
        return 0
    if not (pt.contains(lam, mu) and pt.contains(lam, nu)):
        return 0
    for p, c in _schur_product(mu, nu):
        if p == lam:
            return c
    return 0


def nl_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Newell-Littlewood d^lam_{mu,nu} via the triple sum of LR coefficients."""
    lam, mu, nu = pt.partition(lam), pt.partition(mu), pt.partition(nu)
    # canonical key: NL is symmetric under all permutations of (lam, mu, nu)
    key = tuple(sorted((lam, mu, nu)))
    return _nl_cached(*key)


@lru_cache(maxsize=None)
def _nl_cached(lam: Partition, mu: Partition, nu: Partition) -> int:
    total = 0
    sl, sm, sn = pt.size(lam), pt.size(mu), pt.size(nu)
    if (sl + sm + sn) % 2:
        return 0
    subs_l = [a for a in pt.enumerate_partitions(sl) if pt.contains(lam, a)]
    subs_m = [g for g in pt.enumerate_partitions(sm) if pt.contains(mu, g)]
    for alpha in subs_l:
        sa = pt.size(alpha)
        for gamma in subs_m:
            sg = pt.size(gamma)
            if sa + sg != sn:
                continue
            c_ag = lr_coefficient(nu, alpha, gamma)
            if c_ag == 0:
                continue
            # beta runs over shapes with c^lam_{alpha, beta} != 0
            sb = sl - sa
            if sb != sm - sg:
                continue
            for beta in pt.partitions_of(sb):
                if not pt.contains(lam, beta):
                    continue
                c_ab = lr_coefficient(lam, alpha, beta)
                if c_ab == 0:
                    continue
                c_gb = lr_coefficient(mu, gamma, beta)
                if c_gb:
                    total += c_ab * c_gb * c_ag
    return total


def nl_triangle_filter(lam: Partition, mu: Partition, max_len: int | None = None):
    """Admissible l(nu) range: |l(lam) - l(mu)| <= l(nu) <= l(lam) + l(mu)."""
    lam, mu = pt.partition(lam), pt.partition(mu)
    lo = abs(len(lam) - len(mu))
    hi = len(lam) + len(mu)
    if max_len is not None:
        hi = min(hi, max_len)
    return range(lo, hi + 1)


def down_up_eval(lam: Partition, mu: Partition, s: Specialization, D: int) -> GradedSeries:
    """T_{lam,mu}(s) via the down-up formula sum_a s_{lam/a}(s) s_{mu/a}(s)."""
    lam, mu = pt.partition(lam), pt.partition(mu)
    cap = pt.intersect(lam, mu)
    acc = GradedSeries.zero(D)
    for alpha in pt.enumerate_partitions(pt.size(cap)):
        if not pt.contains(cap, alpha):
            continue
        a = skew_schur_eval(lam, alpha, s, D)
        if a.is_zero():
            continue
        b = skew_schur_eval(mu, alpha, s, D)
        if not b.is_zero():
            acc = acc + a * b
    return acc


def down_up_eval_nl(lam: Partition, mu: Partition, s: Specialization, D: int) -> GradedSeries:
    """Cross route: T_{lam,mu}(s) = sum_nu d^lam_{mu,nu} s_nu(s).

    nu is restricted by |nu| <= |lam| + |mu| (size parity matching) and the
    length-triangle bounds.
    """
    lam, mu = pt.partition(lam), pt.partition(mu)
    acc = GradedSeries.zero(D)
    lens = set(nl_triangle_filter(lam, mu))
    smax = pt.size(lam) + pt.size(mu)
    for nu in pt.enumerate_partitions(smax):
        if len(nu) not in lens:
            continue
        if (pt.size(nu) + smax) % 2:
            continue
        d = nl_coefficient(lam, mu, nu)
        if d:
            acc = acc + schur_eval(nu, s, D) * d
    return acc
