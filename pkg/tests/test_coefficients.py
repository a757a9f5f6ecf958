"""LR / NL coefficients and down-up Schur functions."""

from itertools import permutations

from sspkit import partitions as pt
from sspkit import coefficients as cf
from sspkit import schur
from sspkit.series import RAT, GradedSeries, Specialization

D = 8
SPEC2 = Specialization.variables(["1/2", "1/3"])


def lr_tableau_count(lam, mu, nu):
    """Oracle: count LR skew tableaux of shape lam/mu and content nu.

    Semistandard filling whose reverse reading word (right-to-left, top to
    bottom) is a lattice word.
    """
    lam, mu, nu = pt.partition(lam), pt.partition(mu), pt.partition(nu)
    if not pt.contains(lam, mu) or pt.size(lam) != pt.size(mu) + pt.size(nu):
        return 0
    nrows = len(lam)
    grid = [[0] * lam[i] for i in range(nrows)]
    # visit cells in reverse reading order (right to left, top to bottom) so
    # the lattice condition can be checked as the word is built
    cells = [
        (i, j)
        for i in range(nrows)
        for j in range(lam[i] - 1, pt.part(mu, i + 1) - 1, -1)
    ]
    count = 0
    nmax = len(nu)

    def rec(k, counts):
        nonlocal count
        if k == len(cells):
            count += 1
            return
        i, j = cells[k]
        for v in range(1, nmax + 1):
            if counts[v - 1] >= pt.part(nu, v):
                continue
            # right neighbor (already filled) must be >= v
            if j + 1 < lam[i] and grid[i][j + 1] < v:
                continue
            # skew cell above (already filled) must be < v
            if i > 0 and j < lam[i - 1] and j >= pt.part(mu, i) and grid[i - 1][j] >= v:
                continue
            # lattice: after placing v, #v's must not exceed #(v-1)'s
            if v > 1 and counts[v - 1] >= counts[v - 2]:
                continue
            grid[i][j] = v
            counts[v - 1] += 1
            rec(k + 1, counts)
            grid[i][j] = 0
            counts[v - 1] -= 1

    rec(0, [0] * nmax)
    return count


def test_lr_examples():
    for lam in pt.enumerate_partitions(4):
        for mu in pt.enumerate_partitions(4):
            assert cf.lr_coefficient(lam, mu, ()) == (1 if lam == mu else 0)
    assert cf.lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert cf.lr_coefficient((2,), (1,), (1,)) == 1
    assert cf.lr_coefficient((1, 1), (1,), (1,)) == 1


def test_lr_vs_tableau_oracle():
    for lam in pt.enumerate_partitions(5):
        for mu in pt.enumerate_partitions(3):
            for nu in pt.partitions_of(pt.size(lam) - pt.size(mu)):
                assert cf.lr_coefficient(lam, mu, nu) == lr_tableau_count(lam, mu, nu), (
                    lam,
                    mu,
                    nu,
                )


def test_lr_defining_equation():
    # sum_lam c^lam_{mu nu} s_lam(s) = s_mu(s) s_nu(s)
    for mu in pt.enumerate_partitions(3):
        for nu in pt.enumerate_partitions(3):
            lhs = GradedSeries.zero(D)
            for lam in pt.partitions_of(pt.size(mu) + pt.size(nu)):
                c = cf.lr_coefficient(lam, mu, nu)
                if c:
                    lhs = lhs + schur.schur_eval(lam, SPEC2, D) * c
            rhs = schur.schur_eval(mu, SPEC2, D) * schur.schur_eval(nu, SPEC2, D)
            assert lhs.same_coeffs(rhs), (mu, nu)


def test_nl_paper_values():
    assert cf.nl_coefficient((2, 1), (3,), (1, 1)) == 1
    assert cf.nl_coefficient((4,), (3,), (3,)) == 1
    for lam in pt.enumerate_partitions(5):
        for mu in pt.enumerate_partitions(5):
            assert cf.nl_coefficient(lam, mu, ()) == (1 if lam == mu else 0)


def test_nl_symmetry_and_triangle():
    parts = pt.enumerate_partitions(5)
    triples = []
    for lam in parts:
        for mu in parts:
            for nu in parts:
                if pt.size(lam) + pt.size(mu) + pt.size(nu) <= 5:
                    triples.append((lam, mu, nu))
    for lam, mu, nu in triples:
        d = cf.nl_coefficient(lam, mu, nu)
        for p in permutations((lam, mu, nu)):
            assert cf.nl_coefficient(*p) == d
        ll, lm, ln = len(lam), len(mu), len(nu)
        if not (abs(ll - lm) <= ln <= ll + lm):
            assert d == 0, (lam, mu, nu)


def test_triangle_filter_examples():
    assert list(cf.nl_triangle_filter((), ())) == [0]
    assert list(cf.nl_triangle_filter((1, 1, 1), (1,))) == [2, 3, 4]
    assert list(cf.nl_triangle_filter((3,), (1, 1))) == [1, 2, 3]


def test_down_up_examples():
    a = Specialization.variables(["1/2"])
    t = cf.down_up_eval((1,), (1,), a, D)
    # 1 + a^2 t^2
    assert t[0] == 1 and t[2] == RAT(1, 4) and t[1] == 0
    for lam in pt.enumerate_partitions(4):
        got = cf.down_up_eval(lam, (), SPEC2, D)
        assert got.same_coeffs(schur.schur_eval(lam, SPEC2, D))


def test_down_up_symmetry_and_routes():
    for lam in pt.enumerate_partitions(4):
        for mu in pt.enumerate_partitions(4):
            a = cf.down_up_eval(lam, mu, SPEC2, D)
            b = cf.down_up_eval(mu, lam, SPEC2, D)
            c = cf.down_up_eval_nl(lam, mu, SPEC2, D)
            assert a.same_coeffs(b), (lam, mu)
            assert a.same_coeffs(c), (lam, mu)


def test_down_up_length_vanishing():
    one_var = Specialization.variables(["1/2"])
    for lam in pt.enumerate_partitions(4):
        for mu in pt.enumerate_partitions(4):
            if abs(len(lam) - len(mu)) > 1:
                assert cf.down_up_eval(lam, mu, one_var, D).is_zero(), (lam, mu)


def test_nl_defining_equation():
    # sum_lam d^lam_{mu nu} SP_lam(s) = SP_mu(s) SP_nu(s), truncated at D.
    # The sum over lam is finite by the triangle lemma + size parity.
    for mu in pt.enumerate_partitions(3):
        for nu in pt.enumerate_partitions(3):
            smax = pt.size(mu) + pt.size(nu)
            lhs = GradedSeries.zero(D)
            for lam in pt.enumerate_partitions(smax):
                d = cf.nl_coefficient(lam, mu, nu)
                if d:
                    lhs = lhs + schur.SP_eval(lam, SPEC2, D) * d
            rhs = schur.SP_eval(mu, SPEC2, D) * schur.SP_eval(nu, SPEC2, D)
            assert lhs.same_coeffs(rhs), (mu, nu)


def test_hall_involution_duality():
    # T_{lam', mu'}(s) equals the down-up sum with conjugated skew shapes
    for lam in pt.enumerate_partitions(4):
        for mu in pt.enumerate_partitions(3):
            lhs = cf.down_up_eval(pt.conjugate(lam), pt.conjugate(mu), SPEC2, D)
            cap = pt.intersect(lam, mu)
            rhs = GradedSeries.zero(D)
            for alpha in pt.enumerate_partitions(pt.size(cap)):
                if not pt.contains(cap, alpha):
                    continue
                rhs = rhs + schur.skew_schur_eval(
                    pt.conjugate(lam), pt.conjugate(alpha), SPEC2, D
                ) * schur.skew_schur_eval(pt.conjugate(mu), pt.conjugate(alpha), SPEC2, D)
            assert lhs.same_coeffs(rhs)
