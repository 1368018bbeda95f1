"""Matrix models of the type-A Iwahori-Hecke algebra at q = e^h.

A model is a family of 2x2 blocks M_d (d >= 2), each with trace q - q^{-1}
and determinant -1, hence of the form

    [[a_d, b_d], [(1 + a_d a'_d)/b_d, a'_d]],   a'_d = q - q^{-1} - a_d,

with the forced diagonal a_d = (1-q^2)/(q(q^{2d}-1)) (equivalently
-q^{-d}/[d]_q) satisfying a_{d+1}(q - a_d) = a_d q^{-1}.  The generator
sigma_r acts on a standard tableau by q (same column), -q^{-1} (same
line), or by M_d on the plane of an adjacent transposition pair with
axial distance d; every tableau is a delta_r eigenvector with eigenvalue
q^{2 c_r}.

Three kinds are supported: the block derived from an associator through
the infinitesimal construction

    Q = Phi(2h M^1_d, h eta_d),   2 M_d = (q - q^{-1}) + (q + q^{-1}) Q M^1_d Q^{-1},

the unitary closed form (1/[d]) [[-q^{-d}, s], [s, q^d]] with the formal
square root s^2 = [d+1][d-1], and custom b-sequences.
"""

from __future__ import annotations

from fractions import Fraction

from .braidreps import BraidRep, InfinitesimalRep
from .hmatrix import HMatrix, evaluate_series
from .linalg import mat_mul
from .scalar import ScalarSeries, scalar_div
from .symcoef import SymRing
from .tableaux import Partition, axial_distance, tableaux

DEFAULT_MAXDEG = 7


def q_series(maxdeg=DEFAULT_MAXDEG, ring=None, m=1) -> ScalarSeries:
    """q^m = e^{mh} as an exact truncated series."""
    return ScalarSeries.exp_multiple(m, maxdeg, ring)


def q_integer(n, maxdeg=DEFAULT_MAXDEG, ring=None) -> ScalarSeries:
    """[n]_q = (q^n - q^{-n})/(q - q^{-1}); known order drops by one."""
    num = q_series(maxdeg, ring, n) - q_series(maxdeg, ring, -n)
    den = q_series(maxdeg, ring, 1) - q_series(maxdeg, ring, -1)
    return scalar_div(num, den)


def a_entry(d, maxdeg=DEFAULT_MAXDEG, ring=None) -> ScalarSeries:
    """a_d = (1 - q^2)/(q (q^{2d} - 1))."""
    one = ScalarSeries.one(maxdeg, ring)
    num = one - q_series(maxdeg, ring, 2)
    den = q_series(maxdeg, ring, 1) * (q_series(maxdeg, ring, 2 * d) - one)
    return scalar_div(num, den)


def a_entry_prime(d, maxdeg=DEFAULT_MAXDEG, ring=None) -> ScalarSeries:
    """a'_d = q^{2d-1}(q^2 - 1)/(q^{2d} - 1)."""
    one = ScalarSeries.one(maxdeg, ring)
    num = q_series(maxdeg, ring, 2 * d - 1) * (q_series(maxdeg, ring, 2) - one)
    return scalar_div(num, q_series(maxdeg, ring, 2 * d) - one)


def semi_normal_block(d):
    """The q=1 semi-normal reflection (1/d) [[-1, d+1], [d-1, 1]]."""
    d = Fraction(d)
    return [[-1 / d, (d + 1) / d], [(d - 1) / d, 1 / d]]


def unitary_ring(dmax) -> SymRing:
    """Q with formal square roots s_d of d^2 - 1 for 2 <= d <= dmax."""
    names = tuple("s%d" % d for d in range(2, dmax + 1))
    return SymRing(names, {("s%d" % d): Fraction(d * d - 1) for d in range(2, dmax + 1)})


class MatrixModel:
    """A block family; kind 'semi' (from an associator), 'unitary', or 'custom'."""

    def __init__(self, kind, phi=None, maxdeg=None, dmax=8, b_sequence=None):
        if kind not in ("semi", "unitary", "custom"):
            raise ValueError("unknown model kind %r" % kind)
        self.kind = kind
        self.phi = phi
        if kind == "semi":
            if phi is None:
                raise ValueError("the semi-normal model needs an associator candidate")
            self.maxdeg = phi.maxdeg if maxdeg is None else maxdeg
            self.ring = phi.series.ring
        elif kind == "unitary":
            self.maxdeg = DEFAULT_MAXDEG if maxdeg is None else maxdeg
            self.ring = unitary_ring(dmax)
        else:
            self.maxdeg = DEFAULT_MAXDEG if maxdeg is None else maxdeg
            self.ring = None
            self.b_sequence = dict(b_sequence or {})
        self._blocks = {}

    def q(self, m=1) -> ScalarSeries:
        ko = self.phi.known_order if self.kind == "semi" else None
        return ScalarSeries.exp_multiple(m, self.maxdeg, self.ring, ko)

    def block(self, d) -> HMatrix:
        got = self._blocks.get(d)
        if got is None:
            got = self._build_block(d)
            trace = got.entry(0, 0) + got.entry(1, 1)
            if not trace.equal_through(self.q(1) - self.q(-1)):
                raise ValueError("block trace is not q - q^{-1}")
            det = got.entry(0, 0) * got.entry(1, 1) - got.entry(0, 1) * got.entry(1, 0)
            minus_one = -ScalarSeries.one(self.maxdeg, self.ring, det.known_order)
            if not det.equal_through(minus_one):
                raise ValueError("block determinant is not -1")
            if not got.entry(0, 1).coefficient(0):
                raise ValueError("b_d is not invertible")
            self._blocks[d] = got
        return got

    def b(self, d) -> ScalarSeries:
        return self.block(d).entry(0, 1)

    def _build_block(self, d) -> HMatrix:
        if self.kind == "semi":
            return hecke_block_from_candidate(self.phi, d, self.maxdeg)
        if self.kind == "unitary":
            dq = q_integer(d, self.maxdeg, self.ring)
            s = ScalarSeries.const(self.ring.symbol("s%d" % d), self.maxdeg, self.ring)
            # sqrt([d+1][d-1]) = s_d * sqrt([d+1][d-1]/(d^2-1)), rational series part
            prod = q_integer(d + 1, self.maxdeg, self.ring) * q_integer(d - 1, self.maxdeg, self.ring)
            unit_part = scalar_div(prod, ScalarSeries.const(d * d - 1, self.maxdeg, self.ring,
                                                            prod.known_order))
            root = _scalar_sqrt_unit(unit_part)
            off = s * root
            rows = [[scalar_div(-self.q(-d), dq), scalar_div(off, dq)],
                    [scalar_div(off, dq), scalar_div(self.q(d), dq)]]
            return HMatrix(rows)
        b = self.b_sequence.get(d)
        if b is None:
            raise ValueError("custom model has no b_%d" % d)
        a = a_entry(d, self.maxdeg, self.ring)
        ap = a_entry_prime(d, self.maxdeg, self.ring)
        one = ScalarSeries.one(self.maxdeg, self.ring, a.known_order)
        return HMatrix([[a, b], [scalar_div(one + a * ap, b), ap]])


def _scalar_sqrt_unit(s: ScalarSeries) -> ScalarSeries:
    from .scalar import scalar_sqrt
    return scalar_sqrt(s)


def hecke_block_from_candidate(phi, d, maxdeg=None) -> HMatrix:
    """The 2x2 image of sigma_r on an axial-distance-d pair.

    Phi(2h M^1, h eta) . M^1 exp(h M^1) . Phi(h eta, 2h M^1) with
    eta = diag(d, -d) and M^1 the semi-normal reflection.
    """
    series = phi.series
    maxdeg = series.maxdeg if maxdeg is None else maxdeg
    ring = series.ring
    ko = series.known_order
    m1 = semi_normal_block(d)
    h = ScalarSeries.gen(maxdeg, ring, ko)
    u = (2 * ScalarSeries.one(maxdeg, ring, ko)) * (h * HMatrix.from_const(m1, maxdeg, ring, ko))
    eta = HMatrix.from_const([[Fraction(d), 0], [0, Fraction(-d)]], maxdeg, ring, ko)
    v = h * eta
    left = evaluate_series(series, {"x": u, "y": v})
    right = evaluate_series(series, {"x": v, "y": u})
    m1h = HMatrix.from_const(m1, maxdeg, ring, ko)
    mid = m1h * (h * m1h).exp()
    lam = phi.lam
    if lam != 1:
        # exp(lam t/2) with t acting by 2 M^1: replace exp(h M^1)
        mid = m1h * ((Fraction(lam) * ScalarSeries.one(maxdeg, ring, ko)) * (h * m1h)).exp()
    return left * mid * right


def b_semi(phi, d, maxdeg=None) -> ScalarSeries:
    """The b_d scalar of the semi-normal model attached to an associator."""
    return hecke_block_from_candidate(phi, d, maxdeg).entry(0, 1)


def rep_build(shape: Partition, model: MatrixModel) -> BraidRep:
    """The braid representation on standard tableaux of one shape."""
    n = shape.n
    if n < 2:
        raise ValueError("need at least two strands")
    tabs = tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    N = len(tabs)
    maxdeg, ring = model.maxdeg, model.ring
    qq = model.q(1)
    qinv = model.q(-1)
    ko = qq.known_order
    sigmas = []
    for r in range(1, n):
        rows = [[ScalarSeries.zero(maxdeg, ring, ko) for _ in range(N)] for _ in range(N)]
        for t in tabs:
            i = index[t]
            if t.col(r) == t.col(r + 1):
                rows[i][i] = rows[i][i] + qq
            elif t.line(r) == t.line(r + 1):
                rows[i][i] = rows[i][i] - qinv
            else:
                other = t.swap_adjacent(r)
                j = index[other]
                if j < i:
                    continue  # handled from the smaller tableau
                d = axial_distance(t, r)
                block = model.block(d)
                rows[i][i] = rows[i][i] + block.entry(0, 0)
                rows[i][j] = rows[i][j] + block.entry(0, 1)
                rows[j][i] = rows[j][i] + block.entry(1, 0)
                rows[j][j] = rows[j][j] + block.entry(1, 1)
        sigmas.append(HMatrix(rows))
    rep = BraidRep(n, sigmas, provenance="rep_build(%r, %s)" % (shape, model.kind))
    return rep


def delta_eigenvalues_ok(rep: BraidRep, shape: Partition, model: MatrixModel) -> bool:
    """delta_r acts diagonally with eigenvalue q^{2 c_r(T)} on every tableau."""
    tabs = tableaux(shape)
    for r in range(2, shape.n + 1):
        image = rep.delta(r)
        for i, t in enumerate(tabs):
            expect = model.q(2 * t.content(r))
            for j in range(len(tabs)):
                want = expect if i == j else ScalarSeries.zero(model.maxdeg, model.ring,
                                                               expect.known_order)
                if not image.entry(i, j).equal_through(want):
                    return False
    return True


def unitarity_check(rep: BraidRep) -> bool:
    """Every generator image M satisfies transpose(eps(M)) M = 1."""
    for i in range(1, rep.n):
        m = rep.sigma(i)
        if not (m.eps().transpose() * m).is_identity():
            return False
    return True


def hecke_infinitesimal(shape: Partition) -> InfinitesimalRep:
    """The infinitesimal representation with t_ij = 2 rho((i j)) on the
    semi-normal tableau basis of one shape."""
    tabs = tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    N = len(tabs)
    n = shape.n
    s_mats = []
    for r in range(1, n):
        m = [[Fraction(0)] * N for _ in range(N)]
        for t in tabs:
            i = index[t]
            if t.col(r) == t.col(r + 1):
                m[i][i] += 1
            elif t.line(r) == t.line(r + 1):
                m[i][i] -= 1
            else:
                other = t.swap_adjacent(r)
                j = index[other]
                if j < i:
                    continue
                d = axial_distance(t, r)
                blk = semi_normal_block(d)
                m[i][i] += blk[0][0]
                m[i][j] += blk[0][1]
                m[j][i] += blk[1][0]
                m[j][j] += blk[1][1]
        s_mats.append(m)
    # transpositions (i j) via conjugation words
    def transposition_matrix(i, j):
        if j == i + 1:
            return s_mats[i - 1]
        inner = transposition_matrix(i, j - 1)
        return mat_mul(s_mats[j - 2], mat_mul(inner, s_mats[j - 2]))

    t_mats = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            tm = transposition_matrix(i, j)
            t_mats[(i, j)] = [[2 * v for v in row] for row in tm]
    return InfinitesimalRep(n, s_mats, t_mats)
