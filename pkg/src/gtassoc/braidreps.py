"""Representations of the infinitesimal braid algebra and the functor to
braid-group representations over k[[h]].

An InfinitesimalRep carries matrices for the symmetric-group generators s_i
and the generators t_ij; validity means the s-relations, the holonomy
relations on the t_ij, and the equivariance s t_ij s^{-1} = t_{s(i)s(j)}.

The functor substitutes h t for every t and sends

    sigma_i -> Phi(h t_{i,i+1}, h Y_i) . s_i . exp(lam h t_{i,i+1}/2)
               . Phi(h Y_i, h t_{i,i+1}),

so the image of delta_r is exp(lam h Y_r) and every pure braid generator
lands in 1 + h M_N.  The filtered group twists a representation through
sigma_r -> f(delta_r, sigma_r^2)^{-1} sigma_r f(delta_r, sigma_r^2), and a
diagonal conjugator between a representation and its twist is read off one
matrix row of a full-support probe element.
"""

from __future__ import annotations

from fractions import Fraction

from .braids import BraidWord
from .hmatrix import HMatrix, evaluate_series
from .linalg import mat_eq, mat_identity, mat_mul
from .ncseries import NCSeries
from .scalar import ScalarSeries, scalar_div
from .symcoef import as_fraction


class InfinitesimalRep:
    """Matrices for s_1..s_{n-1} and t_ij over an exact coefficient ring."""

    def __init__(self, n, s_matrices, t_matrices, ring=None, check=True):
        self.n = n
        self.ring = ring
        self.N = len(s_matrices[0])
        self.s = {i + 1: s_matrices[i] for i in range(len(s_matrices))}
        self.t = dict(t_matrices)
        for (i, j) in list(self.t):
            if i > j:
                self.t[(j, i)] = self.t.pop((i, j))
        if check:
            problems = self.validate()
            if problems:
                raise ValueError("invalid infinitesimal representation: %s" % problems[0])

    def perm_matrix(self, i):
        return self.s[i]

    def t_matrix(self, i, j):
        if i > j:
            i, j = j, i
        return self.t[(i, j)]

    def y_matrix(self, r):
        out = [[Fraction(0)] * self.N for _ in range(self.N)]
        for i in range(1, r):
            tm = self.t_matrix(i, r)
            out = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(out, tm)]
        return out

    def validate(self):
        problems = []
        ident = mat_identity(self.N)

        def comm(a, b):
            return [[x - y for x, y in zip(ra, rb)]
                    for ra, rb in zip(mat_mul(a, b), mat_mul(b, a))]

        for i in range(1, self.n):
            if not mat_eq(mat_mul(self.s[i], self.s[i]), ident):
                problems.append("s_%d is not an involution" % i)
        for i in range(1, self.n - 1):
            lhs = mat_mul(self.s[i], mat_mul(self.s[i + 1], self.s[i]))
            rhs = mat_mul(self.s[i + 1], mat_mul(self.s[i], self.s[i + 1]))
            if not mat_eq(lhs, rhs):
                problems.append("braid relation fails for s_%d" % i)
        for i in range(1, self.n):
            for j in range(i + 2, self.n):
                if not mat_eq(mat_mul(self.s[i], self.s[j]), mat_mul(self.s[j], self.s[i])):
                    problems.append("s_%d and s_%d do not commute" % (i, j))
        # holonomy relations
        pairs = [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]
        for (i, j) in pairs:
            for (k, l) in pairs:
                if len({i, j, k, l}) == 4:
                    z = comm(self.t_matrix(i, j), self.t_matrix(k, l))
                    if any(any(v for v in row) for row in z):
                        problems.append("[t_%d%d, t_%d%d] != 0" % (i, j, k, l))
        for (i, j) in pairs:
            for k in range(1, self.n + 1):
                if k in (i, j):
                    continue
                tik = self.t_matrix(min(i, k), max(i, k))
                tkj = self.t_matrix(min(k, j), max(k, j))
                s = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(tik, tkj)]
                z = comm(self.t_matrix(i, j), s)
                if any(any(v for v in row) for row in z):
                    problems.append("[t_%d%d, t_%d%d + t_%d%d] != 0" % (i, j, i, k, k, j))
        # equivariance under adjacent transpositions
        for r in range(1, self.n):
            perm = list(range(1, self.n + 1))
            perm[r - 1], perm[r] = perm[r], perm[r - 1]
            for (i, j) in pairs:
                ii, jj = perm[i - 1], perm[j - 1]
                lhs = mat_mul(self.s[r], mat_mul(self.t_matrix(i, j), self.s[r]))
                if not mat_eq(lhs, self.t_matrix(min(ii, jj), max(ii, jj))):
                    problems.append("equivariance fails: s_%d . t_%d%d" % (r, i, j))
        return problems


class BraidRep:
    """Images of the Artin generators as invertible matrices over k[[h]]."""

    def __init__(self, n, sigmas, provenance=""):
        self.n = n
        self.sigma_images = {i + 1: m for i, m in enumerate(sigmas)}
        self.N = sigmas[0].n
        self.maxdeg = sigmas[0].maxdeg
        self.known_order = min(m.known_order for m in sigmas)
        self.ring = sigmas[0].ring
        self.provenance = provenance
        self._inverses = {}
        self._words = {}

    def sigma(self, i) -> HMatrix:
        return self.sigma_images[i]

    def sigma_inv(self, i) -> HMatrix:
        got = self._inverses.get(i)
        if got is None:
            got = self.sigma_images[i].inverse()
            self._inverses[i] = got
        return got

    def image(self, word) -> HMatrix:
        letters = word.letters if isinstance(word, BraidWord) else tuple(word)
        got = self._words.get(letters)
        if got is not None:
            return got
        out = HMatrix.identity(self.N, self.maxdeg, self.ring, self.known_order)
        for v in letters:
            out = out * (self.sigma(v) if v > 0 else self.sigma_inv(-v))
        self._words[letters] = out
        return out

    def delta(self, r) -> HMatrix:
        return self.image(BraidWord.delta(self.n, r))

    def promote(self, ring):
        if ring == self.ring:
            return self
        return BraidRep(self.n, [self.sigma_images[i].promote(ring)
                                 for i in range(1, self.n)], self.provenance)

    def braid_relations_ok(self, order=None) -> bool:
        for i in range(1, self.n - 1):
            lhs = self.sigma(i) * self.sigma(i + 1) * self.sigma(i)
            rhs = self.sigma(i + 1) * self.sigma(i) * self.sigma(i + 1)
            if not lhs.equal_through(rhs, order):
                return False
        for i in range(1, self.n):
            for j in range(i + 2, self.n):
                if not (self.sigma(i) * self.sigma(j)).equal_through(
                        self.sigma(j) * self.sigma(i), order):
                    return False
        return True

    def pure_braid_depth_ok(self) -> bool:
        """xi_ij in 1 + h M and pairwise commutators in 1 + h^2 M."""
        xis = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                xis.append(self.image(BraidWord.xi(self.n, i, j)))
        one = HMatrix.identity(self.N, self.maxdeg, self.ring, self.known_order)
        for m in xis:
            d = m - one
            if not (d.h_order() is None or d.h_order() >= 1):
                return False
        for a in range(len(xis)):
            for b in range(a + 1, len(xis)):
                comm = xis[a] * xis[b] * xis[a].inverse() * xis[b].inverse() - one
                if not (comm.h_order() is None or comm.h_order() >= 2):
                    return False
        return True


def phat(rho: InfinitesimalRep, phi, lam=None) -> BraidRep:
    """The braid representation attached to rho by an associator candidate."""
    series = phi.series
    lam = phi.lam if lam is None else as_fraction(lam)
    maxdeg = series.maxdeg
    ring = series.ring
    if ring != rho.ring and rho.ring is not None:
        raise ValueError("coefficient ring mismatch between rho and the associator")
    sigmas = []
    h = ScalarSeries.gen(maxdeg, ring, series.known_order)
    for i in range(1, rho.n):
        t_mat = HMatrix.from_const(rho.t_matrix(i, i + 1), maxdeg, ring, series.known_order)
        y_mat = HMatrix.from_const(rho.y_matrix(i), maxdeg, ring, series.known_order)
        u = h * t_mat
        v = h * y_mat
        left = evaluate_series(series, {"x": u, "y": v})
        right = evaluate_series(series, {"x": v, "y": u})
        s_mat = HMatrix.from_const(rho.perm_matrix(i), maxdeg, ring, series.known_order)
        mid = (Fraction(lam, 2) * ScalarSeries.one(maxdeg, ring, series.known_order)) * u
        sigmas.append(left * s_mat * mid.exp() * right)
    return BraidRep(rho.n, sigmas, provenance="phat(lambda=%s)" % lam)


def substitute_at_group_images(series: NCSeries, first: HMatrix, second: HMatrix) -> HMatrix:
    """series(A, B) for group-like matrix arguments, via their logarithms."""
    return evaluate_series(series, {"x": first.log(), "y": second.log()})


def gt_act_on_rep(rep: BraidRep, g) -> BraidRep:
    """Twist: sigma_1 fixed, sigma_r conjugated by g(delta_r, sigma_r^2)."""
    series = g.series if hasattr(g, "series") else g
    ring = series.ring
    rep = rep.promote(ring) if ring != rep.ring else rep
    sigmas = [rep.sigma(1)]
    for r in range(2, rep.n):
        delta = rep.delta(r)
        sq = rep.sigma(r) * rep.sigma(r)
        conj = substitute_at_group_images(series, delta, sq)
        sigmas.append(conj.inverse() * rep.sigma(r) * conj)
    return BraidRep(rep.n, sigmas, provenance=rep.provenance + "+twist")


DEFAULT_PROBE_FALLBACKS = 4


def default_probes(n):
    """Deterministic probe combinations: formal sums of sigma_1...sigma_k words.

    A probe is a list of (coefficient, letters) pairs; the first candidate is
    1 + R(s1) + R(s1 s2) + ... and the fallbacks reweight the same words.
    """
    windows = [tuple(range(1, k + 1)) for k in range(0, n)]
    yield [(Fraction(1), w) for w in windows]
    for k in range(2, 2 + DEFAULT_PROBE_FALLBACKS):
        yield [(Fraction(k) ** len(w), w) for w in windows]


def apply_probe(rep: BraidRep, probe) -> HMatrix:
    out = HMatrix.zero(rep.N, rep.maxdeg, rep.ring, rep.known_order)
    unit = ScalarSeries.one(rep.maxdeg, rep.ring, rep.known_order)
    for coeff, letters in probe:
        out = out + (coeff * unit) * rep.image(tuple(letters))
    return out


def diagonal_conjugator(rep: BraidRep, twisted: BraidRep, probe=None):
    """Diagonal entries (1, a_2, ..., a_N) conjugating the twist back.

    Both representations must agree on every delta_r (those generate the
    diagonal); a_j is the ratio of first-row entries of the probe images,
    and the conjugation property is verified on all generators.
    """
    for r in range(2, rep.n + 1):
        if not rep.delta(r).equal_through(twisted.delta(r)):
            raise ValueError("representations disagree on delta_%d" % r)
    candidates = [probe] if probe is not None else default_probes(rep.n)
    last_error = None
    for pr in candidates:
        x = apply_probe(rep, pr)
        x_row = [x.entry(0, j) for j in range(rep.N)]
        if any(e.order() is None for e in x_row):
            last_error = ValueError("probe row has a zero entry; supply a better probe")
            continue
        if len({e.order() for e in x_row}) != 1:
            last_error = ValueError("probe row entries have unequal h-orders")
            continue
        y = apply_probe(twisted, pr)
        diag = []
        ok = True
        for j in range(rep.N):
            yj, xj = y.entry(0, j), x_row[j]
            if yj.order() is not None and yj.order() < xj.order():
                ok = False
                last_error = ValueError("probe ratio leaves the power series ring")
                break
            diag.append(scalar_div(yj, xj))
        if not ok:
            continue
        if _verify_conjugation(rep, twisted, diag):
            return diag
        last_error = ValueError("conjugation verification failed")
    raise last_error if last_error is not None else ValueError("no usable probe")


def _verify_conjugation(rep: BraidRep, twisted: BraidRep, diag):
    for i in range(1, rep.n):
        lhs_rows = []
        rhs_rows = []
        a = rep.sigma(i)
        b = twisted.sigma(i)
        for r in range(rep.N):
            lhs_rows.append([diag[r] * b.entry(r, c) for c in range(rep.N)])
            rhs_rows.append([a.entry(r, c) * diag[c] for c in range(rep.N)])
        if not HMatrix(lhs_rows).equal_through(HMatrix(rhs_rows)):
            return False
    return True


def b3_example(v) -> InfinitesimalRep:
    """The generic irreducible 3-dimensional representation of the 3-strand
    infinitesimal braid algebra; v must be an exact rational outside {-3,0,3}.
    """
    v = as_fraction(v)
    if v in (-3, 0, 3):
        raise ValueError("degenerate parameter v = %s" % v)
    s1 = [[Fraction(1), 0, 0], [0, Fraction(1), 0], [0, 0, Fraction(-1)]]
    q = Fraction(1, 4) / v
    s2 = [
        [q * (v - 3), q * 3 * (v - 1), q * 3 * (v + 1)],
        [q * 3 * (v + 1), q * (3 + v), q * (-3) * (v + 1)],
        [q * 2 * v, q * 2 * v * (1 - v) / (1 + v), q * 2 * v],
    ]
    t12 = [[Fraction(3 + v, 2), 0, 0], [0, Fraction(3 - v, 2), 0], [0, 0, Fraction(0)]]
    t13 = mat_mul(s2, mat_mul(t12, s2))
    t23 = mat_mul(s1, mat_mul(t13, s1))
    rho = InfinitesimalRep(3, [s1, s2], {(1, 2): t12, (1, 3): t13, (2, 3): t23})
    return rho
