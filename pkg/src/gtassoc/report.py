"""Verification suites with structured reports.

Every suite returns a Report: a list of checks, each carrying a stable id,
a short anchor naming the identity it verifies, a pass/fail/skipped status,
and a witness string (usually a truncated series rendered in text form).
Reports are deterministic for fixed inputs and serialize to text or JSON.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import associators, braidreps, characters, grtgt, hecke, kz
from .associators import AssociatorCandidate, phi0_reference
from .holonomy import holonomy_algebra
from .ncseries import NCSeries, nc_log
from .scalar import scalar_div
from .symcoef import SymRing, render_coeff
from .tableaux import Partition, partitions_of
from .wbasis import w_coordinates


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witness: str = ""
    duration_ms: int = 0


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    duration_ms: int = 0

    def add(self, check_id, anchor, passed, witness=""):
        if any(c.id == check_id for c in self.checks):
            raise ValueError("duplicate check id %r" % check_id)
        status = "pass" if passed else "fail"
        if passed is None:
            status = "skipped"
        self.checks.append(Check(check_id, anchor, status, str(witness)))

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    def to_text(self):
        lines = ["suite %s: %s (%d checks, %d ms)" % (
            self.suite, "PASS" if self.ok else "FAIL", len(self.checks), self.duration_ms)]
        for c in self.checks:
            lines.append("  [%s] %-34s %-28s %s" % (
                c.status.upper(), c.id, c.anchor, c.witness))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps({
            "suite": self.suite,
            "checks": [{"id": c.id, "anchor": c.anchor, "status": c.status,
                        "witness": c.witness, "duration_ms": c.duration_ms}
                       for c in self.checks],
            "duration_ms": self.duration_ms,
        }, indent=2, sort_keys=True)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.monotonic()
        report = fn(*args, **kwargs)
        report.duration_ms = int((time.monotonic() - t0) * 1000)
        return report
    return wrapper


@_timed
def verify_associator(degree=5) -> Report:
    rep = Report("associator")
    phi0 = phi0_reference(min(degree, 5))
    res = associators.certify(phi0)
    for name, ok in res.items():
        rep.add("phi0-%s" % name, "defining equation: %s" % name, ok)
    rep.add("phi0-c", "degree-3 coefficient", associators.c_extract(phi0) == 0, "c=0")
    rep.add("phi0-even", "parity through the truncation", associators.is_even(phi0))
    alg = holonomy_algebra(4, 6)
    dims = alg.dimensions()
    rep.add("holonomy-dims", "4-strand enveloping dimensions",
            dims == [1, 6, 25, 90, 301, 966, 3025], ",".join(map(str, dims)))
    # extension ladder from 1
    start = AssociatorCandidate(NCSeries.one(("x", "y"), 1), 1)
    ext2, ker2 = associators.extend_associator(start)
    rep.add("extend-deg2", "forced degree-2 term",
            ext2.series.coefficient(("x", "y")) == Fraction(1, 24) and not ker2,
            "coeff(xy)=1/24")
    ext3, ker3 = associators.extend_associator(ext2)
    ok3 = len(ker3) == 1
    if ok3:
        co = w_coordinates(ker3[0], 3)
        ok3 = co[4] == -co[5] != 0
    rep.add("extend-deg3", "one-parameter degree-3 family", ok3)
    ext3p, _ = associators.extend_associator(ext2, parity=True)
    ext4, ker4 = associators.extend_associator(ext3p)
    target4 = phi0_reference(4).series.homogeneous(4)
    rep.add("extend-deg4", "forced degree-4 correction",
            ext4.series.homogeneous(4).equal_through(target4.truncated(4)) and not ker4)
    return rep


@_timed
def verify_grt(degree=5) -> Report:
    rep = Report("grt")
    ring = SymRing(("a", "b"))
    a, b = ring.symbol("a"), ring.symbol("b")
    cap = grtgt.grt_cap_psi(a, b, min(degree, 5), ring)
    res = grtgt.certify_grt(cap)
    for name, ok in res.items():
        rep.add("cap-psi-%s" % name, "lambda=0 equation: %s" % name, ok)
    phi0 = phi0_reference(min(degree, 5)).promote(ring)
    lhs = grtgt.exp_s(grtgt.psi_ab(a, b, min(degree, 5), ring), phi0.series)
    rhs = grtgt.act_grt(phi0, cap).series
    rep.add("exp-s-action", "derivation exponential vs substitution law",
            lhs.equal_through(rhs))
    z = Fraction(7, 3)
    tw = grtgt.act_grt(phi0_reference(min(degree, 5)),
                       grtgt.grt_exp((-z) * grtgt.psi1(min(degree, 5))))
    rep.add("c-shift", "degree-3 coefficient shift",
            associators.c_extract(tw) == z, "c=%s" % z)
    return rep


@_timed
def verify_gt(degree=5) -> Report:
    rep = Report("gt")
    ring = SymRing(("a", "b"))
    a, b = ring.symbol("a"), ring.symbol("b")
    phi0 = phi0_reference(min(degree, 5))
    gab = grtgt.g_ab(a, b, phi0)
    checks = grtgt.gt_checks(gab)
    for name, ok in checks.items():
        rep.add("g-ab-%s" % name, "membership equation: %s" % name, ok)
    L = nc_log(gab.series)
    rep.add("g-ab-deg4", "vanishing degree-4 logarithm", L.homogeneous(4).is_zero())
    co5 = w_coordinates(L, 5)
    expect = {9: -2 * b, 10: -4 * b, 11: -4 * b, 12: -2 * b,
              13: -(b - a * Fraction(1, 24)), 14: -(3 * b + a * Fraction(1, 24))}
    rep.add("g-ab-deg5", "degree-5 logarithm coordinates",
            co5 == expect, "w14 coeff -(3b + a/24)")
    cap = grtgt.grt_cap_psi(a, b, min(degree, 5), ring)
    rep.add("g-ab-torsor", "left and right twists agree",
            grtgt.act_gt(gab, phi0.promote(ring)).series.equal_through(
                grtgt.act_grt(phi0.promote(ring), cap).series))
    a_val, b_val, ok = grtgt.kappa_identification(gab.series)
    kring = SymRing(("kappa3", "kappa5"))
    rep.add("kappa-match", "projection matches the exp-sum form",
            ok and a_val == kring.symbol("kappa3") * Fraction(1, 2)
            and b_val == kring.symbol("kappa5") * Fraction(1, 48),
            "a=kappa3/2 b=kappa5/48")
    img = grtgt.ihara_projection(NCSeries.one(("x", "y"), 5) + grtgt.w_element(9, 5))
    img.pop((0, 0), None)
    rep.add("ihara-w9", "projection of the first degree-5 monomial",
            img == {(4, 1): Fraction(-1)}, "-x^4 y")
    return rep


@_timed
def verify_braid(degree=5) -> Report:
    rep = Report("braid")
    ring = SymRing(("a", "b"))
    a, b = ring.symbol("a"), ring.symbol("b")
    phi0 = phi0_reference(min(degree, 5))
    gab = grtgt.g_ab(a, b, phi0)
    for v in (Fraction(5), Fraction(7), Fraction(1, 2)):
        rho = braidreps.b3_example(v)
        R = braidreps.phat(rho, phi0)
        rep.add("b3-braid-v%s" % v, "3-strand relations", R.braid_relations_ok())
        rep.add("b3-depth-v%s" % v, "pure-braid depth", R.pure_braid_depth_ok())
        Rs = R.promote(ring)
        Rt = braidreps.gt_act_on_rep(Rs, gab)
        diag = braidreps.diagonal_conjugator(Rs, Rt)
        q2 = diag[1]
        q3 = scalar_div(diag[2], diag[1])
        ok2 = (q2.coefficient(3) == a * (Fraction(-1, 8) * v * (v * v - 9))
               and q2.coefficient(5) == b * (Fraction(-9, 64) * v * (v * v - 9) * (v * v + 7))
               and all(not q2.coefficient(k) for k in (1, 2, 4)))
        rep.add("b3-Q2-v%s" % v, "first character series", ok2)
        ok3 = q3.coefficient(3) == a * (Fraction(1, 16) * (v + 9) * (v * v - 9))
        rep.add("b3-Q3-v%s" % v, "second character cubic term", ok3)
    # difference formula
    from .linalg import mat_mul
    phi0s = phi0.promote(ring)
    phi2 = grtgt.act_grt(phi0s, grtgt.grt_cap_psi(a, ring.const(0), min(degree, 5), ring))
    rho = hecke.hecke_infinitesimal(Partition((2, 1)))
    R0 = braidreps.phat(rho, phi0s)
    R2 = braidreps.phat(rho, phi2)
    diff = R2.sigma(2) - R0.sigma(2)
    def commutator(x, y):
        return [[p - q for p, q in zip(rp, rq)]
                for rp, rq in zip(mat_mul(x, y), mat_mul(y, x))]
    w = commutator(rho.t_matrix(2, 3), commutator(rho.t_matrix(2, 3), rho.t_matrix(1, 2)))
    expect = mat_mul(rho.perm_matrix(2), w)
    ok = all(not diff.entry(i, j).coefficient(k)
             for k in range(3) for i in range(diff.n) for j in range(diff.n))
    ok = ok and all(diff.entry(i, j).coefficient(3) == a * expect[i][j]
                    for i in range(diff.n) for j in range(diff.n))
    rep.add("difference-formula", "cubic term of the generator difference", ok)
    return rep


@_timed
def verify_hecke(degree=5, nmax=6) -> Report:
    rep = Report("hecke")
    phi0 = phi0_reference(min(degree, 5))
    model = hecke.MatrixModel("semi", phi0)
    unitary = hecke.MatrixModel("unitary", maxdeg=7)
    all_ok_braid = True
    all_ok_delta = True
    all_ok_unit = True
    for n in range(2, nmax + 1):
        for shape in partitions_of(n):
            built = hecke.rep_build(shape, model)
            if not built.braid_relations_ok():
                all_ok_braid = False
            if not hecke.delta_eigenvalues_ok(built, shape, model):
                all_ok_delta = False
            if not hecke.unitarity_check(hecke.rep_build(shape, unitary)):
                all_ok_unit = False
    rep.add("braid-relations", "relations for all shapes of n<=%d" % nmax, all_ok_braid)
    rep.add("delta-eigenvalues", "q^{2c_r} eigenvalue table", all_ok_delta)
    rep.add("unitary", "transpose-involution unitarity", all_ok_unit)
    q = hecke.q_series(7)
    qi = hecke.q_series(7, None, -1)
    rec_ok = all((hecke.a_entry(d + 1) * (q - hecke.a_entry(d))).equal_through(
        hecke.a_entry(d) * qi) for d in range(2, 7))
    rep.add("a-recurrence", "diagonal entry recurrence", rec_ok)
    exp_ok = True
    twist_ring = SymRing(("a", "b"))
    a = twist_ring.symbol("a")
    phi_tw = grtgt.act_grt(phi0.promote(twist_ring),
                           grtgt.grt_cap_psi(a, twist_ring.const(0), min(degree, 5), twist_ring))
    model_tw = hecke.MatrixModel("semi", phi_tw)
    for d in range(2, 7):
        scaled = Fraction(d, d + 1) * model.b(d)
        if not (scaled.coefficient(0) == 1 and not scaled.coefficient(1)
                and scaled.coefficient(2) == Fraction(1, 6) and not scaled.coefficient(3)
                and scaled.coefficient(4) == Fraction(-(4 * d * d - 1), 120)
                and not scaled.coefficient(5)):
            exp_ok = False
        if (Fraction(d, d + 1) * model_tw.b(d)).coefficient(3) != a * (-16 * d):
            exp_ok = False
    rep.add("b-expansion", "scalar expansion and its twist", exp_ok)
    match_ok = True
    for parts in ((2, 1), (2, 2), (3, 2)):
        shape = Partition(parts)
        rho = hecke.hecke_infinitesimal(shape)
        r1 = braidreps.phat(rho, phi0)
        r2 = hecke.rep_build(shape, model)
        if not all(r1.sigma(i).equal_through(r2.sigma(i)) for i in range(1, shape.n)):
            match_ok = False
    rep.add("phat-matches-model", "functor equals the block construction", match_ok)
    return rep


@_timed
def verify_kz(order=7) -> Report:
    rep = Report("kz")
    ring = kz.kz_ring()
    star_ok = all(
        scalar_div(kz.b_kz(d, +1, ring), kz.b_kz(d, -1, ring)).equal_through(
            kz.ratio_formula_rhs(d, ring), order)
        for d in range(2, 7))
    rep.add("ratio-formula", "odd-zeta exponential ratio", star_ok)
    ht_ok = True
    clean_ok = True
    for d in range(2, 7):
        ht = kz.h_tilde(d, ring)
        if not scalar_div(kz.b_kz(d, +1, ring), kz.b_even_ref(d, ring)).equal_through(ht):
            ht_ok = False
        if not (scalar_div(kz.b_kz(d, -1, ring), kz.b_even_ref(d, ring)) * ht).is_one():
            ht_ok = False
        L = ht.log()
        if L.coefficient(3) != ring.symbol("zeta3") * (-16 * d):
            ht_ok = False
        if L.coefficient(5) != ring.symbol("zeta5") * (-64 * d * (2 * d * d + 1)):
            ht_ok = False
        if L.coefficient(7) != ring.symbol("zeta7") * (-256 * d * (3 * d ** 4 + 5 * d * d + 1)):
            ht_ok = False
        for k in range(0, L.known_order + 1):
            c = L.coefficient(k)
            if c and (c.coefficient({"gamma": 1}) or any(
                    c.coefficient({"zeta%d" % z: 1}) for z in (2, 4, 6, 8))):
                clean_ok = False
    rep.add("h-tilde", "square-root ratio identities", ht_ok)
    rep.add("no-gamma-even-zeta", "transcendental bookkeeping", clean_ok)
    bridge_ok = True
    phi0 = phi0_reference(5)
    for d in range(2, 7):
        sp = kz.specialize_even(kz.b_even_ref(d, ring))
        bs = hecke.b_semi(phi0, d)
        if not sp.equal_through(bs, 4):
            bridge_ok = False
    rep.add("even-bridge", "specialization matches the model scalar", bridge_ok)
    pkz = kz.phi_kz_symbolic(5)
    zr = pkz.series.ring
    c = associators.c_extract(pkz)
    rep.add("kz-c", "degree-3 coefficient of the symbolic truncation",
            c == -zr.symbol("zt3"), "c=-zt3")
    rep.add("kz-certified", "membership of the symbolic truncation",
            all(associators.certify(pkz).values()))
    return rep


@_timed
def chars_report(partition_text="3,2", g_symbols=("a", "b"), order=5) -> Report:
    rep = Report("chars")
    shape = Partition.parse(partition_text)
    diag = characters.tableau_diagonal(shape)
    rep.add("diagonal", "tableau monomials for %s" % shape, True,
            " ".join(repr(v) for v in diag))
    ring = SymRing(tuple(g_symbols))
    phi0 = phi0_reference(min(order, 5))
    gab = grtgt.g_ab(ring.symbol(g_symbols[0]), ring.symbol(g_symbols[1]), phi0)
    seen = {}
    for vec in diag:
        for d in vec.exps:
            if d not in seen:
                seen[d] = characters.chi_d(gab, d, phi0)
    for d in sorted(seen):
        series = seen[d]
        text = " + ".join("(%s) h^%d" % (render_coeff(series.coefficient(k)), k)
                          for k in range(series.known_order + 1) if series.coefficient(k))
        rep.add("chi%d" % d, "character series", True, text)
    return rep


@_timed
def resonance_report(nmax=8) -> Report:
    rep = Report("resonance")
    ok_all = True
    for shape, free, diag in characters.resonance_scan(nmax):
        expect = shape.is_hook() or shape.parts == (2, 2)
        if free != expect:
            ok_all = False
        rep.add("res-%s" % ",".join(map(str, shape.parts)),
                "resonance-free scan", free == expect,
                "%s %s" % (free, " ".join(repr(v) for v in diag)))
    rep.add("hook-or-22", "classification matches", ok_all)
    return rep
