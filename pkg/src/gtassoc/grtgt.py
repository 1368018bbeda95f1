"""Graded and filtered Grothendieck-Teichmuller groups in truncation.

GRT1 elements are the lambda=0 associators with group law

    (f1 . f2)(x,y) = f1(f2 x f2^{-1}, y) f2,

acting on the right on associator candidates by the same formula.  GT1
elements are grouplike series with f(u,v) f(v,u) = 1 and the m=0 hexagon,
acting on the left by (f.Phi)(x,y) = f(Phi e^x Phi^{-1}, e^y) Phi; group
arguments are always consumed through their logarithms.  The isomorphism
iota_Phi is pinned down by Phi.f = iota_Phi(f).Phi and computed by an
order-raising fixed point, inverting G -> G(x+P, y) with the Neumann sum
sum (-1)^n (Delta - Id)^n.

The exponential grt_exp carries a Lie element psi to exp(s_psi)(1), where
s_psi(g) = g psi + D_psi(g) and D_psi is the derivation with x -> [psi,x],
y -> 0.  The tabulated generators are psi1 = w5 - w4 in degree 3 and
psi2 = -2w9 - 4w10 - 4w11 - 2w12 - w13 - 3w14 in degree 5.

The Ihara projection works in the other classical convention, embedding
the free group by x -> 1+x: it forms f(log(1+x), log(1+y)), keeps the
constant-plus-(...)x part, and abelianizes.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .associators import AssociatorCandidate, duality_check, hexagon_check, pentagon_check
from .braids import xi_word
from .holonomy import holonomy_algebra, phi_tilde_eval, phi_tilde_generators
from .ncseries import (NCSeries, bch, commutator, is_grouplike, is_lie, letter_swap,
                       nc_exp, nc_log, nc_substitute)
from .symcoef import Poly, SymRing
from .wbasis import XY, w_element


class GrtElt:
    """Grouplike series certified (or trusted) to satisfy the lambda=0 equations."""

    __slots__ = ("series",)

    def __init__(self, series: NCSeries):
        if series.coefficient(b"") != 1:
            raise ValueError("group elements have constant term 1")
        self.series = series

    def __repr__(self):
        return "<GrtElt %r>" % (self.series,)


class GtElt:
    """Grouplike series in the filtered group; lambda is fixed to 1."""

    __slots__ = ("series",)

    def __init__(self, series: NCSeries):
        if series.coefficient(b"") != 1:
            raise ValueError("group elements have constant term 1")
        self.series = series

    def __repr__(self):
        return "<GtElt %r>" % (self.series,)


def _series_of(g):
    return g.series if isinstance(g, (GrtElt, GtElt, AssociatorCandidate)) else g


def element_to_text(g) -> str:
    """Serialize a group element with its kind header."""
    from .ncseries import to_text
    kind = "grt" if isinstance(g, GrtElt) else "gt" if isinstance(g, GtElt) else None
    if kind is None:
        raise TypeError("expected a graded or filtered group element")
    return to_text(g.series, extra={"kind": kind})


def element_from_text(text: str):
    from .ncseries import from_text
    series, fields = from_text(text)
    kind = fields.get("kind")
    if kind == "grt":
        return GrtElt(series)
    if kind == "gt":
        return GtElt(series)
    raise ValueError("missing or unknown kind header: %r" % kind)


def certify_grt(f, algebra=None) -> dict:
    """Membership checks for the graded group: the lambda=0 associator equations."""
    cand = AssociatorCandidate(_series_of(f), 0)
    return {
        "grouplike": is_grouplike(cand.series),
        "duality": duality_check(cand),
        "hexagon": hexagon_check(cand),
        "pentagon": pentagon_check(cand, algebra),
    }


# -- derivation exponentials -------------------------------------------


def derivation_x(psi: NCSeries, g: NCSeries) -> NCSeries:
    """The derivation D with D(x) = [psi, x], D(y) = 0 applied to g."""
    x = NCSeries.letter(XY, "x", g.maxdeg, g.ring, g.known_order)
    dx = commutator(psi, x)
    x_idx = 0
    out = NCSeries.zero(XY, g.maxdeg, g.ring, min(g.known_order, psi.known_order))
    for word, coeff in g.terms.items():
        for pos, letter in enumerate(word):
            if letter != x_idx:
                continue
            left = word[:pos]
            right = word[pos + 1:]
            for mid, c2 in dx.terms.items():
                w = left + mid + right
                if len(w) > out.known_order:
                    continue
                cur = out.terms.get(w)
                val = coeff * c2 if cur is None else cur + coeff * c2
                if val:
                    out.terms[w] = val
                elif cur is not None:
                    del out.terms[w]
    return out


def s_map(psi: NCSeries, g: NCSeries) -> NCSeries:
    """s_psi(g) = g psi + D_psi(g); raises order strictly."""
    return g * psi + derivation_x(psi, g)


def exp_s(psi: NCSeries, start: NCSeries) -> NCSeries:
    """exp(s_psi) applied to start, truncated."""
    if psi.order() is None:
        return start
    if psi.order() < 1:
        raise ValueError("s-exponential needs a positive-order argument")
    acc = start
    term = start
    k = 1
    while True:
        term = Fraction(1, k) * s_map(psi, term)
        if not term.terms:
            break
        acc = acc + term
        k += 1
    return acc


def grt_exp(psi: NCSeries, maxdeg=None) -> GrtElt:
    """Group exponential of a graded Lie element: exp(s_psi)(1)."""
    if not is_lie(psi):
        raise ValueError("grt_exp needs a Lie series")
    if maxdeg is not None and maxdeg != psi.maxdeg:
        psi = psi.truncated(maxdeg) if maxdeg < psi.maxdeg else NCSeries(
            psi.alphabet, maxdeg, psi.terms, psi.ring, maxdeg)
    one = NCSeries.one(XY, psi.maxdeg, psi.ring, psi.known_order)
    return GrtElt(exp_s(psi, one))


def psi1(maxdeg=5, ring=None) -> NCSeries:
    return w_element(5, maxdeg, ring) - w_element(4, maxdeg, ring)


def psi2(maxdeg=5, ring=None) -> NCSeries:
    w = lambda k: w_element(k, maxdeg, ring)
    return (-2 * w(9) - 4 * w(10) - 4 * w(11) - 2 * w(12) - w(13) - 3 * w(14))


def psi_ab(a, b, maxdeg=5, ring=None) -> NCSeries:
    return a * psi1(maxdeg, ring) + b * psi2(maxdeg, ring)


def grt_cap_psi(a, b, maxdeg=5, ring=None) -> GrtElt:
    """The group element Psi_{a,b} = grt_exp(a psi1 + b psi2)."""
    return grt_exp(psi_ab(a, b, maxdeg, ring))


# -- group laws and actions --------------------------------------------


def _conjugate_letter(f: NCSeries, name: str) -> NCSeries:
    letter = NCSeries.letter(XY, name, f.maxdeg, f.ring, f.known_order)
    return f * letter * f.inverse()


def grt_mul(f1, f2) -> GrtElt:
    """(f1.f2)(x,y) = f1(f2 x f2^{-1}, y) f2."""
    s1, s2 = _series_of(f1), _series_of(f2)
    y = NCSeries.letter(XY, "y", s2.maxdeg, s2.ring, s2.known_order)
    out = nc_substitute(s1, {"x": _conjugate_letter(s2, "x"), "y": y}) * s2
    return GrtElt(out)


def grt_inverse(f) -> GrtElt:
    """Inverse for the graded group law, by an order-raising fixed point."""
    s = _series_of(f)
    one = NCSeries.one(XY, s.maxdeg, s.ring, s.known_order)
    y = NCSeries.letter(XY, "y", s.maxdeg, s.ring, s.known_order)
    inv = one
    for _ in range(s.known_order + 1):
        inv = nc_substitute(s, {"x": _conjugate_letter(inv, "x"), "y": y}).inverse()
    residue = grt_mul(GrtElt(s), GrtElt(inv)).series
    if not residue.is_one():
        raise RuntimeError("graded inverse iteration failed to converge")
    return GrtElt(inv)


def act_grt(phi: AssociatorCandidate, f) -> AssociatorCandidate:
    """Right action of the graded group on candidates; lambda is unchanged."""
    s = _series_of(f)
    base = phi.series
    y = NCSeries.letter(XY, "y", base.maxdeg, base.ring, base.known_order)
    out = nc_substitute(base, {"x": _conjugate_letter(s, "x"), "y": y}) * s
    return AssociatorCandidate(out, phi.lam)


def act_gt(g, phi: AssociatorCandidate) -> AssociatorCandidate:
    """Left action (f.Phi)(x,y) = f(Phi e^x Phi^{-1}, e^y) Phi."""
    s = _series_of(g)
    base = phi.series
    x = NCSeries.letter(XY, "x", base.maxdeg, base.ring, base.known_order)
    y = NCSeries.letter(XY, "y", base.maxdeg, base.ring, base.known_order)
    conj = base * nc_exp(x) * base.inverse()
    out = nc_substitute(s, {"x": nc_log(conj), "y": y}) * base
    return AssociatorCandidate(out, phi.lam)


def gt_mul(g1, g2) -> GtElt:
    """(g1.g2)(x,y) = g1(g2 e^x g2^{-1}, e^y) g2 (the lambda=1 substitution law)."""
    s1, s2 = _series_of(g1), _series_of(g2)
    x = NCSeries.letter(XY, "x", s2.maxdeg, s2.ring, s2.known_order)
    y = NCSeries.letter(XY, "y", s2.maxdeg, s2.ring, s2.known_order)
    conj = s2 * nc_exp(x) * s2.inverse()
    out = nc_substitute(s1, {"x": nc_log(conj), "y": y}) * s2
    return GtElt(out)


def gt_inverse(g) -> GtElt:
    s = _series_of(g)
    one = NCSeries.one(XY, s.maxdeg, s.ring, s.known_order)
    x = NCSeries.letter(XY, "x", s.maxdeg, s.ring, s.known_order)
    y = NCSeries.letter(XY, "y", s.maxdeg, s.ring, s.known_order)
    inv = one
    for _ in range(s.known_order + 1):
        conj = inv * nc_exp(x) * inv.inverse()
        inv = nc_substitute(s, {"x": nc_log(conj), "y": y}).inverse()
    residue = gt_mul(GtElt(s), GtElt(inv)).series
    if not residue.is_one():
        raise RuntimeError("filtered inverse iteration failed to converge")
    return GtElt(inv)


def iota(phi: AssociatorCandidate, f) -> GtElt:
    """The unique g with act_grt(phi, f) = act_gt(g, phi).

    Computed by log-linearizing the left action: with u = log(Phi e^x
    Phi^{-1}) = x + P, the unknown G = log g satisfies G(u, y) =
    log(Phi' Phi^{-1}); the substitution operator Delta: G -> G(u, y) is
    inverted by the order-raising Neumann iteration.
    """
    if phi.lam == 0:
        raise ValueError("iota needs lambda != 0")
    base = phi.series
    phip = act_grt(phi, f).series
    rhs = nc_log(phip * base.inverse())
    x = NCSeries.letter(XY, "x", base.maxdeg, base.ring, base.known_order)
    y = NCSeries.letter(XY, "y", base.maxdeg, base.ring, base.known_order)
    u = nc_log(base * nc_exp(x) * base.inverse())

    def delta(G):
        return nc_substitute(G, {"x": u, "y": y})

    G = rhs
    for _ in range(base.known_order + 1):
        G = rhs - (delta(G) - G)
    if not delta(G).equal_through(rhs):
        raise RuntimeError("fixed-point inversion did not converge; "
                           "check the candidate preconditions")
    g = GtElt(nc_exp(G))
    if not act_gt(g, phi).series.equal_through(phip):
        raise RuntimeError("iota verification failed")
    return g


def g_ab(a, b, phi0: AssociatorCandidate) -> GtElt:
    """iota_{phi0}(Psi_{a,b}); with symbolic a, b this is the generic element."""
    ring = None
    for v in (a, b):
        if isinstance(v, Poly):
            ring = v.ring
    psi = psi_ab(a, b, phi0.maxdeg, ring)
    base = phi0 if ring is None else phi0.promote(ring)
    return iota(base, grt_exp(psi))


# -- membership report for the filtered group ---------------------------


def gt_checks(g, pentagon=True, reference: AssociatorCandidate = None) -> dict:
    """Per-equation report: duality, hexagon (m=0), grouplike, and the
    4-strand relation pushed through a reference associator morphism."""
    s = _series_of(g)
    report = {}
    report["grouplike"] = is_grouplike(s)
    swapped = letter_swap(s, {"x": "y", "y": "x"})
    report["duality"] = (s * swapped).is_one()
    x = NCSeries.letter(XY, "x", s.maxdeg, s.ring, s.known_order)
    y = NCSeries.letter(XY, "y", s.maxdeg, s.ring, s.known_order)
    w = bch(-1 * y, -1 * x)
    prod = (nc_substitute(s, {"x": w, "y": x})
            * nc_substitute(s, {"x": y, "y": w})
            * s)
    report["hexagon"] = prod.is_one()
    if pentagon:
        report["pentagon"] = gt_pentagon_push(s, reference)
    return report


def gt_pentagon_push(series: NCSeries, reference: AssociatorCandidate = None) -> bool:
    """Check the 4-strand equation on the images of the pure braid generators.

    The generators xi_ij go through the braid-algebra morphism attached to a
    reference lambda=1 associator; this is a necessary condition for
    membership, sufficient for every computation done here.
    """
    from .associators import phi0_reference  # local to avoid cycles at import time
    if reference is None:
        reference = phi0_reference(min(series.maxdeg, 5))
    ref = reference if series.ring is None else reference.promote(series.ring)
    algebra = holonomy_algebra(4, min(series.known_order, ref.known_order))
    if series.ring is not None:
        # holonomy coefficients follow the series ring through embed_free
        pass
    gens = phi_tilde_generators(ref.series, ref.lam, algebra)
    xi = {}
    for (i, j) in ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4)):
        word = xi_word(4, i, j)
        xi[(i, j)] = phi_tilde_eval(gens, algebra, word).pure_part()

    def f_at(u, v):
        la, lb = u.log(), v.log()
        cache = {b"": algebra.one(min(la.known_order, lb.known_order))}

        def product_for(word):
            got = cache.get(word)
            if got is not None:
                return got
            prod = product_for(word[:-1]) * (la if word[-1] == 0 else lb)
            cache[word] = prod
            return prod

        out = algebra.zero()
        for word, coeff in sorted(series.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            out = out + coeff * product_for(word)
        return out

    lhs = f_at(xi[(1, 2)], xi[(2, 3)] * xi[(2, 4)]) * f_at(xi[(1, 3)] * xi[(2, 3)], xi[(3, 4)])
    rhs = (f_at(xi[(2, 3)], xi[(3, 4)])
           * f_at(xi[(1, 2)] * xi[(1, 3)], xi[(2, 4)] * xi[(3, 4)])
           * f_at(xi[(1, 2)], xi[(2, 3)]))
    return lhs.equal_through(rhs)


# -- Ihara projection ----------------------------------------------------


def _log1p_series(name, maxdeg, ring):
    letter = NCSeries.letter(XY, name, maxdeg, ring)
    acc = NCSeries.zero(XY, maxdeg, ring)
    power = NCSeries.one(XY, maxdeg, ring)
    for k in range(1, maxdeg + 1):
        power = power * letter
        acc = acc + Fraction((-1) ** (k + 1), k) * power
    return acc


def ihara_projection(f: NCSeries) -> dict:
    """pi_ab . p_x of f(log(1+x), log(1+y)) as {(deg_x, deg_y): coeff}.

    p_x keeps the constant term and the words ending in x; the abelianization
    then counts letters.  This is the one place where the 1+x embedding of
    the free group is used instead of the exponential one.
    """
    if f.coefficient(b"") != 1:
        raise ValueError("the projection expects constant term 1")
    subs = nc_substitute(f, {
        "x": _log1p_series("x", f.maxdeg, f.ring),
        "y": _log1p_series("y", f.maxdeg, f.ring),
    })
    out = {}
    for word, coeff in subs.terms.items():
        if word and word[-1] != 0:
            continue
        key = (sum(1 for b in word if b == 0), sum(1 for b in word if b == 1))
        cur = out.get(key)
        val = coeff if cur is None else cur + coeff
        if val:
            out[key] = val
        elif cur is not None:
            del out[key]
    return out


def comm_mul(p, q, maxdeg):
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            if a1 + a2 + b1 + b2 > maxdeg:
                continue
            key = (a1 + a2, b1 + b2)
            cur = out.get(key)
            val = c1 * c2 if cur is None else cur + c1 * c2
            if val:
                out[key] = val
            elif cur is not None:
                del out[key]
    return out


def comm_exp(p, maxdeg, one_coeff):
    out = {(0, 0): one_coeff}
    term = {(0, 0): one_coeff}
    for k in range(1, maxdeg + 1):
        term = comm_mul(term, p, maxdeg)
        term = {key: c * Fraction(1, k) for key, c in term.items()}
        if not term:
            break
        for key, c in term.items():
            cur = out.get(key)
            val = c if cur is None else cur + c
            if val:
                out[key] = val
            elif cur is not None:
                del out[key]
    return out


def ihara_psi_ab(ring: SymRing, kappa3="kappa3", kappa5="kappa5", maxdeg=5) -> dict:
    """exp(sum_m kappa*_m/m! ((X+Y)^m - X^m - Y^m)), X = log(1+x), Y = log(1+y),
    in commutative variables, truncated at total degree maxdeg."""
    def logs(var_index):
        out = {}
        for k in range(1, maxdeg + 1):
            key = (k, 0) if var_index == 0 else (0, k)
            out[key] = ring.const(Fraction((-1) ** (k + 1), k))
        return out

    X = logs(0)
    Y = logs(1)
    XY_sum = dict(X)
    for key, c in Y.items():
        XY_sum[key] = XY_sum.get(key, ring.zero) + c
    arg = {}
    for m, kname in ((3, kappa3), (5, kappa5)):
        kc = ring.symbol(kname) * Fraction(1, math.factorial(m))
        power_sum = {(0, 0): ring.one}
        power_x = {(0, 0): ring.one}
        power_y = {(0, 0): ring.one}
        for _ in range(m):
            power_sum = comm_mul(power_sum, XY_sum, maxdeg)
            power_x = comm_mul(power_x, X, maxdeg)
            power_y = comm_mul(power_y, Y, maxdeg)
        for key in set(power_sum) | set(power_x) | set(power_y):
            val = (power_sum.get(key, ring.zero) - power_x.get(key, ring.zero)
                   - power_y.get(key, ring.zero))
            if val:
                arg[key] = arg.get(key, ring.zero) + kc * val
    return comm_exp(arg, maxdeg, ring.one)


def kappa_identification(g_series: NCSeries, a_name="a", b_name="b",
                         kappa3="kappa3", kappa5="kappa5"):
    """Match the projection of a generic filtered element against the
    classical exp-sum form with formal kappa symbols.

    Returns (a_value, b_value, exact_match) where the values are polynomials
    in the kappa symbols and exact_match reports whether substituting them
    reproduces every coefficient through the truncation.
    """
    lhs = ihara_projection(g_series)
    kring = SymRing((kappa3, kappa5))
    rhs = ihara_psi_ab(kring, kappa3, kappa5, g_series.known_order)

    def lin(poly):
        return (poly.coefficient({a_name: 1}), poly.coefficient({b_name: 1}),
                poly.coefficient({}))

    # two independent coefficients pin (a, b)
    eq1 = lin(lhs[(2, 1)])   # x^2 y
    eq2 = lin(lhs[(4, 1)])   # x^4 y
    r1 = rhs.get((2, 1), kring.zero) - kring.const(eq1[2])
    r2 = rhs.get((4, 1), kring.zero) - kring.const(eq2[2])
    det = eq1[0] * eq2[1] - eq1[1] * eq2[0]
    if not det:
        raise ValueError("pinning coefficients are degenerate")
    a_val = (r1 * eq2[1] - r2 * eq1[1]) / det
    b_val = (r2 * eq1[0] - r1 * eq2[0]) / det
    mapping = {a_name: a_val, b_name: b_val}
    ok = True
    keys = set(lhs) | set(rhs)
    for key in keys:
        lv = lhs.get(key)
        lv = kring.zero if lv is None else lv.subs(kring, mapping)
        rv = rhs.get(key, kring.zero)
        if lv != rv:
            ok = False
            break
    return a_val, b_val, ok
