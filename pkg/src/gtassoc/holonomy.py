"""Truncated enveloping algebras U(T_n) of the holonomy Lie algebras.

T_n is generated by t_ij (i<j) with [t_ij, t_kl] = 0 for disjoint index
pairs and [t_ij, t_ik + t_kj] = 0.  Deleting the last strand exhibits
T_n as (free Lie on t_1n..t_{n-1,n}) |x T_{n-1}, iterated down to T_2, so
U(T_n) has a normal-form basis of concatenations

    (word in the t_*n) . (word in the t_*(n-1)) ... (power of t_12),

one free-associative block per column class.  Reduction moves a letter of
lower class left past a higher-class letter at the cost of a quadratic
commutator term inside the higher block; the rewriting is triangular in
the number of low-class letters, hence terminates, and its output is the
coordinate vector on the normal-form basis.  Per-degree dimensions match
the Hilbert series prod_{i=1}^{n-1} 1/(1-i t), which the tests pin.

The same file hosts the semidirect product kS_n |x U(T_n) needed to push
braid words through a morphism built from an associator.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

from . import ncseries
from .ncseries import EMPTY, NCSeries
from .symcoef import as_fraction

CACHE_FORMAT_VERSION = 1
DEFAULT_MONOMIAL_BOUND = 6 ** 6
_REGISTRY = {}


def hilbert_dimensions(n, maxdeg):
    """Coefficients of prod_{i=1}^{n-1} 1/(1-i t) through degree maxdeg."""
    dims = [Fraction(0)] * (maxdeg + 1)
    dims[0] = Fraction(1)
    for i in range(1, n):
        # multiply by 1/(1-i t): prefix recurrence d[k] += i*d[k-1]
        for k in range(1, maxdeg + 1):
            dims[k] += i * dims[k - 1]
    return [int(d) for d in dims]


class HoloAlgebra:
    """U(T_n) truncated at maxdeg, with cached normal-form reduction."""

    def __init__(self, n, maxdeg, monomial_bound=DEFAULT_MONOMIAL_BOUND):
        if n < 2:
            raise ValueError("need n >= 2 strands")
        n_gens = n * (n - 1) // 2
        if maxdeg > 0 and n_gens ** maxdeg > monomial_bound:
            raise ValueError("free monomial count %d exceeds the resource bound %d"
                             % (n_gens ** maxdeg, monomial_bound))
        self.n = n
        self.maxdeg = int(maxdeg)
        # letters ordered by (column class j, row i); class of t_ij is j
        self.letters = tuple("t%d%d" % (i, j) for j in range(2, n + 1) for i in range(1, j))
        self.letter_index = {name: k for k, name in enumerate(self.letters)}
        self.pair_of = []
        self.cls = []
        for name in self.letters:
            i, j = int(name[1]), int(name[2])
            self.pair_of.append((i, j))
            self.cls.append(j)
        self._prepend_cache = {}
        self._perm_cache = {}

    # -- bookkeeping ----------------------------------------------------

    def generator_index(self, i, j):
        if i > j:
            i, j = j, i
        if i == j or not (1 <= i < j <= self.n):
            raise ValueError("no generator t_%d%d" % (i, j))
        return self.letter_index["t%d%d" % (i, j)]

    def basis_words(self, degree):
        """Normal-form monomials of one degree: per-class free blocks, high class left."""
        classes = list(range(self.n, 1, -1))
        letters_by_class = {j: [k for k, c in enumerate(self.cls) if c == j] for j in classes}

        def block_words(j, d):
            return itertools.product(letters_by_class[j], repeat=d)

        out = []
        for split in _compositions(degree, len(classes)):
            parts = [block_words(j, d) for j, d in zip(classes, split)]
            for combo in itertools.product(*parts):
                word = bytes(itertools.chain.from_iterable(combo))
                out.append(word)
        return sorted(out)

    def dimensions(self):
        return [len(self.basis_words(d)) for d in range(self.maxdeg + 1)]

    # -- normal form ------------------------------------------------------

    def _bracket(self, low, high):
        """[low, high] for cls(low) < cls(high), as ((word2,int) pairs)."""
        i, k = self.pair_of[low]
        m, j = self.pair_of[high]
        if m != i and m != k:
            return ()
        a = self.generator_index(i, j)
        b = self.generator_index(k, j)
        if m == i:
            # [t_ik, t_ij] = t_ij t_kj - t_kj t_ij
            return ((bytes((a, b)), 1), (bytes((b, a)), -1))
        # [t_ik, t_kj] = -(t_ij t_kj - t_kj t_ij)
        return ((bytes((a, b)), -1), (bytes((b, a)), 1))

    def prepend(self, letter, word):
        """Normal form of letter . word for word already in normal form."""
        key = (letter, word)
        cached = self._prepend_cache.get(key)
        if cached is not None:
            return cached
        if not word or self.cls[letter] >= self.cls[word[0]]:
            result = {bytes((letter,)) + word: 1}
        else:
            head = word[0]
            rest = word[1:]
            result = {}
            for sub, coeff in self.prepend(letter, rest).items():
                w = bytes((head,)) + sub
                result[w] = result.get(w, 0) + coeff
            for quad, sign in self._bracket(letter, head):
                w = quad + rest
                result[w] = result.get(w, 0) + sign
            result = {w: c for w, c in result.items() if c}
        self._prepend_cache[key] = result
        return result

    def normal_form(self, word):
        """Reduce an arbitrary word over the generators; returns {basis word: int}."""
        acc = {EMPTY: 1}
        for letter in reversed(word):
            nxt = {}
            for mono, coeff in acc.items():
                for w, c in self.prepend(letter, mono).items():
                    val = nxt.get(w, 0) + coeff * c
                    if val:
                        nxt[w] = val
                    elif w in nxt:
                        del nxt[w]
            acc = nxt
        return acc

    def reduce_terms(self, terms, known_order=None):
        """Reduce a {word: coeff} dict into a HoloElt."""
        out = {}
        for word, coeff in terms.items():
            if len(word) > self.maxdeg:
                continue
            for mono, mult in self.normal_form(word).items():
                cur = out.get(mono)
                val = coeff * mult if cur is None else cur + coeff * mult
                if val:
                    out[mono] = val
                elif cur is not None:
                    del out[mono]
        return HoloElt(self, out, known_order=known_order)

    # -- S_n action -------------------------------------------------------

    def permute_word(self, perm, word):
        """Image of a basis word under s: t_ij -> t_{s(i)s(j)}, re-reduced.

        perm is a tuple giving s(1..n) at indices 0..n-1.
        """
        key = (perm, word)
        cached = self._perm_cache.get(key)
        if cached is None:
            moved = bytes(
                self.generator_index(perm[i - 1], perm[j - 1])
                for (i, j) in (self.pair_of[b] for b in word))
            cached = self.normal_form(moved)
            self._perm_cache[key] = cached
        return cached

    # -- elements ---------------------------------------------------------

    def zero(self, known_order=None):
        return HoloElt(self, {}, known_order=known_order)

    def one(self, known_order=None):
        return HoloElt(self, {EMPTY: Fraction(1)}, known_order=known_order)

    def generator(self, i, j, known_order=None):
        return HoloElt(self, {bytes((self.generator_index(i, j),)): Fraction(1)},
                       known_order=known_order)

    def y_element(self, r):
        """Y_r = t_1r + ... + t_{r-1,r}; Y_1 = 0."""
        out = self.zero()
        for i in range(1, r):
            out = out + self.generator(i, r)
        return out

    def z_element(self, r):
        """Z_r = sum of all t_ij with i < j <= r."""
        out = self.zero()
        for j in range(2, r + 1):
            for i in range(1, j):
                out = out + self.generator(i, j)
        return out

    def relation_words(self):
        """Defining relations as {word: coeff} dicts over generator letters."""
        rels = []
        idx = self.generator_index
        for (i, j, k, l) in itertools.combinations(range(1, self.n + 1), 4):
            for (a, b), (c, d) in itertools.combinations(
                    itertools.combinations((i, j, k, l), 2), 2):
                if len({a, b, c, d}) == 4:
                    p, q = idx(a, b), idx(c, d)
                    rels.append({bytes((p, q)): Fraction(1), bytes((q, p)): Fraction(-1)})
        for (i, k, j) in itertools.permutations(range(1, self.n + 1), 3):
            if i < j:
                p, q, r = idx(i, j), idx(i, k), idx(k, j)
                rels.append({
                    bytes((p, q)): Fraction(1), bytes((q, p)): Fraction(-1),
                    bytes((p, r)): Fraction(1), bytes((r, p)): Fraction(-1),
                })
        return rels


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class HoloElt:
    """Element of a HoloAlgebra as coordinates on the normal-form basis."""

    __slots__ = ("algebra", "terms", "known_order")

    def __init__(self, algebra, terms, known_order=None):
        self.algebra = algebra
        ko = algebra.maxdeg if known_order is None else min(known_order, algebra.maxdeg)
        self.known_order = ko
        self.terms = {w: c for w, c in terms.items() if c and len(w) <= ko}

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements of different holonomy algebras")

    def coefficient(self, word):
        return self.terms.get(word, Fraction(0))

    def order(self):
        if not self.terms:
            return None
        return min(len(w) for w in self.terms)

    def homogeneous(self, d):
        return HoloElt(self.algebra, {w: c for w, c in self.terms.items() if len(w) == d},
                       self.known_order)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            cur = out.get(w)
            s = c if cur is None else cur + c
            if s:
                out[w] = s
            elif cur is not None:
                del out[w]
        return HoloElt(self.algebra, out, min(self.known_order, other.known_order))

    def __neg__(self):
        return HoloElt(self.algebra, {w: -c for w, c in self.terms.items()}, self.known_order)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return HoloElt(self.algebra, {w: scalar * c for w, c in self.terms.items()},
                       self.known_order)

    def __mul__(self, other):
        if not isinstance(other, HoloElt):
            return self.__rmul__(other)
        self._check(other)
        wa, wb = self.order(), other.order()
        if wa is None or wb is None:
            return self.algebra.zero(min(self.known_order, other.known_order))
        ko = min(self.known_order + wb, other.known_order + wa, self.algebra.maxdeg)
        nf = self.algebra.normal_form
        out = {}
        for w1, c1 in self.terms.items():
            room = ko - len(w1)
            if room < 0:
                continue
            for w2, c2 in other.terms.items():
                if len(w2) > room:
                    continue
                c = c1 * c2
                for mono, mult in nf(w1 + w2).items():
                    cur = out.get(mono)
                    val = c * mult if cur is None else cur + c * mult
                    if val:
                        out[mono] = val
                    elif cur is not None:
                        del out[mono]
        return HoloElt(self.algebra, out, ko)

    def __eq__(self, other):
        return (isinstance(other, HoloElt) and self.algebra is other.algebra
                and self.terms == other.terms)

    def equal_through(self, other, order=None):
        self._check(other)
        k = min(self.known_order, other.known_order)
        if order is not None:
            k = min(k, order)
        diff = self - other
        return all(not c for w, c in diff.terms.items() if len(w) <= k)

    def is_zero(self, order=None):
        k = self.known_order if order is None else order
        return all(not c for w, c in self.terms.items() if len(w) <= k)

    def is_one(self, order=None):
        one = self.algebra.one()
        return (self - one).is_zero(order)

    def commutator(self, other):
        return self * other - other * self

    def permuted(self, perm):
        out = {}
        for w, c in self.terms.items():
            for mono, mult in self.algebra.permute_word(perm, w).items():
                cur = out.get(mono)
                val = c * mult if cur is None else cur + c * mult
                if val:
                    out[mono] = val
                elif cur is not None:
                    del out[mono]
        return HoloElt(self.algebra, out, self.known_order)

    def exp(self):
        if self.coefficient(EMPTY):
            raise ValueError("exp needs order >= 1")
        w = self.order()
        acc = self.algebra.one(self.known_order)
        if w is None:
            return acc
        term = acc
        k = 1
        while k * w <= self.known_order:
            term = term * self * Fraction(1, k)
            if not term.terms:
                break
            acc = acc + term
            k += 1
        return acc

    def log(self):
        if self.coefficient(EMPTY) != 1:
            raise ValueError("log needs constant term 1")
        u = self - self.algebra.one(self.known_order)
        w = u.order()
        acc = self.algebra.zero(self.known_order)
        if w is None:
            return acc
        power = self.algebra.one(self.known_order)
        k = 1
        while k * w <= self.known_order:
            power = power * u
            if not power.terms:
                break
            acc = acc + Fraction((-1) ** (k + 1), k) * power
            k += 1
        return acc

    def inverse(self):
        c0 = as_fraction(self.coefficient(EMPTY))
        if not c0:
            raise ValueError("no inverse: zero constant term")
        u = (1 / c0) * self - self.algebra.one(self.known_order)
        acc = self.algebra.one(self.known_order)
        power = acc
        sign = 1
        for _ in range(self.known_order):
            power = power * u
            sign = -sign
            if not power.terms:
                break
            acc = acc + sign * power
        return (1 / c0) * acc

    def __repr__(self):
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w))[:8]:
            name = ".".join(self.algebra.letters[b] for b in w) or "1"
            parts.append("%s %s" % (self.terms[w], name))
        more = " ..." if len(self.terms) > 8 else ""
        return "<HoloElt %s%s>" % ("; ".join(parts), more)


def embed_free(series: NCSeries, algebra: HoloAlgebra, images: dict) -> HoloElt:
    """Evaluate an NCSeries with letters mapped to order->=1 HoloElts."""
    missing = [a for a in series.alphabet if a not in images]
    if missing:
        raise ncseries.AlgebraError("no holonomy image for letters %r" % missing)
    ko = series.known_order
    for img in images.values():
        if img.coefficient(EMPTY):
            raise ValueError("holonomy images must have order >= 1")
        ko = min(ko, img.known_order)
    out = algebra.zero(ko)
    cache = {EMPTY: algebra.one(ko)}

    def product_for(word):
        got = cache.get(word)
        if got is not None:
            return got
        prod = product_for(word[:-1]) * images[series.alphabet[word[-1]]]
        cache[word] = prod
        return prod

    for word, coeff in series.rendered_words():
        if len(word) > ko:
            continue
        out = out + coeff * product_for(word)
    return out


def holonomy_algebra(n, maxdeg, cache_dir=None) -> HoloAlgebra:
    """Shared registry of built algebras; consults the disk cache when set."""
    key = (n, maxdeg)
    alg = _REGISTRY.get(key)
    if alg is not None:
        return alg
    if cache_dir is None:
        cache_dir = os.environ.get("GTASSOC_CACHE")
    if cache_dir:
        path = cache_path(cache_dir, n, maxdeg)
        if os.path.exists(path):
            try:
                alg = load_cache(path)
            except CacheError as exc:
                import warnings
                warnings.warn("stale holonomy cache %s (%s); rebuilding" % (path, exc))
                alg = None
    if alg is None:
        alg = HoloAlgebra(n, maxdeg)
    _REGISTRY[key] = alg
    return alg


# -- semidirect product kS_n |x U(T_n) ---------------------------------


def _perm_mul(p, q):
    # (p q)(i) = p(q(i))
    return tuple(p[q[i] - 1] for i in range(len(p)))


def _perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def transposition(n, r):
    """The adjacent transposition s_r = (r, r+1) in S_n."""
    perm = list(range(1, n + 1))
    perm[r - 1], perm[r] = perm[r], perm[r - 1]
    return tuple(perm)


class BnElt:
    """Element of the completed infinitesimal braid algebra kS_n |x U(T_n)."""

    __slots__ = ("algebra", "parts")

    def __init__(self, algebra, parts):
        self.algebra = algebra
        self.parts = {p: u for p, u in parts.items() if u.terms}

    @classmethod
    def unit(cls, algebra):
        n = algebra.n
        return cls(algebra, {tuple(range(1, n + 1)): algebra.one()})

    @classmethod
    def from_holo(cls, u: HoloElt):
        n = u.algebra.n
        return cls(u.algebra, {tuple(range(1, n + 1)): u})

    @classmethod
    def from_perm(cls, algebra, perm):
        return cls(algebra, {tuple(perm): algebra.one()})

    def __add__(self, other):
        parts = dict(self.parts)
        for p, u in other.parts.items():
            parts[p] = parts[p] + u if p in parts else u
        return BnElt(self.algebra, parts)

    def __neg__(self):
        return BnElt(self.algebra, {p: -u for p, u in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return BnElt(self.algebra, {p: scalar * u for p, u in self.parts.items()})

    def __mul__(self, other):
        if not isinstance(other, BnElt):
            return self.__rmul__(other)
        parts = {}
        for p, u in self.parts.items():
            for q, v in other.parts.items():
                pv = v.permuted(p)
                pq = _perm_mul(p, q)
                term = u * pv
                parts[pq] = parts[pq] + term if pq in parts else term
        return BnElt(self.algebra, parts)

    def inverse(self):
        """Inverse of an element whose leading part is a single permutation."""
        degree0 = {p: u.coefficient(EMPTY) for p, u in self.parts.items() if u.coefficient(EMPTY)}
        if len(degree0) != 1:
            raise ValueError("inverse implemented for single-permutation leading part")
        p0, c0 = next(iter(degree0.items()))
        c0 = as_fraction(c0)
        lead_inv = BnElt(self.algebra, {_perm_inv(p0): (1 / c0) * self.algebra.one().permuted(_perm_inv(p0))})
        # m = lead_inv * self - 1 has positive order; invert by Neumann series
        one = BnElt.unit(self.algebra)
        m = lead_inv * self - one
        acc = one
        power = one
        sign = 1
        for _ in range(self.algebra.maxdeg):
            power = power * m
            sign = -sign
            if not power.parts:
                break
            acc = acc + sign * power
        return acc * lead_inv

    def pure_part(self):
        """The U(T_n) component on the identity permutation; errors otherwise."""
        n = self.algebra.n
        ident = tuple(range(1, n + 1))
        for p in self.parts:
            if p != ident:
                raise ValueError("element has non-trivial symmetric part")
        return self.parts.get(ident, self.algebra.zero())

    def __eq__(self, other):
        return isinstance(other, BnElt) and self.algebra is other.algebra and self.parts == other.parts

    def equal_through(self, other, order=None):
        diff = self - other
        return all(u.is_zero(order) for u in diff.parts.values())


def phi_tilde_generators(phi_series: NCSeries, lam, algebra: HoloAlgebra):
    """Images of the braid generators under the morphism attached to an associator.

    sigma_i maps to Phi(t_{i,i+1}, Y_i) . s_i . exp(lam t_{i,i+1}/2) . Phi(Y_i, t_{i,i+1}).
    Returns a list indexed 1..n-1 of (image, inverse image) pairs.
    """
    n = algebra.n
    lam = as_fraction(lam)
    out = {}
    for i in range(1, n):
        t = algebra.generator(i, i + 1)
        y = algebra.y_element(i)  # Y_1 = 0, so Phi(t, Y_1) collapses to 1 by itself
        left = embed_free(phi_series, algebra, {"x": t, "y": y})
        right = embed_free(phi_series, algebra, {"x": y, "y": t})
        mid = (Fraction(lam, 2) * t).exp()
        s = BnElt.from_perm(algebra, transposition(n, i))
        image = BnElt.from_holo(left) * s * BnElt.from_holo(mid) * BnElt.from_holo(right)
        out[i] = (image, image.inverse())
    return out


def phi_tilde_eval(generators, algebra, braid_letters):
    """Evaluate a braid word (sequence of signed generator indices) through the images."""
    acc = BnElt.unit(algebra)
    for idx in braid_letters:
        image, inverse = generators[abs(idx)]
        acc = acc * (image if idx > 0 else inverse)
    return acc


# -- disk cache ---------------------------------------------------------


class CacheError(RuntimeError):
    pass


def cache_path(cache_dir, n, maxdeg):
    return os.path.join(cache_dir, "holonomy-n%d-deg%d.cache" % (n, maxdeg))


def save_cache(algebra: HoloAlgebra, path):
    """Write basis words and the complete single-letter reduction table."""
    lines = ["gtassoc-holonomy-cache version=%d n=%d maxdeg=%d" % (
        CACHE_FORMAT_VERSION, algebra.n, algebra.maxdeg)]
    dims = algebra.dimensions()
    lines.append("dims=%s" % ",".join(str(d) for d in dims))
    lines.append("letters=%s" % ",".join(algebra.letters))

    def wname(word):
        return ".".join(algebra.letters[b] for b in word) or "1"

    basis_by_degree = [algebra.basis_words(d) for d in range(algebra.maxdeg + 1)]
    for d, words in enumerate(basis_by_degree):
        lines.append("basis degree=%d count=%d" % (d, len(words)))
        for w in words:
            lines.append(wname(w))
    lines.append("reduction rows")
    for letter in range(len(algebra.letters)):
        for d in range(algebra.maxdeg):
            for w in basis_by_degree[d]:
                row = algebra.prepend(letter, w)
                body = ";".join("%s=%d" % (wname(k), v)
                                for k, v in sorted(row.items(), key=lambda kv: (len(kv[0]), kv[0])))
                lines.append("%s|%s\t%s" % (algebra.letters[letter], wname(w), body))
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_cache(path) -> HoloAlgebra:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise CacheError("empty cache file")
    head = dict(tok.partition("=")[::2] for tok in lines[0].split()[1:])
    if lines[0].split()[0] != "gtassoc-holonomy-cache":
        raise CacheError("not a holonomy cache file")
    if int(head.get("version", -1)) != CACHE_FORMAT_VERSION:
        raise CacheError("cache format version mismatch")
    n, maxdeg = int(head["n"]), int(head["maxdeg"])
    algebra = HoloAlgebra(n, maxdeg)
    dims_line = lines[1]
    stated = [int(v) for v in dims_line.partition("=")[2].split(",")]
    if stated != algebra.dimensions():
        raise CacheError("cached dimensions disagree with the construction")
    letters = tuple(lines[2].partition("=")[2].split(","))
    if letters != algebra.letters:
        raise CacheError("cached letters disagree")
    idx = algebra.letter_index

    def parse_word(text):
        return EMPTY if text == "1" else bytes(idx[p] for p in text.split("."))

    i = 3
    while i < len(lines) and not lines[i].startswith("reduction rows"):
        i += 1
    i += 1
    while i < len(lines):
        line = lines[i]
        i += 1
        if not line.strip():
            continue
        key, _, body = line.partition("\t")
        lname, _, wtext = key.partition("|")
        row = {}
        if body:
            for piece in body.split(";"):
                wtxt, _, val = piece.partition("=")
                row[parse_word(wtxt)] = int(val)
        algebra._prepend_cache[(idx[lname], parse_word(wtext))] = row
    return algebra


def verify_cache_round_trip(algebra: HoloAlgebra, path) -> bool:
    save_cache(algebra, path)
    loaded = load_cache(path)
    with open(path) as fh:
        first = fh.read()
    save_cache(loaded, path)
    with open(path) as fh:
        second = fh.read()
    return first == second
