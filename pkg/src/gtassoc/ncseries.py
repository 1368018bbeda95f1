"""Truncated noncommutative power series over exact coefficients.

A series lives over a fixed ordered alphabet; words are stored as ``bytes``
of letter indices.  Every series carries ``maxdeg`` (the truncation bound)
and ``known_order`` (the degree up to which coefficients are guaranteed
exact); no operation ever reports a coefficient beyond its known order.

The grouplike test goes through the Dynkin idempotent on the logarithm:
a homogeneous component of degree n is a Lie element iff the right-to-left
Dynkin bracketing D satisfies D(w) = n*w, and a series with constant term 1
is grouplike iff its log is Lie degree by degree.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .symcoef import as_fraction, parse_coeff, parse_ring_tag, render_coeff, ring_tag

EMPTY = b""


class AlgebraError(ValueError):
    """Alphabet or coefficient-ring mismatch between operands."""


def _coerce(ring, value):
    if ring is None:
        return as_fraction(value)
    return ring.coerce(value)


class NCSeries:
    __slots__ = ("alphabet", "maxdeg", "known_order", "ring", "terms")

    def __init__(self, alphabet, maxdeg, terms=None, ring=None, known_order=None):
        self.alphabet = tuple(alphabet)
        self.maxdeg = int(maxdeg)
        self.ring = ring
        ko = self.maxdeg if known_order is None else min(int(known_order), self.maxdeg)
        self.known_order = ko
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if len(word) > ko:
                    continue
                if coeff:
                    clean[bytes(word)] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, alphabet, maxdeg, ring=None, known_order=None):
        return cls(alphabet, maxdeg, {}, ring, known_order)

    @classmethod
    def one(cls, alphabet, maxdeg, ring=None, known_order=None):
        unit = Fraction(1) if ring is None else ring.one
        return cls(alphabet, maxdeg, {EMPTY: unit}, ring, known_order)

    @classmethod
    def letter(cls, alphabet, name, maxdeg, ring=None, known_order=None):
        alphabet = tuple(alphabet)
        idx = alphabet.index(name)
        unit = Fraction(1) if ring is None else ring.one
        return cls(alphabet, maxdeg, {bytes([idx]): unit}, ring, known_order)

    def scaled_copy(self, terms, known_order=None):
        return NCSeries(self.alphabet, self.maxdeg, terms, self.ring,
                        self.known_order if known_order is None else known_order)

    # -- basic access -------------------------------------------------

    def word_index(self, word_names):
        idx = {name: i for i, name in enumerate(self.alphabet)}
        return bytes(idx[n] for n in word_names)

    def coefficient(self, word):
        """Coefficient of a word given as bytes or an iterable of letter names."""
        if not isinstance(word, bytes):
            word = self.word_index(tuple(word))
        c = self.terms.get(word)
        if c is None:
            return Fraction(0) if self.ring is None else self.ring.zero
        return c

    def order(self):
        """omega(f): degree of the lowest monomial, or None for the zero series."""
        if not self.terms:
            return None
        return min(len(w) for w in self.terms)

    def homogeneous(self, degree):
        return self.scaled_copy({w: c for w, c in self.terms.items() if len(w) == degree})

    def max_stored_degree(self):
        return max((len(w) for w in self.terms), default=0)

    def truncated(self, maxdeg, known_order=None):
        ko = min(self.known_order, maxdeg) if known_order is None else known_order
        return NCSeries(self.alphabet, maxdeg,
                        {w: c for w, c in self.terms.items() if len(w) <= maxdeg},
                        self.ring, ko)

    def with_known_order(self, known_order):
        return NCSeries(self.alphabet, self.maxdeg, self.terms, self.ring, known_order)

    def promote(self, ring):
        if ring == self.ring:
            return self
        if self.ring is not None and ring is not None:
            missing = set(self.ring.symbols) - set(ring.symbols)
            if missing:
                raise AlgebraError("cannot promote series: target ring lacks %r" % sorted(missing))
        if ring is None:
            raise AlgebraError("cannot demote series coefficients to Q")
        return NCSeries(self.alphabet, self.maxdeg,
                        {w: ring.coerce(c) for w, c in self.terms.items()},
                        ring, self.known_order)

    def _check_compatible(self, other):
        if self.alphabet != other.alphabet:
            raise AlgebraError("alphabet mismatch: %r vs %r" % (self.alphabet, other.alphabet))
        if not (self.ring == other.ring):
            raise AlgebraError("coefficient ring mismatch: %r vs %r" % (self.ring, other.ring))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, NCSeries):
            self._check_compatible(other)
            ko = min(self.known_order, other.known_order)
            out = dict(self.terms)
            for w, c in other.terms.items():
                cur = out.get(w)
                s = c if cur is None else cur + c
                if s:
                    out[w] = s
                elif cur is not None:
                    del out[w]
            return NCSeries(self.alphabet, self.maxdeg, out, self.ring, ko)
        return self + NCSeries.one(self.alphabet, self.maxdeg, self.ring, self.known_order) * other

    def __sub__(self, other):
        return self + (-other if isinstance(other, NCSeries) else (-1) * other)

    def __neg__(self):
        return self.scaled_copy({w: -c for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        c = _coerce(self.ring, scalar)
        if not c:
            return NCSeries.zero(self.alphabet, self.maxdeg, self.ring, self.known_order)
        return self.scaled_copy({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCSeries):
            return self.__rmul__(other)
        self._check_compatible(other)
        wa = self.order()
        wb = other.order()
        if wa is None or wb is None:
            ko = min(self.known_order, other.known_order)
            return NCSeries.zero(self.alphabet, self.maxdeg, self.ring, ko)
        ko = min(self.known_order + wb, other.known_order + wa, self.maxdeg)
        out = {}
        for w1, c1 in self.terms.items():
            room = ko - len(w1)
            if room < 0:
                continue
            for w2, c2 in other.terms.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                c = c1 * c2
                cur = out.get(w)
                s = c if cur is None else cur + c
                if s:
                    out[w] = s
                elif cur is not None:
                    del out[w]
        return NCSeries(self.alphabet, self.maxdeg, out, self.ring, ko)

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.ring == other.ring
                and self.terms == other.terms)

    def equal_through(self, other, order=None):
        """Coefficientwise equality up to min(known orders) or an explicit order."""
        self._check_compatible(other)
        k = min(self.known_order, other.known_order)
        if order is not None:
            if order > k:
                raise ValueError("comparison order %d exceeds known order %d" % (order, k))
            k = order
        for w, c in self.terms.items():
            if len(w) <= k and c != other.terms.get(w, 0 * c):
                return False
        for w, c in other.terms.items():
            if len(w) <= k and w not in self.terms and c:
                return False
        return True

    def is_one(self, order=None):
        k = self.known_order if order is None else order
        for w, c in self.terms.items():
            if len(w) > k:
                continue
            if w == EMPTY:
                if c != 1:
                    return False
            elif c:
                return False
        return self.coefficient(EMPTY) == 1

    def is_zero(self, order=None):
        k = self.known_order if order is None else order
        return all(not c for w, c in self.terms.items() if len(w) <= k)

    def inverse(self):
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.coefficient(EMPTY)
        c0f = as_fraction(c0)
        if not c0f:
            raise ValueError("series with zero constant term has no inverse")
        one = NCSeries.one(self.alphabet, self.maxdeg, self.ring, self.known_order)
        u = (1 / c0f) * self - one
        acc = one
        power = one
        sign = 1
        for _ in range(self.known_order):
            power = power * u
            sign = -sign
            if not power.terms:
                break
            acc = acc + sign * power
        return (1 / c0f) * acc

    def rendered_words(self):
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            yield word, self.terms[word]

    def __repr__(self):
        bits = []
        for word, coeff in itertools.islice(self.rendered_words(), 12):
            name = ".".join(self.alphabet[b] for b in word) or "1"
            bits.append("%s %s" % (render_coeff(coeff), name))
        more = " ..." if len(self.terms) > 12 else ""
        return "<NCSeries %s deg<=%d known<=%d>" % ("; ".join(bits), self.maxdeg, self.known_order)


class LieSeries(NCSeries):
    """NCSeries whose homogeneous components pass the Dynkin test."""

    def __init__(self, alphabet, maxdeg, terms=None, ring=None, known_order=None):
        super().__init__(alphabet, maxdeg, terms, ring, known_order)
        if self.coefficient(EMPTY):
            raise ValueError("a Lie series has no constant term")
        if not is_lie(self):
            raise ValueError("series fails the Dynkin test; not a Lie element")


def nc_mul(f: NCSeries, g: NCSeries) -> NCSeries:
    return f * g


def commutator(f: NCSeries, g: NCSeries) -> NCSeries:
    return f * g - g * f


def nc_exp(f: NCSeries) -> NCSeries:
    w = f.order()
    if f.coefficient(EMPTY):
        raise ValueError("exp requires a series of order >= 1")
    acc = NCSeries.one(f.alphabet, f.maxdeg, f.ring, f.known_order)
    if w is None:
        return acc
    term = acc
    k = 1
    while k * w <= f.known_order:
        term = term * f * Fraction(1, k)
        if not term.terms:
            break
        acc = acc + term
        k += 1
    return acc


def nc_log(g: NCSeries) -> NCSeries:
    if g.coefficient(EMPTY) != 1:
        raise ValueError("log requires constant term 1")
    u = g - NCSeries.one(g.alphabet, g.maxdeg, g.ring, g.known_order)
    w = u.order()
    acc = NCSeries.zero(g.alphabet, g.maxdeg, g.ring, g.known_order)
    if w is None:
        return acc
    power = NCSeries.one(g.alphabet, g.maxdeg, g.ring, g.known_order)
    k = 1
    while k * w <= g.known_order:
        power = power * u
        if not power.terms:
            break
        acc = acc + Fraction((-1) ** (k + 1), k) * power
        k += 1
    return acc


def nc_substitute(f: NCSeries, images: dict, grouplike: bool = False) -> NCSeries:
    """Substitute letters of f by series.

    Mode (i), ``grouplike=False``: every image must have order >= 1 and is
    substituted directly.  Mode (ii), ``grouplike=True``: every image must be
    grouplike and its logarithm is substituted, following the convention
    f(u, v) = f(log u, log v) for group elements.
    """
    missing = [a for a in f.alphabet if a not in images]
    if missing:
        raise AlgebraError("no image for letters %r" % missing)
    vals = {}
    ko = f.known_order
    sample = None
    for name in f.alphabet:
        img = images[name]
        if grouplike:
            if not is_grouplike(img):
                raise ValueError("image of %r is not grouplike" % name)
            img = nc_log(img)
        else:
            if img.coefficient(EMPTY):
                raise ValueError("image of %r has nonzero constant term" % name)
        vals[name] = img
        ko = min(ko, img.known_order)
        sample = img
    out = NCSeries.zero(sample.alphabet, sample.maxdeg, sample.ring, ko)
    prefix_cache = {EMPTY: NCSeries.one(sample.alphabet, sample.maxdeg, sample.ring, ko)}

    def product_for(word):
        cached = prefix_cache.get(word)
        if cached is not None:
            return cached
        prod = product_for(word[:-1]) * vals[f.alphabet[word[-1]]]
        prefix_cache[word] = prod
        return prod

    for word, coeff in f.rendered_words():
        if len(word) > ko:
            continue
        out = out + coeff * product_for(word)
    return out


def letter_swap(f: NCSeries, mapping: dict) -> NCSeries:
    """Relabel letters by a bijection name -> name (pure permutation of the alphabet)."""
    idx = {name: i for i, name in enumerate(f.alphabet)}
    table = {i: idx[mapping.get(name, name)] for name, i in idx.items()}
    out = {}
    for w, c in f.terms.items():
        nw = bytes(table[b] for b in w)
        out[nw] = out.get(nw, 0 * c) + c
    return f.scaled_copy(out)


def bch(u: NCSeries, v: NCSeries) -> LieSeries:
    """log(exp(u) exp(v)), certified Lie by the Dynkin test."""
    z = nc_log(nc_exp(u) * nc_exp(v))
    return LieSeries(z.alphabet, z.maxdeg, z.terms, z.ring, z.known_order)


def _dynkin_word(word, alphabet, maxdeg, ring):
    """Right-to-left bracketing [w1,[w2,[...,wn]]] as an NCSeries."""
    acc = NCSeries.letter(alphabet, alphabet[word[-1]], maxdeg, ring)
    for b in reversed(word[:-1]):
        letter = NCSeries.letter(alphabet, alphabet[b], maxdeg, ring)
        acc = letter * acc - acc * letter
    return acc


def dynkin(f: NCSeries) -> NCSeries:
    """The Dynkin map D applied to every homogeneous component."""
    out = NCSeries.zero(f.alphabet, f.maxdeg, f.ring, f.known_order)
    for word, coeff in f.terms.items():
        if not word:
            raise ValueError("Dynkin map undefined on constant terms")
        out = out + coeff * _dynkin_word(word, f.alphabet, f.maxdeg, f.ring)
    return out


def is_lie(f: NCSeries) -> bool:
    """True iff every homogeneous component c_n satisfies D(c_n) = n c_n."""
    if f.coefficient(EMPTY):
        return False
    for d in range(1, f.max_stored_degree() + 1):
        comp = f.homogeneous(d)
        if not comp.terms:
            continue
        if not dynkin(comp).equal_through(d * comp):
            return False
    return True


def lie_project(f: NCSeries) -> LieSeries:
    """Degreewise D/n projection onto the free Lie subspace."""
    if f.order() is None or f.order() < 1:
        if f.coefficient(EMPTY):
            raise ValueError("cannot Lie-project a series with constant term")
    out = NCSeries.zero(f.alphabet, f.maxdeg, f.ring, f.known_order)
    for d in range(1, f.max_stored_degree() + 1):
        comp = f.homogeneous(d)
        if comp.terms:
            out = out + Fraction(1, d) * dynkin(comp)
    return LieSeries(out.alphabet, out.maxdeg, out.terms, out.ring, out.known_order)


def is_grouplike(g: NCSeries) -> bool:
    """Constant term 1 and Lie logarithm, the Hausdorff-group membership test."""
    if g.coefficient(EMPTY) != 1:
        return False
    return is_lie(nc_log(g))


# -- Lyndon bases -----------------------------------------------------


def lyndon_words(n_letters: int, degree: int):
    """All Lyndon words of the given length over letters 0..n_letters-1 (Duval)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == degree:
            out.append(bytes(w))
        while len(w) < degree:
            w.append(w[-m])
        while w and w[-1] == n_letters - 1:
            w.pop()
    return sorted(out)


def lyndon_bracket(word: bytes, alphabet, maxdeg, ring=None) -> NCSeries:
    """Standard-factorization bracketing of a Lyndon word, expanded as a series."""
    if len(word) == 1:
        return NCSeries.letter(alphabet, alphabet[word[0]], maxdeg, ring)
    # longest proper Lyndon suffix gives the standard factorization
    for i in range(1, len(word)):
        suffix = word[i:]
        if suffix == min(suffix[j:] for j in range(len(suffix))):
            left = lyndon_bracket(word[:i], alphabet, maxdeg, ring)
            right = lyndon_bracket(suffix, alphabet, maxdeg, ring)
            return left * right - right * left
    raise ValueError("not a Lyndon word: %r" % word)


def lyndon_basis(alphabet, degree: int, maxdeg=None, ring=None):
    """Basis of the degree-d component of the free Lie algebra.

    Returns a list of (word_string, series) pairs ordered lexicographically;
    the cardinality is the Witt number.
    """
    alphabet = tuple(alphabet)
    if maxdeg is None:
        maxdeg = degree
    out = []
    for word in lyndon_words(len(alphabet), degree):
        name = ".".join(alphabet[b] for b in word)
        out.append((name, lyndon_bracket(word, alphabet, maxdeg, ring)))
    return out


# -- text format ------------------------------------------------------


def word_text(alphabet, word: bytes) -> str:
    if not word:
        return "1"
    return ".".join(alphabet[b] for b in word)


def to_text(f: NCSeries, extra=None) -> str:
    header = "alphabet=%s maxdeg=%d ring=%s" % (",".join(f.alphabet), f.maxdeg, ring_tag(f.ring))
    if f.known_order != f.maxdeg:
        header += " knownorder=%d" % f.known_order
    if extra:
        for k in sorted(extra):
            header += " %s=%s" % (k, extra[k])
    lines = [header]
    for word, coeff in f.rendered_words():
        lines.append("%s\t%s" % (word_text(f.alphabet, word), render_coeff(coeff)))
    return "\n".join(lines) + "\n"


def from_text(text: str):
    """Parse the series text format; returns (series, header_fields)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty series text")
    fields = {}
    for tok in lines[0].split():
        key, _, val = tok.partition("=")
        fields[key] = val
    alphabet = tuple(fields["alphabet"].split(",")) if fields["alphabet"] else ()
    maxdeg = int(fields["maxdeg"])
    ring = parse_ring_tag(fields["ring"])
    known = int(fields.get("knownorder", maxdeg))
    idx = {name: i for i, name in enumerate(alphabet)}
    terms = {}
    for line in lines[1:]:
        wtxt, _, ctxt = line.partition("\t")
        word = EMPTY if wtxt == "1" else bytes(idx[p] for p in wtxt.split("."))
        terms[word] = parse_coeff(ctxt, ring)
    return NCSeries(alphabet, maxdeg, terms, ring, known), fields
