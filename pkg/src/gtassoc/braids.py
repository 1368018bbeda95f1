"""Braid words on n strands as sequences of signed Artin generator indices.

Named elements:

    delta_r = s_{r-1} ... s_2 s_1^2 s_2 ... s_{r-1}
    xi_ij   = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}
    gamma_r = (s_1 ... s_{r-1})^r

Text syntax, one token per factor: ``s1 s2^-1 d3 x13 g4`` stands for
sigma_1 sigma_2^{-1} delta_3 xi_13 gamma_4.
"""

from __future__ import annotations

import re


def delta_word(n, r):
    if not 2 <= r <= n:
        raise ValueError("delta_%d undefined on %d strands" % (r, n))
    down = list(range(r - 1, 1, -1))
    up = list(range(2, r))
    return tuple(down + [1, 1] + up)


def xi_word(n, i, j):
    if not 1 <= i < j <= n:
        raise ValueError("xi_%d%d needs 1 <= i < j <= n" % (i, j))
    pre = list(range(j - 1, i, -1))
    post = [-k for k in range(i + 1, j)]
    return tuple(pre + [i, i] + post)


def gamma_word(n, r):
    if not 1 <= r <= n:
        raise ValueError("gamma_%d undefined on %d strands" % (r, n))
    block = list(range(1, r))
    return tuple(block * r)


class BraidWord:
    """A word in the Artin generators; letters are signed indices."""

    __slots__ = ("n", "letters")

    def __init__(self, n, letters=()):
        self.n = int(n)
        letters = tuple(int(v) for v in letters)
        for v in letters:
            if v == 0 or abs(v) > self.n - 1:
                raise ValueError("generator index %d out of range for %d strands" % (v, n))
        self.letters = letters

    @classmethod
    def sigma(cls, n, i, power=1):
        if power >= 0:
            return cls(n, (i,) * power)
        return cls(n, (-i,) * (-power))

    @classmethod
    def delta(cls, n, r):
        return cls(n, delta_word(n, r))

    @classmethod
    def xi(cls, n, i, j):
        return cls(n, xi_word(n, i, j))

    @classmethod
    def gamma(cls, n, r):
        return cls(n, gamma_word(n, r))

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("braid words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.n, tuple(-v for v in reversed(self.letters)))

    def __eq__(self, other):
        return isinstance(other, BraidWord) and (self.n, self.letters) == (other.n, other.letters)

    def __hash__(self):
        return hash((self.n, self.letters))

    def __repr__(self):
        return "<BraidWord n=%d %s>" % (self.n, format_braid(self))


_TOKEN = re.compile(r"^(s|d|x|g)(\d+)(?:\^(-?\d+))?$")


def parse_braid(text, n) -> BraidWord:
    word = BraidWord(n)
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError("bad braid token %r" % token)
        kind, digits, power = m.group(1), m.group(2), m.group(3)
        power = 1 if power is None else int(power)
        if kind == "s":
            base = BraidWord.sigma(n, int(digits))
        elif kind == "d":
            base = BraidWord.delta(n, int(digits))
        elif kind == "g":
            base = BraidWord.gamma(n, int(digits))
        else:
            if len(digits) != 2:
                raise ValueError("xi token needs two single-digit indices: %r" % token)
            base = BraidWord.xi(n, int(digits[0]), int(digits[1]))
        if power < 0:
            base = base.inverse()
            power = -power
        for _ in range(power):
            word = word * base
    return word


def format_braid(word: BraidWord) -> str:
    out = []
    letters = list(word.letters)
    i = 0
    while i < len(letters):
        v = letters[i]
        run = 1
        while i + run < len(letters) and letters[i + run] == v:
            run += 1
        power = run if v > 0 else -run
        tok = "s%d" % abs(v)
        out.append(tok if power == 1 else "%s^%d" % (tok, power))
        i += run
    return " ".join(out) or "e"
