"""Partitions and standard Young tableaux, in the column convention.

A partition [a1 >= a2 >= ...] lists *column heights*: the diagram of
[3,2] has two columns of heights 3 and 2, and [n] is a single column
(the shape whose braid image is sigma_r -> q).  Cells are (line, col)
with col = 1..len(parts), line = 1..parts[col-1]; a standard tableau
increases along lines and columns.

The content of label i is line(i) - col(i).  Tableaux of one shape are
ordered by the *reverse* lexicographic order on content vectors
(c_2,...,c_n), largest vector first, which puts the column-superstandard
tableau in position one.  The axial distance of adjacent labels r, r+1
placed in different lines and columns is |content(r) - content(r+1)|.
"""

from __future__ import annotations

import math


class Partition:
    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing and positive")
        self.parts = parts

    @classmethod
    def parse(cls, text):
        return cls(int(p) for p in text.split(","))

    @property
    def n(self):
        return sum(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "[%s]" % ",".join(str(p) for p in self.parts)

    def cells(self):
        """All (line, col) cells, columns of height parts[col-1]."""
        out = []
        for c, height in enumerate(self.parts, start=1):
            for l in range(1, height + 1):
                out.append((l, c))
        return out

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        m = self.parts[0]
        return Partition(sum(1 for p in self.parts if p >= l) for l in range(1, m + 1))

    def is_hook(self) -> bool:
        """A hook is [m, 1, 1, ..., 1] (equivalently its transpose diagram)."""
        return all(p == 1 for p in self.parts[1:])

    def contains(self, other: "Partition") -> bool:
        if len(other.parts) > len(self.parts):
            return False
        return all(self.parts[i] >= p for i, p in enumerate(other.parts))

    def hook_length(self, cell):
        l, c = cell
        arm = self.parts[c - 1] - l
        leg = sum(1 for cc in range(c + 1, len(self.parts) + 1) if self.parts[cc - 1] >= l)
        return arm + leg + 1

    def tableau_count(self):
        """Hook length formula; used as an oracle for the enumeration."""
        prod = 1
        for cell in self.cells():
            prod *= self.hook_length(cell)
        return math.factorial(self.n) // prod

    def hook_pairs(self):
        """Cell pairs (x, y) with col(x) < col(y) and line(x) > line(y);
        delta(x,y) = (col difference) + (line difference)."""
        cells = self.cells()
        out = []
        for (l1, c1) in cells:
            for (l2, c2) in cells:
                if c1 < c2 and l1 > l2:
                    out.append(((l1, c1), (l2, c2), (c2 - c1) + (l1 - l2)))
        return out


def partitions_of(n):
    """All partitions of n, largest-first parts, in reverse lexicographic order."""
    def gen(total, maximum):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maximum), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest
    return [Partition(p) for p in gen(n, n)]


class StandardTableau:
    __slots__ = ("shape", "pos", "entry")

    def __init__(self, shape: Partition, pos):
        self.shape = shape
        self.pos = dict(pos)          # label -> (line, col)
        self.entry = {cell: k for k, cell in self.pos.items()}

    def line(self, label):
        return self.pos[label][0]

    def col(self, label):
        return self.pos[label][1]

    def content(self, label):
        l, c = self.pos[label]
        return l - c

    def content_vector(self):
        return tuple(self.content(i) for i in range(2, self.shape.n + 1))

    def transpose(self) -> "StandardTableau":
        return StandardTableau(self.shape.conjugate(),
                               {k: (c, l) for k, (l, c) in self.pos.items()})

    def swap_adjacent(self, r) -> "StandardTableau":
        pos = dict(self.pos)
        pos[r], pos[r + 1] = pos[r + 1], pos[r]
        return StandardTableau(self.shape, pos)

    def rows(self):
        """Line-by-line labels, line 1 first (for serialization)."""
        nlines = self.shape.parts[0] if self.shape.parts else 0
        out = []
        for l in range(1, nlines + 1):
            row = [self.entry[(l, c)] for c in range(1, len(self.shape.parts) + 1)
                   if (l, c) in self.entry]
            out.append(row)
        return out

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.pos == other.pos

    def __hash__(self):
        return hash(tuple(sorted(self.pos.items())))

    def __repr__(self):
        return "<Tableau %s>" % ("; ".join(",".join(map(str, row)) for row in self.rows()))


def tableaux(shape: Partition):
    """All standard tableaux of the shape, reverse-lex by content vector."""
    cells = shape.cells()
    n = shape.n
    out = []

    def fill(label, remaining, pos):
        if not remaining:
            out.append(StandardTableau(shape, pos))
            return
        for cell in list(remaining):
            l, c = cell
            if (l > 1 and (l - 1, c) in remaining) or (c > 1 and (l, c - 1) in remaining):
                continue
            pos[label] = cell
            rest = remaining - {cell}
            fill(label + 1, rest, pos)
            del pos[label]

    fill(1, frozenset(cells), {})
    out.sort(key=lambda t: t.content_vector(), reverse=True)
    assert len(out) == shape.tableau_count()
    return out


def axial_distance(t: StandardTableau, r) -> int:
    """Positive distance between r and r+1 when they sit in different
    lines and columns; errors on the same-line / same-column cases."""
    if t.line(r) == t.line(r + 1):
        raise ValueError("labels %d, %d share a line" % (r, r + 1))
    if t.col(r) == t.col(r + 1):
        raise ValueError("labels %d, %d share a column" % (r, r + 1))
    return abs(t.content(r) - t.content(r + 1))
