"""Permutations in one-line notation, Young tableaux and hook lengths.

A permutation of S_r (r <= 5) is a tuple of the images ``(p(1), ..., p(r))``.
Composition follows ``(p . q)(i) = p(q(i))``.  The fixed ordering of the six
S_3 elements used by every report in this package is lexicographic:

    p1=[1,2,3] p2=[1,3,2] p3=[2,1,3] p4=[2,3,1] p5=[3,1,2] p6=[3,2,1]
"""

from __future__ import annotations

import itertools

Perm = tuple[int, ...]

MAX_R = 5


def check_perm(p: Perm) -> Perm:
    r = len(p)
    if r < 1 or r > MAX_R:
        raise ValueError(f"group size {r} out of supported range 1..{MAX_R}")
    if sorted(p) != list(range(1, r + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{r}")
    return p


def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose(p: Perm, q: Perm) -> Perm:
    """(p . q)(i) = p(q(i))."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(p[q[i] - 1] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def sign(p: Perm) -> int:
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def transposition(r: int, a: int, b: int) -> Perm:
    out = list(range(1, r + 1))
    out[a - 1], out[b - 1] = b, a
    return tuple(out)


def all_perms(r: int) -> list[Perm]:
    """All of S_r in lexicographic one-line order."""
    return list(itertools.permutations(range(1, r + 1)))


S3_ORDER: tuple[Perm, ...] = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (2, 3, 1),
    (3, 1, 2),
    (3, 2, 1),
)


def enumerate_s3_ordered() -> tuple[Perm, ...]:
    """The six S_3 permutations in the fixed report order p1..p6."""
    return S3_ORDER


def perm_str(p: Perm) -> str:
    return "[" + ",".join(str(v) for v in p) + "]"



class YoungTableau:
    """A filling of a partition-shaped frame with the numbers 1..r."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        shape = tuple(len(row) for row in rows)
        check_partition(shape)
        r = sum(shape)
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, r + 1)):
            raise ValueError("tableau entries must be exactly 1..r")
        if r > MAX_R:
            raise ValueError(f"group size {r} out of supported range 1..{MAX_R}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("YoungTableau values are immutable")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        ncols = len(self.rows[0])
        return tuple(
            tuple(row[c] for row in self.rows if len(row) > c) for c in range(ncols)
        )

    def is_standard(self) -> bool:
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, YoungTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"YoungTableau({self.rows!r})"


def check_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    parts = tuple(int(v) for v in parts)
    if not parts or any(v <= 0 for v in parts):
        raise ValueError(f"{parts} is not a partition")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    return parts


def partitions(r: int):
    """All partitions of r in reverse-lexicographic order."""

    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(r, r)


def hook_dimension(parts) -> int:
    """Number of standard tableaux of the given shape (hook length formula)."""
    parts = check_partition(tuple(parts))
    r = sum(parts)
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])]
    prod = 1
    for i, rowlen in enumerate(parts):
        for j in range(rowlen):
            arm = rowlen - j - 1
            leg = conj[j] - i - 1
            prod *= arm + leg + 1
    fact = 1
    for k in range(2, r + 1):
        fact *= k
    return fact // prod


def standard_tableaux(parts) -> list[YoungTableau]:
    """Brute-force enumeration of standard tableaux (oracle for hook_dimension)."""
    parts = check_partition(tuple(parts))
    r = sum(parts)
    out: list[YoungTableau] = []

    def rec(filled, rows):
        if filled == r:
            out.append(YoungTableau([row for row in rows if row]))
            return
        val = filled + 1
        for i, rowlen in enumerate(parts):
            cur = len(rows[i])
            if cur >= rowlen:
                continue
            if i > 0 and len(rows[i - 1]) <= cur:
                continue
            rows[i].append(val)
            rec(filled + 1, rows)
            rows[i].pop()

    rec(0, [[] for _ in parts])
    return out


def _perms_of_subset(r: int, subset: tuple[int, ...]):
    """Permutations of S_r that map the subset onto itself and fix the rest."""
    for images in itertools.permutations(subset):
        out = list(range(1, r + 1))
        for pos, img in zip(subset, images):
            out[pos - 1] = img
        yield tuple(out)


def _group_of_blocks(r: int, blocks) -> list[Perm]:
    members = [identity(r)]
    for block in blocks:
        if len(block) < 2:
            continue
        members = [
            compose(m, q) for m in members for q in _perms_of_subset(r, tuple(block))
        ]
    return members


def horizontal_permutations(t: YoungTableau) -> list[Perm]:
    """The row-preserving subgroup H_t."""
    return _group_of_blocks(t.size, t.rows)


def vertical_permutations(t: YoungTableau) -> list[Perm]:
    """The column-preserving subgroup V_t."""
    return _group_of_blocks(t.size, t.columns())
