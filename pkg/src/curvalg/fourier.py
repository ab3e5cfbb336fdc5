"""Discrete Fourier transform for K[S_3] and its inverse.

The transform maps the group ring onto block-diagonal matrices with one
block per partition of 3, of sizes (1, 2, 1) for ((3), (2,1), (1,1,1)).
The two-dimensional block uses the natural-representation matrices frozen
below; they were derived once from the matrix-unit anchors of the
two-dimensional class, and the exhaustive homomorphism test plus both
anchor identities pin them uniquely (see tests/test_fourier.py).
"""

from __future__ import annotations

from fractions import Fraction

from .groupring import GroupRingElement
from .perms import Perm, all_perms, check_partition, inverse, sign
from .scalars import RationalFunction, as_scalar

PARTITIONS_3: tuple[tuple[int, ...], ...] = ((3,), (2, 1), (1, 1, 1))

BLOCK_DIMS = {(3,): 1, (2, 1): 2, (1, 1, 1): 1}

# Frozen 2x2 natural-representation matrices for the (2,1) block.
_NAT_2_1: dict[Perm, tuple[tuple[int, int], tuple[int, int]]] = {
    (1, 2, 3): ((1, 0), (0, 1)),
    (1, 3, 2): ((0, 1), (1, 0)),
    (2, 1, 3): ((1, -1), (0, -1)),
    (2, 3, 1): ((-1, 1), (-1, 0)),
    (3, 1, 2): ((0, -1), (1, -1)),
    (3, 2, 1): ((-1, 0), (-1, 1)),
}

Matrix = tuple[tuple[RationalFunction, ...], ...]


def _mat(rows) -> Matrix:
    return tuple(tuple(as_scalar(v) for v in row) for row in rows)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), RationalFunction.zero()) for j in range(m))
        for i in range(n)
    )


def mat_scale(c, a: Matrix) -> Matrix:
    c = as_scalar(c)
    return tuple(tuple(c * v for v in row) for row in a)


def mat_zero(d: int) -> Matrix:
    z = RationalFunction.zero()
    return tuple(tuple(z for _ in range(d)) for _ in range(d))


def mat_identity(d: int) -> Matrix:
    return tuple(
        tuple(as_scalar(1 if i == j else 0) for j in range(d)) for i in range(d)
    )


def mat_is_zero(a: Matrix) -> bool:
    return all(not v for row in a for v in row)


def rep_matrix(partition, p: Perm) -> Matrix:
    """Irreducible representation matrix of p for a partition of 3."""
    partition = check_partition(tuple(partition))
    if sum(partition) != 3:
        raise ValueError(f"{partition} is not a partition of 3")
    if len(p) != 3:
        raise ValueError("rep_matrix expects an S_3 permutation")
    if partition == (3,):
        return _mat(((1,),))
    if partition == (1, 1, 1):
        return _mat(((sign(p),),))
    return _mat(_NAT_2_1[tuple(p)])


class FourierBlocks:
    """Block-diagonal image of the transform: one square block per partition."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        store = {}
        for partition in PARTITIONS_3:
            block = blocks.get(partition) if hasattr(blocks, "get") else None
            if block is None:
                block = mat_zero(BLOCK_DIMS[partition])
            block = _mat(block)
            d = BLOCK_DIMS[partition]
            if len(block) != d or any(len(row) != d for row in block):
                raise ValueError(f"block for {partition} must be {d}x{d}")
            store[partition] = block
        object.__setattr__(self, "blocks", store)

    def __setattr__(self, name, value):
        raise AttributeError("FourierBlocks values are immutable")

    def __getitem__(self, partition) -> Matrix:
        return self.blocks[tuple(partition)]

    def __eq__(self, other):
        if not isinstance(other, FourierBlocks):
            return NotImplemented
        return self.blocks == other.blocks

    def __mul__(self, other):
        if not isinstance(other, FourierBlocks):
            return NotImplemented
        return FourierBlocks(
            {lam: mat_mul(self.blocks[lam], other.blocks[lam]) for lam in PARTITIONS_3}
        )

    def nonzero_partitions(self) -> list[tuple[int, ...]]:
        return [lam for lam in PARTITIONS_3 if not mat_is_zero(self.blocks[lam])]

    def to_lists(self):
        return {
            "".join(str(v) for v in lam): [[str(v) for v in row] for row in self.blocks[lam]]
            for lam in PARTITIONS_3
        }

    def __repr__(self):
        return f"FourierBlocks({self.to_lists()!r})"


def dft(a: GroupRingElement) -> FourierBlocks:
    """Blockwise sum of coefficient-weighted representation matrices."""
    if a.r != 3:
        raise ValueError("the transform is implemented for K[S_3] only")
    blocks = {}
    for lam in PARTITIONS_3:
        acc = mat_zero(BLOCK_DIMS[lam])
        for p, c in a.terms.items():
            acc = mat_add(acc, mat_scale(c, rep_matrix(lam, p)))
        blocks[lam] = acc
    return FourierBlocks(blocks)


def inverse_dft(blocks: FourierBlocks) -> GroupRingElement:
    """Trace reconstruction a(p) = (1/6) sum_lam d_lam tr(D_lam(p^-1) A_lam)."""
    sixth = as_scalar(Fraction(1, 6))
    terms = {}
    for p in all_perms(3):
        pinv = inverse(p)
        acc = RationalFunction.zero()
        for lam in PARTITIONS_3:
            d = BLOCK_DIMS[lam]
            prod = mat_mul(rep_matrix(lam, pinv), blocks[lam])
            tr = sum((prod[i][i] for i in range(d)), RationalFunction.zero())
            acc = acc + d * tr
        terms[p] = sixth * acc
    return GroupRingElement(3, terms)


def block_idempotent(kind: str, nu=None) -> FourierBlocks:
    """The matrix idempotent Y or X_nu placed in the (2,1) block."""
    zero = RationalFunction.zero()
    one = RationalFunction.one()
    if kind.upper() == "Y":
        block = ((zero, zero), (zero, one))
    elif kind.upper() == "X":
        n = as_scalar(nu if nu is not None else RationalFunction.nu())
        block = ((one, zero), (n, zero))
    else:
        raise ValueError("kind must be 'Y' or 'X'")
    return FourierBlocks({(2, 1): block})
