"""Dense bit-packed GF(2) linear algebra.

Vectors are Python ints used as bitsets (bit j = coordinate j); a matrix is
a list of row ints.  Pieces here are small (at most a few hundred columns),
so word-level row operations on ints are plenty.
"""

from __future__ import annotations

__all__ = [
    "rank",
    "rref",
    "reduce_mod",
    "kernel_basis",
    "solve_combination",
]


def rref(rows: list[int]) -> list[int]:
    """Reduced row-echelon basis of the row space (pivot-sorted, no zeros)."""
    basis: list[int] = []  # kept fully reduced, sorted by descending pivot
    for row in rows:
        row = _reduce(basis, row)
        if row:
            # back-substitute the new pivot into the existing basis
            pivot = row.bit_length() - 1
            basis = [b ^ row if (b >> pivot) & 1 else b for b in basis]
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def _reduce(basis: list[int], v: int) -> int:
    for b in basis:
        if (v >> (b.bit_length() - 1)) & 1:
            v ^= b
    return v


def rank(rows: list[int]) -> int:
    return len(rref(rows))


def reduce_mod(basis_rref: list[int], v: int) -> int:
    """Canonical coset representative of v modulo a row-reduced space."""
    return _reduce(basis_rref, v)


def kernel_basis(rows: list[int]) -> list[int]:
    """Combination masks c with XOR of the selected rows zero; rows indexed
    by bit position in the mask."""
    work = [(row, 1 << i) for i, row in enumerate(rows)]
    basis: list[tuple[int, int]] = []
    out: list[int] = []
    for row, tag in work:
        for b, bt in basis:
            if b and (row >> (b.bit_length() - 1)) & 1:
                row ^= b
                tag ^= bt
        if row:
            basis.append((row, tag))
            basis.sort(key=lambda p: -p[0])
        else:
            out.append(tag)
    return out


def solve_combination(rows: list[int], target: int) -> int | None:
    """A combination mask c with XOR of the selected rows equal to target,
    or None if target is outside the row space."""
    basis: list[tuple[int, int]] = []
    for i, row in enumerate(rows):
        tag = 1 << i
        for b, bt in basis:
            if (row >> (b.bit_length() - 1)) & 1:
                row ^= b
                tag ^= bt
        if row:
            basis.append((row, tag))
            basis.sort(key=lambda p: -p[0])
    v, mask = target, 0
    for b, bt in basis:
        if (v >> (b.bit_length() - 1)) & 1:
            v ^= b
            mask ^= bt
    return None if v else mask
