"""
Exact sparse linear algebra on coordinate vectors.

A vector is a dict {column index: nonzero field element}. Row reduction is
delegated to sympy's sparse domain matrices (SDM), so every echelon basis,
kernel and intersection below is exact and deterministic.
"""

from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.matrices.sdm import SDM

Vector = Dict[int, object]


def clean(v: Vector) -> Vector:
    return {i: c for i, c in v.items() if c}


def add_scaled(target: Vector, v: Vector, c) -> None:
    """target += c * v, in place, dropping cancelled entries."""
    for i, x in v.items():
        y = target.get(i)
        s = x * c if y is None else y + x * c
        if s:
            target[i] = s
        elif y is not None:
            del target[i]


def rref(vectors: Iterable[Vector], ncols: int, K) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Reduced row echelon basis of the span; rows ordered by pivot."""
    rows = {}
    for v in vectors:
        v = clean(v)
        if v:
            rows[len(rows)] = v
    if not rows:
        return [], ()
    reduced, pivots = SDM(rows, (len(rows), ncols), K).rref()
    echelon = [dict(reduced[i]) for i in sorted(reduced)]
    return echelon, tuple(pivots)


def reduce_vector(v: Vector, echelon: Sequence[Vector], pivots: Sequence[int]) -> Vector:
    """Residue of v modulo the span of an rref basis (zero iff v is in the span)."""
    residue = clean(v)
    for row, p in zip(echelon, pivots):
        c = residue.get(p)
        if c:
            add_scaled(residue, row, -c)
    return residue


def coordinates(v: Vector, pivots: Sequence[int]) -> List:
    """Coordinates of a vector of the row space in its rref basis."""
    return [v.get(p) for p in pivots]


def rank(vectors: Iterable[Vector], ncols: int, K) -> int:
    return len(rref(vectors, ncols, K)[1])


def _zero_left_block(rows: Sequence[Vector], pivots: Sequence[int], split: int) -> List[Vector]:
    # Rows whose pivot lies right of the split have an all-zero left block.
    return [
        {i - split: c for i, c in row.items()}
        for row, p in zip(rows, pivots)
        if p >= split
    ]


def kernel(images: Sequence[Vector], ncols: int, K) -> List[Vector]:
    """Basis of {a : sum_i a_i images[i] = 0}, in source coordinates."""
    augmented = []
    for i, image in enumerate(images):
        row = dict(clean(image))
        row[ncols + i] = K.one
        augmented.append(row)
    rows, pivots = rref(augmented, ncols + len(images), K)
    return _zero_left_block(rows, pivots, ncols)


def intersection(first: Sequence[Vector], second: Sequence[Vector], ncols: int, K) -> List[Vector]:
    """Basis of span(first) ∩ span(second) by Zassenhaus' stacked reduction."""
    stacked = []
    for v in first:
        row = dict(v)
        row.update({ncols + i: c for i, c in v.items()})
        stacked.append(row)
    for v in second:
        stacked.append(dict(v))
    rows, pivots = rref(stacked, 2 * ncols, K)
    return _zero_left_block(rows, pivots, ncols)
