"""Combinatorial machinery for the symbolic perturbation.

Every coordinate (i, j) conceptually receives its own infinitesimal
perturbation, and products of those infinitesimals are compared purely by
their sets of index pairs -- nothing is ever evaluated numerically.  The
depth-vector encoding walks all relevant terms of a perturbed determinant in
order of decreasing significance.

Two matrix kinds exist:

* ``DELTA`` -- a D x D matrix whose entries are all perturbed.
* ``LAMBDA`` -- a D x D matrix whose last column is the constant 1 and is
  never perturbed.

A depth vector is a tuple ``(v_1, ..., v_D, sentinel)``; the sentinel is D+1
for DELTA and D for LAMBDA, which also lets the kind be recovered from the
vector itself.  Entry ``v_i`` marks an active perturbation ``(i, v_i)``
exactly when ``v_i < v_{i+1}``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence


class Kind(Enum):
    LAMBDA = "lambda"
    DELTA = "delta"


IndexPair = tuple[int, int]  # (point index i >= 0, coordinate index j >= 1)


def pair_precedes(a: IndexPair, b: IndexPair) -> bool:
    """True iff pair a carries a larger perturbation than pair b.

    Order: (i, j) before (k, l) iff i < k, or i = k and j > l.
    """
    return a[0] < b[0] or (a[0] == b[0] and a[1] > b[1])


def _pair_max(pairs):
    # Largest pair under pair_precedes, i.e. the most significant one in a
    # set comparison.
    return max(pairs, key=lambda p: (p[0], -p[1]))


def index_set_smaller(a: frozenset, b: frozenset) -> bool:
    """True iff the perturbation product with pair set a dominates the one
    with pair set b (for any positive coefficients, small perturbation).

    Undefined (raises) for equal sets: a determinant expansion never yields
    two terms with identical pair sets.
    """
    if a == b:
        raise ValueError("index-set comparison undefined for equal sets")
    only_a = a - b
    if not only_a:
        return True
    only_b = b - a
    if not only_b:
        return False
    return pair_precedes(_pair_max(only_a), _pair_max(only_b))


def sentinel_for(kind: Kind, size: int) -> int:
    return size if kind is Kind.LAMBDA else size + 1


def initial_vector(kind: Kind, size: int) -> tuple:
    s = sentinel_for(kind, size)
    return (s,) * (size + 1)


def terminal_vector(kind: Kind, size: int) -> tuple:
    return tuple(range(1, size + 1)) + (sentinel_for(kind, size),)


def is_terminal(v: Sequence[int]) -> bool:
    size = len(v) - 1
    return tuple(v[:size]) == tuple(range(1, size + 1))


def next_v(v: Sequence[int]) -> tuple:
    """Successor vector: decrement the first entry above 1, copying its new
    value into every earlier slot.  Calling past the terminal vector
    (1, 2, ..., D; sentinel) is an error.
    """
    if is_terminal(v):
        raise ValueError("next_v called past the terminal vector")
    w = list(v)
    i = 0
    while w[i] == 1:
        i += 1
    w[i] -= 1
    for k in range(i):
        w[k] = w[i]
    return tuple(w)


def vector_more_significant(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff vector a encodes a more significant term than b.

    Decided by the highest position where they differ.
    """
    for j in range(len(a) - 2, -1, -1):
        if a[j] != b[j]:
            return a[j] > b[j]
    raise ValueError("vectors are equal")


@dataclass(frozen=True)
class TermDescriptor:
    """One relevant term of a perturbed determinant.

    ``deleted_rows``/``deleted_cols`` are 1-based positions inside the
    matrix; ``eps`` carries the perturbation pair set with true point
    indices (identity mapping when no row table is given).
    """

    depth: Optional[int]
    k: int
    sign: int
    deleted_rows: tuple[int, ...]
    deleted_cols: tuple[int, ...]
    eps: frozenset
    v: tuple


def decode(v: Sequence[int], row_indices: Optional[Sequence[int]] = None,
           depth: Optional[int] = None) -> TermDescriptor:
    """Decode a depth vector into the term it encodes.

    ``row_indices`` maps matrix row 1..D to the true point index; rows must
    be listed in increasing index order.
    """
    size = len(v) - 1
    active = [(i, v[i - 1]) for i in range(1, size + 1) if v[i - 1] < v[i]]
    sign = 1
    for r, c in active:
        if (r + c) % 2:
            sign = -sign
    if row_indices is None:
        eps = frozenset(active)
    else:
        eps = frozenset((row_indices[r - 1], c) for r, c in active)
    return TermDescriptor(
        depth=depth,
        k=size - len(active),
        sign=sign,
        deleted_rows=tuple(r for r, _ in active),
        deleted_cols=tuple(c for _, c in active),
        eps=eps,
        v=tuple(v),
    )
