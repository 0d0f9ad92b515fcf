"""Distance-regularity structure detection and quotient matrices.

Detection is exhaustive: every vertex pair at every distance is counted, no
heuristics.  Quotient matrices carry exact rational entries and an
integer-exact equitability flag, because the distance matrices they quotient
are integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graphs import Graph, bfs_distances, bipartition, distance_matrix

__all__ = [
    "DBRArrays",
    "IntersectionArray",
    "QuotientMatrix",
    "dbr_arrays",
    "dbr_quotient_from_arrays",
    "dr_intersection_array",
    "is_transmission_regular",
    "quotient_matrix",
    "transmission",
    "transmissions",
]


@dataclass(frozen=True)
class IntersectionArray:
    """Intersection array {b_0..b_{d-1}; c_1..c_d} of a distance-regular graph.

    Derived data: a_i = k - b_i - c_i and the shell sizes k_i, which satisfy
    k_0 = 1 and k_{i+1} c_{i+1} = k_i b_i.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise ValueError("b and c sequences must have equal positive length")
        if self.c[0] != 1:
            raise ValueError("c_1 must be 1")
        if any(x < 0 for x in self.b + self.c):
            raise ValueError("intersection numbers must be nonnegative")
        if any(a < 0 for a in self.a):
            raise ValueError("derived a_i must be nonnegative")

    @property
    def k(self) -> int:
        return self.b[0]

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def a(self) -> tuple[int, ...]:
        """a_i = k - b_i - c_i for i = 0..d (with c_0 = b_d = 0)."""
        b = self.b + (0,)
        c = (0,) + self.c
        return tuple(self.k - b[i] - c[i] for i in range(self.d + 1))

    @property
    def shell_sizes(self) -> tuple[int, ...]:
        """k_i = number of vertices at distance i, from k_{i+1} c_{i+1} = k_i b_i."""
        sizes = [1]
        for i in range(self.d):
            num = sizes[-1] * self.b[i]
            if num % self.c[i]:
                raise ValueError("shell size recurrence is not integral")
            sizes.append(num // self.c[i])
        return tuple(sizes)

    @property
    def vertex_count(self) -> int:
        return sum(self.shell_sizes)

    def transmission(self) -> int:
        return sum(i * s for i, s in enumerate(self.shell_sizes))

    def __str__(self):
        return "{%s; %s}" % (
            ",".join(map(str, self.b)),
            ",".join(map(str, self.c)),
        )


def _vertex_profile(G: Graph, dist_row: Sequence[int]):
    """Per-distance (c_i, b_i) counts seen from one vertex, or None.

    Returns (b, c, shells) where b[i] / c[i+1] are the constant neighbor
    counts one shell out / in; None when any shell is inhomogeneous.
    """
    ecc = max(dist_row)
    cs: list[Optional[int]] = [None] * (ecc + 1)
    bs: list[Optional[int]] = [None] * (ecc + 1)
    shells = [0] * (ecc + 1)
    for y in range(G.n):
        i = dist_row[y]
        shells[i] += 1
        if i == 0:
            continue
        c = sum(1 for z in G.adj[y] if dist_row[z] == i - 1)
        b = sum(1 for z in G.adj[y] if dist_row[z] == i + 1)
        if cs[i] is None:
            cs[i], bs[i] = c, b
        elif cs[i] != c or bs[i] != b:
            return None
    return cs, bs, shells


def dr_intersection_array(G: Graph) -> Optional[IntersectionArray]:
    """Intersection array when G is distance-regular, else None."""
    G.require_connected()
    degs = G.degrees()
    k = degs[0]
    if any(d != k for d in degs):
        return None
    ref = None
    for v in range(G.n):
        prof = _vertex_profile(G, bfs_distances(G, v))
        if prof is None:
            return None
        cs, bs, shells = prof
        if ref is None:
            ref = (cs, bs, shells)
        elif ref != (cs, bs, shells):
            return None
    cs, bs, shells = ref
    d = len(shells) - 1
    if d == 0:
        return None
    b = (k,) + tuple(bs[1:d])
    c = tuple(cs[1 : d + 1])
    try:
        arr = IntersectionArray(b, c)
    except ValueError:
        return None
    if arr.shell_sizes != tuple(shells):
        return None
    return arr


@dataclass(frozen=True)
class DBRArrays:
    """Per-part intersection arrays of a distance-biregular graph.

    part1/part2 hold the (b, c) sequences shared by all vertices of the
    respective part; shells1/shells2 are the common shell sizes, and the
    parts themselves are recorded (part of vertex 0 first).
    """

    part1_b: tuple[int, ...]
    part1_c: tuple[int, ...]
    part2_b: tuple[int, ...]
    part2_c: tuple[int, ...]
    shells1: tuple[int, ...]
    shells2: tuple[int, ...]
    parts: tuple[tuple[int, ...], tuple[int, ...]]

    def __post_init__(self):
        for b, c, shells in (
            (self.part1_b, self.part1_c, self.shells1),
            (self.part2_b, self.part2_c, self.shells2),
        ):
            if len(b) != len(c):
                raise ValueError("b and c sequences must align")
            if c and c[0] != 1:
                raise ValueError("c_1 must be 1")
            # counting identity l_{i+1} c_{i+1} = l_i b_i along each array
            # (the 0-based c tuple holds c_1..c_d, so c_{i+1} is c[i])
            for i in range(len(b)):
                if shells[i + 1] * c[i] != shells[i] * b[i]:
                    raise ValueError("shell counting identity violated")

    @property
    def d1(self) -> int:
        return len(self.part1_b)

    @property
    def d2(self) -> int:
        return len(self.part2_b)


def dbr_arrays(G: Graph) -> Optional[DBRArrays]:
    """Per-part arrays when G is distance-biregular, else None."""
    G.require_connected()
    parts = bipartition(G)
    if parts is None:
        return None
    per_part = []
    for part in parts:
        ref = None
        for v in part:
            prof = _vertex_profile(G, bfs_distances(G, v))
            if prof is None:
                return None
            cs, bs, shells = prof
            if ref is None:
                ref = (cs, bs, shells)
            elif ref != (cs, bs, shells):
                return None
        per_part.append(ref)
    (cs1, bs1, sh1), (cs2, bs2, sh2) = per_part
    k1 = len(G.adj[parts[0][0]])
    k2 = len(G.adj[parts[1][0]])
    d1, d2 = len(sh1) - 1, len(sh2) - 1
    try:
        return DBRArrays(
            part1_b=(k1,) + tuple(bs1[1:d1]),
            part1_c=tuple(cs1[1 : d1 + 1]),
            part2_b=(k2,) + tuple(bs2[1:d2]),
            part2_c=tuple(cs2[1 : d2 + 1]),
            shells1=tuple(sh1),
            shells2=tuple(sh2),
            parts=parts,
        )
    except ValueError:
        return None


def transmission(G: Graph, v: int) -> int:
    """Sum of distances from v to every other vertex."""
    G.require_connected()
    return sum(bfs_distances(G, v))


def transmissions(G: Graph) -> list[int]:
    G.require_connected()
    return [sum(bfs_distances(G, v)) for v in range(G.n)]


def is_transmission_regular(G: Graph) -> Optional[int]:
    """The common transmission p when it exists, else None."""
    ts = transmissions(G)
    return ts[0] if all(t == ts[0] for t in ts) else None


@dataclass(frozen=True)
class QuotientMatrix:
    """Block average-row-sum matrix of a symmetric matrix under a partition."""

    q: tuple[tuple[Fraction, ...], ...]
    partition: tuple[tuple[int, ...], ...]
    equitable: bool

    @property
    def t(self) -> int:
        return len(self.q)

    def as_floats(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.q], dtype=float)

    def as_ints(self) -> np.ndarray:
        if any(x.denominator != 1 for row in self.q for x in row):
            raise ValueError("quotient matrix entries are not integral")
        return np.array([[int(x) for x in row] for row in self.q], dtype=np.int64)

    def to_json(self) -> list[list[list[int]]]:
        return [[[x.numerator, x.denominator] for x in row] for row in self.q]


def quotient_matrix(D, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Average row sums of each block of D under the partition.

    The partition must cover the index set with disjoint nonempty parts.
    Equitability (constant row sums inside every block) is decided with
    integer exactness, no tolerances.
    """
    D = np.asarray(D)
    n = D.shape[0]
    parts = tuple(tuple(int(v) for v in part) for part in partition)
    flat = [v for part in parts for v in part]
    if any(not part for part in parts):
        raise ValueError("partition parts must be nonempty")
    if sorted(flat) != list(range(n)):
        raise ValueError("partition must cover all indices exactly once")
    q = []
    equitable = True
    for pi in parts:
        row = []
        for pj in parts:
            block = D[np.ix_(pi, pj)]
            sums = block.sum(axis=1)
            if not np.all(sums == sums[0]):
                equitable = False
            total = int(block.sum())
            row.append(Fraction(total, len(pi)))
        q.append(tuple(row))
    return QuotientMatrix(tuple(q), parts, equitable)


def dbr_quotient_from_arrays(arrays: DBRArrays) -> QuotientMatrix:
    """2x2 distance quotient of a DBR graph computed from shell sizes alone.

    From a vertex of one part, even-distance shells lie in its own part and
    odd-distance shells in the other, so the four block row sums are fixed
    by the shell sizes: an integer matrix, equitable by construction.
    """
    sh1, sh2 = arrays.shells1, arrays.shells2
    q11 = sum(i * s for i, s in enumerate(sh1) if i % 2 == 0)
    q12 = sum(i * s for i, s in enumerate(sh1) if i % 2 == 1)
    q21 = sum(i * s for i, s in enumerate(sh2) if i % 2 == 1)
    q22 = sum(i * s for i, s in enumerate(sh2) if i % 2 == 0)
    q = (
        (Fraction(q11), Fraction(q12)),
        (Fraction(q21), Fraction(q22)),
    )
    return QuotientMatrix(q, arrays.parts, True)
