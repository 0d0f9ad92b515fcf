#!/usr/bin/env python3
"""Regenerate the bundled Tutte 12-cage edge list.

The graph is built as the point/line incidence graph of the generalized
hexagon of order (2, 2), realized inside the split octonions over GF(2)
(Zorn vector matrices): points are the nonzero trace-zero elements of norm
zero, and lines are the 2-spaces on which the algebra product vanishes
identically.  The incidence graph of that geometry is bipartite, cubic,
has 126 vertices and girth 12 -- by the Moore bound it is the unique
(3,12)-cage, so the load-time validation in cagespectra.cages makes the
provenance of this file irrelevant to correctness.

Usage: python tools/gen_tutte_12cage.py > src/cagespectra/data/tutte_12cage.edges
"""

import itertools
import sys


def cross(u, v):
    return (
        (u[1] * v[2] + u[2] * v[1]) & 1,
        (u[2] * v[0] + u[0] * v[2]) & 1,
        (u[0] * v[1] + u[1] * v[0]) & 1,
    )


def dot(u, v):
    return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) & 1


def vadd(u, v):
    return tuple((a + b) & 1 for a, b in zip(u, v))


def smul(s, u):
    return tuple((s * a) & 1 for a in u)


def zorn_mul(x, y):
    a, v, w, b = x
    c, u, z, d = y
    return (
        (a * c + dot(v, z)) & 1,
        vadd(vadd(smul(a, u), smul(d, v)), cross(w, z)),
        vadd(vadd(smul(c, w), smul(b, z)), cross(v, u)),
        (b * d + dot(w, u)) & 1,
    )


def main():
    zero = (0, (0, 0, 0), (0, 0, 0), 0)
    vecs = list(itertools.product((0, 1), repeat=3))
    # trace-zero (diagonal a, a) elements of norm a^2 + v.w = 0
    points = sorted(
        (a, v, w, a)
        for a in (0, 1)
        for v in vecs
        for w in vecs
        if (a, v, w, a) != zero and (a + dot(v, w)) & 1 == 0
    )
    assert len(points) == 63
    idx = {p: i for i, p in enumerate(points)}

    def xadd(x, y):
        return ((x[0] + y[0]) & 1, vadd(x[1], y[1]), vadd(x[2], y[2]), (x[3] + y[3]) & 1)

    lines = set()
    for i, x in enumerate(points):
        for j in range(i + 1, len(points)):
            y = points[j]
            s = xadd(x, y)
            if s in idx and zorn_mul(x, y) == zero and zorn_mul(y, x) == zero:
                lines.add(tuple(sorted((i, j, idx[s]))))
    lines = sorted(lines)
    assert len(lines) == 63

    edges = []
    for li, line in enumerate(lines):
        for p in line:
            edges.append((p, 63 + li))
    edges.sort()
    out = sys.stdout
    out.write("# Tutte 12-cage: incidence graph of the generalized hexagon of order (2,2)\n")
    out.write("# vertices 0-62 are hexagon points, 63-125 are hexagon lines\n")
    out.write(f"126 {len(edges)}\n")
    for u, v in edges:
        out.write(f"{u} {v}\n")


if __name__ == "__main__":
    main()
