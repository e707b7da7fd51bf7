"""Independent reference implementations used only to check the library."""

from __future__ import annotations

import itertools
from fractions import Fraction

from cospectra import Graph


def cofactor_det(m: list[list[int]]) -> int:
    """Exact determinant by cofactor expansion (fine for n <= 7)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    rest = m[1:]
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rest]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def char_poly_at(m: list[list[int]], x: int) -> int:
    """det(xI - m) via cofactor expansion."""
    n = len(m)
    shifted = [[(x if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
    return cofactor_det(shifted)


def is_automorphism(g: Graph, pi: list[int]) -> bool:
    if sorted(pi) != list(range(g.n)):
        return False
    return all(g.has_edge(pi[u], pi[v]) for u, v in g.edges)


def brute_force_orbits(g: Graph, fixed: int | None) -> list[list[int]]:
    """Orbits by enumerating all n! permutations; usable for n <= 7."""
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for pi in itertools.permutations(range(g.n)):
        if fixed is not None and pi[fixed] != fixed:
            continue
        if is_automorphism(g, list(pi)):
            for a, b in enumerate(pi):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(vs) for vs in groups.values()), key=lambda o: o[0])


def rational_krylov_orthogonal(m: list[list[int]], u: int, v: int) -> bool:
    """Krylov orthogonality decided by building both Krylov bases explicitly
    over the rationals and checking all pairwise inner products."""
    n = len(m)

    def matvec(x):
        return [sum(Fraction(m[i][j]) * x[j] for j in range(n)) for i in range(n)]

    # spanning sets of the two Krylov spaces; orthogonality of the spans is
    # exactly the all-pairs inner product check
    def span_vectors(vec):
        out = [list(vec)]
        for _ in range(n - 1):
            vec = matvec(vec)
            out.append(list(vec))
        return out

    s = [Fraction(0)] * n
    d = [Fraction(0)] * n
    s[u] += 1
    s[v] += 1
    d[u] += 1
    d[v] -= 1
    for a in span_vectors(s):
        for b in span_vectors(d):
            if sum(x * y for x, y in zip(a, b)) != 0:
                return False
    return True
