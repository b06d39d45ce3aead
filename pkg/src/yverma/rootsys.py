"""Finite root systems from Cartan matrices, and PBW spanning counts.

A valid generalized Cartan matrix has 2 on the diagonal, nonpositive
integers off it, with A[i][j] = 0 iff A[j][i] = 0; it must additionally be
symmetrizable here: positive coprime integers d_i with d_i A[i][j] =
d_j A[j][i] are computed by propagating ratios along the Coxeter graph.

Positive roots are generated level by level using root strings: for a
root alpha of height h and a simple root alpha_i, the string through
alpha in direction alpha_i satisfies q = p - <alpha, alpha_i^vee> with
p the depth of the string below alpha, and alpha + alpha_i is a root iff
q >= 1.  Here <alpha, alpha_i^vee> = sum_j alpha_j A[i][j].  Systems that
keep producing roots past a height cap are rejected as non-finite.

``spanning_count`` counts the ordered PBW monomials in the negative root
vectors f_alpha^(r) available below a polynomial highest weight: the pair
(alpha, r) is admissible when r < sum_i [alpha : alpha_i] p_i, and a
weight-space spanning set at content eta is the set of multisets of
admissible pairs with total simple-root content eta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Optional, Sequence

from .errors import InputError

CartanMatrix = tuple[tuple[int, ...], ...]


def _as_matrix(a: Iterable[Iterable[int]]) -> CartanMatrix:
    rows = tuple(tuple(int(x) for x in row) for row in a)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InputError("Cartan matrix must be square and nonempty")
    return rows


def validate_cartan(a: Iterable[Iterable[int]]) -> CartanMatrix:
    """Check the generalized Cartan matrix axioms; returns the normalized tuple."""
    rows = _as_matrix(a)
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 2:
            raise InputError(f"diagonal entry A[{i}][{i}] must be 2")
        for j in range(n):
            if i != j:
                if rows[i][j] > 0:
                    raise InputError(f"off-diagonal A[{i}][{j}] must be <= 0")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise InputError(
                        f"zero pattern must be symmetric at ({i},{j})"
                    )
    return rows


def symmetrizers(a: Iterable[Iterable[int]]) -> tuple[int, ...]:
    """Positive coprime integers d with d_i A[i][j] = d_j A[j][i].

    Ratios are forced along edges of the Coxeter graph, so each connected
    component has a unique minimal solution; non-symmetrizable matrices
    (inconsistent cycles) are rejected.
    """
    rows = validate_cartan(a)
    n = len(rows)
    d: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        component = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or rows[i][j] == 0:
                    continue
                forced = d[i] * Fraction(rows[i][j], rows[j][i])
                if d[j] is None:
                    d[j] = forced
                    queue.append(j)
                    component.append(j)
                elif d[j] != forced:
                    raise InputError("Cartan matrix is not symmetrizable")
        denom_lcm = 1
        for i in component:
            q = d[i].denominator
            denom_lcm = denom_lcm * q // gcd(denom_lcm, q)
        nums = [int(d[i] * denom_lcm) for i in component]
        g = 0
        for x in nums:
            g = gcd(g, x)
        for i, x in zip(component, nums):
            d[i] = Fraction(x // g)
    out = tuple(int(x) for x in d)
    for i in range(n):
        for j in range(n):
            if out[i] * rows[i][j] != out[j] * rows[j][i]:
                raise InputError("Cartan matrix is not symmetrizable")
    return out


@dataclass(frozen=True)
class CartanData:
    """A validated Cartan matrix with its minimal positive symmetrizers."""

    matrix: CartanMatrix
    d: tuple[int, ...]

    @classmethod
    def from_matrix(cls, a: Iterable[Iterable[int]]) -> "CartanData":
        rows = validate_cartan(a)
        return cls(matrix=rows, d=symmetrizers(rows))

    @property
    def rank(self) -> int:
        return len(self.matrix)


#: Coordinate vector of a root over the simple roots.
Root = tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    rank: int
    positive: tuple[Root, ...]

    def count(self) -> int:
        return len(self.positive)

    def highest(self) -> Root:
        return self.positive[-1]


def root_height(alpha: Root) -> int:
    return sum(alpha)


def positive_roots(a: Iterable[Iterable[int]], max_height: int = 100) -> RootSystem:
    """Generate all positive roots by root strings; reject non-finite systems.

    Roots are returned sorted by (height, coordinates).  If generation is
    still producing new roots at ``max_height`` the matrix is not of
    finite type and ``InputError`` is raised.
    """
    rows = validate_cartan(a)
    n = len(rows)
    roots: set[Root] = set()
    frontier: list[Root] = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        roots.add(e)
        frontier.append(e)
    height = 1
    while frontier:
        if height >= max_height:
            raise InputError(
                f"root generation exceeded height {max_height}; "
                "Cartan matrix is not of finite type"
            )
        nxt: list[Root] = []
        for alpha in frontier:
            for i in range(n):
                pairing = sum(alpha[j] * rows[i][j] for j in range(n))
                depth = 0
                below = list(alpha)
                while True:
                    below[i] -= 1
                    if below[i] < 0 or tuple(below) not in roots:
                        break
                    depth += 1
                if depth - pairing >= 1:
                    up = list(alpha)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt
        height += 1
    ordered = sorted(roots, key=lambda r: (root_height(r), r))
    return RootSystem(rank=n, positive=tuple(ordered))


# Standard finite-type Cartan matrices.  Chain conventions: consecutive
# nodes are joined; for B_n the last simple root is short (A[n-1][n-2] = -2),
# C_n is its transpose, G2 is [[2,-1],[-3,2]] (d = (3,1)).
def cartan_matrix(label: str) -> CartanMatrix:
    label = label.strip().upper()
    if len(label) < 2 or label[0] not in "ABCDEFG" or not label[1:].isdigit():
        raise InputError(f"unknown Cartan type {label!r}")
    family, n = label[0], int(label[1:])
    mins = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
    maxs = {"E": 8, "F": 4, "G": 2}
    if n < mins[family] or (family in maxs and n > maxs[family]):
        raise InputError(f"unsupported rank for type {family}: {n}")

    def chain(n: int) -> list[list[int]]:
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            m[i][i + 1] = -1
            m[i + 1][i] = -1
        return m

    m = chain(n)
    if family == "B":
        m[n - 1][n - 2] = -2
    elif family == "C":
        m[n - 2][n - 1] = -2
    elif family == "D":
        m[n - 1][n - 2] = 0
        m[n - 2][n - 1] = 0
        m[n - 1][n - 3] = -1
        m[n - 3][n - 1] = -1
    elif family == "E":
        # node n attaches to node 3 of the A_{n-1} chain 1..n-1
        m = chain(n - 1)
        for row in m:
            row.append(0)
        m.append([0] * n)
        m[n - 1][n - 1] = 2
        m[n - 1][2] = -1
        m[2][n - 1] = -1
    elif family == "F":
        m[1][2] = -2
    elif family == "G":
        m[1][0] = -3
    return _as_matrix(m)


def spanning_count(
    p: Sequence[int], eta: Sequence[int], a: Iterable[Iterable[int]]
) -> int:
    """Number of admissible PBW multisets with simple-root content eta.

    ``p`` lists the polynomial degrees of the highest-weight components;
    a pair (alpha, r) is admissible when 0 <= r < sum_i [alpha:alpha_i] p_i,
    and multisets may repeat pairs.  Each positive root alpha contributing
    m times (in any exponents) accounts for a factor C(bound+m-1, m).
    """
    rows = validate_cartan(a)
    n = len(rows)
    p = [int(x) for x in p]
    eta = [int(x) for x in eta]
    if len(p) != n or len(eta) != n:
        raise InputError("p and eta must have one entry per simple root")
    if any(x < 0 for x in p) or any(x < 0 for x in eta):
        raise InputError("p and eta must be nonnegative")
    system = positive_roots(rows)
    counts: dict[Root, int] = {tuple(0 for _ in range(n)): 1}
    for alpha in system.positive:
        bound = sum(alpha[i] * p[i] for i in range(n))
        new_counts: dict[Root, int] = {}
        for content, ways in counts.items():
            m = 0
            while True:
                shifted = tuple(content[i] + m * alpha[i] for i in range(n))
                if any(shifted[i] > eta[i] for i in range(n)):
                    break
                mult = comb(bound + m - 1, m) if m else 1
                if mult:
                    new_counts[shifted] = new_counts.get(shifted, 0) + ways * mult
                m += 1
        counts = new_counts
    return counts.get(tuple(eta), 0)
