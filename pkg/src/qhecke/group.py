"""Finite matrix groups given by generators.

Matrix convention: entry (row i, column j) is the coefficient of v_i in the
image of v_j.  Elements are enumerated breadth-first from the identity by
right multiplication with the generators in the order given, so element 0 is
always the identity and regenerating from the same list gives the same order.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .linalg import Matrix, determinant, identity, mat_mul, to_matrix, transpose
from .scalar import CycloField, Scalar

DEFAULT_GROUP_CAP = 4096


class GroupTooLarge(ValueError):
    pass


class SingularGenerator(ValueError):
    pass


class _NotDiagonal:
    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NotDiagonal"


NotDiagonal = _NotDiagonal()


class FiniteGroup:
    def __init__(self, elements: list[Matrix], mult_table: list[list[int]], inverse_table: list[int],
                 field: CycloField, n: int, generators: list[Matrix] | None = None):
        self.elements = elements
        self.mult_table = mult_table
        self.inverse_table = inverse_table
        self.field = field
        self.n = n
        self.generators = generators or []
        self._index = {m: k for k, m in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={len(self)}, n={self.n}, field={self.field!r})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def matrix(self, g: int) -> Matrix:
        return self.elements[g]

    def index(self, m: Matrix) -> int:
        return self._index[m]

    def mul(self, g: int, h: int) -> int:
        return self.mult_table[g][h]

    def inverse(self, g: int) -> int:
        return self.inverse_table[g]

    def conjugate(self, g: int, h: int) -> int:
        """Index of h^-1 g h."""
        return self.mult_table[self.mult_table[self.inverse_table[h]][g]][h]

    def centralizer(self, g: int) -> list[int]:
        t = self.mult_table
        return [h for h in range(len(self)) if t[h][g] == t[g][h]]

    def is_abelian(self) -> bool:
        t = self.mult_table
        return all(t[a][b] == t[b][a] for a in range(len(self)) for b in range(a))

    def conjugacy_classes(self) -> list[list[int]]:
        seen = set()
        classes = []
        for g in range(len(self)):
            if g in seen:
                continue
            cls = sorted({self.conjugate(g, h) for h in range(len(self))})
            seen.update(cls)
            classes.append(cls)
        return classes


def generate(gens: Sequence[Sequence[Sequence]], field: CycloField, n: int | None = None,
             cap: int = DEFAULT_GROUP_CAP) -> FiniteGroup:
    """Close the generator matrices under multiplication (BFS from the identity)."""
    mats = [to_matrix(g, field) for g in gens]
    if n is None:
        if not mats:
            raise ValueError("dimension needed for an empty generator list")
        n = len(mats[0])
    for m in mats:
        if len(m) != n:
            raise ValueError("generators must all be n x n")
        if not determinant(m):
            raise SingularGenerator("generator matrix is singular")
    e = identity(n, field)
    elements = [e]
    index = {e: 0}
    right: list[list[int]] = []
    queue = deque([0])
    while queue:
        k = queue.popleft()
        row = []
        for m in mats:
            y = mat_mul(elements[k], m)
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"group has more than {cap} elements")
                j = len(elements)
                index[y] = j
                elements.append(y)
                queue.append(j)
            row.append(j)
        right.append(row)
    N = len(elements)
    table = [[0] * N for _ in range(N)]
    for a in range(N):
        for b in range(N):
            table[a][b] = index[mat_mul(elements[a], elements[b])]
    inverse = [table[a].index(0) for a in range(N)]
    return FiniteGroup(elements, table, inverse, field, n, mats)


def trivial_group(n: int, field: CycloField) -> FiniteGroup:
    return generate([], field, n=n)


def is_monomial_matrix(m: Matrix) -> bool:
    rows_ok = all(sum(1 for x in r if x) == 1 for r in m)
    cols_ok = all(sum(1 for x in c if x) == 1 for c in transpose(m))
    return rows_ok and cols_ok


def is_diagonal_matrix(m: Matrix) -> bool:
    return all(not m[i][j] for i in range(len(m)) for j in range(len(m)) if i != j)


def is_monomial(G: FiniteGroup) -> bool:
    return all(is_monomial_matrix(m) for m in G.elements)


def diagonal_characters(G: FiniteGroup):
    """chi[(g, i)] = i-th diagonal entry of g, or NotDiagonal."""
    if not all(is_diagonal_matrix(m) for m in G.elements):
        return NotDiagonal
    return {(g, i): m[i][i] for g, m in enumerate(G.elements) for i in range(G.n)}


def character(G: FiniteGroup, chi: dict, i: int) -> list[Scalar]:
    return [chi[(g, i)] for g in range(len(G))]
