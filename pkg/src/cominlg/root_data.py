"""Root-system constants and Weyl combinatorics for the six cominuscule families.

Nodes are numbered 1..n in Bourbaki convention (E-series: node 2 hangs off
node 4).  Weight vectors are integer tuples in the fundamental-weight basis.
All arithmetic is exact.

Weight vectors here always live on the *dual* side of the marked pair: the
simple reflection ``s_i`` acts by ``lam - lam[i] * column_i(C)`` where ``C``
is the Cartan matrix of the stated family.  Column ``i`` of ``C`` is the
coefficient vector of the dual simple root, so for the simply-laced families
nothing changes, while for B/C this is exactly the lattice in which the orbit
of ``-omega_k`` is minuscule (every raising step has coefficient -1).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

Weight = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7")

_RANK_MIN = {"A": 1, "B": 2, "C": 2, "D": 4, "E6": 6, "E7": 7}
_RANK_EXACT = {"E6": 6, "E7": 7}


@dataclass(frozen=True)
class CominusculeDatum:
    """A cominuscule pair: Dynkin family, rank, and the marked node."""

    family: str
    rank: int
    node: int

    def __post_init__(self) -> None:
        fam, n, k = self.family, self.rank, self.node
        if fam not in _RANK_MIN:
            raise ValueError(f"unknown family {fam!r} (expected one of {FAMILIES})")
        if n < _RANK_MIN[fam]:
            raise ValueError(f"rank {n} too small for family {fam}")
        if fam in _RANK_EXACT and n != _RANK_EXACT[fam]:
            raise ValueError(f"family {fam} has rank {_RANK_EXACT[fam]}, got {n}")
        valid: tuple[int, ...]
        if fam == "A":
            valid = tuple(range(1, n + 1))
        elif fam == "B":
            valid = (1,)
        elif fam == "C":
            valid = (n,)
        elif fam == "D":
            valid = (1, n - 1, n)
        elif fam == "E6":
            valid = (1, 6)
        else:
            valid = (7,)
        if k not in valid:
            raise ValueError(f"node {k} is not cominuscule for {fam} rank {n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}/P{self.node}"


@functools.lru_cache(maxsize=None)
def dynkin_edges(datum: CominusculeDatum) -> tuple[tuple[int, int], ...]:
    """Undirected edges of the Dynkin diagram, as 1-based node pairs."""
    fam, n = datum.family, datum.rank
    if fam in ("A", "B", "C"):
        return tuple((i, i + 1) for i in range(1, n))
    if fam == "D":
        chain = tuple((i, i + 1) for i in range(1, n - 1))
        return chain + ((n - 2, n),)
    edges = ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4))
    if fam == "E7":
        edges = edges + ((6, 7),)
    return edges


@functools.lru_cache(maxsize=None)
def cartan_matrix(datum: CominusculeDatum) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with C[i][j] = <alpha_i, alpha_j^vee> (1-based nodes at [i-1][j-1]).

    With this convention the long-root side carries the -2: C_2 gives
    [[2, -1], [-2, 2]] with the long root at node 2.
    """
    n = datum.rank
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in dynkin_edges(datum):
        mat[a - 1][b - 1] = -1
        mat[b - 1][a - 1] = -1
    if datum.family == "B":
        mat[n - 2][n - 1] = -2
    elif datum.family == "C":
        mat[n - 1][n - 2] = -2
    return tuple(tuple(row) for row in mat)


@functools.lru_cache(maxsize=None)
def _dual_simple_roots(datum: CominusculeDatum) -> tuple[Weight, ...]:
    """Column i of the Cartan matrix: the i-th dual simple root in the dual weight basis."""
    cm = cartan_matrix(datum)
    n = datum.rank
    return tuple(tuple(cm[r][i] for r in range(n)) for i in range(n))


def reflect(datum: CominusculeDatum, i: int, lam: Weight) -> Weight:
    """Apply the simple reflection s_i to a weight vector (dual-side action)."""
    c = lam[i - 1]
    if c == 0:
        return lam
    col = _dual_simple_roots(datum)[i - 1]
    return tuple(x - c * a for x, a in zip(lam, col))


def weyl_apply(datum: CominusculeDatum, word: tuple[int, ...], lam: Weight) -> Weight:
    """Apply a sequence of simple reflections, first entry first."""
    for i in word:
        lam = reflect(datum, i, lam)
    return lam


def fundamental_weight(datum: CominusculeDatum, i: int) -> Weight:
    return tuple(1 if j == i - 1 else 0 for j in range(datum.rank))


_HIGHEST_ROOT_E = {"E6": (1, 2, 2, 3, 2, 1), "E7": (2, 2, 3, 4, 3, 2, 1)}


@functools.lru_cache(maxsize=None)
def highest_root(datum: CominusculeDatum) -> tuple[int, ...]:
    """Coefficients of the highest root in the simple-root basis."""
    fam, n = datum.family, datum.rank
    if fam == "A":
        return (1,) * n
    if fam == "B":
        return (1,) + (2,) * (n - 1)
    if fam == "C":
        return (2,) * (n - 1) + (1,)
    if fam == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    return _HIGHEST_ROOT_E[fam]


@functools.lru_cache(maxsize=None)
def comin_coefficients(datum: CominusculeDatum) -> tuple[int, ...]:
    """c_i = <omega_i^vee, theta>, i.e. the coefficient of alpha_i in the highest root."""
    c = highest_root(datum)
    if c[datum.node - 1] != 1:
        raise AssertionError(f"marked node of {datum} is not cominuscule")
    return c


def anticanonical_index(datum: CominusculeDatum) -> int:
    """Degree of the anticanonical divisor: 1 + sum_i c_i."""
    return 1 + sum(comin_coefficients(datum))


def _neighbors(datum: CominusculeDatum) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {i: [] for i in range(1, datum.rank + 1)}
    for a, b in dynkin_edges(datum):
        adj[a].append(b)
        adj[b].append(a)
    return {v: tuple(sorted(u)) for v, u in adj.items()}


def _component_pairs(
    datum: CominusculeDatum, comp: list[int], adj: dict[int, tuple[int, ...]]
) -> dict[int, int]:
    """The -w0 involution of one connected subdiagram, as a (partial) swap map."""
    cm = cartan_matrix(datum)
    inside = set(comp)
    nbr = {v: [u for u in adj[v] if u in inside] for v in comp}
    deg3 = [v for v in comp if len(nbr[v]) == 3]

    def walk(start: int, away_from: int) -> list[int]:
        path = [start]
        prev, cur = away_from, start
        while True:
            nxt = [u for u in nbr[cur] if u != prev]
            if not nxt:
                return path
            prev, cur = cur, nxt[0]
            path.append(cur)

    if not deg3:
        if len(comp) == 1:
            return {}
        simply_laced = all(
            cm[a - 1][b - 1] == -1 and cm[b - 1][a - 1] == -1
            for a in comp
            for b in nbr[a]
        )
        if not simply_laced:
            return {}  # B/C-type chain: -w0 acts trivially on the diagram
        end = next(v for v in comp if len(nbr[v]) == 1)
        order = walk(end, away_from=0)
        return {order[i]: order[-1 - i] for i in range(len(order))}

    fork = deg3[0]
    branches = sorted((walk(u, fork) for u in nbr[fork]), key=len)
    lengths = [len(b) for b in branches]
    if lengths[0] == 1 and lengths[1] == 1:
        # D-type: swap the two short leaves iff the component has odd size
        if len(comp) % 2 == 1:
            a, b = branches[0][0], branches[1][0]
            return {a: b, b: a}
        return {}
    if lengths == [1, 2, 2]:
        # E6: swap the two long branches, pairing nodes at equal distance
        out: dict[int, int] = {}
        for x, y in zip(branches[1], branches[2]):
            out[x] = y
            out[y] = x
        return out
    return {}  # E7 (and larger E-shapes): trivial involution


@functools.lru_cache(maxsize=None)
def _involution(datum: CominusculeDatum, removed: int | None) -> tuple[int, ...]:
    n = datum.rank
    adj = _neighbors(datum)
    sigma = list(range(n + 1))
    seen: set[int] = set() if removed is None else {removed}
    for start in range(1, n + 1):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        for a, b in _component_pairs(datum, comp, adj).items():
            sigma[a] = b
    return tuple(sigma[1:])


def dynkin_involution(datum: CominusculeDatum, removed: int) -> tuple[int, ...]:
    """The diagram involution of the Dynkin diagram with node `removed` deleted.

    Entry [i-1] is sigma_removed(i); the removed node is fixed.
    """
    if not 1 <= removed <= datum.rank:
        raise ValueError(f"node {removed} out of range for {datum}")
    return _involution(datum, removed)


def diagram_involution(datum: CominusculeDatum) -> tuple[int, ...]:
    """The -w0 involution of the full Dynkin diagram."""
    return _involution(datum, None)


@functools.lru_cache(maxsize=None)
def index_sequence(datum: CominusculeDatum, istar: int) -> tuple[int, ...]:
    """The node sequence (i_1, ..., i_{c+1}) driving the minor for node istar.

    i_1 = sigma_k(istar), i_2 = sigma_{i_1}(k), and thereafter each entry is
    the involution at the previous node applied to the one before that.
    """
    k = datum.node
    if istar == k:
        raise ValueError("istar equal to the marked node: the quantum term has no index sequence")
    if not 1 <= istar <= datum.rank:
        raise ValueError(f"node {istar} out of range for {datum}")
    c = comin_coefficients(datum)[istar - 1]
    a, b = istar, k
    seq = []
    for _ in range(c + 1):
        nxt = dynkin_involution(datum, b)[a - 1]
        seq.append(nxt)
        a, b = b, nxt
    return tuple(seq)


def all_data(max_rank: int = 7) -> tuple[CominusculeDatum, ...]:
    """Every cominuscule datum with rank at most max_rank, in a fixed order."""
    out: list[CominusculeDatum] = []
    for n in range(1, max_rank + 1):
        for k in range(1, n + 1):
            out.append(CominusculeDatum("A", n, k))
    for n in range(2, max_rank + 1):
        out.append(CominusculeDatum("B", n, 1))
        out.append(CominusculeDatum("C", n, n))
    for n in range(4, max_rank + 1):
        for k in (1, n - 1, n):
            out.append(CominusculeDatum("D", n, k))
    if max_rank >= 6:
        out.append(CominusculeDatum("E6", 6, 1))
        out.append(CominusculeDatum("E6", 6, 6))
    if max_rank >= 7:
        out.append(CominusculeDatum("E7", 7, 7))
    return tuple(out)
