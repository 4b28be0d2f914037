"""Root systems, the reference-lattice catalog, and fingerprint identification.

Roots are the norm-2 vectors of a definite lattice.  Their span decomposes
into an orthogonal sum of simply-laced root lattices (types A, D, E), and
each irreducible piece is pinned down by its rank together with its root
count: A_n has n(n+1) roots, D_n has 2n(n-1), and E6/E7/E8 have 72/126/240.
The identification of the rank-12 and rank-16 lattices in this package works
through an invariant fingerprint (rank, parity, determinant, defect, mu,
root system), never through an isometry search.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from hermlat.charvec import min_characteristic
from hermlat.forms import flatten_vector
from hermlat.lattice import (
    DEFAULT_NODE_BUDGET,
    GramMatrix,
    direct_sum,
    enumerate_short,
    inner,
    norm,
)
from hermlat.ring import CyclicElement

Vector = Tuple[int, ...]


# -- catalog -------------------------------------------------------------------


def identity_gram(k: int) -> GramMatrix:
    if k < 1:
        raise ValueError("rank must be >= 1")
    return GramMatrix([[1 if i == j else 0 for j in range(k)] for i in range(k)])


def dynkin_edges(typ: str, n: int) -> FrozenSet[FrozenSet[int]]:
    """Edge set of the Dynkin diagram on nodes 1..n.

    A_n is the path; D_n (n >= 2) forks at node n-2 into n-1 and n; E_n
    (n = 6,7,8) hangs node n off node n-3 of the path 1..n-1.
    """
    if typ == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return frozenset(frozenset((i, i + 1)) for i in range(1, n))
    if typ == "D":
        if n < 2:
            raise ValueError("D_n needs n >= 2")
        if n == 2:
            return frozenset()
        edges = {frozenset((i, i + 1)) for i in range(1, n - 1)}
        edges.add(frozenset((n - 2, n)))
        return frozenset(edges)
    if typ == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        edges = {frozenset((i, i + 1)) for i in range(1, n - 1)}
        edges.add(frozenset((n - 3, n)))
        return frozenset(edges)
    raise ValueError(f"unknown type {typ!r}")


def _simple_root_gram(typ: str, n: int) -> GramMatrix:
    edges = dynkin_edges(typ, n)
    return GramMatrix(
        [
            [
                2 if i == j else (-1 if frozenset((i + 1, j + 1)) in edges else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
    )


def a_gram(n: int) -> GramMatrix:
    return _simple_root_gram("A", n)


def d_gram(n: int) -> GramMatrix:
    return _simple_root_gram("D", n)


def e8_gram() -> GramMatrix:
    return _simple_root_gram("E", 8)


def gamma_gram(rank: int) -> GramMatrix:
    """The half-integer overlattice of D_rank, rank = 4m.

    Basis: g = (v_1 + ... + v_4m)/2, then v_1 + v_2, then v_i - v_{i-1} for
    i = 2..4m-1, built in doubled coordinates so everything stays integral.
    Unimodularity is asserted at construction.
    """
    if rank < 4 or rank % 4:
        raise ValueError("rank must be a positive multiple of 4")
    basis2: List[List[int]] = [[1] * rank]
    row = [0] * rank
    row[0] = row[1] = 2
    basis2.append(row)
    for i in range(2, rank):  # v_i - v_{i-1}, 1-based i up to rank-1
        row = [0] * rank
        row[i - 1] = 2
        row[i - 2] = -2
        basis2.append(row)
    gram = []
    for u in basis2:
        grow = []
        for v in basis2:
            dot = sum(a * b for a, b in zip(u, v))
            if dot % 4:
                raise AssertionError("basis vectors must pair integrally")
            grow.append(dot // 4)
        gram.append(grow)
    G = GramMatrix(gram)
    if G.determinant() != 1:
        raise AssertionError("half-integer overlattice basis must have det 1")
    return G


_CATALOG_NAME = re.compile(r"^(I|A|D|E|Gamma)\(?(\d+)\)?$")


def catalog_gram(name: str) -> GramMatrix:
    """Named reference lattices: I(k), A(n), D(n), E8, Gamma(4m).

    Accepts "D8" and "D(8)" spellings alike.
    """
    m = _CATALOG_NAME.match(name.strip())
    if not m:
        raise ValueError(f"unknown catalog name {name!r}")
    typ, num = m.group(1), int(m.group(2))
    if typ == "I":
        return identity_gram(num)
    if typ == "A":
        return a_gram(num)
    if typ == "D":
        return d_gram(num)
    if typ == "E":
        if num != 8:
            raise ValueError("only E8 is in the catalog")
        return e8_gram()
    return gamma_gram(num)


# -- roots and components ------------------------------------------------------


@dataclass(frozen=True)
class RootSystemReport:
    """ADE decomposition of the root sublattice."""

    components: Tuple[Tuple[str, int, int], ...]  # (type, rank, root count)
    total_roots: int
    spanning_rank: int

    def to_json_dict(self) -> dict:
        return {
            "components": [
                {"type": t, "rank": r, "roots": c} for (t, r, c) in self.components
            ]
        }

    def component_multiset(self) -> Tuple[Tuple[str, int, int], ...]:
        return self.components


def root_vectors(G: GramMatrix, max_nodes: int = DEFAULT_NODE_BUDGET):
    """Norm-2 vectors as +/- pair representatives."""
    res = enumerate_short(G, 2, max_nodes=max_nodes)
    pairs = tuple(v for v in res.pairs if norm(G, v) == 2)
    return type(res)(2, pairs)


def _int_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    m = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row_at = 0
    for col in range(ncols):
        sel = next((i for i in range(row_at, nrows) if m[i][col] != 0), None)
        if sel is None:
            continue
        m[row_at], m[sel] = m[sel], m[row_at]
        piv = m[row_at][col]
        for i in range(row_at + 1, nrows):
            if m[i][col] != 0:
                f = m[i][col] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[row_at])]
        rank += 1
        row_at += 1
        if row_at == nrows:
            break
    return rank


def _component_type(rank: int, count: int) -> Tuple[str, int]:
    if count == rank * (rank + 1):
        return ("A", rank)
    if rank >= 4 and count == 2 * rank * (rank - 1):
        return ("D", rank)
    if (rank, count) in ((6, 72), (7, 126), (8, 240)):
        return ("E", rank)
    raise AssertionError(
        f"root component of rank {rank} with {count} roots is not simply laced"
    )


def root_system(G: GramMatrix, max_nodes: int = DEFAULT_NODE_BUDGET) -> RootSystemReport:
    """Connected components of the root graph (edges: nonzero inner product),
    each typed by its span rank and root count."""
    pairs = root_vectors(G, max_nodes=max_nodes).pairs
    k = len(pairs)
    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if inner(G, pairs[i], pairs[j]) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: Dict[int, List[Vector]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(pairs[i])
    comps = []
    for vecs in groups.values():
        rank = _int_rank(vecs)
        count = 2 * len(vecs)
        typ, rk = _component_type(rank, count)
        comps.append((typ, rk, count))
    comps.sort()
    return RootSystemReport(
        components=tuple(comps),
        total_roots=2 * k,
        spanning_rank=_int_rank(pairs) if pairs else 0,
    )


def check_dynkin(
    G: GramMatrix, vectors: Sequence[Sequence[int]], typ: str, n: int
) -> bool:
    """Do the vectors realize the Dynkin diagram of (typ, n)?

    All must have norm 2, and |(v_i, v_j)| must be 1 on diagram edges and 0
    off them.  Absolute values make both edge-sign conventions acceptable:
    the diagrams are trees, so sign flips of the vectors can realize either.
    """
    if len(vectors) != n:
        raise ValueError(f"expected {n} vectors, got {len(vectors)}")
    edges = dynkin_edges(typ, n)
    for v in vectors:
        if norm(G, v) != 2:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            want = 1 if frozenset((i + 1, j + 1)) in edges else 0
            if abs(inner(G, vectors[i], vectors[j])) != want:
                return False
    return True


# -- reference vectors in the modulus-4 transfer -------------------------------


def v4_root_batches() -> Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]:
    """Two batches of 8 norm-2 vectors in the rank-16 transfer (modulus 4),
    each realizing the D8 diagram, spanning mutually orthogonal copies.

    The second batch is x times the first, coordinate-wise in the group ring.
    """
    n = 4
    zero = CyclicElement.zero(n)

    def mono(e: int) -> CyclicElement:
        return CyclicElement.monomial(n, e)

    def vec(c1, c2, c3, c4) -> List[CyclicElement]:
        return [c1, c2, c3, c4]

    one = mono(0)
    x = mono(1)
    x2 = mono(2)
    ones_134 = one + x + mono(3)  # 1 + x + x^3
    vs = [
        vec(zero, zero, zero, x2),
        vec(-x2, x2, x2, zero),
        vec(zero, zero, x2, zero),
        vec(x2, -one, zero, zero),
        vec(one, -one, zero, zero),
        vec(zero, zero, one, zero),
        vec(-one, one, one, -one),
        vec(-one, -one, ones_134, ones_134),
    ]
    batch1 = tuple(flatten_vector(v) for v in vs)
    batch2 = tuple(flatten_vector([x * c for c in v]) for v in vs)
    return batch1, batch2


# -- fingerprints ---------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    rank: int
    parity: str  # "odd" or "even"
    determinant: int
    defect: int
    mu: int
    root_system: Tuple[Tuple[str, int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "parity": self.parity,
            "determinant": self.determinant,
            "defect": self.defect,
            "mu": self.mu,
            "root_system": [
                {"type": t, "rank": r, "roots": c} for (t, r, c) in self.root_system
            ],
        }


def fingerprint(G: GramMatrix, max_nodes: int = DEFAULT_NODE_BUDGET) -> Fingerprint:
    report = min_characteristic(G, max_nodes=max_nodes)
    rs = root_system(G, max_nodes=max_nodes)
    return Fingerprint(
        rank=G.rank,
        parity="odd" if G.is_odd() else "even",
        determinant=G.determinant(),
        defect=report.defect,
        mu=report.mu,
        root_system=rs.components,
    )


@dataclass(frozen=True)
class _StoredPrint:
    name: str
    rank: int
    parity: str
    determinant: int
    defect: int
    mu: Optional[int]  # None: not part of the match
    root_system: Tuple[Tuple[str, int, int], ...]

    def matches(self, fp: Fingerprint) -> bool:
        return (
            self.rank == fp.rank
            and self.parity == fp.parity
            and self.determinant == fp.determinant
            and self.defect == fp.defect
            and (self.mu is None or self.mu == fp.mu)
            and self.root_system == fp.root_system
        )


_STORED_CACHE: Dict[int, Tuple[_StoredPrint, ...]] = {}


def _store(name: str, G: GramMatrix, mu_override: Optional[int] = None) -> _StoredPrint:
    fp = fingerprint(G)
    return _StoredPrint(
        name,
        fp.rank,
        fp.parity,
        fp.determinant,
        fp.defect,
        mu_override if mu_override is not None else fp.mu,
        fp.root_system,
    )


def _stored_for_rank(rank: int) -> Tuple[_StoredPrint, ...]:
    if rank in _STORED_CACHE:
        return _STORED_CACHE[rank]
    entries: List[_StoredPrint] = []
    # the standard lattice at every rank; mu = 2^rank closed-form
    i_fp = _StoredPrint(
        f"I{rank}",
        rank,
        "odd",
        1,
        0,
        2**rank,
        root_system(identity_gram(rank)).components,
    )
    entries.append(i_fp)
    if rank == 12:
        entries.append(_store("Gamma12", gamma_gram(12)))
        entries.append(_store("E8+I4", direct_sum(gamma_gram(8), identity_gram(4))))
    elif rank == 16:
        entries.append(_store("Gamma16", gamma_gram(16)))
        entries.append(_store("E8+E8", direct_sum(gamma_gram(8), gamma_gram(8))))
        entries.append(_store("E8+I8", direct_sum(gamma_gram(8), identity_gram(8))))
        entries.append(_store("Gamma12+I4", direct_sum(gamma_gram(12), identity_gram(4))))
        # the glued pair of D8 copies; no Gram is constructed for it, so mu
        # stays out of the match
        entries.append(
            _StoredPrint(
                "D8^2[(12)]",
                16,
                "odd",
                1,
                1,
                None,
                (("D", 8, 112), ("D", 8, 112)),
            )
        )
    _STORED_CACHE[rank] = tuple(entries)
    return _STORED_CACHE[rank]


def identify(G: GramMatrix, max_nodes: int = DEFAULT_NODE_BUDGET) -> str:
    """Fingerprint lookup against the stored reference lattices.

    Returns the unique matching name or "unrecognized"; this never asserts an
    isometry beyond what the invariants distinguish.
    """
    if G.rank > 16:
        raise ValueError("identification is supported up to rank 16")
    fp = fingerprint(G, max_nodes=max_nodes)
    hits = [s.name for s in _stored_for_rank(G.rank) if s.matches(fp)]
    if len(hits) == 1:
        return hits[0]
    return "unrecognized"
