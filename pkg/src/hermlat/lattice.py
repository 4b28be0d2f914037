"""Integral lattice core: exact validation, LLL reduction, and enumeration.

Everything here is exact.  Determinants and principal minors use fraction-free
Bareiss elimination over Python ints; LLL and the Fincke-Pohst enumerator use
``fractions.Fraction`` for the Gram-Schmidt data.  No floating point anywhere:
the downstream standardness and defect certificates rely on exact comparisons.

Enumeration walks a bounded search tree; every visited node counts against a
caller-supplied node budget (default 10^9) and exhausting it raises
``BudgetExceeded`` rather than silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Dict, List, Sequence, Tuple

DEFAULT_NODE_BUDGET = 10**9

Vector = Tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration visits more nodes than its budget allows."""

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"enumeration budget exhausted ({nodes} > {budget} nodes)")
        self.nodes = nodes
        self.budget = budget


class GramMatrix:
    """Symmetric integer matrix, the Gram matrix of a based lattice."""

    __slots__ = ("_rank", "_gram")

    def __init__(self, gram: Sequence[Sequence[int]]):
        rows = tuple(tuple(row) for row in gram)
        r = len(rows)
        if r == 0:
            raise ValueError("rank must be positive")
        for row in rows:
            if len(row) != r:
                raise ValueError("gram must be square")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError("gram entries must be integers")
        for i in range(r):
            for j in range(i + 1, r):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"asymmetric at ({i},{j})")
        self._rank = r
        self._gram = rows

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def gram(self) -> Tuple[Tuple[int, ...], ...]:
        return self._gram

    def entry(self, i: int, j: int) -> int:
        return self._gram[i][j]

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self._gram[i][i] for i in range(self._rank))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GramMatrix):
            return NotImplemented
        return self._gram == other._gram

    def __hash__(self) -> int:
        return hash(self._gram)

    def __repr__(self) -> str:
        return f"GramMatrix(rank={self._rank})"

    def is_odd(self) -> bool:
        """Odd lattice: some vector has odd norm (iff some diagonal entry is odd)."""
        return any(d % 2 for d in self.diagonal())

    def determinant(self) -> int:
        return _det_bareiss(self._gram)

    def leading_principal_minors(self) -> List[int]:
        """Minors of orders 1..rank; computation stops early only on inputs
        that are already disqualified from positive definiteness."""
        minors = _bareiss_minors(self._gram)
        if minors is not None:
            return minors
        # zero pivot hit: fall back to independent dets of each corner block
        return [
            _det_bareiss(tuple(row[: k + 1] for row in self._gram[: k + 1]))
            for k in range(self._rank)
        ]

    def is_positive_definite(self) -> bool:
        minors = _bareiss_minors(self._gram)
        if minors is None:
            return False
        return all(m > 0 for m in minors)

    def to_json_dict(self) -> dict:
        return {"rank": self._rank, "gram": [list(row) for row in self._gram]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GramMatrix":
        rank = data.get("rank")
        gram = data.get("gram")
        if not isinstance(rank, int) or isinstance(rank, bool):
            raise ValueError("bad rank")
        if not isinstance(gram, list) or len(gram) != rank:
            raise ValueError("rank does not match gram size")
        return cls(gram)


def inner(G: GramMatrix, u: Sequence[int], v: Sequence[int]) -> int:
    """u^T G v, exactly."""
    r = G.rank
    if len(u) != r or len(v) != r:
        raise ValueError("vector length must match rank")
    g = G.gram
    total = 0
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = g[i]
        total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
    return total


def norm(G: GramMatrix, v: Sequence[int]) -> int:
    return inner(G, v, v)


def direct_sum(G1: GramMatrix, G2: GramMatrix) -> GramMatrix:
    r1, r2 = G1.rank, G2.rank
    rows = []
    for i in range(r1):
        rows.append(list(G1.gram[i]) + [0] * r2)
    for i in range(r2):
        rows.append([0] * r1 + list(G2.gram[i]))
    return GramMatrix(rows)


def validate(G: GramMatrix, expect: str = "any") -> dict:
    """Exact structural report: determinant, definiteness, parity, rank.

    expect is one of {"any", "positive_definite", "unimodular"}; the report's
    "meets_expectation" field records whether the stated expectation holds
    (unimodular here means determinant 1 and positive definite).
    """
    if expect not in ("any", "positive_definite", "unimodular"):
        raise ValueError(f"unknown expectation {expect!r}")
    det = G.determinant()
    definite = G.is_positive_definite()
    report = {
        "rank": G.rank,
        "symmetric": True,
        "determinant": det,
        "positive_definite": definite,
        "parity": "odd" if G.is_odd() else "even",
        "unimodular": det == 1 and definite,
    }
    if expect == "any":
        report["meets_expectation"] = True
    elif expect == "positive_definite":
        report["meets_expectation"] = definite
    else:
        report["meets_expectation"] = report["unimodular"]
    return report


# -- exact elimination --------------------------------------------------------


def _bareiss_minors(gram) -> List[int] | None:
    """Leading principal minors via fraction-free elimination, or None if a
    zero pivot blocks the pivot-free sweep (then the matrix is certainly not
    positive definite)."""
    r = len(gram)
    m = [list(row) for row in gram]
    minors: List[int] = []
    prev = 1
    for k in range(r):
        pivot = m[k][k]
        if pivot == 0:
            return None
        minors.append(pivot)
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = pivot
    return minors


def _det_bareiss(gram) -> int:
    r = len(gram)
    m = [list(row) for row in gram]
    sign = 1
    prev = 1
    for k in range(r - 1):
        if m[k][k] == 0:
            for i in range(k + 1, r):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[r - 1][r - 1]


# -- LLL ----------------------------------------------------------------------


def _gso(gram) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """Gram-Schmidt data (mu, B) of a quadratic form given only its Gram
    matrix.  Raises on inputs that are not positive definite."""
    r = len(gram)
    mu = [[Fraction(0)] * r for _ in range(r)]
    B = [Fraction(0)] * r
    for i in range(r):
        for j in range(i):
            s = Fraction(gram[i][j])
            for k in range(j):
                s -= mu[j][k] * mu[i][k] * B[k]
            mu[i][j] = s / B[j]
        s = Fraction(gram[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * B[k]
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        B[i] = s
    return mu, B


def _round_half_up(x: Fraction) -> int:
    return (x + Fraction(1, 2)).__floor__()


def _lll_core(gram_in, delta: Fraction = Fraction(3, 4)):
    """Gram-only LLL.  Returns (gram', U, Uinv) with U^T G U = G' and
    Uinv = U^{-1}, all integer matrices."""
    r = len(gram_in)
    g = [list(row) for row in gram_in]
    U = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    Uinv = [[1 if i == j else 0 for j in range(r)] for i in range(r)]

    def row_op(k: int, j: int, q: int) -> None:
        # b_k <- b_k - q b_j
        for i in range(r):
            g[k][i] -= q * g[j][i]
        for i in range(r):
            g[i][k] -= q * g[i][j]
        for t in range(r):
            U[t][k] -= q * U[t][j]
        for t in range(r):
            Uinv[j][t] += q * Uinv[k][t]

    def swap(k: int) -> None:
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        for t in range(r):
            U[t][k], U[t][k - 1] = U[t][k - 1], U[t][k]
        Uinv[k], Uinv[k - 1] = Uinv[k - 1], Uinv[k]

    mu, B = _gso(g)
    k = 1
    while k < r:
        for j in range(k - 1, -1, -1):
            q = _round_half_up(mu[k][j])
            if q != 0:
                row_op(k, j, q)
                for i in range(j):
                    mu[k][i] -= q * mu[j][i]
                mu[k][j] -= q
        if B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            k += 1
        else:
            swap(k)
            mu, B = _gso(g)
            k = max(k - 1, 1)
    return g, U, Uinv


def lll_reduce(G: GramMatrix, delta: Fraction = Fraction(3, 4)):
    """LLL-reduce, returning (G', U) with U^T G U = G' and |det U| = 1."""
    g, U, _ = _lll_core(G.gram, delta)
    return GramMatrix(g), tuple(tuple(row) for row in U)


# -- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    """Canonically sorted +/- pair representatives within a norm bound."""

    bound: int
    pairs: Tuple[Vector, ...]

    def to_json_dict(self) -> dict:
        return {"bound": self.bound, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "EnumerationResult":
        return cls(data["bound"], tuple(tuple(p) for p in data["pairs"]))


def canonical_rep(v: Sequence[int]) -> Vector:
    """The +/- pair representative: first nonzero coordinate positive."""
    for c in v:
        if c != 0:
            return tuple(v) if c > 0 else tuple(-x for x in v)
    return tuple(v)


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)


def _enumerate_shifted(gram, t: List[Fraction], bound: Fraction, budget: _Budget):
    """All integer v with (v+t)^T G (v+t) <= bound, exact arithmetic.

    gram must be positive definite (the GSO computation checks).  Yields
    lists; the caller copies what it keeps.
    """
    r = len(gram)
    mu, B = _gso(gram)
    sols: List[List[int]] = []
    if bound < 0:
        return sols
    v = [0] * r
    z = [Fraction(0)] * r  # z[i] = v[i] + t[i] once level i is fixed

    def rec(j: int, remaining: Fraction) -> None:
        budget.spend()
        c = t[j]
        for i in range(j + 1, r):
            c += mu[i][j] * z[i]
        s2 = remaining / B[j]
        # integer window around -c of half-width sqrt(s2), exact via isqrt
        u = isqrt(s2.numerator * s2.denominator)
        half = Fraction(u, s2.denominator)  # half <= sqrt(s2) < half + 1/den
        lo = ceil(-c - half)
        hi = floor(-c + half)
        while B[j] * (hi + 1 + c) * (hi + 1 + c) <= remaining:
            hi += 1
        while B[j] * (lo - 1 + c) * (lo - 1 + c) <= remaining:
            lo -= 1
        for cand in range(lo, hi + 1):
            used = B[j] * (cand + c) * (cand + c)
            if used > remaining:
                continue
            v[j] = cand
            z[j] = cand + t[j]
            if j == 0:
                sols.append(v.copy())
            else:
                rec(j - 1, remaining - used)
        v[j] = 0
        z[j] = Fraction(0)

    rec(r - 1, Fraction(bound))
    return sols


def _check_definite_input(G: GramMatrix) -> None:
    if not G.is_positive_definite():
        raise ValueError("matrix is not positive definite")


def enumerate_short(
    G: GramMatrix, bound: int, max_nodes: int = DEFAULT_NODE_BUDGET
) -> EnumerationResult:
    """All +/- pairs with 0 < norm <= bound (Fincke-Pohst after LLL)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    _check_definite_input(G)
    g, U, _ = _lll_core(G.gram)
    r = G.rank
    budget = _Budget(max_nodes)
    t0 = [Fraction(0)] * r
    seen: Dict[Vector, None] = {}
    for v in _enumerate_shifted(g, t0, Fraction(bound), budget):
        if all(c == 0 for c in v):
            continue
        w = tuple(sum(U[i][j] * v[j] for j in range(r)) for i in range(r))
        seen[canonical_rep(w)] = None
    return EnumerationResult(bound, tuple(sorted(seen)))


def enumerate_coset(
    G: GramMatrix,
    c: Sequence[int],
    bound: int,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> EnumerationResult:
    """All +/- pairs w with w = c (mod 2) coordinate-wise and |w|^2 <= bound.

    The zero vector is listed (once) exactly when c = 0 mod 2.  Implemented
    as a shifted enumeration of the sublattice 2Z^r: w = c + 2v means
    |w|^2 = 4 (v + c/2)^T G (v + c/2).
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    r = G.rank
    if len(c) != r:
        raise ValueError("shift length must match rank")
    _check_definite_input(G)
    g, U, Uinv = _lll_core(G.gram)
    c2 = [ci % 2 for ci in c]
    cr = [sum(Uinv[i][j] * c2[j] for j in range(r)) % 2 for i in range(r)]
    t = [Fraction(ci, 2) for ci in cr]
    budget = _Budget(max_nodes)
    seen: Dict[Vector, None] = {}
    for v in _enumerate_shifted(g, t, Fraction(bound, 4), budget):
        wr = [cr[i] + 2 * v[i] for i in range(r)]
        w = tuple(sum(U[i][j] * wr[j] for j in range(r)) for i in range(r))
        seen[canonical_rep(w)] = None
    return EnumerationResult(bound, tuple(sorted(seen)))


def unit_pair_count(G: GramMatrix, max_nodes: int = DEFAULT_NODE_BUDGET) -> int:
    """Number of +/- pairs of norm-1 vectors (the size of the I_k summand)."""
    return len(enumerate_short(G, 1, max_nodes=max_nodes).pairs)
