"""Hermitian forms over the Laurent ring and over cyclic group rings.

A form is a square matrix G with entries in Z[x,1/x] (``HermitianForm``) or in
Z[x,1/x]/(x^n - 1) (``CyclicForm``) satisfying G[j][i] = conj(G[i][j]).  The
pairing convention throughout is

    <u, v> = sum_ij u_i * G[i][j] * conj(v_j)

linear in the first slot and conjugate-linear in the second, so that
<v, u> = conj(<u, v>).

``transfer`` restricts scalars: a rank-m form over the modulus-n group ring
becomes a rank m*n integer symmetric matrix on the basis x^j e_i, ordered
lexicographically with i outermost and j = 0..n-1 innermost.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from hermlat.lattice import GramMatrix
from hermlat.ring import CyclicElement, LaurentPoly, sym_power


class HermitianForm:
    """Square matrix over Z[x,1/x] with G[j][i] = conj(G[i][j])."""

    __slots__ = ("_size", "_entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(row) for row in entries)
        m = len(rows)
        if any(len(row) != m for row in rows):
            raise ValueError("entries must form a square matrix")
        for i in range(m):
            for j in range(i, m):
                if not isinstance(rows[i][j], LaurentPoly):
                    raise ValueError("entries must be LaurentPoly")
                if rows[j][i] != rows[i][j].conj():
                    raise ValueError(f"not hermitian at ({i},{j})")
        self._size = m
        self._entries = rows

    @property
    def size(self) -> int:
        return self._size

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self._entries[i][j]

    def rows(self) -> Tuple[Tuple[LaurentPoly, ...], ...]:
        return self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianForm):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"HermitianForm(size={self._size})"

    def substitute_power(self, d: int) -> "HermitianForm":
        """Apply x -> x^d to every entry."""
        return HermitianForm(
            [[e.substitute_power(d) for e in row] for row in self._entries]
        )

    def reduce(self, n: int) -> "CyclicForm":
        return CyclicForm(n, [[e.reduce(n) for e in row] for row in self._entries])

    def aug(self) -> GramMatrix:
        """Evaluate every entry at x = 1 (an integer symmetric matrix)."""
        rows = []
        for row in self._entries:
            vals = []
            for e in row:
                a = e.aug()
                if not isinstance(a, int):
                    raise ValueError("augmentation is not integral")
                vals.append(a)
            rows.append(vals)
        return GramMatrix(rows)

    def to_json_dict(self) -> dict:
        return {
            "size": self._size,
            "entries": [[e.to_json_dict() for e in row] for row in self._entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HermitianForm":
        size = data.get("size")
        entries = data.get("entries")
        if not isinstance(size, int) or isinstance(size, bool):
            raise ValueError("bad size")
        if not isinstance(entries, list) or len(entries) != size:
            raise ValueError("bad entries")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != size:
                raise ValueError("bad entries")
            rows.append([LaurentPoly.from_json_dict(e) for e in row])
        return cls(rows)


class CyclicForm:
    """Square hermitian matrix over the modulus-n group ring."""

    __slots__ = ("_size", "_n", "_entries")

    def __init__(self, n: int, entries: Sequence[Sequence[CyclicElement]]):
        rows = tuple(tuple(row) for row in entries)
        m = len(rows)
        if any(len(row) != m for row in rows):
            raise ValueError("entries must form a square matrix")
        for i in range(m):
            for j in range(m):
                e = rows[i][j]
                if not isinstance(e, CyclicElement) or e.n != n:
                    raise ValueError("entries must share the stated modulus")
                if j >= i and rows[j][i] != e.conj():
                    raise ValueError(f"not hermitian at ({i},{j})")
        self._size = m
        self._n = n
        self._entries = rows

    @property
    def size(self) -> int:
        return self._size

    @property
    def n(self) -> int:
        return self._n

    def entry(self, i: int, j: int) -> CyclicElement:
        return self._entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicForm):
            return NotImplemented
        return self._n == other._n and self._entries == other._entries

    def __repr__(self) -> str:
        return f"CyclicForm(size={self._size}, n={self._n})"

    def is_constant(self) -> bool:
        """True when every entry lies in Z*1, i.e. the form is extended from
        an integer matrix."""
        return all(
            all(c == 0 for c in e.coeffs[1:]) for row in self._entries for e in row
        )

    def constant_matrix(self) -> GramMatrix:
        if not self.is_constant():
            raise ValueError("form is not extended from an integer matrix")
        return GramMatrix([[e.pi() for e in row] for row in self._entries])

    def to_json_dict(self) -> dict:
        for row in self._entries:
            for e in row:
                if any(not isinstance(c, int) for c in e.coeffs):
                    raise ValueError("only integer-coefficient forms serialize")
        return {
            "size": self._size,
            "n": self._n,
            "entries": [[list(e.coeffs) for e in row] for row in self._entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CyclicForm":
        size = data.get("size")
        n = data.get("n")
        entries = data.get("entries")
        if not isinstance(size, int) or isinstance(size, bool):
            raise ValueError("bad size")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("bad modulus")
        if not isinstance(entries, list) or len(entries) != size:
            raise ValueError("bad entries")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != size:
                raise ValueError("bad entries")
            cells = []
            for coeffs in row:
                if not isinstance(coeffs, list):
                    raise ValueError("bad entry coefficients")
                for c in coeffs:
                    if not isinstance(c, int) or isinstance(c, bool):
                        raise ValueError(f"bad coefficient {c!r}")
                cells.append(CyclicElement(n, coeffs))
            rows.append(cells)
        return cls(n, rows)


# -- the rank-4 family -------------------------------------------------------


def build_form(a: LaurentPoly) -> HermitianForm:
    """The rank-4 hermitian form attached to a self-conjugate element a:

        [ 1+a+a^2  a+a^2   1+a  a ]
        [ a+a^2    1+a+a^2 a    1+a ]
        [ 1+a      a       2    0 ]
        [ a        1+a     0    2 ]

    Unimodular (determinant 1) for every self-conjugate a.
    """
    if not isinstance(a, LaurentPoly):
        raise ValueError("a must be a LaurentPoly")
    if not a.is_self_conjugate():
        raise ValueError("a must be fixed by conjugation")
    one = LaurentPoly.one()
    two = LaurentPoly.const(2)
    zero = LaurentPoly.zero()
    a2 = a * a
    return HermitianForm(
        [
            [one + a + a2, a + a2, one + a, a],
            [a + a2, one + a + a2, a, one + a],
            [one + a, a, two, zero],
            [a, one + a, zero, two],
        ]
    )


def b_sequence(k: int) -> int:
    """b_1 = 1, b_{k+1} = 4*b_k + 1 (so 1, 5, 21, 85, ...)."""
    if k < 1:
        raise ValueError("index must be >= 1")
    b = 1
    for _ in range(k - 1):
        b = 4 * b + 1
    return b


def build_form_power(k: int) -> HermitianForm:
    """The form at a = x^(b_k) + x^(-b_k)."""
    return build_form(sym_power(b_sequence(k)))


def substitute_power(G: HermitianForm, d: int) -> HermitianForm:
    return G.substitute_power(d)


def reduce_form(G: HermitianForm, n: int) -> CyclicForm:
    return G.reduce(n)


def aug_form(G: HermitianForm) -> GramMatrix:
    return G.aug()


def form_det(G: HermitianForm) -> LaurentPoly:
    """Determinant over the Laurent ring (Laplace expansion; sizes are small)."""
    return _det([list(row) for row in G.rows()])


def _det(mat: List[List[LaurentPoly]]) -> LaurentPoly:
    m = len(mat)
    if m == 0:
        return LaurentPoly.one()
    if m == 1:
        return mat[0][0]
    total = LaurentPoly.zero()
    for j in range(m):
        c = mat[0][j]
        if c.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = c * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- module vectors ----------------------------------------------------------


def sesq_eval(G, u: Sequence, v: Sequence):
    """<u, v> = sum_ij u_i G[i][j] conj(v_j); linear in u, conjugate-linear in v.

    Works for HermitianForm with LaurentPoly vectors and for CyclicForm with
    CyclicElement vectors; plain ints in u, v are coerced.
    """
    m = G.size
    if len(u) != m or len(v) != m:
        raise ValueError("vector length must match the form size")
    if isinstance(G, CyclicForm):
        coerce = lambda c: _coerce_cyclic(c, G.n)
        acc = CyclicElement.zero(G.n)
    else:
        coerce = _coerce_laurent
        acc = LaurentPoly.zero()
    uu = [coerce(c) for c in u]
    vv = [coerce(c) for c in v]
    for i in range(m):
        if uu[i].is_zero():
            continue
        for j in range(m):
            if vv[j].is_zero():
                continue
            acc = acc + uu[i] * G.entry(i, j) * vv[j].conj()
    return acc


def _coerce_laurent(c) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, (int, Fraction)):
        return LaurentPoly.const(c)
    raise ValueError("vector entries must be LaurentPoly or scalars")


def _coerce_cyclic(c, n: int) -> CyclicElement:
    if isinstance(c, CyclicElement):
        if c.n != n:
            raise ValueError("mixed moduli")
        return c
    if isinstance(c, (int, Fraction)):
        coeffs = [0] * n
        coeffs[0] = c
        return CyclicElement(n, coeffs)
    raise ValueError("vector entries must be CyclicElement or scalars")


def module_basis_vector(m: int, i: int, n: int) -> List[CyclicElement]:
    """e_i (0-based) as a CyclicElement vector of length m, modulus n."""
    if not 0 <= i < m:
        raise ValueError("basis index out of range")
    return [CyclicElement.one(n) if k == i else CyclicElement.zero(n) for k in range(m)]


def flatten_vector(vec: Sequence[CyclicElement]) -> Tuple[int, ...]:
    """Coordinates of sum_i a_i(x) e_i on the transfer basis x^j e_i.

    Index i*n + j holds the coefficient of x^j in a_i, matching ``transfer``.
    """
    out: List[int] = []
    for a in vec:
        for c in a.coeffs:
            if not isinstance(c, int):
                raise ValueError("transfer coordinates must be integral")
            out.append(c)
    return tuple(out)


# -- restriction of scalars --------------------------------------------------


def transfer(Gn: CyclicForm) -> GramMatrix:
    """Rank m*n integer Gram of the form viewed as a lattice over Z.

    Row (i, j) and column (i', j') meet in the coefficient of x^((j'-j) mod n)
    of G[i][i'], which is the integer pairing (x^j e_i, x^j' e_i').
    """
    m, n = Gn.size, Gn.n
    rank = m * n
    rows = [[0] * rank for _ in range(rank)]
    for i in range(m):
        for i2 in range(m):
            coeffs = Gn.entry(i, i2).coeffs
            for c in coeffs:
                if not isinstance(c, int):
                    raise ValueError("transfer needs integral entries")
            for j in range(n):
                base_r = i * n + j
                row = rows[base_r]
                for j2 in range(n):
                    row[i2 * n + j2] = coeffs[(j2 - j) % n]
    return GramMatrix(rows)


# -- the rational congruence over the Laurent ring ----------------------------


def _mat_mul(A, B):
    m, k, nn = len(A), len(B), len(B[0])
    out = []
    for i in range(m):
        row = []
        for j in range(nn):
            acc = LaurentPoly.zero()
            for l in range(k):
                acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def _mat_conj_transpose(A):
    m, n = len(A), len(A[0])
    return [[A[j][i].conj() for j in range(m)] for i in range(n)]


def rational_congruence_check(a: LaurentPoly) -> bool:
    """Verify P * G * conj(P)^T = diag(1/2, 1/2, 2, 2) exactly, where G is the
    rank-4 form at a and P = [[I, -B/2], [0, I]] with B = [[1+a, a], [a, 1+a]].

    Exact Fraction coefficients throughout; this certifies positive
    definiteness of the form whenever a is specialised compatibly.
    """
    G = build_form(a)
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    half = LaurentPoly.const(Fraction(1, 2))
    nb11 = -(half * (one + a))
    nb12 = -(half * a)
    P = [
        [one, zero, nb11, nb12],
        [zero, one, nb12, nb11],
        [zero, zero, one, zero],
        [zero, zero, zero, one],
    ]
    M = _mat_mul(_mat_mul(P, [list(r) for r in G.rows()]), _mat_conj_transpose(P))
    D = [
        [half, zero, zero, zero],
        [zero, half, zero, zero],
        [zero, zero, LaurentPoly.const(2), zero],
        [zero, zero, zero, LaurentPoly.const(2)],
    ]
    return M == D
