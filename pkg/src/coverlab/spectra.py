"""Weight matrices, exact characteristic polynomials and the matrix form of
the covering condition.

Everything is exact integer arithmetic.  Determinants use the
division-free Berkowitz recurrence, written over an arbitrary commutative
ring so the same code handles integer matrices and matrices over Z[x].
"""

from __future__ import annotations

from itertools import zip_longest
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .graphs import CoverlabError, WeightedGraph
from .weights import Weight, is_omega, weight_add, weight_mul


class IntPolynomial:
    """Polynomial with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _lift(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IntPolynomial((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def negate_variable(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def poly_divmod(p: IntPolynomial, q: IntPolynomial) -> Optional[Tuple[IntPolynomial, IntPolynomial]]:
    """Long division in Z[x]; None when a quotient coefficient is not integral."""
    if q.is_zero():
        raise CoverlabError("division by the zero polynomial")
    rem = list(p.coeffs)
    quot = [0] * max(len(rem) - len(q.coeffs) + 1, 0)
    dq = q.degree
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % q.lead:
            return None
        f = c // q.lead
        quot[k - dq] = f
        for j, b in enumerate(q.coeffs):
            rem[k - dq + j] -= f * b
    return IntPolynomial(quot), IntPolynomial(rem)


def poly_divides(q: IntPolynomial, p: IntPolynomial) -> bool:
    """Whether p = q * r for some r in Z[x]."""
    res = poly_divmod(p, q)
    return res is not None and res[1].is_zero()


# -- matrices ---------------------------------------------------------------

Matrix = List[List[Weight]]


def weight_matrix(H: WeightedGraph, order: Optional[Sequence[str]] = None) -> Matrix:
    """M[x][y] = half-edge weight at x of the edge x-y (0 if none); the
    diagonal holds loop weights.  Rows follow ``order`` (default: id order)."""
    order = list(H.vertices if order is None else order)
    if sorted(order) != list(H.vertices):
        raise CoverlabError("order must list every vertex exactly once")
    idx = {v: i for i, v in enumerate(order)}
    M: Matrix = [[0] * len(order) for _ in order]
    for e in H.edges:
        if e.is_loop:
            i = idx[e.ends[0]]
            M[i][i] = weight_add(M[i][i], e.weights[0])
        else:
            (x, y), (wx, wy) = e.ends, e.weights
            M[idx[x]][idx[y]] = weight_add(M[idx[x]][idx[y]], wx)
            M[idx[y]][idx[x]] = weight_add(M[idx[y]][idx[x]], wy)
    return M


def _check_square(M, what="matrix"):
    n = len(M)
    if any(len(row) != n for row in M):
        raise CoverlabError(f"{what} must be square")
    return n


def selection_matrix(vmap: Sequence[int], p: int) -> List[List[int]]:
    """B[i][j] = 1 if vmap[i] == j else 0 (indices from 0)."""
    if sorted(set(vmap)) != list(range(p)):
        raise CoverlabError("map must be a surjection onto 0..p-1")
    return [[1 if a == j else 0 for j in range(p)] for a in vmap]


def omega_matmul(A, B):
    n, m = len(A), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc: Union[int, Weight] = 0
            for k in range(len(B)):
                acc = weight_add(acc, weight_mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(row)
    return out


def cover_products(MG, MH, vmap: Sequence[int]):
    """(MG.B, B.MH) for the selection matrix B of ``vmap``."""
    n = _check_square(MG, "MG")
    p = _check_square(MH, "MH")
    if len(vmap) != n:
        raise CoverlabError("map length must equal the dimension of MG")
    B = selection_matrix(vmap, p)
    return omega_matmul(MG, B), omega_matmul(B, MH)


def matrix_cover_check(MG, MH, vmap: Sequence[int]) -> bool:
    """Whether MG.B = B.MH, i.e. the vertex map ``vmap`` (0-based) is the
    vertex part of a covering between the weighted graphs of MG and MH."""
    left, right = cover_products(MG, MH, vmap)
    return left == right


# -- determinants -----------------------------------------------------------

def berkowitz(A, zero, one) -> list:
    """Coefficients of det(t*I - A), highest power of t first.

    Only ring operations (+, -, *) are used on the entries.
    """
    n = len(A)
    p = [one]
    for r in range(n):
        R = A[r][:r]
        C = [A[i][r] for i in range(r)]
        col = [one, zero - A[r][r]]
        v = C
        for _ in range(r):
            col.append(zero - _dot(R, v, zero))
            v = [_dot(A[i][:r], v, zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(min(i, r) + 1):
                acc = acc + col[i - j] * p[j]
            new.append(acc)
        p = new
    return p


def _dot(a, b, zero):
    acc = zero
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def determinant(A, zero=0, one=1):
    n = _check_square(A)
    c = berkowitz(A, zero, one)[n]
    return c if n % 2 == 0 else zero - c


def _require_finite(M):
    if any(is_omega(w) for row in M for w in row):
        raise CoverlabError("requires finite weights")


def shifted(M) -> List[List[IntPolynomial]]:
    """The polynomial matrix M - xI."""
    n = _check_square(M)
    X = IntPolynomial.x()
    return [[IntPolynomial.const(M[i][j]) - (X if i == j else 0) for j in range(n)] for i in range(n)]


def charpoly(M) -> IntPolynomial:
    """det(M - xI)."""
    _check_square(M)
    _require_finite(M)
    return determinant(shifted(M), IntPolynomial(), IntPolynomial.const(1))


def graph_charpoly(H: WeightedGraph) -> IntPolynomial:
    return charpoly(weight_matrix(H))


class BlockForm(NamedTuple):
    S: List[List[IntPolynomial]]
    det_s: IntPolynomial
    check: bool
    order: List[int]
    reduced: List[List[IntPolynomial]]


def block_triangularize(M, N, vmap: Sequence[int]) -> BlockForm:
    """Row and column operations turning M - xI into [[N - xI, R], [0, S]].

    Vertices are reordered so the representative of each class (its least
    index) comes first, in class order.  Each class's columns are added to
    its representative column, then the representative row is subtracted
    from the other rows of the class.  ``check`` confirms both the block
    shape and det(M - xI) = det(N - xI) * det(S).
    """
    _require_finite(M)
    _require_finite(N)
    if not matrix_cover_check(M, N, vmap):
        raise CoverlabError("map does not satisfy the covering matrix equation")
    n, p = len(M), len(N)
    reps = [min(i for i in range(n) if vmap[i] == j) for j in range(p)]
    rest = [i for i in range(n) if i not in set(reps)]
    order = reps + rest
    A = shifted([[M[i][j] for j in order] for i in order])
    cls = [vmap[v] for v in order]
    for k in range(p, n):
        r = cls[k]
        for row in A:
            row[r] = row[r] + row[k]
    for k in range(p, n):
        r = cls[k]
        A[k] = [a - b for a, b in zip(A[k], A[r])]
    S = [row[p:] for row in A[p:]]
    one = IntPolynomial.const(1)
    det_s = determinant(S, IntPolynomial(), one) if S else one
    shape_ok = all(A[i][j] == s for i, row in enumerate(shifted(N)) for j, s in enumerate(row))
    shape_ok = shape_ok and all(A[i][j].is_zero() for i in range(p, n) for j in range(p))
    check = shape_ok and charpoly(M) == charpoly(N) * det_s
    return BlockForm(S, det_s, check, order, A)
