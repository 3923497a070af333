"""Exact dense/sparse linear algebra over Q(i) and Q(i)[x].

Determinants use fraction-free (Bareiss) elimination for scalar matrices and
an evaluation/interpolation scheme for univariate-polynomial matrices (the
polynomial Bareiss route is kept for small sizes and used as a cross-check;
pure-Python polynomial Bareiss is impractical at the largest Gram sizes).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .poly import SuperPolynomial, VariableTable
from .scalars import GaussianRational

Entry = object  # GaussianRational | SuperPolynomial


def _is_poly(x) -> bool:
    return isinstance(x, SuperPolynomial)


def _exact_div(a, b):
    """Exact division in Q(i) or Q(i)[x]; raises if the division is inexact."""
    if _is_poly(a) or _is_poly(b):
        if not _is_poly(a):
            a = SuperPolynomial.constant(b.table, a)
        if not _is_poly(b):
            bg = GaussianRational.coerce(b)
            if bg.is_zero():
                raise ZeroDivisionError("exact division by zero")
            return a.scale(GaussianRational.one() / bg)
        return _poly_exact_div(a, b)
    return a / b


def _poly_exact_div(a: SuperPolynomial, b: SuperPolynomial) -> SuperPolynomial:
    ca = a.univariate_coeffs()
    cb = b.univariate_coeffs()
    if not cb:
        raise ZeroDivisionError("polynomial division by zero")
    if not ca:
        return SuperPolynomial.zero(a.table)
    if len(ca) < len(cb):
        raise ArithmeticError("inexact polynomial division")
    lead = cb[-1]
    quot = [GaussianRational.zero()] * (len(ca) - len(cb) + 1)
    rem = list(ca)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(cb) - 1] / lead
        quot[k] = c
        if not c.is_zero():
            for j, bj in enumerate(cb):
                rem[k + j] = rem[k + j] - c * bj
    if any(not r.is_zero() for r in rem[:len(cb) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return SuperPolynomial.from_univariate_coeffs(a.table, quot)


class ExactMatrix:
    """Dense matrix with GaussianRational or univariate SuperPolynomial entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Entry]]):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = GaussianRational.one(), GaussianRational.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        zero = GaussianRational.zero()
        return cls([[zero] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(_entries_equal(self.entries[i][j], other.entries[i][j])
                   for i in range(self.rows) for j in range(self.cols))

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    acc = None
                    for k in range(self.cols):
                        term = self.entries[i][k] * other.entries[k][j]
                        acc = term if acc is None else acc + term
                    row.append(acc)
                out.append(row)
            return ExactMatrix(out)
        return ExactMatrix([[e * other for e in row] for row in self.entries])

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix([[-e for e in row] for row in self.entries])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.entries[i][j] for i in range(self.rows)]
                            for j in range(self.cols)])

    def conj_transpose(self) -> "ExactMatrix":
        out = []
        for j in range(self.cols):
            row = []
            for i in range(self.rows):
                e = self.entries[i][j]
                row.append(_conj_entry(e))
            out.append(row)
        return ExactMatrix(out)

    def is_hermitian(self) -> bool:
        if self.rows != self.cols:
            return False
        return self == self.conj_transpose()

    def apply(self, vec: Sequence[Entry]) -> list:
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            acc = None
            for k in range(self.cols):
                term = self.entries[i][k] * vec[k]
                acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def substitute(self, name: str, value) -> "ExactMatrix":
        """Substitute into every polynomial entry; scalars pass through."""
        out = []
        for row in self.entries:
            new_row = []
            for e in row:
                if _is_poly(e):
                    new_row.append(e.substitute(name, value).constant_term()
                                   if e.table.n_even == 1 and not e.table.n_odd
                                   else e.substitute(name, value))
                else:
                    new_row.append(e)
            out.append(new_row)
        return ExactMatrix(out)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def _conj_entry(e):
    if _is_poly(e):
        return SuperPolynomial(e.table, {k: c.conjugate() for k, c in e.terms.items()})
    return e.conjugate()


def _entries_equal(a, b) -> bool:
    if _is_poly(a) or _is_poly(b):
        if not _is_poly(a):
            a = SuperPolynomial.constant(b.table, a)
        if not _is_poly(b):
            b = SuperPolynomial.constant(a.table, b)
        return a == b
    return a == b


def _entry_is_zero(e) -> bool:
    return e.is_zero()


def det_exact(m: ExactMatrix):
    """Exact determinant; polynomial entries give a polynomial."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return GaussianRational.one()
    has_poly = any(_is_poly(e) for row in m.entries for e in row)
    if not has_poly:
        return _det_field([row[:] for row in m.entries])
    if n <= 8:
        return _det_bareiss([row[:] for row in m.entries])
    return _det_interpolate(m)


def _det_field(a: List[list]):
    """Ordinary Gaussian elimination over the field Q(i)."""
    n = len(a)
    det = GaussianRational.one()
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not a[i][k].is_zero():
                piv = i
                break
        if piv is None:
            return GaussianRational.zero()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        p = a[k][k]
        det = det * p
        inv = GaussianRational.one() / p
        for i in range(k + 1, n):
            f = a[i][k]
            if f.is_zero():
                continue
            f = f * inv
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = row_i[j] - f * row_k[j]
    return det


def _det_bareiss(a: List[list]):
    """Fraction-free elimination; valid over any integral domain."""
    n = len(a)
    sign = 1
    prev = None
    for k in range(n - 1):
        if _entry_is_zero(a[k][k]):
            swap = None
            for i in range(k + 1, n):
                if not _entry_is_zero(a[i][k]):
                    swap = i
                    break
            if swap is None:
                return GaussianRational.zero() if not _is_poly(a[0][0]) \
                    else SuperPolynomial.zero(a[0][0].table)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else _exact_div(num, prev)
            a[i][k] = a[i][k] * 0 if _is_poly(a[i][k]) else GaussianRational.zero()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _det_interpolate(m: ExactMatrix):
    """det of a univariate-polynomial matrix by evaluation + Newton interpolation."""
    table = next(e.table for row in m.entries for e in row if _is_poly(e))
    var = table.even_names[0]
    degree_bound = 0
    for row in m.entries:
        degree_bound += max((e.degree() if _is_poly(e) else 0) for e in row)
    nodes = [Fraction(k) for k in range(degree_bound + 1)]
    values = []
    for x in nodes:
        num = [[(e.substitute(var, x).constant_term() if _is_poly(e) else e)
                for e in row] for row in m.entries]
        values.append(_det_field(num))
    coeffs = _newton_interpolate(nodes, values)
    return SuperPolynomial.from_univariate_coeffs(table, coeffs)


def _newton_interpolate(nodes, values):
    """Exact interpolation; returns monomial-basis coefficients."""
    n = len(nodes)
    divided = list(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / \
                GaussianRational(nodes[i] - nodes[i - level])
    # expand the Newton form into monomial coefficients
    coeffs = [GaussianRational.zero()] * n
    acc = [GaussianRational.one()]  # running product (x - x0)...(x - x_{k-1})
    for k in range(n):
        for j, c in enumerate(acc):
            coeffs[j] = coeffs[j] + divided[k] * c
        new_acc = [GaussianRational.zero()] * (len(acc) + 1)
        xk = GaussianRational(nodes[k])
        for j, c in enumerate(acc):
            new_acc[j + 1] = new_acc[j + 1] + c
            new_acc[j] = new_acc[j] - c * xk
        acc = new_acc
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def rref(rows: List[List[GaussianRational]]) -> Tuple[List[List[GaussianRational]], List[int]]:
    """Reduced row echelon form over Q(i) (in place); returns (rows, pivot cols)."""
    if not rows:
        return rows, []
    n_cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = GaussianRational.one() / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(m: ExactMatrix) -> List[List[GaussianRational]]:
    """Exact basis of the right kernel; empty iff full column rank."""
    rows = [[GaussianRational.coerce(e) if not _is_poly(e) else _poly_scalar(e)
             for e in row] for row in m.entries]
    rows, pivots = rref(rows)
    n_cols = m.cols
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    zero, one = GaussianRational.zero(), GaussianRational.one()
    for fc in free:
        vec = [zero] * n_cols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def _poly_scalar(e: SuperPolynomial) -> GaussianRational:
    if e.degree() > 0:
        raise ValueError("kernel_basis requires scalar entries (substitute first)")
    return e.constant_term()


def solve_square(a: ExactMatrix, b: Sequence[GaussianRational]) -> List[GaussianRational]:
    """Solve A x = b for invertible A over Q(i)."""
    n = a.rows
    rows = [list(a.entries[i]) + [b[i]] for i in range(n)]
    rows, pivots = rref(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [rows[i][n] for i in range(n)]


class SparseRowReducer:
    """Incremental Gauss elimination on sparse rows over Q(i).

    Rows are dicts {column: coefficient}.  Pivot rows are stored normalized
    (leading coefficient 1, leading column minimal in the row).
    """

    def __init__(self):
        self.pivot_rows = {}  # col -> dict

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        """Return the residue of ``row`` modulo the stored pivots."""
        row = {c: v for c, v in row.items() if not v.is_zero()}
        while row:
            lead = min(row)
            piv = self.pivot_rows.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for c, v in piv.items():
                s = row.get(c)
                s = -f * v if s is None else s - f * v
                if s.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = s
        return row

    def add_row(self, row: dict) -> Optional[int]:
        """Reduce and, if nonzero, install as a new pivot; returns pivot col."""
        res = self.reduce(row)
        if not res:
            return None
        lead = min(res)
        inv = GaussianRational.one() / res[lead]
        self.pivot_rows[lead] = {c: v * inv for c, v in res.items()}
        return lead

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def leading_minors_all_positive(entries: List[List[Fraction]]) -> Tuple[bool, Optional[int]]:
    """Check positivity of all leading principal minors of a rational matrix.

    Scales to integers (which multiplies the k-th minor by a positive factor)
    and runs integer fraction-free elimination whose pivots are exactly the
    leading principal minors.  Returns (all_positive, first bad index).
    """
    n = len(entries)
    if n == 0:
        return True, None
    denom = 1
    for row in entries:
        for e in row:
            denom = lcm(denom, e.denominator)
    m = [[int(e * denom) for e in row] for row in entries]
    prev = 1
    for k in range(n):
        piv = m[k][k]
        if piv <= 0:
            return False, k
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return True, None
