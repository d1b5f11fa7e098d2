"""Exact rational linear algebra.

Matrices are immutable and store their nonzero entries row by row.  Every
subspace is kept as the reduced row-echelon basis of its span, so two
subspaces are equal exactly when their bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Vector = tuple  # tuple of Fraction

# rref switches to the dictionary-of-rows kernel below this fill ratio
SPARSE_DENSITY = 0.25


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use int, str or Fraction")
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add_vectors(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Sequence) -> Vector:
    c = to_fraction(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


class RationalMatrix:
    """Immutable matrix over Q with sparse row storage.

    Construct from a dense list of rows, or via :meth:`from_entries` /
    :meth:`from_columns`.  Entries may be ints, strings or Fractions.
    """

    __slots__ = ("_nrows", "_ncols", "_rows")

    def __init__(self, rows: Sequence[Sequence] = (), ncols: int | None = None):
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        stored = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"ragged rows: expected {ncols} columns, got {len(r)}")
            d = {}
            for j, x in enumerate(r):
                x = to_fraction(x)
                if x:
                    d[j] = x
            stored.append(d)
        self._nrows = len(stored)
        self._ncols = ncols
        self._rows = tuple(stored)

    @classmethod
    def _from_dicts(cls, dict_rows: Sequence[dict], ncols: int) -> "RationalMatrix":
        # Trusted constructor: dicts already hold nonzero Fractions only.
        m = cls.__new__(cls)
        m._nrows = len(dict_rows)
        m._ncols = ncols
        m._rows = tuple(dict_rows)
        return m

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Mapping) -> "RationalMatrix":
        dict_rows = [{} for _ in range(nrows)]
        for (i, j), x in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            x = to_fraction(x)
            if x:
                dict_rows[i][j] = x
        return cls._from_dicts(dict_rows, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "RationalMatrix":
        columns = list(columns)
        if nrows is None:
            if not columns:
                raise ValueError("nrows is required for a matrix with no columns")
            nrows = len(columns[0])
        dict_rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError("columns of unequal length")
            for i, x in enumerate(col):
                x = to_fraction(x)
                if x:
                    dict_rows[i][j] = x
        return cls._from_dicts(dict_rows, len(columns))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls._from_dicts([{} for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._from_dicts([{i: Fraction(1)} for i in range(n)], n)

    @classmethod
    def vstack(cls, blocks: Sequence["RationalMatrix"], ncols: int | None = None) -> "RationalMatrix":
        blocks = list(blocks)
        if ncols is None:
            if not blocks:
                raise ValueError("ncols is required when stacking nothing")
            ncols = blocks[0].ncols
        dict_rows = []
        for b in blocks:
            if b.ncols != ncols:
                raise ValueError(f"column mismatch in vstack: {b.ncols} vs {ncols}")
            dict_rows.extend(b._rows)
        return cls._from_dicts(dict_rows, ncols)

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def density(self) -> float:
        cells = self._nrows * self._ncols
        return self.nnz() / cells if cells else 0.0

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= j < self._ncols):
            raise IndexError(j)
        return self._rows[i].get(j, Fraction(0))

    def row(self, i: int) -> Vector:
        d = self._rows[i]
        return tuple(d.get(j, Fraction(0)) for j in range(self._ncols))

    def column(self, j: int) -> Vector:
        return tuple(r.get(j, Fraction(0)) for r in self._rows)

    def rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self._nrows)]

    def row_support(self, i: int) -> dict:
        """Nonzero entries of row ``i`` as a fresh ``{col: value}`` dict."""
        return dict(self._rows[i])

    def entries(self) -> dict:
        return {(i, j): x for i, r in enumerate(self._rows) for j, x in r.items()}

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self._nrows)]

    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def is_zero(self) -> bool:
        return not any(self._rows)

    def transpose(self) -> "RationalMatrix":
        out = [{} for _ in range(self._ncols)]
        for i, r in enumerate(self._rows):
            for j, x in r.items():
                out[j][i] = x
        return RationalMatrix._from_dicts(out, self._nrows)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(v) != self._ncols:
            raise ValueError(f"vector of length {len(v)} for {self._nrows}x{self._ncols} matrix")
        out = []
        for r in self._rows:
            s = Fraction(0)
            for j, x in r.items():
                vj = v[j]
                if vj:
                    s += x * vj
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self._ncols != other._nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            out = []
            for r in self._rows:
                acc: dict = {}
                for k, x in r.items():
                    for j, y in other._rows[k].items():
                        acc[j] = acc.get(j, 0) + x * y
                out.append({j: v for j, v in acc.items() if v})
            return RationalMatrix._from_dicts(out, other._ncols)
        return self.apply(other)

    def _combine(self, other: "RationalMatrix", sign: int) -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        out = []
        for a, b in zip(self._rows, other._rows):
            d = dict(a)
            for j, y in b.items():
                v = d.get(j, 0) + sign * y
                if v:
                    d[j] = v
                else:
                    d.pop(j, None)
            out.append(d)
        return RationalMatrix._from_dicts(out, self._ncols)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "RationalMatrix":
        return self.scale(-1)

    def scale(self, c) -> "RationalMatrix":
        c = to_fraction(c)
        if not c:
            return RationalMatrix.zeros(*self.shape)
        return RationalMatrix._from_dicts([{j: c * x for j, x in r.items()} for r in self._rows], self._ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self._nrows))
        return f"RationalMatrix([{body}])"

    def inverse(self) -> "RationalMatrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self._nrows
        aug = [dict(r) for r in self._rows]
        for i in range(n):
            aug[i][n + i] = Fraction(1)
        reduced, pivots = _rref_sparse(aug, 2 * n)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return RationalMatrix._from_dicts([{j - n: x for j, x in r.items() if j >= n} for r in reduced], n)

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = self.to_lists()
        n = len(a)
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] / a[c][c]
                if f:
                    for k in range(c, n):
                        a[r][k] -= f * a[c][k]
        return d


# Both kernels return (pivot rows in pivot order, pivot columns).  The reduced
# row-echelon form is unique, so the two must agree exactly.

def _rref_sparse(dict_rows: list[dict], ncols: int) -> tuple[list[dict], list[int]]:
    pivot_rows: dict[int, dict] = {}
    for src in dict_rows:
        row = dict(src)
        for p in sorted(k for k in row if k in pivot_rows):
            c = row.get(p)
            if not c:
                continue
            for j, x in pivot_rows[p].items():
                v = row.get(j, 0) - c * x
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        if not row:
            continue
        p = min(row)
        lead = row[p]
        if lead != 1:
            row = {j: x / lead for j, x in row.items()}
        for q, other in pivot_rows.items():
            c = other.get(p)
            if not c:
                continue
            for j, x in row.items():
                v = other.get(j, 0) - c * x
                if v:
                    other[j] = v
                else:
                    other.pop(j, None)
        pivot_rows[p] = row
    pivots = sorted(pivot_rows)
    return [pivot_rows[p] for p in pivots], pivots


def _rref_dense(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    a = [list(r) for r in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        lead = a[r][c]
        if lead != 1:
            a[r] = [x / lead for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref_with_pivots(m: RationalMatrix, force: str | None = None) -> tuple[RationalMatrix, list[int]]:
    """Reduced row-echelon form (nonzero rows only) and its pivot columns.

    ``force`` selects the ``"dense"`` or ``"sparse"`` kernel; by default the
    choice follows the matrix density.
    """
    path = force or ("sparse" if m.density() < SPARSE_DENSITY else "dense")
    if path == "sparse":
        reduced, pivots = _rref_sparse(list(m._rows), m.ncols)
        return RationalMatrix._from_dicts(reduced, m.ncols), pivots
    if path == "dense":
        reduced, pivots = _rref_dense(m.to_lists(), m.ncols)
        return RationalMatrix(reduced, ncols=m.ncols), pivots
    raise ValueError(f"unknown elimination path {path!r}")


def rref(m: RationalMatrix, force: str | None = None) -> tuple[RationalMatrix, int]:
    """Return ``(R, rank)`` where ``R`` has the shape of ``m``.

    Zero rows of the reduced form are kept at the bottom so that
    ``rref(rref(m)[0])[0] == rref(m)[0]``.
    """
    reduced, pivots = rref_with_pivots(m, force)
    rank = len(pivots)
    padded = list(reduced._rows) + [{} for _ in range(m.nrows - rank)]
    return RationalMatrix._from_dicts(padded, m.ncols), rank


def rank(m: RationalMatrix) -> int:
    return len(rref_with_pivots(m)[1])


@dataclass(frozen=True, eq=True)
class Subspace:
    """A subspace of Q^ambient_dim, stored as its canonical RREF basis."""

    ambient_dim: int
    basis: RationalMatrix
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vectors = [vector(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in Q^{ambient_dim}")
        return cls.row_space(RationalMatrix(vectors, ncols=ambient_dim))

    @classmethod
    def row_space(cls, m: RationalMatrix) -> "Subspace":
        reduced, pivots = rref_with_pivots(m)
        return cls(m.ncols, reduced, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[Vector]:
        return self.basis.rows()

    def reduce(self, v: Sequence) -> Vector:
        """Canonical representative of ``v`` modulo this subspace.

        The result vanishes on every pivot column, so it is the same for all
        elements of the coset ``v + self``.
        """
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        out = list(vector(v))
        for k, p in enumerate(self.pivots):
            c = out[p]
            if c:
                for j, x in self.basis._rows[k].items():
                    out[j] -= c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(v) for v in self.vectors())

    def annihilator(self) -> "Subspace":
        """Vectors orthogonal to this subspace under the standard dot product."""
        return kernel(self.basis if self.dim else RationalMatrix.zeros(0, self.ambient_dim))

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersection(self, other)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def kernel(m: RationalMatrix) -> Subspace:
    """The null space {v : m v = 0}."""
    reduced, pivots = rref_with_pivots(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = {f: Fraction(1)}
        for k, p in enumerate(pivots):
            x = reduced._rows[k].get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return Subspace.row_space(RationalMatrix._from_dicts(basis, m.ncols))


def image(m: RationalMatrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.row_space(m.transpose())


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.row_space(RationalMatrix.vstack([a.basis, b.basis], a.ambient_dim))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return subspace_sum(a.annihilator(), b.annihilator()).annihilator()


def subspace_contains(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


def fixed_subspace(ops: Sequence[RationalMatrix], dim: int | None = None) -> Subspace:
    """Common fixed vectors of ``ops``: the intersection of ker(A - I).

    With no operators the whole space is returned, which needs ``dim``.
    """
    ops = list(ops)
    if not ops:
        if dim is None:
            raise ValueError("dim is required when ops is empty")
        return Subspace.full(dim)
    n = ops[0].nrows
    if dim is not None and dim != n:
        raise ValueError(f"operators act on Q^{n}, not Q^{dim}")
    for a in ops:
        if a.shape != (n, n):
            raise ValueError(f"operator of shape {a.shape} among {n}x{n} operators")
    ident = RationalMatrix.identity(n)
    return kernel(RationalMatrix.vstack([a - ident for a in ops], n))


def is_invariant(s: Subspace, a: RationalMatrix) -> bool:
    if a.shape != (s.ambient_dim, s.ambient_dim):
        raise ValueError(f"operator of shape {a.shape} on Q^{s.ambient_dim}")
    return all(s.contains(a.apply(v)) for v in s.vectors())


def solve(m: RationalMatrix, b: Sequence) -> Vector | None:
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    if len(b) != m.nrows:
        raise ValueError(f"right-hand side of length {len(b)} for {m.nrows} rows")
    aug = [dict(r) for r in m._rows]
    for i, x in enumerate(vector(b)):
        if x:
            aug[i][m.ncols] = x
    reduced, pivots = _rref_sparse(aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for row, p in zip(reduced, pivots):
        x[p] = row.get(m.ncols, Fraction(0))
    return tuple(x)
