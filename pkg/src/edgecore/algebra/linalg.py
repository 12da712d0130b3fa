"""Exact linear algebra over Q and F_p.

Two layers share one elimination routine:

* :class:`RowSpace` keeps a fully reduced echelon basis of sparse vectors
  (dicts from orderable column keys to nonzero scalars).  Graded pieces of
  ideals live here, keyed by monomials.
* :class:`Mat` is the small dense matrix type used for the coefficient
  matrices (reduction coefficients, B-matrices) and its helpers
  :func:`row_reduce`, :func:`determinant`, :func:`intersect_row_spaces`.

Pivot columns are always the smallest key present, so the reduced basis is
the unique reduced row-echelon form for the column order given by the keys.
"""

from __future__ import annotations

from .fields import FieldMismatch


class DimensionError(ValueError):
    pass


def _axpy(dst: dict, c, src: dict) -> None:
    """dst -= c * src, in place, dropping zeros."""
    for k, v in src.items():
        old = dst.get(k)
        nv = -(c * v) if old is None else old - c * v
        if nv:
            dst[k] = nv
        else:
            del dst[k]


class RowSpace:
    """Reduced row-echelon basis of a subspace, built one vector at a time.

    Every stored row has a 1 in its pivot column and zeros in every other
    pivot column, so reducing a vector is a single pass over its pivot keys.
    """

    def __init__(self, field, vectors=()):
        self.field = field
        self._rows: dict = {}
        for v in vectors:
            self.add(v)

    def copy(self) -> "RowSpace":
        out = RowSpace(self.field)
        out._rows = {p: dict(r) for p, r in self._rows.items()}
        return out

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list:
        return sorted(self._rows)

    def rows(self) -> list[dict]:
        """Basis rows ordered by pivot column."""
        return [self._rows[p] for p in sorted(self._rows)]

    def reduce(self, vec: dict) -> dict:
        """Residue of ``vec`` modulo the space (zero dict iff ``vec`` is in it)."""
        v = {k: c for k, c in vec.items() if c}
        for p in [k for k in v if k in self._rows]:
            c = v.get(p)
            if c:
                _axpy(v, c, self._rows[p])
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: c * inv for k, c in r.items()}
        for row in self._rows.values():
            c = row.get(p)
            if c:
                _axpy(row, c, r)
        self._rows[p] = r
        return True

    def __contains__(self, vec) -> bool:
        return not self.reduce(vec)

    def contains_space(self, other: "RowSpace") -> bool:
        return all(r in self for r in other.rows())

    def __eq__(self, other):
        if not isinstance(other, RowSpace):
            return NotImplemented
        # reduced echelon form is canonical
        return self._rows == other._rows

    def __repr__(self):
        return f"RowSpace(rank={self.rank}, field={self.field})"


def left_kernel(vectors: list[dict], field) -> list[dict]:
    """Basis of {lam : sum_i lam[i] * vectors[i] = 0}, as dicts index -> scalar.

    Uses the augmented-identity trick: reduce rows (v_i | e_i) with the data
    block ordered first; rows whose data part vanishes carry the relations.
    """
    space = RowSpace(field)
    one = field.one
    for i, v in enumerate(vectors):
        aug = {(0, k): c for k, c in v.items() if c}
        aug[(1, i)] = one
        space.add(aug)
    out = []
    for row in space.rows():
        if min(row)[0] == 1:
            out.append({k[1]: c for k, c in row.items()})
    return out


def intersect_spaces(spaces: list[RowSpace]) -> RowSpace:
    """Intersection of subspaces sharing a key universe (Zassenhaus)."""
    if not spaces:
        raise ValueError("need at least one space")
    field = spaces[0].field
    acc = spaces[0]
    for other in spaces[1:]:
        if other.field is not field:
            raise FieldMismatch("spaces over different fields")
        z = RowSpace(field)
        for row in acc.rows():
            aug = {(0, k): c for k, c in row.items()}
            aug.update({(1, k): c for k, c in row.items()})
            z.add(aug)
        for row in other.rows():
            z.add({(0, k): c for k, c in row.items()})
        acc = RowSpace(field)
        for row in z.rows():
            if min(row)[0] == 1:
                acc.add({k[1]: c for k, c in row.items()})
    return acc


class Mat:
    """Dense matrix over a single exact field.  Immutable by convention."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field, ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    @classmethod
    def identity(cls, n, field):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, nrows, ncols, field):
        return cls([[0] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def from_sparse(cls, rows: list[dict], ncols: int, field):
        z = field.zero
        return cls([[r.get(j, z) for j in range(ncols)] for r in rows], field, ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def sparse_rows(self) -> list[dict]:
        return [{j: c for j, c in enumerate(r) if c} for r in self.rows]

    def transpose(self):
        return Mat([[r[j] for r in self.rows] for j in range(self.ncols)], self.field, self.nrows)

    def submatrix(self, row_idx, col_idx=None):
        col_idx = range(self.ncols) if col_idx is None else col_idx
        return Mat([[self.rows[i][j] for j in col_idx] for i in row_idx], self.field, len(col_idx))

    def vstack(self, other):
        if other.ncols != self.ncols:
            raise DimensionError(f"column counts differ: {self.ncols} vs {other.ncols}")
        return Mat(self.rows + other.rows, self.field, self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions differ")
        cols = list(zip(*other.rows))
        z = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat(out, self.field, other.ncols)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field is other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def tolist(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Mat([{body}], {self.field!r})"


def row_reduce(m: Mat) -> tuple[Mat, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns of ``m``.

    The result has the same shape as ``m``; zero rows sit at the bottom.
    """
    space = RowSpace(m.field, m.sparse_rows())
    rows = space.rows()
    rref = Mat.from_sparse(rows + [{}] * (m.nrows - len(rows)), m.ncols, m.field)
    return rref, space.rank, space.pivots


def rank(m: Mat) -> int:
    return RowSpace(m.field, m.sparse_rows()).rank


def determinant(m: Mat):
    """Exact determinant by Gaussian elimination with first-nonzero pivoting."""
    if m.nrows != m.ncols:
        raise DimensionError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    field = m.field
    a = [list(r) for r in m.rows]
    n = m.nrows
    det = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det = det * p
        inv = field.one / p
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f * inv
                rr, rc = a[r], a[c]
                for j in range(c, n):
                    if rc[j]:
                        rr[j] = rr[j] - f * rc[j]
    return det


def row_space(m: Mat) -> RowSpace:
    return RowSpace(m.field, m.sparse_rows())


def intersect_row_spaces(spaces: list[Mat]) -> Mat:
    """Row basis (in reduced echelon form) of the intersection of row spaces."""
    if not spaces:
        raise ValueError("need at least one matrix")
    ncols = spaces[0].ncols
    field = spaces[0].field
    for s in spaces:
        if s.ncols != ncols:
            raise DimensionError(f"column counts differ: {ncols} vs {s.ncols}")
        if s.field is not field:
            raise FieldMismatch("matrices over different fields")
    inter = intersect_spaces([row_space(s) for s in spaces])
    return Mat.from_sparse(inter.rows(), ncols, field)


def kernel(m: Mat) -> Mat:
    """Basis of the right kernel {v : m v = 0}, one vector per row."""
    vecs = left_kernel(m.transpose().sparse_rows(), m.field)
    return Mat.from_sparse(vecs, m.ncols, m.field)
