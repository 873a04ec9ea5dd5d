"""Exact sparse matrices: rank and kernels over fields, Smith normal form over
Z and Z/m, and homology of a composable pair of boundary maps.

Matrices are dictionaries (row, col) -> nonzero payload together with a ring.
They are treated as immutable; every operation returns a fresh matrix.
Elimination keeps rows as dictionaries and picks pivots in sparsest columns
first, which works well for the boundary operators of tensor-power bases.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAComplex, NotAField, RingMismatch, UnsupportedRing
from .rings import QQ, ZZ, HomologyModule, IntegersMod, Ring


class SparseMatrix:
    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring: Ring, nrows: int, ncols: int, entries=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise IndexError(f"entry ({i},{j}) outside {nrows}x{ncols}")
                if not ring.is_zero(v):
                    self.entries[(i, j)] = v

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, ring, nrows, ncols):
        return cls(ring, nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, n, n, {(i, i): ring.one for i in range(n)})

    @classmethod
    def from_rows(cls, ring, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        ent = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = v if not isinstance(v, int) or ring == ZZ else ring.from_int(v)
                if not ring.is_zero(v):
                    ent[(i, j)] = v
        return cls(ring, nrows, ncols, ent)

    @classmethod
    def from_columns(cls, ring, nrows, columns):
        """columns: list of dicts row -> payload."""
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not ring.is_zero(v):
                    ent[(i, j)] = v
        return cls(ring, nrows, len(columns), ent)

    # -- basic algebra -------------------------------------------------------
    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        ent = dict(self.entries)
        R = self.ring
        for k, v in other.entries.items():
            s = R.add(ent.get(k, R.zero), v)
            if R.is_zero(s):
                ent.pop(k, None)
            else:
                ent[k] = s
        return SparseMatrix(R, self.nrows, self.ncols, ent)

    def __neg__(self):
        R = self.ring
        return SparseMatrix(
            R, self.nrows, self.ncols, {k: R.neg(v) for k, v in self.entries.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        R = self.ring
        return SparseMatrix(
            R, self.nrows, self.ncols, {k: R.mul(c, v) for k, v in self.entries.items()}
        )

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        R = self.ring
        rows = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(j, []).append((i, v))
        out = {}
        for (j, l), w in other.entries.items():
            for i, v in rows.get(j, ()):
                k = (i, l)
                s = R.add(out.get(k, R.zero), R.mul(v, w))
                if R.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return SparseMatrix(R, self.nrows, other.ncols, out)

    def transpose(self):
        return SparseMatrix(
            self.ring,
            self.ncols,
            self.nrows,
            {(j, i): v for (i, j), v in self.entries.items()},
        )

    def hstack(self, other):
        self._check(other)
        if self.nrows != other.nrows:
            raise ValueError("row mismatch in hstack")
        ent = dict(self.entries)
        for (i, j), v in other.entries.items():
            ent[(i, j + self.ncols)] = v
        return SparseMatrix(self.ring, self.nrows, self.ncols + other.ncols, ent)

    def vstack(self, other):
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in vstack")
        ent = dict(self.entries)
        for (i, j), v in other.entries.items():
            ent[(i + self.nrows, j)] = v
        return SparseMatrix(self.ring, self.nrows + other.nrows, self.ncols, ent)

    # -- access --------------------------------------------------------------
    def column(self, j):
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector (dict index -> payload)."""
        R = self.ring
        cols = {}
        for (i, j), v in self.entries.items():
            cols.setdefault(j, []).append((i, v))
        out = {}
        for j, x in vec.items():
            for i, v in cols.get(j, ()):
                s = R.add(out.get(i, R.zero), R.mul(v, x))
                if R.is_zero(s):
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    def to_dense(self):
        R = self.ring
        rows = [[R.zero] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def nnz(self):
        return len(self.entries)

    @property
    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.ring == other.ring
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.entries == other.entries
        )

    def cast(self, ring: Ring, convert=None):
        conv = convert or ring.from_int
        return SparseMatrix(
            ring,
            self.nrows,
            self.ncols,
            {k: conv(v) for k, v in self.entries.items()},
        )

    def __repr__(self):
        return f"SparseMatrix({self.ring}, {self.nrows}x{self.ncols}, nnz={len(self.entries)})"


# ---------------------------------------------------------------------------
# elimination over fields
# ---------------------------------------------------------------------------


def _rows_and_colindex(M: SparseMatrix):
    rows = [dict() for _ in range(M.nrows)]
    for (i, j), v in M.entries.items():
        rows[i][j] = v
    col_rows = {}
    for i, row in enumerate(rows):
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    return rows, col_rows


def _eliminate(M: SparseMatrix, jordan: bool):
    """Sparse Gaussian elimination; returns (rows, pivots).

    pivots is a list of (row_index, col_index).  With jordan=True the pivot
    column is cleared from every other row (needed for kernel extraction).
    """
    R = M.ring
    rows, col_rows = _rows_and_colindex(M)  # column index over active rows only
    retired_by_col: dict[int, set[int]] = {}  # pivot rows, tracked in jordan mode
    pivots = []
    while True:
        best = None
        for j, rs in col_rows.items():
            live = len(rs)
            if live == 0:
                continue
            if best is None or live < best[1] or (live == best[1] and j < best[0]):
                best = (j, live)
        if best is None:
            break
        c = best[0]
        r = min(col_rows[c], key=lambda i: (len(rows[i]), i))
        pivots.append((r, c))
        pv_inv = R.inv(rows[r][c])
        targets = set(col_rows[c]) - {r}
        if jordan:
            targets |= retired_by_col.get(c, set())
        for r2 in targets:
            f = R.mul(rows[r2][c], pv_inv)
            row2 = rows[r2]
            is_active = r2 in col_rows.get(c, ())
            for j, v in rows[r].items():
                nv = R.sub(row2.get(j, R.zero), R.mul(f, v))
                index = col_rows if is_active else retired_by_col
                if R.is_zero(nv):
                    if j in row2:
                        del row2[j]
                        index.get(j, set()).discard(r2)
                else:
                    if j not in row2:
                        index.setdefault(j, set()).add(r2)
                    row2[j] = nv
        # retire the pivot row from further pivot selection
        for j in rows[r]:
            col_rows[j].discard(r)
            if jordan:
                retired_by_col.setdefault(j, set()).add(r)
    return rows, pivots


def rank(M: SparseMatrix) -> int:
    """Rank of a matrix over a field, by exact sparse elimination."""
    if not M.ring.is_field:
        raise NotAField(f"rank needs a field, got {M.ring}")
    _, pivots = _eliminate(M, jordan=False)
    return len(pivots)


def nullity(M: SparseMatrix) -> int:
    return M.ncols - rank(M)


def kernel_basis(M: SparseMatrix) -> SparseMatrix:
    """Columns spanning ker M, over a field.

    One basis vector per free column: the free coordinate is set to 1 and the
    pivot coordinates are solved from the reduced rows.
    """
    if not M.ring.is_field:
        raise NotAField(f"kernel_basis needs a field, got {M.ring}")
    R = M.ring
    rows, pivots = _eliminate(M, jordan=True)
    pivot_cols = {c for _, c in pivots}
    free_cols = [j for j in range(M.ncols) if j not in pivot_cols]
    columns = []
    for f in free_cols:
        vec = {f: R.one}
        for r, c in pivots:
            coeff = rows[r].get(f)
            if coeff is not None:
                vec[c] = R.neg(R.mul(coeff, R.inv(rows[r][c])))
        columns.append(vec)
    return SparseMatrix.from_columns(R, M.ncols, columns)


def rank_over_rationals(M: SparseMatrix) -> int:
    """Rank of an integer matrix, computed over Q."""
    if M.ring == QQ:
        return rank(M)
    if M.ring != ZZ:
        raise UnsupportedRing("rank_over_rationals expects a matrix over Z or Q")
    return rank(M.cast(QQ, Fraction))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def _snf_invariants(dense):
    """Nonzero invariant factors of a dense integer matrix (list of lists)."""
    A = [row[:] for row in dense]
    m = len(A)
    n = len(A[0]) if A else 0
    t = 0
    invariants = []
    while t < min(m, n):
        # locate a nonzero entry of smallest magnitude in the trailing block
        pr = pc = None
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                v = Ai[j]
                if v and (best is None or abs(v) < best):
                    best, pr, pc = abs(v), i, j
        if pr is None:
            break
        A[t], A[pr] = A[pr], A[t]
        for row in A:
            row[t], row[pc] = row[pc], row[t]
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    for j in range(t, n):
                        A[i][j] -= q * A[t][j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for i in range(t, m):
                        A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        for i in range(t, m):
                            A[i][t], A[i][j] = A[i][j], A[i][t]
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the trailing block by the pivot
            d = A[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, n):
                A[t][j] += A[offender][j]
        invariants.append(abs(A[t][t]))
        t += 1
    return invariants


def smith_normal_form(M: SparseMatrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of a matrix over Z or Z/m.

    Over Z/m the matrix is lifted to Z, m * identity rows are appended, and
    the resulting invariants are reduced mod m (zeros dropped).
    """
    if M.ring == ZZ:
        return _snf_invariants(M.to_dense())
    if isinstance(M.ring, IntegersMod):
        m = M.ring.m
        dense = [[0] * M.ncols for _ in range(M.nrows + M.ncols)]
        for (i, j), v in M.entries.items():
            dense[i][j] = v
        for j in range(M.ncols):
            dense[M.nrows + j][j] = m
        inv = _snf_invariants(dense)
        return [d % m for d in inv if d % m]
    raise UnsupportedRing(f"Smith normal form over {M.ring} is not supported")


# ---------------------------------------------------------------------------
# homology of a pair of boundary maps
# ---------------------------------------------------------------------------


def homology_at(d_in: SparseMatrix, d_out: SparseMatrix) -> HomologyModule:
    """ker(d_out) / im(d_in) for d_in: C_{p+1} -> C_p, d_out: C_p -> C_{p-1}.

    Over a field the answer is the dimension nullity(d_out) - rank(d_in).
    Over Z the free rank comes from ranks over Q and the torsion is the list
    of invariant factors > 1 of d_in (ker d_out is a saturated subgroup, so
    the elementary divisors of im(d_in) inside it agree with those inside the
    ambient lattice).
    """
    if d_in.ring != d_out.ring:
        raise RingMismatch("boundary maps over different rings")
    if d_in.nrows != d_out.ncols:
        raise ValueError("boundary maps are not composable")
    comp = d_out @ d_in
    if not comp.is_zero:
        raise NotAComplex("d_out . d_in != 0")
    R = d_in.ring
    if R.is_field:
        free = nullity(d_out) - rank(d_in)
        return HomologyModule(R, free)
    if R == ZZ:
        free = (d_out.ncols - rank_over_rationals(d_out)) - rank_over_rationals(d_in)
        torsion = tuple(d for d in smith_normal_form(d_in) if d > 1)
        return HomologyModule(R, free, torsion)
    raise UnsupportedRing(f"homology over {R} is not supported")
