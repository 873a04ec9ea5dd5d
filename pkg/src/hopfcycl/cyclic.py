"""Cyclic modules and their homology engines.

A cyclic module is presented operator-wise: carrier dimensions per level,
face / degeneracy / cyclic operators as exact sparse matrices.  Level m has
faces d_0..d_m, degeneracies s_0..s_m and a cyclic operator t with
t^(m+1) = id.  Two main instances live here:

* the Connes-Moscovici module of a Hopf algebra with an admissible
  (grouplike, character, character) triple, whose level-m carrier is the
  m-th tensor power of the algebra, and
* the classical cyclic module of an algebra, with carrier the (m+1)-st
  tensor power.

On top of the operators sit the homology engines: the Hochschild b-complex,
the (b, b', 1-t, N) first-quadrant bicomplex (works over Z as well), the
Connes quotient by the cyclic action (rings containing Q), and the
rank-bookkeeping checker for the periodicity long exact sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    IndexOutOfRange,
    NotAComplex,
    PreconditionFailed,
    RingWithoutRationals,
)
from .hopf import CMTriple, Character, HopfAlgebraData, twisted_antipode
from .rings import HomologyModule, Ring
from .sparse import SparseMatrix, homology_at, rank


def tuple_to_index(t, d):
    idx = 0
    for x in t:
        idx = idx * d + x
    return idx


def index_to_tuple(idx, d, length):
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        idx, out[pos] = divmod(idx, d)
    return tuple(out)


class CyclicModule:
    """Operator-level view of a cyclic module; subclasses fill in columns."""

    ring: Ring

    def level_dim(self, m: int) -> int:
        raise NotImplementedError

    def _face(self, m: int, i: int) -> SparseMatrix:
        raise NotImplementedError

    def _degeneracy(self, m: int, i: int) -> SparseMatrix:
        raise NotImplementedError

    def _cyclic(self, m: int) -> SparseMatrix:
        raise NotImplementedError

    def __init__(self):
        self._cache: dict = {}

    def face(self, m: int, i: int) -> SparseMatrix:
        if m < 1 or not 0 <= i <= m:
            raise IndexOutOfRange(f"face d_{i} undefined at level {m}")
        return self._memo(("d", m, i), lambda: self._face(m, i))

    def degeneracy(self, m: int, i: int) -> SparseMatrix:
        if m < 0 or not 0 <= i <= m:
            raise IndexOutOfRange(f"degeneracy s_{i} undefined at level {m}")
        return self._memo(("s", m, i), lambda: self._degeneracy(m, i))

    def cyclic(self, m: int) -> SparseMatrix:
        if m < 0:
            raise IndexOutOfRange("negative level")
        return self._memo(("t", m), lambda: self._cyclic(m))

    def _memo(self, key, thunk):
        out = self._cache.get(key)
        if out is None:
            out = thunk()
            self._cache[key] = out
        return out

    # -- derived operators ---------------------------------------------------
    def boundary_b(self, m: int) -> SparseMatrix:
        """Hochschild boundary sum((-1)^i d_i), i = 0..m."""

        def build():
            R = self.ring
            out = SparseMatrix.zero(R, self.level_dim(m - 1), self.level_dim(m))
            for i in range(m + 1):
                di = self.face(m, i)
                out = out + (di if i % 2 == 0 else -di)
            return out

        return self._memo(("b", m), build)

    def boundary_bprime(self, m: int) -> SparseMatrix:
        """Truncated boundary sum((-1)^i d_i), i = 0..m-1 (acyclic column)."""

        def build():
            out = SparseMatrix.zero(self.ring, self.level_dim(m - 1), self.level_dim(m))
            for i in range(m):
                di = self.face(m, i)
                out = out + (di if i % 2 == 0 else -di)
            return out

        return self._memo(("bp", m), build)

    def signed_cyclic(self, m: int) -> SparseMatrix:
        t = self.cyclic(m)
        return t if m % 2 == 0 else -t

    def one_minus_lambda(self, m: int) -> SparseMatrix:
        return SparseMatrix.identity(self.ring, self.level_dim(m)) - self.signed_cyclic(m)

    def norm(self, m: int) -> SparseMatrix:
        """N = sum(lambda^i, i = 0..m) with lambda the signed cyclic operator."""

        def build():
            lam = self.signed_cyclic(m)
            acc = SparseMatrix.identity(self.ring, self.level_dim(m))
            out = acc
            for _ in range(m):
                acc = lam @ acc
                out = out + acc
            return out

        return self._memo(("N", m), build)


# ---------------------------------------------------------------------------
# the Connes-Moscovici cyclic module of a Hopf algebra
# ---------------------------------------------------------------------------


class ConnesMoscoviciModule(CyclicModule):
    """C_m = H^(tensor m), with operators twisted by (pi, alpha, beta).

    Operators are materialized column by column from basis tuples; the
    three-leg coproducts needed by the cyclic operator are pre-contracted
    with alpha per basis element and cached.
    """

    def __init__(self, hopf: HopfAlgebraData, triple: CMTriple, require_valid: bool = True):
        super().__init__()
        if require_valid and not triple.valid:
            raise PreconditionFailed(
                "triple fails the admissibility condition: " + "; ".join(triple.failures)
            )
        self.hopf = hopf
        self.triple = triple
        self.ring = hopf.ring
        self.alpha = triple.alpha
        self.beta = triple.beta
        self.s_pi = twisted_antipode(hopf, triple.pi)
        self._cop3a: list[dict] | None = None

    def level_dim(self, m: int) -> int:
        return self.hopf.dim**m if m else 1

    # three-leg coproduct with alpha applied to the first leg, per basis elt
    def _cop3_alpha(self):
        if self._cop3a is None:
            R = self.ring
            tables = []
            for b in range(self.hopf.dim):
                table: dict = {}
                for (x, y, z), c in self.hopf.iterated_coproduct_basis(b, 3).items():
                    v = R.mul(c, self.alpha(x))
                    if R.is_zero(v):
                        continue
                    key = (y, z)
                    s = R.add(table.get(key, R.zero), v)
                    if R.is_zero(s):
                        table.pop(key, None)
                    else:
                        table[key] = s
                tables.append(table)
            self._cop3a = tables
        return self._cop3a

    def _face(self, m, i):
        R = self.ring
        d = self.hopf.dim
        mult = self.hopf.algebra.mult
        if m == 1:
            if i == 0:
                values = {(0, b): self.alpha(b) for b in range(d)}
            else:
                values = {(0, b): self.beta(b) for b in range(d)}
            return SparseMatrix(R, 1, d, values)
        cols = []
        for idx in range(d**m):
            t = index_to_tuple(idx, d, m)
            col: dict = {}
            if i == 0:
                c = self.alpha(t[0])
                if not R.is_zero(c):
                    col[tuple_to_index(t[1:], d)] = c
            elif i == m:
                c = self.beta(t[-1])
                if not R.is_zero(c):
                    col[tuple_to_index(t[:-1], d)] = c
            else:
                for k, c in mult[t[i - 1]][t[i]].items():
                    col[tuple_to_index(t[: i - 1] + (k,) + t[i + 1 :], d)] = c
            cols.append(col)
        return SparseMatrix.from_columns(R, d ** (m - 1), cols)

    def _degeneracy(self, m, i):
        R = self.ring
        d = self.hopf.dim
        unit = self.hopf.algebra.unit
        cols = []
        for idx in range(self.level_dim(m)):
            t = index_to_tuple(idx, d, m)
            col = {
                tuple_to_index(t[:i] + (u,) + t[i:], d): c for u, c in unit.items()
            }
            cols.append(col)
        return SparseMatrix.from_columns(R, d ** (m + 1), cols)

    def _cyclic(self, m):
        R = self.ring
        if m == 0:
            return SparseMatrix.identity(R, 1)
        d = self.hopf.dim
        mult = self.hopf.algebra.mult
        cop3a = self._cop3_alpha()
        cols = []
        for idx in range(d**m):
            t = index_to_tuple(idx, d, m)
            # fold over the factors, accumulating the product of second legs
            # and the emitted third legs
            state = {(y, (z,)): c for (y, z), c in cop3a[t[0]].items()}
            for b in t[1:]:
                nxt: dict = {}
                table = cop3a[b]
                for (yacc, zt), c in state.items():
                    for (y2, z2), c2 in table.items():
                        cc = R.mul(c, c2)
                        for k, pv in mult[yacc][y2].items():
                            key = (k, zt + (z2,))
                            s = R.add(nxt.get(key, R.zero), R.mul(cc, pv))
                            if R.is_zero(s):
                                nxt.pop(key, None)
                            else:
                                nxt[key] = s
                state = nxt
            col: dict = {}
            for (yacc, zt), c in state.items():
                c = R.mul(c, self.beta(zt[-1]))
                if R.is_zero(c):
                    continue
                for w, sv in self.s_pi.column(yacc).items():
                    out_idx = tuple_to_index((w,) + zt[:-1], d)
                    s = R.add(col.get(out_idx, R.zero), R.mul(c, sv))
                    if R.is_zero(s):
                        col.pop(out_idx, None)
                    else:
                        col[out_idx] = s
            cols.append(col)
        return SparseMatrix.from_columns(R, d**m, cols)


# ---------------------------------------------------------------------------
# the classical cyclic module of an associative algebra
# ---------------------------------------------------------------------------


class ClassicalCyclicModule(CyclicModule):
    """C_m = A^(tensor m+1) with the standard faces, degeneracies and rotation."""

    def __init__(self, algebra):
        super().__init__()
        self.algebra = algebra
        self.ring = algebra.ring

    def level_dim(self, m: int) -> int:
        return self.algebra.dim ** (m + 1)

    def _face(self, m, i):
        R = self.ring
        d = self.algebra.dim
        mult = self.algebra.mult
        cols = []
        for idx in range(d ** (m + 1)):
            t = index_to_tuple(idx, d, m + 1)
            col: dict = {}
            if i < m:
                for k, c in mult[t[i]][t[i + 1]].items():
                    col[tuple_to_index(t[:i] + (k,) + t[i + 2 :], d)] = c
            else:
                for k, c in mult[t[m]][t[0]].items():
                    col[tuple_to_index((k,) + t[1:m], d)] = c
            cols.append(col)
        return SparseMatrix.from_columns(R, d**m, cols)

    def _degeneracy(self, m, i):
        R = self.ring
        d = self.algebra.dim
        unit = self.algebra.unit
        cols = []
        for idx in range(d ** (m + 1)):
            t = index_to_tuple(idx, d, m + 1)
            col = {
                tuple_to_index(t[: i + 1] + (u,) + t[i + 1 :], d): c
                for u, c in unit.items()
            }
            cols.append(col)
        return SparseMatrix.from_columns(R, d ** (m + 2), cols)

    def _cyclic(self, m):
        R = self.ring
        d = self.algebra.dim
        ent = {}
        for idx in range(d ** (m + 1)):
            t = index_to_tuple(idx, d, m + 1)
            ent[(tuple_to_index((t[m],) + t[:m], d), idx)] = R.one
        return SparseMatrix(R, d ** (m + 1), d ** (m + 1), ent)


# ---------------------------------------------------------------------------
# chain windows and homology
# ---------------------------------------------------------------------------


@dataclass
class ChainComplexWindow:
    """Degrees 0..N of a chain complex: carrier dims and boundary matrices.

    boundaries[m] maps degree m to degree m-1, for 1 <= m <= N.
    """

    ring: Ring
    dims: list[int]
    boundaries: dict[int, SparseMatrix] = field(default_factory=dict)

    def __post_init__(self):
        for m, bm in self.boundaries.items():
            if m >= 2 and (m - 1) in self.boundaries:
                if not (self.boundaries[m - 1] @ bm).is_zero:
                    raise NotAComplex(f"boundary square nonzero at degree {m}")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def homology(self, n: int) -> HomologyModule:
        """Homology at degree n; needs boundaries n and n+1 inside the window."""
        if n + 1 > self.top:
            raise IndexOutOfRange(f"degree {n} needs boundary {n + 1} in the window")
        d_in = self.boundaries[n + 1]
        if n == 0:
            d_out = SparseMatrix.zero(self.ring, 0, self.dims[0])
        else:
            d_out = self.boundaries[n]
        return homology_at(d_in, d_out)


def hochschild_window(module: CyclicModule, N: int) -> ChainComplexWindow:
    """The b-complex of the underlying simplicial module, degrees 0..N."""
    dims = [module.level_dim(m) for m in range(N + 1)]
    boundaries = {m: module.boundary_b(m) for m in range(1, N + 1)}
    return ChainComplexWindow(module.ring, dims, boundaries)


def hochschild_homology(module: CyclicModule, n: int) -> HomologyModule:
    return hochschild_window(module, n + 1).homology(n)


# -- cyclic bicomplex --------------------------------------------------------


def _total_dim(module, n):
    return sum(module.level_dim(q) for q in range(n + 1))


def _total_boundary(module: CyclicModule, n: int) -> SparseMatrix:
    """D: Tot_n -> Tot_(n-1) of the (b, b', 1-lambda, N) bicomplex.

    Column p of the bicomplex carries b (p even) or -b' (p odd); the
    horizontal map out of an odd column is 1 - lambda and out of a positive
    even column is the norm N.  With the signed cyclic operator the squares
    anticommute, so the total boundary is the plain block sum.
    """
    R = module.ring
    # block (p, q) with p + q = n, laid out p = 0..n; same for the target
    src_off, off = [], 0
    for p in range(n + 1):
        src_off.append(off)
        off += module.level_dim(n - p)
    src_total = off
    tgt_off, off = [], 0
    for p in range(n):
        tgt_off.append(off)
        off += module.level_dim(n - 1 - p)
    tgt_total = off
    ent: dict = {}

    def insert(block: SparseMatrix, row0: int, col0: int):
        for (i, j), v in block.entries.items():
            key = (row0 + i, col0 + j)
            s = R.add(ent.get(key, R.zero), v)
            if R.is_zero(s):
                ent.pop(key, None)
            else:
                ent[key] = s

    for p in range(n + 1):
        q = n - p
        if q >= 1:
            vert = module.boundary_b(q) if p % 2 == 0 else -module.boundary_bprime(q)
            insert(vert, tgt_off[p], src_off[p])
        if p >= 1:
            horiz = module.one_minus_lambda(q) if p % 2 == 1 else module.norm(q)
            insert(horiz, tgt_off[p - 1], src_off[p])
    return SparseMatrix(R, tgt_total, src_total, ent)


def cyclic_bicomplex_hc(module: CyclicModule, n: int) -> HomologyModule:
    """HC_n as homology of the total complex of the cyclic bicomplex."""
    d_in = _total_boundary(module, n + 1)
    if n == 0:
        d_out = SparseMatrix.zero(module.ring, 0, _total_dim(module, 0))
    else:
        d_out = _total_boundary(module, n)
    return homology_at(d_in, d_out)


# -- Connes quotient complex -------------------------------------------------


def connes_lambda_hc(module: CyclicModule, n: int) -> HomologyModule:
    """HC_n from the quotient of the b-complex by the cyclic action.

    Only valid when the coefficient ring contains Q.  Dimensions of the
    quotient homology are recovered from ranks of the boundary matrices
    augmented by generators of the cyclic-action image:

        dim H_n = dim C_n + rank(1 - lambda_{n-1})
                  - rank[b_n | 1 - lambda_{n-1}] - rank[b_{n+1} | 1 - lambda_n]
    """
    R = module.ring
    if not R.contains_rationals:
        raise RingWithoutRationals(
            f"the quotient complex computes HC only over rings containing Q, not {R}"
        )
    dim_n = module.level_dim(n)
    r_in = rank(module.boundary_b(n + 1).hstack(module.one_minus_lambda(n)))
    if n == 0:
        return HomologyModule(R, dim_n - r_in)
    w = module.one_minus_lambda(n - 1)
    r_w = rank(w)
    r_out = rank(module.boundary_b(n).hstack(w))
    return HomologyModule(R, dim_n + r_w - r_out - r_in)


# -- cyclic module law verification ------------------------------------------


def verify_cyclic_axioms(module: CyclicModule, N: int) -> dict[str, bool]:
    """Exact matrix verification of the simplicial and cyclic identities.

    Checks, for every level m <= N: the simplicial relations among faces and
    degeneracies, the compatibilities of the cyclic operator with both, and
    t^(m+1) = id.  Returns a name -> pass map; failures are itemized by name.
    """
    report: dict[str, bool] = {}

    def check(name, lhs, rhs):
        report[name] = lhs == rhs

    for m in range(N + 1):
        t = module.cyclic(m)
        # t^(m+1) = id
        power = SparseMatrix.identity(module.ring, module.level_dim(m))
        for _ in range(m + 1):
            power = t @ power
        check(f"t_{m}^{m + 1} = id", power, SparseMatrix.identity(module.ring, module.level_dim(m)))

        if m >= 2:
            for j in range(m + 1):
                for i in range(j):
                    # d_i d_j = d_(j-1) d_i for i < j
                    check(
                        f"d_{i} d_{j} (level {m})",
                        module.face(m - 1, i) @ module.face(m, j),
                        module.face(m - 1, j - 1) @ module.face(m, i),
                    )
        if m >= 1:
            # cyclic-face compatibility
            check(f"d_0 t (level {m})", module.face(m, 0) @ t, module.face(m, m))
            for i in range(1, m + 1):
                check(
                    f"d_{i} t (level {m})",
                    module.face(m, i) @ t,
                    module.cyclic(m - 1) @ module.face(m, i - 1),
                )
        for j in range(m + 1):
            for i in range(j + 1):
                # s_i s_j = s_(j+1) s_i for i <= j
                check(
                    f"s_{i} s_{j} (level {m})",
                    module.degeneracy(m + 1, i) @ module.degeneracy(m, j),
                    module.degeneracy(m + 1, j + 1) @ module.degeneracy(m, i),
                )
        if m >= 1:
            for j in range(m):
                for i in range(m + 1):
                    # mixed identities d_i s_j on level m - 1 degeneracies
                    lhs = module.face(m, i) @ module.degeneracy(m - 1, j)
                    if i < j:
                        rhs = module.degeneracy(m - 2, j - 1) @ module.face(m - 1, i) if m >= 2 else None
                    elif i in (j, j + 1):
                        rhs = SparseMatrix.identity(module.ring, module.level_dim(m - 1))
                    else:
                        rhs = (
                            module.degeneracy(m - 2, j) @ module.face(m - 1, i - 1)
                            if m >= 2
                            else None
                        )
                    if rhs is not None:
                        check(f"d_{i} s_{j} (level {m - 1})", lhs, rhs)
            # cyclic-degeneracy compatibility on level m - 1
            tm1 = module.cyclic(m - 1)
            check(
                f"s_0 t (level {m - 1})",
                module.degeneracy(m - 1, 0) @ tm1,
                t @ t @ module.degeneracy(m - 1, m - 1),
            )
            for i in range(1, m):
                check(
                    f"s_{i} t (level {m - 1})",
                    module.degeneracy(m - 1, i) @ tm1,
                    t @ module.degeneracy(m - 1, i - 1),
                )
    return report


# -- SBI rank bookkeeping ----------------------------------------------------


@dataclass
class SBIReport:
    consistent: bool
    ranks: list[tuple[int, int, int]]  # per degree: rank(I_n), rank(S_n), rank(B_n)
    reason: str = ""


def sbi_rank_assignment(h_dims: list[int], hc_dims: list[int]) -> SBIReport:
    """Solve the exactness constraints of the periodicity sequence.

    The sequence ... -> H_n -> HC_n -> HC_(n-2) -> H_(n-1) -> ... forces a
    unique rank for each arrow once the dimensions are fixed; the sequence of
    dimensions is consistent iff the forward recursion stays nonnegative.
    """
    N = min(len(h_dims), len(hc_dims)) - 1
    ranks: list[tuple[int, int, int]] = []
    z_prev = 0
    for n in range(N + 1):
        if n == 0:
            x, y, z = hc_dims[0], 0, 0
            if h_dims[0] != hc_dims[0]:
                return SBIReport(False, ranks, "H_0 and HC_0 dimensions differ")
        elif n == 1:
            x, y = hc_dims[1], 0
            z = h_dims[1] - x
        else:
            y = hc_dims[n - 2] - z_prev
            x = hc_dims[n] - y
            z = h_dims[n] - x
        if x < 0 or y < 0 or z < 0:
            return SBIReport(
                False, ranks, f"negative rank forced at degree {n}: (I, S, B) = ({x}, {y}, {z})"
            )
        ranks.append((x, y, z))
        z_prev = z
    return SBIReport(True, ranks)


def sbi_check(module: CyclicModule, N: int, use_bicomplex: bool = False) -> SBIReport:
    """Compute Hochschild and cyclic dimensions up to N and run the bookkeeping."""
    window = hochschild_window(module, N + 1)
    h_dims = [window.homology(n).free_rank for n in range(N + 1)]
    if use_bicomplex or not module.ring.contains_rationals:
        hc_dims = [cyclic_bicomplex_hc(module, n).free_rank for n in range(N + 1)]
    else:
        hc_dims = [connes_lambda_hc(module, n).free_rank for n in range(N + 1)]
    return sbi_rank_assignment(h_dims, hc_dims)
