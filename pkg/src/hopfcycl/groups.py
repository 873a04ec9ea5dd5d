"""Finite groups, group algebras and their cyclic homology.

Covers the group-algebra side of the theory: the Hopf structure on kG, the
cyclic set Gamma(G, pi) of tuples whose ordered product is conjugate to pi,
the comparison map theta from the twisted cyclic module of the centralizer,
the conjugacy-class decomposition of HC(kG), closed formulas for cyclic
groups, the 2-periodic character resolution and the diagonal character
conjugation chi.
"""

from __future__ import annotations

from math import gcd

from .cyclic import (
    ClassicalCyclicModule,
    ConnesMoscoviciModule,
    CyclicModule,
    connes_lambda_hc,
    cyclic_bicomplex_hc,
    tuple_to_index,
)
from .errors import InvalidCharacter, ParseError, PreconditionFailed
from .hopf import AlgebraData, Character, GroupLike, HopfAlgebraData, check_cm_triple
from .rings import (
    HomologyModule,
    Ring,
    annihilator_and_quotient,
    free_module,
    primitive_root_of_unity,
    zero_module,
)
from .sparse import SparseMatrix


class FiniteGroup:
    """Group given by its multiplication table; axioms checked on construction."""

    def __init__(self, table, labels=None):
        m = len(table)
        if m == 0 or any(len(row) != m for row in table):
            raise ParseError("multiplication table must be square and nonempty")
        for row in table:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < m:
                    raise ParseError("table entries must be element indices")
        self.order = m
        self.table = [list(row) for row in table]
        self.labels = list(labels) if labels is not None else [str(i) for i in range(m)]
        # identity
        ident = None
        for e in range(m):
            if all(table[e][x] == x and table[x][e] == x for x in range(m)):
                ident = e
                break
        if ident is None:
            raise ParseError("table has no identity element")
        self.identity = ident
        # inverses
        self.inverse = [None] * m
        for x in range(m):
            for y in range(m):
                if table[x][y] == ident and table[y][x] == ident:
                    self.inverse[x] = y
                    break
            if self.inverse[x] is None:
                raise ParseError(f"element {x} has no inverse")
        # associativity
        for a in range(m):
            for b in range(m):
                ab = table[a][b]
                for c in range(m):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise ParseError("table is not associative")

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, elems) -> int:
        out = self.identity
        for x in elems:
            out = self.table[out][x]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in range(self.order))

    @classmethod
    def cyclic(cls, m: int) -> "FiniteGroup":
        table = [[(i + j) % m for j in range(m)] for i in range(m)]
        return cls(table, [f"g^{i}" for i in range(m)])

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        from itertools import permutations

        perms = sorted(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # composition (p.q)(x) = p(q(x))
        table = [
            [index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms
        ]
        return cls(table, ["".join(map(str, p)) for p in perms])

    @classmethod
    def from_json(cls, obj) -> "FiniteGroup":
        if not isinstance(obj, dict):
            raise ParseError("group spec must be a JSON object")
        if "cyclic" in obj:
            m = obj["cyclic"]
            if not isinstance(m, int) or m < 1:
                raise ParseError("cyclic order must be a positive integer")
            return cls.cyclic(m)
        if "order" in obj and "table" in obj:
            if len(obj["table"]) != obj["order"]:
                raise ParseError("declared order does not match the table")
            return cls(obj["table"])
        raise ParseError("group spec needs either 'cyclic' or 'order'+'table'")


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    """Partition of the elements into conjugacy classes (sorted reps first)."""
    seen = [False] * G.order
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        orbit = sorted({G.op(G.op(g, x), G.inverse[g]) for g in range(G.order)})
        for y in orbit:
            seen[y] = True
        classes.append(orbit)
    return classes


def centralizer(G: FiniteGroup, pi: int) -> FiniteGroup:
    """The subgroup commuting with pi, as a group in its own right.

    The returned group carries `parent_elements`, the list mapping its
    indices back to elements of G, and `parent_pi`, the index of pi inside it.
    """
    elems = [g for g in range(G.order) if G.op(g, pi) == G.op(pi, g)]
    pos = {g: i for i, g in enumerate(elems)}
    table = [[pos[G.op(a, b)] for b in elems] for a in elems]
    H = FiniteGroup(table, [G.labels[g] for g in elems])
    H.parent_elements = elems
    H.parent_pi = pos[pi]
    return H


# ---------------------------------------------------------------------------
# the group algebra as a Hopf algebra
# ---------------------------------------------------------------------------


def group_algebra(G: FiniteGroup, ring: Ring) -> HopfAlgebraData:
    """kG with Delta(g) = g (x) g, eps(g) = 1 and S(g) = g^(-1)."""
    one = ring.one
    mult = [[{G.op(i, j): one} for j in range(G.order)] for i in range(G.order)]
    algebra = AlgebraData(ring, G.labels, mult, {G.identity: one})
    coproduct = [{(i, i): one} for i in range(G.order)]
    counit = [one] * G.order
    antipode = SparseMatrix.from_columns(
        ring, G.order, [{G.inverse[i]: one} for i in range(G.order)]
    )
    return HopfAlgebraData(algebra, coproduct, counit, antipode)


def trivial_character(G: FiniteGroup, ring: Ring) -> Character:
    return Character(ring, [ring.one] * G.order)


def character_from_zeta(ring: Ring, m: int, zeta) -> Character:
    """Character of k[Z/m] with g^i -> zeta^i; requires zeta^m = 1."""
    values, x = [], ring.one
    for _ in range(m):
        values.append(x)
        x = ring.mul(x, zeta)
    if x != ring.one:
        raise InvalidCharacter("zeta is not an m-th root of unity")
    return Character(ring, values)


def cm_group_module(
    G: FiniteGroup, pi: int, ring: Ring, alpha: Character | None = None,
    beta: Character | None = None,
) -> ConnesMoscoviciModule:
    """The twisted cyclic module of kG at a group element pi (default eps, eps)."""
    H = group_algebra(G, ring)
    eps = trivial_character(G, ring)
    triple = check_cm_triple(
        H, GroupLike.from_vector({pi: ring.one}), alpha or eps, beta or eps
    )
    return ConnesMoscoviciModule(H, triple)


# ---------------------------------------------------------------------------
# the cyclic set of tuples with product conjugate to pi
# ---------------------------------------------------------------------------


class GammaCyclicModule(CyclicModule):
    """Linearization of Gamma_n(G, pi) = tuples (g_0..g_n), product in class(pi).

    Faces multiply adjacent slots (the last face wraps around), degeneracies
    insert the identity, and the cyclic operator rotates the last slot to the
    front.  All operators are basis permutations up to merging, so every
    matrix column is a single unit entry.
    """

    def __init__(self, G: FiniteGroup, pi: int, ring: Ring):
        super().__init__()
        self.G = G
        self.pi = pi
        self.ring = ring
        for cls_ in conjugacy_classes(G):
            if pi in cls_:
                self.pi_class = cls_
                break
        self._bases: dict[int, list[tuple]] = {}
        self._index: dict[int, dict] = {}

    def basis(self, m: int) -> list[tuple]:
        """All (m+1)-tuples with ordered product in the class of pi, sorted."""
        cached = self._bases.get(m)
        if cached is not None:
            return cached
        G = self.G
        tuples = []

        def extend(prefix, prod, remaining):
            if remaining == 0:
                # choose g_0 with g_0 . prod in the class
                for c in self.pi_class:
                    g0 = G.op(c, G.inverse[prod])
                    tuples.append((g0,) + prefix)
                return
            for g in range(G.order):
                extend(prefix + (g,), G.op(prod, g), remaining - 1)

        extend((), G.identity, m)
        tuples.sort()
        self._bases[m] = tuples
        self._index[m] = {t: i for i, t in enumerate(tuples)}
        return tuples

    def level_dim(self, m: int) -> int:
        return len(self.pi_class) * self.G.order**m

    def _permutation(self, m_src, m_tgt, image):
        R = self.ring
        src = self.basis(m_src)
        tgt_index = self._index_for(m_tgt)
        ent = {}
        for j, t in enumerate(src):
            ent[(tgt_index[image(t)], j)] = R.one
        return SparseMatrix(R, self.level_dim(m_tgt), self.level_dim(m_src), ent)

    def _index_for(self, m):
        self.basis(m)
        return self._index[m]

    def _face(self, m, i):
        G = self.G
        if i < m:
            return self._permutation(
                m, m - 1, lambda t: t[:i] + (G.op(t[i], t[i + 1]),) + t[i + 2 :]
            )
        return self._permutation(m, m - 1, lambda t: (G.op(t[m], t[0]),) + t[1:m])

    def _degeneracy(self, m, i):
        e = self.G.identity
        return self._permutation(m, m + 1, lambda t: t[: i + 1] + (e,) + t[i + 1 :])

    def _cyclic(self, m):
        return self._permutation(m, m, lambda t: (t[m],) + t[:m])


def theta_map(G: FiniteGroup, pi: int, n: int, ring: Ring) -> SparseMatrix:
    """C_n of the centralizer algebra into the class component of Gamma_n.

    g_1 (x) ... (x) g_n  ->  (pi (g_1...g_n)^(-1), g_1, ..., g_n), with the
    g_i running over the centralizer of pi.
    """
    H = centralizer(G, pi)
    gamma = GammaCyclicModule(G, pi, ring)
    index = gamma._index_for(n)
    d = H.order
    ent = {}
    for col in range(d**n):
        idx = col
        t = [0] * n
        for pos in range(n - 1, -1, -1):
            idx, t[pos] = divmod(idx, d)
        gs = tuple(H.parent_elements[x] for x in t)
        g0 = G.op(pi, G.inverse[G.product(gs)])
        ent[(index[(g0,) + gs], col)] = ring.one
    return SparseMatrix(ring, gamma.level_dim(n), d**n, ent)


def theta_chain_map_check(G: FiniteGroup, pi: int, n: int, ring: Ring) -> dict[str, bool]:
    """Verify theta . op = op . theta for all faces, degeneracies and t, level <= n."""
    H = centralizer(G, pi)
    cm = cm_group_module(H, H.parent_pi, ring)
    gamma = GammaCyclicModule(G, pi, ring)
    thetas = {m: theta_map(G, pi, m, ring) for m in range(n + 1)}
    report = {}
    for m in range(n + 1):
        report[f"theta t (level {m})"] = (
            gamma.cyclic(m) @ thetas[m] == thetas[m] @ cm.cyclic(m)
        )
        if m >= 1:
            for i in range(m + 1):
                report[f"theta d_{i} (level {m})"] = (
                    gamma.face(m, i) @ thetas[m] == thetas[m - 1] @ cm.face(m, i)
                )
        if m < n:
            for i in range(m + 1):
                report[f"theta s_{i} (level {m})"] = (
                    gamma.degeneracy(m, i) @ thetas[m] == thetas[m + 1] @ cm.degeneracy(m, i)
                )
    return report


# ---------------------------------------------------------------------------
# conjugacy-class decomposition of HC(kG)
# ---------------------------------------------------------------------------


def _hc(module: CyclicModule, n: int) -> HomologyModule:
    if module.ring.contains_rationals:
        return connes_lambda_hc(module, n)
    return cyclic_bicomplex_hc(module, n)


def burghelea_check(G: FiniteGroup, ring: Ring, N: int) -> dict:
    """Compare HC(kG) with the sum over classes of twisted HC of centralizers.

    Left side: cyclic homology of the classical cyclic module of the algebra
    kG.  Right side: for one representative pi per conjugacy class, the
    (pi, eps, eps)-twisted cyclic homology of the centralizer algebra.
    Returns per-degree dimensions of both and a pass flag.
    """
    algebra = group_algebra(G, ring).algebra
    classical = ClassicalCyclicModule(algebra)
    lhs = [_hc(classical, n).free_rank for n in range(N + 1)]
    reps = [cls_[0] for cls_ in conjugacy_classes(G)]
    per_class = {}
    for pi in reps:
        H = centralizer(G, pi)
        module = cm_group_module(H, H.parent_pi, ring)
        per_class[pi] = [_hc(module, n).free_rank for n in range(N + 1)]
    rhs = [sum(dims[n] for dims in per_class.values()) for n in range(N + 1)]
    return {
        "classical": lhs,
        "per_class": per_class,
        "sum": rhs,
        "passed": lhs == rhs,
    }


# ---------------------------------------------------------------------------
# closed formulas for cyclic groups
# ---------------------------------------------------------------------------


def closed_hc_cyclic_group(ring: Ring, m_pi: int, n: int) -> HomologyModule:
    """k + Ann(m_pi)^(n/2) in even degree, (k/m_pi k)^((n+1)/2) in odd degree."""
    if m_pi < 1:
        raise PreconditionFailed("m_pi must be >= 1")
    ann, quot = annihilator_and_quotient(m_pi, ring)
    if n % 2 == 0:
        out = free_module(ring, 1)
        for _ in range(n // 2):
            out = out + ann
        return out
    out = zero_module(ring)
    for _ in range((n + 1) // 2):
        out = out + quot
    return out


def closed_hc_group_algebra(G: FiniteGroup, ring: Ring, n: int) -> HomologyModule:
    """HC_n(kG) for cyclic G: the sum of the closed formula over all pi in G."""
    if not G.is_cyclic():
        raise PreconditionFailed("closed formula implemented for cyclic groups only")
    out = zero_module(ring)
    for pi in range(G.order):
        m_pi = G.order // G.element_order(pi)
        out = out + closed_hc_cyclic_group(ring, m_pi, n)
    return out


# ---------------------------------------------------------------------------
# the 2-periodic character resolution and the chi conjugation
# ---------------------------------------------------------------------------


def periodic_resolution_homology(m: int, ring: Ring, zeta, rho, N: int) -> list[HomologyModule]:
    """Homology of the 2-periodic scalar complex attached to (alpha, beta).

    The complex obtained from the standard periodic resolution of k over
    k[Z/m] by applying the characters has one copy of k in each degree and
    alternating scalar differentials x - 1 and 1 + x + ... + x^(m-1), where
    x = zeta . rho^(-1).  Both characters must be genuine, i.e. zeta and rho
    must be m-th roots of unity.
    """
    for value in (zeta, rho):
        if ring.pow(value, m) != ring.one:
            raise InvalidCharacter("character value is not an m-th root of unity")
    x = ring.mul(zeta, ring.inv(rho))
    c_odd = ring.sub(x, ring.one)
    c_even = ring.sum(ring.pow(x, i) for i in range(m))

    def differential(k):  # map out of degree k, for k >= 1
        return c_odd if k % 2 == 1 else c_even

    out = []
    for k in range(N + 1):
        kernel = 1 if (k == 0 or ring.is_zero(differential(k))) else 0
        image = 0 if ring.is_zero(differential(k + 1)) else 1
        out.append(HomologyModule(ring, kernel - image))
    return out


def chi_isomorphism(m: int, s: int, zeta, n: int, ring: Ring) -> SparseMatrix:
    """Diagonal zeta^(i_1+...+i_n) on the n-th carrier of the k[Z/m] module.

    Conjugating the (pi, alpha, alpha) operators by this matrix yields the
    (pi, eps, eps) operators, provided alpha(pi) = zeta^s = 1 for pi = g^s.
    """
    if ring.pow(zeta, m) != ring.one:
        raise InvalidCharacter("zeta is not an m-th root of unity")
    if ring.pow(zeta, s % m) != ring.one:
        raise PreconditionFailed("alpha(pi) must equal 1: zeta^s is not 1")
    dim = m**n
    ent = {}
    for idx in range(dim):
        rest, total = idx, 0
        for _ in range(n):
            rest, digit = divmod(rest, m)
            total += digit
        ent[(idx, idx)] = ring.pow(zeta, total % m)
    return SparseMatrix(ring, dim, dim, ent)
