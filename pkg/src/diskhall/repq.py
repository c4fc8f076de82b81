"""Finite-field oracle for the bounded derived category of linear A-type quivers.

The quiver is A_{m-1}: vertices 1..m-1, arrows i -> i+1 (fixed orientation).
Everything is computed honestly over F_q:

* ``QuiverRep`` -- vertex vector spaces + arrow matrices; Hom spaces via
  commuting-square linear systems, Ext^1 via the 2-term projective
  resolution 0 -> P_b -> P_a -> M[a,b) -> 0 with P_i = M[i,m).
* ``barcode`` -- Krull-Schmidt decomposition into interval modules by
  rank inclusion-exclusion of composite arrow maps.
* ``DerivedObject`` -- a multiset of shifted intervals (a, b, n); derived
  Hom spaces, cones and automorphism counts are computed on 2-term
  complexes of projectives, where every Hom(P_i, P_j) with j <= i is one
  dimensional and composition is multiplication of scalars.

Objects are identified up to isomorphism by taking homology degreewise
(the category is hereditary) and barcoding it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalar import prime_power_decompose

# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

#: default irreducible moduli (coefficient tuples, low degree first, monic)
_DEFAULT_MODULI = {
    4: (1, 1, 1),        # x^2 + x + 1 over F_2
    8: (1, 1, 0, 1),     # x^3 + x + 1 over F_2
    9: (1, 0, 1),        # x^2 + 1 over F_3
    25: (3, 0, 1),       # x^2 + 3 over F_5
    27: (1, 2, 0, 1),    # x^3 + 2x + 1 over F_3
}


class FiniteField:
    """F_q with q = p^k.  Elements are integers 0..q-1.

    For k > 1 an element encodes a polynomial over F_p in base-p digits
    and arithmetic is performed modulo an irreducible ``modulus``
    (coefficient tuple, low degree first, leading coefficient 1).
    """

    def __init__(self, q: int, modulus: Optional[Tuple[int, ...]] = None):
        pk = prime_power_decompose(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.k = pk
        if self.k == 1:
            self.modulus = None
        else:
            modulus = modulus or _DEFAULT_MODULI.get(q)
            if modulus is None:
                raise ValueError(f"an irreducible modulus is required for q = {q}")
            modulus = tuple(c % self.p for c in modulus)
            if len(modulus) != self.k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            self.modulus = modulus
            if not self._modulus_irreducible():
                raise ValueError("modulus is reducible")
        self._inv = {}

    # polynomial encoding helpers -------------------------------------------

    def _digits(self, x: int) -> List[int]:
        out = []
        for _ in range(self.k):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _undigits(self, ds: Sequence[int]) -> int:
        out = 0
        for d in reversed(ds):
            out = out * self.p + (d % self.p)
        return out

    def _modulus_irreducible(self) -> bool:
        # brute-force: no monic factor of degree 1..k-1 divides the modulus
        for deg in range(1, self.k):
            for tail in itertools.product(range(self.p), repeat=deg):
                divisor = list(tail) + [1]
                if not self._polmod(list(self.modulus), divisor):
                    return False
        return True

    def _polmod(self, a: List[int], b: List[int]) -> List[int]:
        a = [c % self.p for c in a]
        while len(a) >= len(b) and any(a):
            while a and a[-1] % self.p == 0:
                a.pop()
            if len(a) < len(b):
                break
            c = a[-1] * pow(b[-1], -1, self.p) % self.p
            off = len(a) - len(b)
            for i, cb in enumerate(b):
                a[i + off] = (a[i + off] - c * cb) % self.p
        while a and a[-1] % self.p == 0:
            a.pop()
        return a

    # field operations ------------------------------------------------------

    def elements(self):
        return range(self.q)

    def add(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x + y) % self.p
        return self._undigits([a + b for a, b in zip(self._digits(x), self._digits(y))])

    def neg(self, x: int) -> int:
        if self.k == 1:
            return (-x) % self.p
        return self._undigits([-a for a in self._digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x * y) % self.p
        dx, dy = self._digits(x), self._digits(y)
        prod = [0] * (2 * self.k - 1)
        for i, a in enumerate(dx):
            if a:
                for j, b in enumerate(dy):
                    prod[i + j] += a * b
        rem = self._polmod(prod, list(self.modulus))
        return self._undigits(rem + [0] * (self.k - len(rem)))

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(x, -1, self.p)
        cached = self._inv.get(x)
        if cached is None:
            for y in range(1, self.q):  # q is tiny
                if self.mul(x, y) == 1:
                    cached = y
                    break
            self._inv[x] = cached
        return cached

    def __repr__(self):
        return f"FiniteField({self.q})"


# ---------------------------------------------------------------------------
# dense linear algebra over a finite field
# ---------------------------------------------------------------------------

Matrix = List[List[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(F: FiniteField, A: Matrix, B: Matrix) -> Matrix:
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = zeros(rows, cols)
    for i in range(rows):
        Ai = A[i]
        for t in range(inner):
            a = Ai[t]
            if a:
                Bt = B[t]
                oi = out[i]
                for j in range(cols):
                    if Bt[j]:
                        oi[j] = F.add(oi[j], F.mul(a, Bt[j]))
    return out


def mat_vec(F: FiniteField, A: Matrix, x: Sequence[int]) -> List[int]:
    out = [0] * len(A)
    for i, row in enumerate(A):
        acc = 0
        for a, b in zip(row, x):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out[i] = acc
    return out


def rref(F: FiniteField, M: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row-echelon form and pivot column indices."""
    R = [row[:] for row in M]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if R[i][c]), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def mat_rank(F: FiniteField, M: Matrix) -> int:
    if not M or not M[0]:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: FiniteField, M: Matrix, cols: Optional[int] = None) -> List[List[int]]:
    """Basis of the right kernel, as column vectors."""
    if cols is None:
        cols = len(M[0]) if M else 0
    if not M or not M[0]:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis


def solve(F: FiniteField, A: Matrix, b: Sequence[int]) -> Optional[List[int]]:
    """One solution x of A x = b, or None."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [A[i][:] + [b[i]] for i in range(rows)]
    R, pivots = rref(F, aug)
    if cols in pivots:
        return None
    x = [0] * cols
    for r, pc in enumerate(pivots):
        x[pc] = R[r][cols]
    return x


def column_space_extension(F: FiniteField, B: Matrix, K: Matrix) -> List[int]:
    """Indices of columns of K that extend the column space of B.

    ``B`` and ``K`` are matrices with the same number of rows (columns
    are vectors); the returned indices select a basis of span(B + K)
    relative to span(B).
    """
    rows = len(B) if B else (len(K) if K else 0)
    ncb = len(B[0]) if B and B[0] else 0
    nck = len(K[0]) if K and K[0] else 0
    if rows == 0 or nck == 0:
        return []
    M = [[(B[i][j] if j < ncb else K[i][j - ncb]) for j in range(ncb + nck)]
         for i in range(rows)]
    _, pivots = rref(F, M)
    return [p - ncb for p in pivots if p >= ncb]


def columns(vectors: List[List[int]]) -> Matrix:
    """Stack column vectors into a matrix."""
    if not vectors:
        return []
    rows = len(vectors[0])
    return [[v[i] for v in vectors] for i in range(rows)]


# ---------------------------------------------------------------------------
# quiver representations
# ---------------------------------------------------------------------------

class QuiverRep:
    """A representation of the linear A_{m-1} quiver over ``field``.

    ``dims[i]`` is the dimension at vertex i+1 and ``maps[i]`` the matrix
    of the arrow (i+1) -> (i+2), of shape dims[i+1] x dims[i].
    """

    def __init__(self, field: FiniteField, m: int, dims: Sequence[int],
                 maps: Sequence[Matrix]):
        if m < 2:
            raise ValueError("need m >= 2")
        if len(dims) != m - 1 or len(maps) != max(m - 2, 0):
            raise ValueError("dims/maps shape mismatch")
        for i, A in enumerate(maps):
            if len(A) != dims[i + 1] or any(len(row) != dims[i] for row in A):
                raise ValueError(f"arrow {i + 1}->{i + 2} has wrong shape")
        self.field = field
        self.m = m
        self.dims = tuple(dims)
        self.maps = [[row[:] for row in A] for A in maps]

    def total_dim(self) -> int:
        return sum(self.dims)


def zero_rep(field: FiniteField, m: int) -> QuiverRep:
    return QuiverRep(field, m, [0] * (m - 1), [[] for _ in range(m - 2)])


def interval_rep(field: FiniteField, m: int, a: int, b: int) -> QuiverRep:
    """The interval module M[a,b) supported on vertices a..b-1."""
    if not (1 <= a < b <= m):
        raise ValueError(f"need 1 <= a < b <= m, got [{a},{b})")
    dims = [1 if a <= v < b else 0 for v in range(1, m)]
    maps = []
    for v in range(1, m - 1):  # arrow v -> v+1
        rows, cols = dims[v], dims[v - 1]
        A = [[0] * cols for _ in range(rows)]
        if rows and cols:
            A[0][0] = 1
        maps.append(A)
    return QuiverRep(field, m, dims, maps)


def direct_sum(reps: Sequence[QuiverRep]) -> QuiverRep:
    if not reps:
        raise ValueError("empty direct sum needs an explicit zero_rep")
    field, m = reps[0].field, reps[0].m
    dims = [sum(r.dims[v] for r in reps) for v in range(m - 1)]
    maps = []
    for v in range(m - 2):
        A = zeros(dims[v + 1], dims[v])
        ro = co = 0
        for r in reps:
            for i in range(r.dims[v + 1]):
                for j in range(r.dims[v]):
                    A[ro + i][co + j] = r.maps[v][i][j]
            ro += r.dims[v + 1]
            co += r.dims[v]
        maps.append(A)
    return QuiverRep(field, m, dims, maps)


def hom_space(M: QuiverRep, N: QuiverRep) -> List[List[Matrix]]:
    """Basis of Hom(M, N): each element is a list of vertex matrices."""
    if M.m != N.m:
        raise ValueError("mismatched quiver sizes")
    F = M.field
    nv = M.m - 1
    # variables: entries of f_v (N.dims[v] x M.dims[v]), flattened per vertex
    offsets = []
    total = 0
    for v in range(nv):
        offsets.append(total)
        total += N.dims[v] * M.dims[v]
    rows: Matrix = []
    for v in range(nv - 1):  # constraint f_{v+1} A_v = B_v f_v
        for i in range(N.dims[v + 1]):
            for j in range(M.dims[v]):
                row = [0] * total
                for t in range(M.dims[v + 1]):  # f_{v+1}[i][t] * A_v[t][j]
                    a = M.maps[v][t][j]
                    if a:
                        row[offsets[v + 1] + i * M.dims[v + 1] + t] = a
                for t in range(N.dims[v]):  # - B_v[i][t] * f_v[t][j]
                    b = N.maps[v][i][t]
                    if b:
                        idx = offsets[v] + t * M.dims[v] + j
                        row[idx] = F.sub(row[idx], b)
                rows.append(row)
    basis = []
    for vec in nullspace(F, rows, total):
        fs = []
        for v in range(nv):
            o = offsets[v]
            fs.append([[vec[o + i * M.dims[v] + j] for j in range(M.dims[v])]
                       for i in range(N.dims[v])])
        basis.append(fs)
    return basis


def hom_dim(M: QuiverRep, N: QuiverRep) -> int:
    return len(hom_space(M, N))


def ext1_space(M: QuiverRep, N: QuiverRep, representatives: bool = False):
    """dim Ext^1(M, N) and optionally explicit middle-term representations.

    Classes live in the cokernel of d : sum_v Hom(M_v, N_v) ->
    sum_v Hom(M_v, N_{v+1}), d(f)_v = f_{v+1} A_v - B_v f_v.
    """
    if M.m != N.m:
        raise ValueError("mismatched quiver sizes")
    F = M.field
    nv = M.m - 1
    c0 = sum(N.dims[v] * M.dims[v] for v in range(nv))
    c1_offsets, c1 = [], 0
    for v in range(nv - 1):
        c1_offsets.append(c1)
        c1 += N.dims[v + 1] * M.dims[v]
    # matrix of d, columns indexed like in hom_space
    offsets, total = [], 0
    for v in range(nv):
        offsets.append(total)
        total += N.dims[v] * M.dims[v]
    assert total == c0
    d = zeros(c1, c0)
    for v in range(nv - 1):
        for i in range(N.dims[v + 1]):
            for j in range(M.dims[v]):
                r = c1_offsets[v] + i * M.dims[v] + j
                for t in range(M.dims[v + 1]):
                    a = M.maps[v][t][j]
                    if a:
                        c = offsets[v + 1] + i * M.dims[v + 1] + t
                        d[r][c] = F.add(d[r][c], a)
                for t in range(N.dims[v]):
                    b = N.maps[v][i][t]
                    if b:
                        c = offsets[v] + t * M.dims[v] + j
                        d[r][c] = F.sub(d[r][c], b)
    rank = mat_rank(F, d)
    dim = c1 - rank
    if not representatives:
        return dim, None
    # complement of im(d) in C^1: standard basis vectors extending the image
    image_cols = [[d[i][j] for i in range(c1)] for j in range(c0)]
    std = [[1 if i == j else 0 for i in range(c1)] for j in range(c1)]
    picked = column_space_extension(F, columns(image_cols), columns(std))
    reps = []
    for idx in picked:
        gamma = std[idx]
        # middle term E_v = N_v (+) M_v with arrows [[B, gamma], [0, A]]
        dims = [N.dims[v] + M.dims[v] for v in range(nv)]
        maps = []
        for v in range(nv - 1):
            A = zeros(dims[v + 1], dims[v])
            for i in range(N.dims[v + 1]):
                for j in range(N.dims[v]):
                    A[i][j] = N.maps[v][i][j]
                for j in range(M.dims[v]):
                    A[i][N.dims[v] + j] = gamma[c1_offsets[v] + i * M.dims[v] + j]
            for i in range(M.dims[v + 1]):
                for j in range(M.dims[v]):
                    A[N.dims[v + 1] + i][N.dims[v] + j] = M.maps[v][i][j]
            maps.append(A)
        reps.append(QuiverRep(F, M.m, dims, maps))
    return dim, reps


def barcode(M: QuiverRep) -> Tuple[Tuple[int, int], ...]:
    """Multiset of intervals (a, b) in the decomposition of M, sorted."""
    F = M.field
    nv = M.m - 1

    composite: Dict[Tuple[int, int], Matrix] = {}

    def comp(i: int, j: int) -> Matrix:
        # composite arrow map vertex i -> vertex j, 1 <= i <= j <= m-1
        if (i, j) not in composite:
            if i == j:
                composite[(i, j)] = identity(M.dims[i - 1])
            else:
                composite[(i, j)] = mat_mul(F, M.maps[j - 2], comp(i, j - 1))
        return composite[(i, j)]

    def rank(i: int, j: int) -> int:
        if i < 1 or j > nv or i > j:
            return 0
        if i == j:
            return M.dims[i - 1]
        return mat_rank(F, comp(i, j))

    out: List[Tuple[int, int]] = []
    for a in range(1, M.m):
        for b in range(a + 1, M.m + 1):
            mult = rank(a, b - 1) - rank(a - 1, b - 1) - rank(a, b) + rank(a - 1, b)
            if mult < 0:
                raise ArithmeticError("negative interval multiplicity")
            out.extend([(a, b)] * mult)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# derived objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DerivedObject:
    """A multiset of shifted interval modules (a, b, n), canonically sorted.

    The empty multiset is the zero object.
    """

    summands: Tuple[Tuple[int, int, int], ...]

    @staticmethod
    def of(items: Iterable[Tuple[int, int, int]]) -> "DerivedObject":
        items = sorted(tuple(x) for x in items)
        for (a, b, _n) in items:
            if not (1 <= a < b):
                raise ValueError(f"bad interval [{a},{b})")
        return DerivedObject(tuple(items))

    @staticmethod
    def zero() -> "DerivedObject":
        return DerivedObject(())

    @staticmethod
    def simple(i: int, n: int = 0) -> "DerivedObject":
        return DerivedObject(((i, i + 1, n),))

    def is_zero(self) -> bool:
        return not self.summands

    def shifted(self, k: int) -> "DerivedObject":
        return DerivedObject(tuple(sorted((a, b, n + k) for (a, b, n) in self.summands)))

    def class_vector(self, m: int) -> Tuple[int, ...]:
        """Class in K_0 = Z^{m-1}: signed sum of dimension vectors."""
        vec = [0] * (m - 1)
        for (a, b, n) in self.summands:
            s = (-1) ** (n % 2)
            for v in range(a, b):
                vec[v - 1] += s
        return tuple(vec)

    def __str__(self):
        if not self.summands:
            return "0"
        return " + ".join(
            f"M[{a},{b})" + (f"[{n}]" if n else "") for (a, b, n) in self.summands)


# -- two-term complexes of projectives --------------------------------------

class _PComplex:
    """A bounded complex whose terms are direct sums of projectives P_i.

    ``labels[d]`` lists the vertex labels i (P_i = M[i, m)) in degree d;
    ``diff[d]`` is the matrix of the differential C^d -> C^{d+1} with
    scalar entries (Hom(P_i, P_j) is k when j <= i, else 0).
    """

    def __init__(self, m: int, labels: Dict[int, List[int]], diff: Dict[int, Matrix]):
        self.m = m
        self.labels = {d: ls for d, ls in labels.items() if ls}
        self.diff = diff

    def degrees(self) -> List[int]:
        return sorted(self.labels)

    def at(self, d: int) -> List[int]:
        return self.labels.get(d, [])

    def dmat(self, d: int) -> Matrix:
        src, dst = self.at(d), self.at(d + 1)
        D = self.diff.get(d)
        if D is None:
            return zeros(len(dst), len(src))
        return D


def _object_complex(m: int, X: DerivedObject) -> _PComplex:
    """Projective resolution complex: M[a,b)[n] gives P_a in degree -n
    and (when b < m) P_b in degree -n-1 with the canonical inclusion."""
    labels: Dict[int, List[int]] = {}
    entries = []  # (deg_src, idx_src, deg_dst, idx_dst)
    for (a, b, n) in X.summands:
        d_top = -n
        labels.setdefault(d_top, [])
        top_idx = len(labels[d_top])
        labels[d_top].append(a)
        if b < m:
            d_low = -n - 1
            labels.setdefault(d_low, [])
            low_idx = len(labels[d_low])
            labels[d_low].append(b)
            entries.append((d_low, low_idx, d_top, top_idx))
    diff: Dict[int, Matrix] = {}
    for d, ls in labels.items():
        nxt = labels.get(d + 1, [])
        if nxt:
            diff[d] = zeros(len(nxt), len(ls))
    for (ds, i_s, dd, i_d) in entries:
        diff[ds][i_d][i_s] = 1
    return _PComplex(m, labels, diff)


class DMorphism:
    """A degree-0 chain map between the projective complexes of X and Y."""

    __slots__ = ("source", "target", "maps", "_cx", "_cy")

    def __init__(self, source: DerivedObject, target: DerivedObject,
                 maps: Dict[int, Matrix], cx: _PComplex, cy: _PComplex):
        self.source = source
        self.target = target
        self.maps = maps
        self._cx = cx
        self._cy = cy

    def is_zero_map(self) -> bool:
        return all(all(all(x == 0 for x in row) for row in M) for M in self.maps.values())


class DerivedCategory:
    """Computation context for D^b(Rep_{F_q} A_{m-1}) with memo caches."""

    def __init__(self, m: int, field: FiniteField):
        if m < 2:
            raise ValueError("need m >= 2")
        self.m = m
        self.field = field
        self._dhom_cache: Dict[Tuple, Dict[int, int]] = {}
        self._aut_cache: Dict[Tuple, int] = {}
        self._homology_cache: Dict[Tuple, dict] = {}

    # -- complexes and hom-space plumbing -----------------------------------

    def complex_of(self, X: DerivedObject) -> _PComplex:
        return _object_complex(self.m, X)

    def _hom_vars(self, cx: _PComplex, cy: _PComplex, n: int):
        """Coordinates of the degree-n Hom space: maps X^d -> Y^{d+n}."""
        out = []
        for d in cx.degrees():
            src = cx.at(d)
            dst = cy.at(d + n)
            for i, w in enumerate(dst):
                for j, u in enumerate(src):
                    if w <= u:  # Hom(P_u, P_w) is nonzero iff w <= u
                        out.append((d, i, j))
        return out

    def _delta(self, cx: _PComplex, cy: _PComplex, n: int,
               vars_n, vars_n1) -> Matrix:
        """Matrix of the Hom-complex differential delta_n = dY f - (-1)^n f dX."""
        F = self.field
        index_n = {v: c for c, v in enumerate(vars_n)}
        D = zeros(len(vars_n1), len(vars_n))
        sign_neg = (n % 2 == 0)  # -(-1)^n: subtract when n even
        for r, (d, i, j) in enumerate(vars_n1):
            # component X^d (summand j) -> Y^{d+n+1} (summand i)
            dy = cy.dmat(d + n)      # Y^{d+n} -> Y^{d+n+1}
            for t in range(len(cy.at(d + n))):
                a = dy[i][t] if dy else 0
                if a:
                    c = index_n.get((d, t, j))
                    if c is not None:
                        D[r][c] = F.add(D[r][c], a)
            dx = cx.dmat(d)          # X^d -> X^{d+1}
            for s in range(len(cx.at(d + 1))):
                a = dx[s][j] if dx else 0
                if a:
                    c = index_n.get((d + 1, i, s))
                    if c is not None:
                        D[r][c] = F.sub(D[r][c], a) if sign_neg else F.add(D[r][c], a)
        return D

    def _hom_degree_dim(self, cx: _PComplex, cy: _PComplex, n: int) -> int:
        vn = self._hom_vars(cx, cy, n)
        if not vn:
            return 0
        vn1 = self._hom_vars(cx, cy, n + 1)
        vm1 = self._hom_vars(cx, cy, n - 1)
        dn = self._delta(cx, cy, n, vn, vn1)
        dm = self._delta(cx, cy, n - 1, vm1, vn)
        cocycles = len(vn) - mat_rank(self.field, dn)
        coboundaries = mat_rank(self.field, dm)
        return cocycles - coboundaries

    # -- public operations ---------------------------------------------------

    def dhom_dims(self, X: DerivedObject, Y: DerivedObject) -> Dict[int, int]:
        """Graded dims: degree k -> dim Hom(X, Y[k]); zero degrees omitted."""
        key = (X.summands, Y.summands)
        cached = self._dhom_cache.get(key)
        if cached is not None:
            return cached
        out: Dict[int, int] = {}
        if not X.is_zero() and not Y.is_zero():
            cx, cy = self.complex_of(X), self.complex_of(Y)
            dxs, dys = cx.degrees(), cy.degrees()
            lo = dys[0] - dxs[-1]
            hi = dys[-1] - dxs[0]
            for n in range(lo, hi + 1):
                dim = self._hom_degree_dim(cx, cy, n)
                if dim:
                    out[n] = dim
        self._dhom_cache[key] = out
        return out

    def euler_form(self, X: DerivedObject, Y: DerivedObject) -> int:
        return sum((-1) ** (k % 2) * d for k, d in self.dhom_dims(X, Y).items())

    def enumerate_dhoms(self, X: DerivedObject, Y: DerivedObject) -> List[DMorphism]:
        """All homotopy classes of degree-0 maps X -> Y, with representatives."""
        F = self.field
        cx, cy = self.complex_of(X), self.complex_of(Y)
        v0 = self._hom_vars(cx, cy, 0)

        def to_morphism(vec: Sequence[int]) -> DMorphism:
            maps = {d: zeros(len(cy.at(d)), len(cx.at(d))) for d in cx.degrees()}
            for c, (d, i, j) in enumerate(v0):
                if vec[c]:
                    maps[d][i][j] = vec[c]
            return DMorphism(X, Y, maps, cx, cy)

        if not v0:
            return [to_morphism([])]
        v1 = self._hom_vars(cx, cy, 1)
        vm1 = self._hom_vars(cx, cy, -1)
        d0 = self._delta(cx, cy, 0, v0, v1)
        dm1 = self._delta(cx, cy, -1, vm1, v0)
        cocycles = nullspace(F, d0, len(v0))
        image = [[dm1[i][j] for i in range(len(v0))] for j in range(len(vm1))]
        picked = column_space_extension(F, columns(image), columns(cocycles))
        reps = [cocycles[i] for i in picked]
        out = []
        for coeffs in itertools.product(F.elements(), repeat=len(reps)):
            vec = [0] * len(v0)
            for c, rep in zip(coeffs, reps):
                if c:
                    for t in range(len(v0)):
                        if rep[t]:
                            vec[t] = F.add(vec[t], F.mul(c, rep[t]))
            out.append(to_morphism(vec))
        return out

    # -- rep-level expansion of a projective complex -------------------------

    def _homology_data(self, c: _PComplex):
        """For each degree and vertex: kernel basis, image, chosen homology
        basis columns (in kernel-ambient coordinates) and solver matrix."""
        F = self.field
        degs = c.degrees()
        result = {}
        for d in degs:
            src = c.at(d)
            per_vertex = []
            for v in range(1, self.m):
                cols_here = [j for j, u in enumerate(src) if u <= v]
                dim_here = len(cols_here)
                # kernel of d^d at v
                dst = c.at(d + 1)
                D = c.dmat(d)
                rows = [i for i, w in enumerate(dst) if w <= v]
                Dv = [[D[i][j] for j in cols_here] for i in rows]
                ker = nullspace(F, Dv, dim_here)
                # image of d^{d-1} at v
                prev = c.at(d - 1)
                Dp = c.dmat(d - 1)
                pcols = [j for j, u in enumerate(prev) if u <= v]
                img = [[Dp[i][j] for j in pcols] for i in
                       [i for i, w in enumerate(src) if w <= v]]
                img_vecs = [[img[i][j] for i in range(dim_here)] for j in range(len(pcols))]
                picked = column_space_extension(F, columns(img_vecs), columns(ker))
                hbasis = [ker[i] for i in picked]
                per_vertex.append({
                    "cols": cols_here,
                    "image": img_vecs,
                    "hbasis": hbasis,
                })
            result[d] = per_vertex
        return result

    def _homology_rep(self, c: _PComplex, hdata, d: int) -> QuiverRep:
        """The homology representation at complex degree d."""
        F = self.field
        per_vertex = hdata[d]
        dims = [len(pv["hbasis"]) for pv in per_vertex]
        src = c.at(d)
        maps = []
        for v in range(1, self.m - 1):
            here, there = per_vertex[v - 1], per_vertex[v]
            A = zeros(dims[v], dims[v - 1])
            if dims[v - 1] and dims[v]:
                # transfer a vector from coordinates at v to coordinates at v+1
                pos_there = {j: t for t, j in enumerate(there["cols"])}
                basis_mat = columns(there["image"] + there["hbasis"])
                for bidx, x in enumerate(here["hbasis"]):
                    y = [0] * len(there["cols"])
                    for ci, j in enumerate(here["cols"]):
                        if x[ci]:
                            y[pos_there[j]] = x[ci]  # arrow maps are inclusions
                    sol = solve(F, basis_mat, y)
                    if sol is None:
                        raise ArithmeticError("homology transfer failed")
                    nimg = len(there["image"])
                    for i in range(dims[v]):
                        A[i][bidx] = sol[nimg + i]
            maps.append(A)
        return QuiverRep(F, self.m, dims, maps)

    def identify(self, c: _PComplex) -> DerivedObject:
        """Isomorphism class of a complex of projectives, via degreewise
        homology + barcode (valid because the category is hereditary)."""
        hdata = self._homology_data(c)
        summands: List[Tuple[int, int, int]] = []
        for d in c.degrees():
            rep = self._homology_rep(c, hdata, d)
            if rep.total_dim():
                for (a, b) in barcode(rep):
                    summands.append((a, b, -d))
        return DerivedObject.of(summands)

    def cone(self, f: DMorphism) -> DerivedObject:
        """Mapping cone of a chain map, identified up to isomorphism."""
        cx, cy = f._cx, f._cy
        labels: Dict[int, List[int]] = {}
        degs = set()
        for d in cx.degrees():
            degs.add(d - 1)
        degs.update(cy.degrees())
        for d in sorted(degs):
            labels[d] = list(cx.at(d + 1)) + list(cy.at(d))
        diff: Dict[int, Matrix] = {}
        F = self.field
        for d in sorted(degs):
            src_x, src_y = cx.at(d + 1), cy.at(d)
            dst_x, dst_y = cx.at(d + 2), cy.at(d + 1)
            rows = len(dst_x) + len(dst_y)
            cols = len(src_x) + len(src_y)
            if rows == 0 or cols == 0:
                continue
            D = zeros(rows, cols)
            dx = cx.dmat(d + 1)
            for i in range(len(dst_x)):
                for j in range(len(src_x)):
                    if dx[i][j]:
                        D[i][j] = F.neg(dx[i][j])  # -d_X (shifted part)
            fm = f.maps.get(d + 1)
            if fm:
                for i in range(len(dst_y)):
                    for j in range(len(src_x)):
                        D[len(dst_x) + i][j] = fm[i][j]
            dy = cy.dmat(d)
            for i in range(len(dst_y)):
                for j in range(len(src_y)):
                    D[len(dst_x) + i][len(src_x) + j] = dy[i][j]
            diff[d] = D
        return self.identify(_PComplex(self.m, labels, diff))

    def aut_count(self, X: DerivedObject) -> int:
        """Number of invertible endomorphism classes of X."""
        key = X.summands
        cached = self._aut_cache.get(key)
        if cached is not None:
            return cached
        if X.is_zero():
            self._aut_cache[key] = 1
            return 1
        F = self.field
        endos = self.enumerate_dhoms(X, X)
        cx = self.complex_of(X)
        hdata = self._homology_data(cx)
        count = 0
        for f in endos:
            if self._induces_iso(cx, hdata, f):
                count += 1
        self._aut_cache[key] = count
        return count

    def _induces_iso(self, c: _PComplex, hdata, f: DMorphism) -> bool:
        """Does the endo-chain-map act invertibly on homology everywhere?"""
        F = self.field
        for d in c.degrees():
            src = c.at(d)
            fm = f.maps.get(d)
            for v in range(1, self.m):
                pv = hdata[d][v - 1]
                hdim = len(pv["hbasis"])
                if hdim == 0:
                    continue
                cols_here = pv["cols"]
                basis_mat = columns(pv["image"] + pv["hbasis"])
                induced = zeros(hdim, hdim)
                for bidx, x in enumerate(pv["hbasis"]):
                    # y = f(x) in coordinates at (d, v)
                    y = [0] * len(cols_here)
                    for out_pos, i in enumerate(cols_here):
                        acc = 0
                        for in_pos, j in enumerate(cols_here):
                            a = fm[i][j] if fm else 0
                            if a and x[in_pos]:
                                acc = F.add(acc, F.mul(a, x[in_pos]))
                        y[out_pos] = acc
                    sol = solve(F, basis_mat, y)
                    if sol is None:
                        raise ArithmeticError("endomorphism transfer failed")
                    nimg = len(pv["image"])
                    for i in range(hdim):
                        induced[i][bidx] = sol[nimg + i]
                if mat_rank(F, induced) != hdim:
                    return False
        return True

    # -- conversions ---------------------------------------------------------

    def rep_of(self, X: DerivedObject) -> QuiverRep:
        """The underlying module of a shift-0 object (error otherwise)."""
        if any(n != 0 for (_a, _b, n) in X.summands):
            raise ValueError("object is not concentrated in degree 0")
        if X.is_zero():
            return zero_rep(self.field, self.m)
        return direct_sum([interval_rep(self.field, self.m, a, b)
                           for (a, b, _n) in X.summands])

    def object_of_rep(self, M: QuiverRep) -> DerivedObject:
        return DerivedObject.of((a, b, 0) for (a, b) in barcode(M))
