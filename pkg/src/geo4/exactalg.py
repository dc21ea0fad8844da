"""Exact integer linear algebra for small unimodular matrices and integer cubics.

Everything here is computed over Z (or Q via fractions.Fraction); there is no
floating point anywhere.  Matrices are tiny (2x2 and 3x3 monodromies, small
relation matrices), so all algorithms are the straightforward exact ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import InvalidCubic, NotUnimodular, RangeExceeded, UnsupportedDimension

# Finite-order cutoffs.  By the crystallographic restriction, elements of
# finite order in GL(2,Z) have order in {1,2,3,4,6}; in GL(3,Z) the order is
# at most 12 (in fact at most 6, but 12 is the safe classical bound).  The
# largest finite subgroup of GL(2,Z) is dihedral of order 12.
GL2Z_MAX_ELEMENT_ORDER = 6
GL3Z_MAX_ELEMENT_ORDER = 12
GL2Z_MAX_FINITE_SUBGROUP = 12

# Brute-force mod-q conjugacy stays under a second for |GL(3, Z/3)| ~ 1.1e4.
DEFAULT_CONJ_MODULUS_BOUND = {2: 7, 3: 3}


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix with unbounded integer entries."""

    entries: tuple

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        ents = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(ents)
        if n == 0 or any(len(row) != n for row in ents):
            raise UnsupportedDimension("matrix must be square and non-empty")
        return IntMatrix(ents)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def companion(coeffs) -> "IntMatrix":
        """Companion matrix of a monic integer polynomial (descending coeffs)."""
        if coeffs[0] != 1:
            raise InvalidCubic("companion matrix requires a monic polynomial")
        n = len(coeffs) - 1
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -coeffs[n - i]
        return IntMatrix.from_rows(rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def row(self, i):
        return self.entries[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.n
        if other.n != n:
            raise UnsupportedDimension("dimension mismatch")
        a, b = self.entries, other.entries
        return IntMatrix(tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(x + y for x, y in zip(r, s))
                               for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(x - y for x, y in zip(r, s))
                               for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.entries))

    def __pow__(self, k: int) -> "IntMatrix":
        base = self if k >= 0 else self.inverse()
        result = IntMatrix.identity(self.n)
        for _ in range(abs(k)):
            result = result * base
        return result

    def det(self) -> int:
        e = self.entries
        if self.n == 1:
            return e[0][0]
        if self.n == 2:
            return e[0][0] * e[1][1] - e[0][1] * e[1][0]
        if self.n == 3:
            return (e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
                    - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
                    + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]))
        raise UnsupportedDimension("determinant implemented for n <= 3")

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.n))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def inverse(self) -> "IntMatrix":
        """Exact inverse; only defined for det = +-1."""
        d = self.det()
        if d not in (1, -1):
            raise NotUnimodular(f"det = {d}, inverse not integral")
        e = self.entries
        if self.n == 1:
            return IntMatrix(((d,),))
        if self.n == 2:
            adj = ((e[1][1], -e[0][1]), (-e[1][0], e[0][0]))
        else:
            cof = [[0] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(3):
                    ids = [0, 1, 2]
                    rows = [r for r in ids if r != i]
                    cols = [c for c in ids if c != j]
                    minor = (e[rows[0]][cols[0]] * e[rows[1]][cols[1]]
                             - e[rows[0]][cols[1]] * e[rows[1]][cols[0]])
                    cof[j][i] = (-1) ** (i + j) * minor
            adj = tuple(tuple(r) for r in cof)
        return IntMatrix(tuple(tuple(x * d for x in r) for r in adj))

    def mod(self, q: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(x % q for x in r) for r in self.entries))

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.n)

    def apply(self, vec):
        """Matrix times exponent column vector."""
        return tuple(sum(self.entries[i][j] * vec[j] for j in range(self.n))
                     for i in range(self.n))

    def rows(self):
        return [list(r) for r in self.entries]


# ---------------------------------------------------------------------------
# Characteristic polynomials
# ---------------------------------------------------------------------------

def charpoly(a: IntMatrix):
    """Monic characteristic polynomial, descending integer coefficients.

    For A in SL(3,Z) this is x^3 - tr(A) x^2 + tr(A^{-1}) x - 1.
    """
    if a.n == 2:
        return (1, -a.trace(), a.det())
    if a.n == 3:
        e = a.entries
        m2 = ((e[0][0] * e[1][1] - e[0][1] * e[1][0])
              + (e[0][0] * e[2][2] - e[0][2] * e[2][0])
              + (e[1][1] * e[2][2] - e[1][2] * e[2][1]))
        return (1, -a.trace(), m2, -a.det())
    raise UnsupportedDimension("charpoly implemented for 2x2 and 3x3")


def poly_eval(coeffs, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_mod(coeffs, q: int):
    return tuple(c % q for c in coeffs)


def cubic_discriminant(coeffs) -> int:
    """Discriminant of the monic cubic x^3 + b x^2 + c x + d."""
    _, b, c, d = coeffs
    return 18 * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2 - 4 * c ** 3 - 27 * d ** 2


# --- Sturm sequences over Q -------------------------------------------------

def _poly_trim(p):
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _poly_deriv(p):
    n = len(p) - 1
    return [c * (n - i) for i, c in enumerate(p[:-1])]


def _poly_rem(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while len(num) >= len(den) and any(num):
        factor = num[0] / den[0]
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[i] -= factor * c
        num = _poly_trim(num)
        if not num:
            break
        if len(num) - 1 >= len(den) - 1 + shift and shift == 0:
            break
    return num


def sturm_chain(coeffs):
    chain = [[Fraction(c) for c in _poly_trim(list(coeffs))]]
    deriv = _poly_trim(_poly_deriv(chain[0]))
    if deriv:
        chain.append(deriv)
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        rem = [-c for c in rem]
        rem = _poly_trim(rem)
        if not rem:
            break
        chain.append(rem)
    return chain


def _sign_variations(chain, x):
    signs = []
    for p in chain:
        v = poly_eval(p, Fraction(x))
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_in(coeffs, lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    chain = sturm_chain(coeffs)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def cauchy_bound(coeffs) -> int:
    return 1 + max(abs(c) for c in coeffs[1:]) if len(coeffs) > 1 else 1


# --- Cubic profiles ---------------------------------------------------------

class CubicKind(Enum):
    TRIPLE_ROOT_ONE = "triple_root_one"
    THREE_DISTINCT_REAL_ALL_POSITIVE = "three_distinct_real_all_positive"
    THREE_DISTINCT_REAL_NOT_ALL_POSITIVE = "three_distinct_real_not_all_positive"
    HAS_ROOT_ONE_TWO_OTHER_REAL = "has_root_one_two_other_real"
    ONE_REAL_TWO_COMPLEX_CONJUGATE = "one_real_two_complex_conjugate"
    OTHER = "other"


@dataclass(frozen=True)
class CubicProfile:
    kind: CubicKind
    discriminant: int
    traces: tuple  # (tr, tr of inverse) = (m, n) for x^3 - m x^2 + n x - 1
    unipotency_degree: int = None  # only for TRIPLE_ROOT_ONE with a matrix given


def unipotency_degree(a: IntMatrix) -> int:
    """Least k with (A - I)^k = 0; None when A - I is not nilpotent."""
    m = a - IntMatrix.identity(a.n)
    power = IntMatrix.identity(a.n)
    for k in range(a.n + 1):
        if all(x == 0 for row in power.entries for x in row):
            return k
        power = power * m
    return None


def cubic_profile(coeffs, matrix: IntMatrix = None) -> CubicProfile:
    """Exact root-structure classification of a monic integer cubic with p(0) = -1.

    The decision uses only the discriminant sign, the rational-root test at
    x = 1 (the only candidates are +-1 since the constant term is -1) and a
    Sturm-sequence count of positive roots.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != 4 or coeffs[0] != 1:
        raise InvalidCubic("expected a monic cubic")
    if coeffs[3] != -1:
        raise InvalidCubic("expected constant term -1")
    m, n = -coeffs[1], coeffs[2]
    disc = cubic_discriminant(coeffs)
    if coeffs == (1, -3, 3, -1):
        degree = unipotency_degree(matrix) if matrix is not None else None
        return CubicProfile(CubicKind.TRIPLE_ROOT_ONE, disc, (m, n), degree)
    if disc < 0:
        return CubicProfile(CubicKind.ONE_REAL_TWO_COMPLEX_CONJUGATE, disc, (m, n))
    if disc == 0:
        # Repeated root; the only rational candidates are +-1 and the triple
        # root at 1 was handled above, so this is the eigenvalue set {1,-1,-1}.
        return CubicProfile(CubicKind.OTHER, disc, (m, n))
    # disc > 0: three distinct real roots.
    if poly_eval(coeffs, 1) == 0:
        return CubicProfile(CubicKind.HAS_ROOT_ONE_TWO_OTHER_REAL, disc, (m, n))
    positive = count_real_roots_in(coeffs, 0, cauchy_bound(coeffs))
    if positive == 3:
        return CubicProfile(CubicKind.THREE_DISTINCT_REAL_ALL_POSITIVE, disc, (m, n))
    return CubicProfile(CubicKind.THREE_DISTINCT_REAL_NOT_ALL_POSITIVE, disc, (m, n))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple  # non-negative, each d_i divides d_{i+1}
    rank: int

    @property
    def invariant_factors(self):
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def torsion(self):
        return tuple(d for d in self.diagonal if d > 1)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, factor):
    m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]


def _add_col(m, dst, src, factor):
    for row in m:
        row[dst] += factor * row[src]


def smith_normal_form(rows) -> SmithForm:
    """Smith normal form of an arbitrary integer matrix (lists of lists)."""
    m = [list(map(int, r)) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        # Find the pivot of least absolute value in the remaining block.
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        _swap_rows(m, t, pivot[0])
        _swap_cols(m, t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t] % m[t][t] != 0:
                    _add_row(m, i, t, -(m[i][t] // m[t][t]))
                    _swap_rows(m, t, i)
                    dirty = True
            for j in range(t + 1, nc):
                if m[t][j] % m[t][t] != 0:
                    _add_col(m, j, t, -(m[t][j] // m[t][t]))
                    _swap_cols(m, t, j)
                    dirty = True
        for i in range(t + 1, nr):
            if m[i][t]:
                _add_row(m, i, t, -(m[i][t] // m[t][t]))
        for j in range(t + 1, nc):
            if m[t][j]:
                _add_col(m, j, t, -(m[t][j] // m[t][t]))
        diag.append(abs(m[t][t]))
        t += 1
    # Enforce the divisibility chain d_i | d_{i+1}.
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if a and b % a != 0:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    rank = len(diag)
    diag += [0] * (min(nr, nc) - rank)
    return SmithForm(tuple(diag), rank)


def snf_with_transforms(rows):
    """Return (diag, U, V) with U * M * V diagonal, U and V unimodular.

    diag is the full min(nr, nc) diagonal including zeros; U is nr x nr and
    V is nc x nc, both as lists of lists.
    """
    m = [list(map(int, r)) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    t = 0
    while t < min(nr, nc):
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        _swap_rows(m, t, pivot[0]); _swap_rows(u, t, pivot[0])
        _swap_cols(m, t, pivot[1]); _swap_cols(v, t, pivot[1])
        while True:
            done = True
            for i in range(t + 1, nr):
                if m[i][t]:
                    qf = m[i][t] // m[t][t]
                    _add_row(m, i, t, -qf); _add_row(u, i, t, -qf)
                    if m[i][t]:
                        _swap_rows(m, t, i); _swap_rows(u, t, i)
                        done = False
            for j in range(t + 1, nc):
                if m[t][j]:
                    qf = m[t][j] // m[t][t]
                    _add_col(m, j, t, -qf); _add_col(v, j, t, -qf)
                    if m[t][j]:
                        _swap_cols(m, t, j); _swap_cols(v, t, j)
                        done = False
            if done:
                break
        t += 1
    diag = [m[i][i] if i < nc else 0 for i in range(min(nr, nc))]
    return diag, u, v


def kernel_basis(rows):
    """Basis (list of integer vectors) of the right kernel of the matrix."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    if nr == 0:
        return [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    diag, _, v = snf_with_transforms(rows)
    basis = []
    for j in range(nc):
        if j >= len(diag) or diag[j] == 0:
            basis.append([v[i][j] for i in range(nc)])
    return basis


def hermite_row_basis(vectors):
    """Row-style triangular basis of the integer span of the given vectors."""
    rows = [list(map(int, vec)) for vec in vectors if any(vec)]
    if not rows:
        return []
    nc = len(rows[0])
    basis = []
    for col in range(nc):
        rows = [r for r in rows if any(r)]
        cand = [r for r in rows if r[col] != 0 and all(x == 0 for x in r[:col])]
        if not cand:
            continue
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[col]))
            piv = cand[0]
            for r in cand[1:]:
                f = r[col] // piv[col]
                for k in range(nc):
                    r[k] -= f * piv[k]
            cand = [r for r in cand if r[col] != 0]
            rows = [r for r in rows if any(r)]
        piv = cand[0]
        if piv[col] < 0:
            for k in range(nc):
                piv[k] = -piv[k]
        basis.append(piv)
        rows = [r for r in rows if r is not piv]
        for r in rows:
            if r[col] != 0 and all(x == 0 for x in r[:col]):
                f = r[col] // piv[col]
                for k in range(nc):
                    r[k] -= f * piv[k]
        # Re-run: rows may still have entries in this column only via earlier
        # columns; the loop above keeps the leading structure triangular.
        rows = [r for r in rows if any(r)]
    # Reduce entries above each pivot for a canonical-ish form.
    for i in range(len(basis) - 1, -1, -1):
        lead = next(k for k, x in enumerate(basis[i]) if x != 0)
        for j in range(i):
            if basis[j][lead] != 0:
                f = basis[j][lead] // basis[i][lead]
                for k in range(nc):
                    basis[j][k] -= f * basis[i][k]
    return basis


def lattice_membership(basis, vec):
    """Whether vec lies in the lattice spanned by the triangular row basis."""
    v = list(map(int, vec))
    for b in basis:
        lead = next(k for k, x in enumerate(b) if x != 0)
        if v[lead] % b[lead] == 0:
            f = v[lead] // b[lead]
            v = [a - f * c for a, c in zip(v, b)]
    return all(x == 0 for x in v)


def quotient_invariants(big_basis, small_basis):
    """Invariants (free rank, torsion factors) of L/L' for L' a sublattice of L.

    Both arguments are row bases; every row of small_basis must lie in the
    span of big_basis over Q (and over Z, since it is a subgroup).
    """
    if not big_basis:
        return (0, ())
    r = len(big_basis)
    if not small_basis:
        return (r, ())
    # Express small basis rows in the big basis: X * B = S, solve over Q.
    coords = []
    for s in small_basis:
        coords.append(_solve_in_basis(big_basis, s))
    form = smith_normal_form(coords)
    free = r - form.rank
    return (free, form.torsion)


def _solve_in_basis(basis, vec):
    """Integer coordinates of vec in the given independent row basis."""
    work = [Fraction(x) for x in vec]
    rows = [list(map(Fraction, b)) for b in basis]
    coords = [Fraction(0)] * len(rows)
    # basis rows are triangular after hermite_row_basis; do forward elimination
    for i, b in enumerate(rows):
        lead = next(k for k, x in enumerate(b) if x != 0)
        c = work[lead] / b[lead]
        coords[i] = c
        work = [w - c * x for w, x in zip(work, b)]
    if any(work) or any(c.denominator != 1 for c in coords):
        raise ValueError("vector is not in the integer span of the basis")
    return [int(c) for c in coords]


# ---------------------------------------------------------------------------
# Orders and closures in GL(n, Z)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderResult:
    finite: bool
    order: int = None


def matrix_order(a: IntMatrix, cutoff: int = GL3Z_MAX_ELEMENT_ORDER) -> OrderResult:
    """Least k <= cutoff with A^k = I, else infinite.

    Sound because finite-order elements of GL(2,Z) and GL(3,Z) have order at
    most 6 and 12 respectively (crystallographic restriction); cutoff must be
    at least 12.
    """
    if cutoff < GL3Z_MAX_ELEMENT_ORDER:
        raise ValueError("cutoff below the crystallographic bound 12")
    if not a.is_unimodular():
        raise NotUnimodular(f"det = {a.det()}")
    power = a
    for k in range(1, cutoff + 1):
        if power.is_identity():
            return OrderResult(True, k)
        power = power * a
    return OrderResult(False)


@dataclass(frozen=True)
class ClosureResult:
    finite: bool
    elements: frozenset = None

    @property
    def order(self):
        return len(self.elements) if self.finite else None


def subgroup_closure(gens, bound: int = GL2Z_MAX_FINITE_SUBGROUP) -> ClosureResult:
    """Multiplicative closure of the generators, abandoned beyond `bound`.

    For 2x2 generators a bound of 12 is complete: the largest finite subgroup
    of GL(2,Z) has order 12, so exceeding it certifies an infinite group.
    """
    gens = list(gens)
    if not gens:
        return ClosureResult(True, frozenset({IntMatrix.identity(2)}))
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise UnsupportedDimension("mixed dimensions in generating set")
        if not g.is_unimodular():
            raise NotUnimodular(f"det = {g.det()}")
    seed = {IntMatrix.identity(n)}
    for g in gens:
        seed.add(g)
        seed.add(g.inverse())
    elements = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for x in frontier:
            for g in seed:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > bound:
                        return ClosureResult(False)
        frontier = nxt
    return ClosureResult(True, frozenset(elements))


def closure_is_cyclic(elements) -> bool:
    """Whether a finite matrix group (given as its element set) is cyclic."""
    size = len(elements)
    for g in elements:
        power = g
        for k in range(1, size + 1):
            if power.is_identity():
                break
            power = power * g
        else:
            continue
        if k == size:
            return True
    return size == 1


# ---------------------------------------------------------------------------
# Conjugacy over Z/q by exhaustive search
# ---------------------------------------------------------------------------

def conjugate_mod_q(a: IntMatrix, b: IntMatrix, q: int, modulus_bound=None):
    """Witness P with P A P^{-1} = B over Z/q, or None.

    Exhaustive over all of M_n(Z/q) filtered by unit determinant, with an
    early characteristic-polynomial filter.  q beyond the configured range
    raises RangeExceeded; callers then fall back to invariant-only comparison.
    """
    if a.n != b.n:
        raise UnsupportedDimension("dimension mismatch")
    if q < 2:
        raise ValueError("modulus must be at least 2")
    n = a.n
    bound = (modulus_bound or DEFAULT_CONJ_MODULUS_BOUND).get(n)
    if bound is None:
        raise UnsupportedDimension("conjugacy search implemented for n in {2,3}")
    if q > bound:
        raise RangeExceeded(f"q = {q} above brute-force range {bound} for {n}x{n}")
    if poly_mod(charpoly(a), q) != poly_mod(charpoly(b), q):
        return None
    am = a.mod(q)
    bm = b.mod(q)
    if am == bm:
        return IntMatrix.identity(n)
    a_ent = am.entries
    b_ent = bm.entries
    rng = range(n)
    for flat in itertools.product(range(q), repeat=n * n):
        p = [flat[i * n:(i + 1) * n] for i in range(n)]
        # P * A == B * P (mod q) avoids inverting P.
        ok = True
        for i in rng:
            for j in rng:
                lhs = sum(p[i][k] * a_ent[k][j] for k in rng) % q
                rhs = sum(b_ent[i][k] * p[k][j] for k in rng) % q
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        pm = IntMatrix.from_rows(p)
        if gcd(pm.det() % q, q) == 1:
            return pm
    return None
