"""Exact dense linear algebra over Q and GF(p).

Matrices wrap numpy arrays: ``int64`` residues for GF(p), Python
ints/Fractions in ``object`` arrays for Q.  Every operation is exact; there
is no floating point and no tolerance anywhere.  Vectors are rows and
operators act on the right, so "kernel" always means the left kernel
``{v : v A = 0}`` and spans are row spaces.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fields import FieldSpec


class Matrix:
    """An exact matrix over a FieldSpec."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldSpec, a: np.ndarray):
        if a.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        self.field = field
        self.a = field.reduce_array(a)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "Matrix":
        return cls(field, field.array(rows))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        a = field.zeros((n, n))
        for i in range(n):
            a[i, i] = 1
        return cls(field, a)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls(field, field.zeros((nrows, ncols)))

    @property
    def nrows(self) -> int:
        return self.a.shape[0]

    @property
    def ncols(self) -> int:
        return self.a.shape[1]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, _mul(self.field, self.a, other.a))

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self.a + other.a)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self.a - other.a)

    def scale(self, c) -> "Matrix":
        c = self.field.scalar(c)
        return Matrix(self.field, self.a * c)

    def shift(self, c) -> "Matrix":
        """self + c * identity."""
        if self.nrows != self.ncols:
            raise ValueError("shift needs a square matrix")
        a = self.a.copy()
        c = self.field.scalar(c)
        for i in range(self.nrows):
            a[i, i] += c
        return Matrix(self.field, a)

    def pow(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("pow needs a square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not np.any(self.a)

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.field, self.nrows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.a, other.a)

    def __hash__(self):
        return hash((self.field, self.a.shape, self.a.tobytes() if self.a.dtype != object else str(self.a)))

    def to_lists(self):
        return [[self.field.scalar(x) for x in row] for row in self.a]

    def __str__(self) -> str:
        render = self.field.render
        cells = [[render(x) for x in row] for row in self.a]
        w = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(w) for c in row) for row in cells)

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"


def _mul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    p = field.characteristic
    if p and p * p * max(a.shape[1], 1) > 2**62:
        # residues too large for int64 accumulation; fall back to objects
        return (a.astype(object) @ b.astype(object)) % p
    return field.reduce_array(a @ b)


class RowBasis:
    """Incrementally built reduced row echelon basis with coordinate tracking.

    Rows are inserted one at a time.  The internal matrix R stays fully
    reduced with unit pivots, and C records each R-row as a combination of
    the kept (independent) input rows, so membership tests also produce
    coordinates over the original inputs.
    """

    def __init__(self, field: FieldSpec, width: int, track: bool = True):
        self.field = field
        self.width = width
        self.track = track
        self._r = field.zeros((8, width))
        self._c = field.zeros((8, 8)) if track else None
        self.pivots: list[int] = []
        self.size = 0

    def _grow(self):
        cap = self._r.shape[0]
        if self.size < cap:
            return
        r = self.field.zeros((2 * cap, self.width))
        r[:cap] = self._r
        self._r = r
        if self.track:
            c = self.field.zeros((2 * cap, 2 * cap))
            c[:cap, :cap] = self._c
            self._c = c

    @property
    def rows(self) -> np.ndarray:
        return self._r[: self.size]

    @property
    def combos(self) -> np.ndarray:
        return self._c[: self.size, : self.size]

    def reduce(self, v: np.ndarray):
        """Return (residual, coeffs over current echelon rows)."""
        field = self.field
        if self.size == 0:
            return field.reduce_array(v.copy()), field.zeros(0)
        d = v[self.pivots]
        residual = field.reduce_array(v - _mul(field, d.reshape(1, -1), self.rows)[0])
        return residual, field.reduce_array(d)

    def insert(self, v: np.ndarray):
        """Insert a row; returns (kept_index, None) or (None, dependency).

        The dependency expresses v as a combination of previously kept rows
        (or None when coordinate tracking is off).
        """
        field = self.field
        residual, d = self.reduce(v)
        nz = np.nonzero(residual)[0]
        if len(nz) == 0:
            if not self.track:
                return None, None
            dep = _mul(field, d.reshape(1, -1), self.combos)[0] if self.size else field.zeros(0)
            return None, dep
        j = int(nz[0])
        inv = field.inv(residual[j])
        row = field.reduce_array(residual * inv)
        k = self.size
        if self.track:
            crow = field.zeros(k + 1)
            if k:
                crow[:k] = field.reduce_array(
                    -_mul(field, d.reshape(1, -1), self.combos)[0] * inv)
            crow[k] = field.scalar(inv) if field.characteristic else inv
        self._grow()
        if k:
            col = self._r[:k, j].copy()
            if np.any(col):
                self._r[:k] = field.reduce_array(self._r[:k] - np.outer(col, row))
                if self.track:
                    self._c[:k, : k + 1] = field.reduce_array(
                        self._c[:k, : k + 1] - np.outer(col, crow))
        self._r[k] = row
        if self.track:
            self._c[k, : k + 1] = crow
        self.pivots.append(j)
        self.size = k + 1
        return k, None

    def contains(self, v: np.ndarray) -> bool:
        residual, _ = self.reduce(v)
        return not np.any(residual)

    def coords(self, v: np.ndarray):
        """Coordinates of v over the kept input rows, or None."""
        if not self.track:
            raise RuntimeError("coordinate tracking is off for this basis")
        residual, d = self.reduce(v)
        if np.any(residual):
            return None
        if self.size == 0:
            return self.field.zeros(0)
        return _mul(self.field, d.reshape(1, -1), self.combos)[0]

    def coords_many(self, vmat: np.ndarray):
        """Vectorized coords; returns (coeff matrix, boolean mask of rows in span)."""
        if not self.track:
            raise RuntimeError("coordinate tracking is off for this basis")
        field = self.field
        if self.size == 0:
            ok = ~np.any(vmat, axis=1)
            return field.zeros((vmat.shape[0], 0)), ok
        d = vmat[:, self.pivots]
        residual = field.reduce_array(vmat - _mul(field, d, self.rows))
        ok = ~np.any(residual, axis=1)
        return _mul(field, d, self.combos), ok


def rref(m: Matrix):
    """Reduced row echelon form: returns (R, rank, pivots)."""
    rb = RowBasis(m.field, m.ncols, track=False)
    for i in range(m.nrows):
        rb.insert(m.a[i])
    order = np.argsort(rb.pivots) if rb.size else []
    r = rb.rows[order] if rb.size else m.field.zeros((0, m.ncols))
    pivots = [rb.pivots[i] for i in order]
    return Matrix(m.field, r.copy()), rb.size, pivots


def kernel(m: Matrix) -> "Subspace":
    """Left kernel {v : v m = 0} as a Subspace of F^nrows."""
    field = m.field
    rb = RowBasis(field, m.ncols)
    kept: list[int] = []
    kernel_rows = []
    for i in range(m.nrows):
        idx, dep = rb.insert(m.a[i])
        if idx is not None:
            kept.append(i)
        else:
            row = field.zeros(m.nrows)
            row[kept[: len(dep)]] = field.reduce_array(-dep) if len(dep) else dep
            row[i] = 1
            kernel_rows.append(row)
    if not kernel_rows:
        return Subspace(field, m.nrows, Matrix.zeros(field, 0, m.nrows))
    return Subspace.from_rows(field, Matrix(field, np.stack(kernel_rows)))


class Subspace:
    """A subspace of row vectors, held as a canonical reduced echelon basis."""

    def __init__(self, field: FieldSpec, ambient: int, basis: Matrix):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        if basis.ncols != ambient:
            raise ValueError("basis width does not match ambient dimension")
        self._rb = None

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Matrix) -> "Subspace":
        r, _, _ = rref(rows)
        return cls(field, rows.ncols, r)

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def _builder(self) -> RowBasis:
        if self._rb is None:
            rb = RowBasis(self.field, self.ambient)
            for i in range(self.dim):
                rb.insert(self.basis.a[i])
            self._rb = rb
        return self._rb

    def coords(self, v: np.ndarray):
        return self._builder().coords(v)

    def contains(self, v: np.ndarray) -> bool:
        return self._builder().coords(v) is not None

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        stacked = np.concatenate([self.basis.a, other.basis.a], axis=0)
        ker = kernel(Matrix(self.field, stacked))
        left = ker.basis.a[:, : self.dim]
        rows = _mul(self.field, left, self.basis.a)
        return Subspace.from_rows(self.field, Matrix(self.field, rows))

    def is_invariant(self, m: Matrix) -> bool:
        moved = _mul(self.field, self.basis.a, m.a)
        _, ok = self._builder().coords_many(moved)
        return bool(np.all(ok))

    def restrict(self, m: Matrix) -> Matrix:
        """The matrix of v -> v m in the basis of this (invariant) subspace."""
        moved = _mul(self.field, self.basis.a, m.a)
        coeffs, ok = self._builder().coords_many(moved)
        if not np.all(ok):
            raise ValueError("subspace is not invariant under the matrix")
        return Matrix(self.field, coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient})"


def solve_in_span(space: Subspace, v: np.ndarray):
    """Coordinates of v over space's basis rows, or None if outside."""
    return space.coords(v)


class Polynomial:
    """A polynomial over a FieldSpec; coefficients ascending, exact."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        cs = [field.scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def from_roots(cls, field, roots) -> "Polynomial":
        """The monic product of (x - r) over the given roots, repeats kept."""
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, [field.neg(field.scalar(r)), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.field.inv(self.coeffs[-1])
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] + c
        return Polynomial(self.field, a)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] - c
        return Polynomial(self.field, a)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        dn = other.degree
        lead_inv = field.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - dn, 0)
        for i in range(len(rem) - dn - 1, -1, -1):
            c = field.scalar(rem[i + dn] * lead_inv)
            quot[i] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = field.scalar(rem[i + j] - c * b)
        return Polynomial(field, quot), Polynomial(field, rem[:dn])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other) -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def lcm(self, other) -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        g = self.gcd(other)
        q, r = (self * other).divmod(g)
        assert r.is_zero()
        return q.monic()

    def eval_scalar(self, c):
        c = self.field.scalar(c)
        acc = self.field.scalar(0)
        for a in reversed(self.coeffs):
            acc = self.field.scalar(acc * c + a)
        return acc

    def eval_matrix(self, m: Matrix) -> Matrix:
        acc = Matrix.zeros(m.field, m.nrows, m.ncols)
        for a in reversed(self.coeffs):
            acc = (acc @ m).shift(a)
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        render = self.field.render
        pieces = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                term = render(c)
            else:
                xpow = "x" if e == 1 else f"x^{e}"
                term = xpow if c == 1 else f"{render(c)}*{xpow}"
            pieces.append(term)
        out = pieces[0]
        for term in pieces[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"


def poly_product_from_roots(field: FieldSpec, roots) -> Polynomial:
    return Polynomial.from_roots(field, roots)


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Minimal polynomial, as the lcm of cyclic-vector local polynomials.

    Every Krylov dependency is re-verified against the stored chain before
    it contributes a factor, so the returned polynomial provably annihilates
    a spanning set; minimality comes from the chain independence that the
    echelon structure enforces.
    """
    if m.nrows != m.ncols:
        raise ValueError("minimal polynomial needs a square matrix")
    field = m.field
    n = m.nrows
    if n == 0:
        return Polynomial.one(field)
    seen = RowBasis(field, n, track=False)
    f = Polynomial.one(field)
    for i in range(n):
        if seen.size == n:
            break
        e = field.zeros(n)
        e[i] = 1
        if seen.contains(e):
            continue
        local = RowBasis(field, n)
        chain = []
        v = e
        while True:
            idx, dep = local.insert(v)
            if idx is None:
                recon = _mul(field, dep.reshape(1, -1), np.stack(chain))[0]
                if np.any(field.reduce_array(v - recon)):
                    raise ArithmeticError("krylov dependency failed verification")
                coeffs = [field.neg(c) for c in dep] + [1]
                f = f.lcm(Polynomial(field, coeffs))
                break
            chain.append(field.reduce_array(v.copy()))
            seen.insert(v)
            v = _mul(field, v.reshape(1, -1), m.a)[0]
    probe = field.reduce_array(np.arange(1, n + 1).astype(field.dtype))
    acc = field.zeros(n)
    for c in reversed(f.coeffs):
        acc = field.reduce_array(_mul(field, acc.reshape(1, -1), m.a)[0] + probe * c)
    if np.any(acc):
        raise ArithmeticError("minimal polynomial candidate fails to annihilate")
    return f


def generalized_eigenspace(m: Matrix, c) -> Subspace:
    """Left kernel of (m - c)^n where n is the ambient dimension."""
    shifted = m.shift(m.field.neg(m.field.scalar(c)))
    return kernel(shifted.pow(m.nrows))


def fitting_split(m: Matrix):
    """Kernel and image of m^n: an exact direct sum decomposition."""
    n = m.nrows
    power = m.pow(n)
    ker = kernel(power)
    image = Subspace.from_rows(m.field, power)
    if ker.dim + image.dim != n:
        raise ArithmeticError("fitting split dimensions do not add up")
    return ker, image
