"""Endomorphism algebras, Fitting splits and indecomposability certificates.

hom_space computes intertwiners by spinning: the source module is generated
from a few seed vectors by the generator matrices, every vector reached gets
a word (a product of target generators), and every linear dependence met on
the way becomes a constraint on the seed images.  The solution space starts
as all seed-image tuples and shrinks through the constraints, which keeps
the elimination at seed scale instead of (dim x dim)-unknown scale.

Indecomposability is decided through the Fitting trichotomy in the left
regular representation of the commutant: an endomorphism is invertible or
nilpotent exactly when its left multiplication matrix is, and a module is
indecomposable exactly when every endomorphism is one of the two.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import (
    Matrix,
    RowBasis,
    Subspace,
    _mul,
    fitting_split,
    kernel,
    minimal_polynomial,
    rref,
)
from .fields import FieldSpec
from .modules import GroupActionModule

ENUMERATION_CAP = 10 ** 6


def _unit_row(field: FieldSpec, n: int, i: int) -> np.ndarray:
    row = field.zeros(n)
    row[i] = 1
    return row


def _spin_source(module: GroupActionModule):
    """Generate the coordinate space of a module from seed vectors.

    Returns (seed count, seed index per vertex, kept vertex rows as a
    RowBasis, relations).  Each kept vertex remembers which seed and which
    generator path reached it; each relation records a reached vector that
    was already in the span, as (vertex, generator, dependency coefficients
    over the kept vertices).
    """
    gens = module.gens()
    d = module.dim
    span = RowBasis(module.field, d)
    vertices: list[np.ndarray] = []
    seed_of: list[int] = []
    parent: list[tuple] = []
    relations: list[tuple] = []
    seeds = 0
    expand = 0
    for i in range(d):
        e = _unit_row(module.field, d, i)
        if span.coords(e) is not None:
            continue
        span.insert(e)
        vertices.append(e)
        seed_of.append(seeds)
        parent.append(None)
        seeds += 1
        while expand < len(vertices):
            v = vertices[expand]
            for g, gen in enumerate(gens):
                w = _mul(module.field, v.reshape(1, -1), gen.a)[0]
                idx, dep = span.insert(w)
                if idx is None:
                    relations.append((expand, g, dep))
                else:
                    vertices.append(w)
                    seed_of.append(seed_of[expand])
                    parent.append((expand, g))
            expand += 1
    if len(vertices) != d:
        raise ArithmeticError("spinning failed to fill the coordinate space")
    return seeds, seed_of, parent, span, relations


def hom_space(m1: GroupActionModule, m2: GroupActionModule) -> list[Matrix]:
    """Basis of {X : G1[g] X = X G2[g] for every generator g}.

    The basis is echelon-canonical in flattened coordinates, and every
    element is re-verified to intertwine all generator pairs.
    """
    if m1.degree != m2.degree:
        raise ValueError(f"degrees differ: {m1.degree} != {m2.degree}")
    if m1.field != m2.field:
        raise ValueError(f"fields differ: {m1.field} != {m2.field}")
    field = m1.field
    d1, d2 = m1.dim, m2.dim
    if d1 == 0 or d2 == 0:
        return []
    if m1.degree == 1:
        basis = []
        for i in range(d1):
            for j in range(d2):
                x = Matrix.zeros(field, d1, d2)
                x.a[i, j] = 1
                basis.append(x)
        return basis

    seeds, seed_of, parent, span, relations = _spin_source(m1)
    gens2 = [g.a for g in m2.gens()]

    # the image word of each vertex: a d2 x d2 product of target generators
    paths = np.empty((d1,), dtype=object)
    for i in range(d1):
        if parent[i] is None:
            paths[i] = Matrix.identity(field, d2).a
        else:
            pv, g = parent[i]
            paths[i] = _mul(field, paths[pv], gens2[g])
    paths_stack = np.stack(list(paths))
    seed_arr = np.array(seed_of)

    unknowns = seeds * d2
    w_rows = Matrix.identity(field, unknowns).a
    for vertex, g, dep in relations:
        if w_rows.shape[0] == 0:
            break
        block = field.zeros((seeds, d2, d2))
        block[seed_of[vertex]] = _mul(field, paths[vertex], gens2[g])
        dep_full = field.zeros(d1)
        dep_full[: len(dep)] = dep
        for j in range(seeds):
            coeffs = dep_full * (seed_arr == j)
            if np.any(coeffs):
                block[j] = field.reduce_array(
                    block[j] - np.tensordot(coeffs, paths_stack, axes=(0, 0)))
        constraint = block.reshape(unknowns, d2)
        moved = _mul(field, w_rows, constraint)
        if not np.any(moved):
            continue
        ker = kernel(Matrix(field, moved))
        w_rows = _mul(field, ker.basis.a, w_rows)

    if w_rows.shape[0] == 0:
        return []

    ident_coords, ok = span.coords_many(Matrix.identity(field, d1).a)
    if not np.all(ok):
        raise ArithmeticError("spin basis does not span the module")

    flat = field.zeros((w_rows.shape[0], d1 * d2))
    for r in range(w_rows.shape[0]):
        w = w_rows[r].reshape(seeds, d2)
        x_spin = field.reduce_array(
            np.einsum("ik,ikj->ij", w[seed_arr], paths_stack))
        x = _mul(field, ident_coords, x_spin)
        flat[r] = x.reshape(-1)
    canon, rank, _ = rref(Matrix(field, flat))

    out = []
    gens1 = [g.a for g in m1.gens()]
    for r in range(rank):
        x = Matrix(field, canon.a[r].reshape(d1, d2).copy())
        for g in range(len(gens1)):
            left = _mul(field, gens1[g], x.a)
            right = _mul(field, x.a, gens2[g])
            if not np.array_equal(left, right):
                raise ArithmeticError("solved hom fails to intertwine")
        out.append(x)
    return out


class EndoAlgebra:
    """The commutant of a module, with multiplication tables."""

    def __init__(self, module: GroupActionModule, basis: list[Matrix]):
        self.module = module
        self.field = module.field
        self.basis = basis
        d = module.dim
        self._stack = (np.stack([b.a for b in basis])
                       if basis else self.field.zeros((0, d, d)))
        flat = RowBasis(self.field, d * d)
        for b in basis:
            idx, _ = flat.insert(b.a.reshape(-1))
            if idx is None:
                raise ArithmeticError("commutant basis is dependent")
        self._flat = flat
        n = len(basis)
        self.structure = self.field.zeros((n, n, n))
        for i in range(n):
            for j in range(n):
                prod = _mul(self.field, basis[i].a, basis[j].a)
                coords = flat.coords(prod.reshape(-1))
                if coords is None:
                    raise ArithmeticError("commutant is not closed under products")
                self.structure[i, j] = coords
        ident = Matrix.identity(self.field, d)
        self.identity_coords = flat.coords(ident.a.reshape(-1))
        if self.identity_coords is None:
            raise ArithmeticError("commutant does not contain the identity")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coeffs) -> Matrix:
        c = np.asarray(coeffs, dtype=self.field.dtype)
        return Matrix(self.field, np.tensordot(c, self._stack, axes=(0, 0)))

    def coords_of(self, x: Matrix):
        return self._flat.coords(x.a.reshape(-1))

    def left_mult(self, coeffs) -> Matrix:
        """Matrix of y -> x y on the algebra, rows = coordinate images."""
        c = np.asarray(coeffs, dtype=self.field.dtype)
        return Matrix(self.field, np.tensordot(c, self.structure, axes=(0, 0)))


def commutant(module: GroupActionModule) -> EndoAlgebra:
    return EndoAlgebra(module, hom_space(module, module))


@dataclass
class DecompositionCertificate:
    """The outcome of an indecomposability check.

    deterministic means the verdict is proved: by exhaustion, by a scalar
    commutant, or by an explicit verified witness.  The probabilistic
    verdict only says a budgeted search found no witness.
    """

    verdict: str
    branch: str
    deterministic: bool
    witness: Matrix | None = None
    split_dims: tuple | None = None
    seed: int | None = None
    trials: int = 0

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "branch": self.branch,
            "deterministic": self.deterministic,
            "split_dims": list(self.split_dims) if self.split_dims else None,
            "seed": self.seed,
            "trials": self.trials,
        }


def _is_nilpotent(m: Matrix) -> bool:
    return m.pow(m.nrows).is_zero()


def _rank(m: Matrix) -> int:
    return rref(m)[1]


def _trichotomy_witness(algebra: EndoAlgebra, coeffs):
    """The element at coeffs if it is neither nilpotent nor invertible."""
    lm = algebra.left_mult(coeffs)
    if _rank(lm) == algebra.dim or _is_nilpotent(lm):
        return None
    return algebra.element(coeffs)


def _projective_coeff_vectors(q: int, d: int):
    """One representative per scalar line of GF(q)^d, deterministic order."""
    for lead in range(d):
        for tail in itertools.product(range(q), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def _rational_roots(poly) -> list[Fraction]:
    """All rational roots of a polynomial over Q, by the rational root test."""
    coeffs = [Fraction(c) for c in poly.coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]  # factor out x; zero is handled separately
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    roots = []
    if len(coeffs) < len(poly.coeffs):
        roots.append(Fraction(0))
    if not ints or len(ints) == 1:
        return roots

    def divisors(n):
        n = abs(n)
        out = set()
        f = 1
        while f * f <= n:
            if n % f == 0:
                out.add(f)
                out.add(n // f)
            f += 1
        return sorted(out)

    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if poly.eval_scalar(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def certify_indecomposable(module: GroupActionModule,
                           cap: int = ENUMERATION_CAP,
                           seed: int = 0,
                           trials: int = 500) -> DecompositionCertificate:
    """Decide whether a module is zero, indecomposable, or decomposable.

    Over GF(q) with q^dim(commutant) within the cap the decision is by full
    enumeration of the commutant up to scalars.  Beyond the cap (and over Q)
    a deterministic scan of basis elements, pairwise sums, products, and
    eigenvalue shifts runs first, then a seeded random search; a witness
    found any way is verified, so only the no-witness outcome of the random
    phase is less than a proof.
    """
    if module.dim == 0:
        return DecompositionCertificate("zero", "zero-module", True, seed=seed)
    algebra = commutant(module)
    d = algebra.dim
    field = module.field
    if d == 1:
        return DecompositionCertificate(
            "indecomposable", "scalar-commutant", True, seed=seed, trials=0)

    def decomposable(coeffs, branch, count):
        witness = algebra.element(coeffs)
        ker, image = fitting_split(witness)
        if ker.dim == 0 or image.dim == 0:
            raise ArithmeticError("witness produced a trivial split")
        return DecompositionCertificate(
            "decomposable", branch, True, witness=witness,
            split_dims=(ker.dim, image.dim), seed=seed, trials=count)

    q = field.characteristic
    if q and q ** d <= cap:
        count = 0
        for coeffs in _projective_coeff_vectors(q, d):
            count += 1
            if _trichotomy_witness(algebra, coeffs) is not None:
                return decomposable(coeffs, "exhaustive-enumeration", count)
        return DecompositionCertificate(
            "indecomposable", "exhaustive-enumeration", True,
            seed=seed, trials=count)

    count = 0
    scan = []
    for i in range(d):
        scan.append(tuple(1 if j == i else 0 for j in range(d)))
    for i in range(d):
        for j in range(i + 1, d):
            scan.append(tuple((1 if k == i else 0) + (1 if k == j else 0)
                              for k in range(d)))
    for i in range(d):
        for j in range(d):
            scan.append(tuple(field.scalar(x) for x in algebra.structure[i, j]))
    for coeffs in scan:
        count += 1
        if any(coeffs) and _trichotomy_witness(algebra, coeffs) is not None:
            return decomposable(coeffs, "witness-search", count)

    if q == 0:
        # every eigenvalue shift of a commutant element is singular, and a
        # non-nilpotent shifted element splits the module
        for i in range(d):
            coeffs = [Fraction(0)] * d
            coeffs[i] = Fraction(1)
            lm = algebra.left_mult(coeffs)
            for root in _rational_roots(minimal_polynomial(lm)):
                shifted = [c - root * e for c, e in
                           zip(coeffs, algebra.identity_coords)]
                count += 1
                if _trichotomy_witness(algebra, shifted) is not None:
                    return decomposable(shifted, "eigenvalue-shift", count)

    rng = random.Random(seed)
    for _ in range(trials):
        if q:
            coeffs = tuple(rng.randrange(q) for _ in range(d))
        else:
            coeffs = tuple(Fraction(rng.randint(-5, 5)) for _ in range(d))
        count += 1
        if any(coeffs) and _trichotomy_witness(algebra, coeffs) is not None:
            return decomposable(coeffs, "random-search", count)

    return DecompositionCertificate(
        "indecomposable (probabilistic)", "budget-exhausted", False,
        seed=seed, trials=count)


def decompose(module: GroupActionModule, cap: int = ENUMERATION_CAP,
              seed: int = 0) -> list[tuple[Subspace, DecompositionCertificate]]:
    """Split a module into certified summands by recursive Fitting splits.

    Subspaces come back in the coordinates of the original module; they are
    independent and exhaustive by construction.
    """
    field = module.field
    out: list[tuple[Subspace, DecompositionCertificate]] = []

    def rec(sub: GroupActionModule, rows: Matrix):
        cert = certify_indecomposable(sub, cap=cap, seed=seed)
        if cert.verdict == "decomposable":
            ker, image = fitting_split(cert.witness)
            for part in (ker, image):
                rec(sub.submodule(part.basis), part.basis @ rows)
        else:
            out.append((Subspace.from_rows(field, rows), cert))

    rec(module, Matrix.identity(field, module.dim))
    if sum(space.dim for space, _ in out) != module.dim:
        raise ArithmeticError("summand dimensions do not sum to the module")
    return out


def is_isomorphic(m1: GroupActionModule, m2: GroupActionModule,
                  cap: int = ENUMERATION_CAP, seed: int = 0,
                  trials: int = 500) -> bool:
    """Whether the modules are isomorphic, by finding an invertible hom.

    Over GF(q) with a small hom space the search is exhaustive, so both
    answers are proofs.  Otherwise a deterministic scan plus a seeded random
    search runs; failure to find an invertible element then raises rather
    than returning a potentially wrong False.
    """
    if m1.dim != m2.dim:
        return False
    if m1.dim == 0:
        return True
    homs = hom_space(m1, m2)
    if not homs:
        return False
    d = m1.dim
    for x in homs:
        if _rank(x) == d:
            return True
    field = m1.field
    stack = np.stack([x.a for x in homs])
    q = field.characteristic
    if q and q ** len(homs) <= cap:
        for coeffs in _projective_coeff_vectors(q, len(homs)):
            c = np.asarray(coeffs, dtype=field.dtype)
            x = Matrix(field, np.tensordot(c, stack, axes=(0, 0)))
            if _rank(x) == d:
                return True
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        if q:
            coeffs = [rng.randrange(q) for _ in range(len(homs))]
        else:
            coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(len(homs))]
        c = np.asarray(coeffs, dtype=field.dtype)
        x = Matrix(field, np.tensordot(c, stack, axes=(0, 0)))
        if _rank(x) == d:
            return True
    raise ArithmeticError("isomorphism search budget exhausted without a proof")


def find_separating_vector(module: GroupActionModule, z: Matrix,
                           expected_degree: int) -> np.ndarray:
    """A vector whose first expected_degree Krylov images under z are
    independent.  Searches unit vectors, then pairs, then triples."""
    field = module.field
    d = module.dim
    if z.nrows != d or z.ncols != d:
        raise ValueError("operator shape does not match the module")
    if expected_degree < 1:
        raise ValueError("expected_degree must be at least 1")
    if minimal_polynomial(z).degree < expected_degree:
        raise ValueError(
            f"no separating vector: minimal polynomial degree is below "
            f"{expected_degree}")

    def chain_ok(v: np.ndarray) -> bool:
        rb = RowBasis(field, d)
        w = v
        for _ in range(expected_degree):
            idx, _ = rb.insert(w)
            if idx is None:
                return False
            w = _mul(field, w.reshape(1, -1), z.a)[0]
        return True

    for size in (1, 2, 3):
        for support in itertools.combinations(range(d), size):
            v = field.zeros(d)
            for i in support:
                v[i] = 1
            if chain_ok(v):
                return v
    raise ArithmeticError("no separating vector found in the search lattice")
