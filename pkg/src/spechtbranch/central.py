"""Central characters and block components of restricted/induced modules.

Restriction of S^lam one degree down is filtered by the Specht modules at
the removable nodes; induction one degree up by those at the addable nodes.
Each factor lies in one block of the acting group algebra.  The elementary
symmetric polynomials e_k(L_1, ..., L_K) of the Murphy elements are central
and act on a factor S^mu by e_k(contents(mu)), so the tuple of these values
is a complete block invariant: over GF(p) it pins down the content multiset
mod p, hence the p-core; over Q it pins down the content multiset itself.
The block component for a label is then the simultaneous generalized
eigenspace of the central operators at the label's values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Matrix, Polynomial, Subspace, kernel
from .fields import FieldSpec
from .modules import GroupActionModule, murphy_element, transposition_sum
from .partitions import (
    Partition,
    addable_nodes,
    content_sum,
    elementary_symmetric_of_contents,
    induce_at,
    p_core,
    removable_nodes,
    restrict_at,
    specht_dimension,
)

RESTRICT = "restrict"
INDUCE = "induce"


def branching_factors(lam: Partition, direction: str) -> tuple[Partition, ...]:
    """The Specht factors of the restriction or induction of S^lam, in the
    filtration order (removable/addable node index ascending)."""
    lam = Partition(lam)
    if direction == RESTRICT:
        return tuple(restrict_at(lam, u)
                     for u in range(1, len(removable_nodes(lam)) + 1))
    if direction == INDUCE:
        return tuple(induce_at(lam, u)
                     for u in range(1, len(addable_nodes(lam)) + 1))
    raise ValueError(f"direction must be {RESTRICT!r} or {INDUCE!r}")


def predicted_scalar(mu: Partition, k: int, field: FieldSpec):
    """The scalar by which e_k(L_1, ..., L_degree) acts on S^mu."""
    return elementary_symmetric_of_contents(Partition(mu), k, field)


def predicted_min_poly(lam: Partition, direction: str, field: FieldSpec) -> Polynomial:
    """Product of (x - E(factor)) over the branching factors, with
    multiplicity; degree m for restriction, m+1 for induction."""
    roots = [field.scalar(content_sum(mu))
             for mu in branching_factors(lam, direction)]
    return Polynomial.from_roots(field, roots)


@dataclass(frozen=True)
class BlockLabel:
    """A block of the acting group algebra.

    For p > 0 the core is the shared p-core of the factors in the block;
    for p = 0 each factor is its own block and core is the factor itself.
    character_values are e_k(contents) for k = 1..degree, reduced into the
    field; they are what the splitting actually matches against.
    """

    p: int
    core: Partition
    character_values: tuple

    def __str__(self) -> str:
        if self.p:
            return f"{self.p}-core ({self.core})"
        return f"factor ({self.core})"


def block_label(mu: Partition, field: FieldSpec) -> BlockLabel:
    """The label of the block of the degree-|mu| group algebra holding S^mu."""
    mu = Partition(mu)
    p = field.characteristic
    values = tuple(field.scalar(elementary_symmetric_of_contents(mu, k, field))
                   for k in range(1, mu.size + 1))
    core = p_core(mu, p) if p else mu
    return BlockLabel(p, core, values)


@dataclass
class BlockComponent:
    """One block's slice of a restricted or induced module."""

    label: BlockLabel
    factors: tuple
    subspace: Subspace
    parent: GroupActionModule

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def expected_dim(self) -> int:
        return sum(specht_dimension(mu) for mu in self.factors)

    def as_module(self) -> GroupActionModule:
        return self.parent.submodule(
            self.subspace.basis,
            label=f"{self.label} component of {self.parent.label}")

    def __repr__(self) -> str:
        return f"<block {self.label}: dim {self.dim}>"


def central_symmetric_action(module: GroupActionModule, k: int) -> Matrix:
    """Matrix of e_k(L_1, ..., L_K) on the module, K the acting degree.

    k = 1 is the transposition sum and is computed directly; higher k share
    one memoized pass that multiplies out prod_i (x + L_i), keeping the
    elementary symmetric matrix coefficients.
    """
    k_top = module.degree
    if not 1 <= k <= k_top:
        raise ValueError(f"need 1 <= k <= {k_top}, got {k}")
    if k == 1:
        return module.element_matrix(transposition_sum(k_top))
    memo = getattr(module, "_central_memo", None)
    if memo is None:
        acc = [Matrix.identity(module.field, module.dim)]
        acc += [Matrix.zeros(module.field, module.dim, module.dim)
                for _ in range(k_top)]
        for i in range(2, k_top + 1):
            li = module.element_matrix(murphy_element(i))
            for j in range(min(i, k_top), 0, -1):
                acc[j] = acc[j] + acc[j - 1] @ li
        memo = acc[1:]
        module._central_memo = memo
    return memo[k - 1]


def _refine(space: Subspace, operator: Matrix, value, expected: int) -> Subspace:
    """Shrink an invariant subspace to the generalized eigenspace of one
    operator inside it."""
    field = space.field
    local = space.restrict(operator).shift(field.neg(field.scalar(value)))
    ker = kernel(local.pow(space.dim))
    return Subspace.from_rows(field, ker.basis @ space.basis)


def block_split(module: GroupActionModule, p: int,
                candidate_factors) -> list[BlockComponent]:
    """Split a restricted or induced module into its block components.

    candidate_factors are the branching factors of the module; they are
    grouped by block label, and each label's component is cut out by
    refining generalized eigenspaces of e_1, e_2, ... until the dimension
    matches the factor bookkeeping (almost always after e_1).  Components
    come back in the order the blocks first appear along the filtration.
    """
    field = module.field
    if p != field.characteristic:
        raise ValueError(
            f"p = {p} does not match the module field of characteristic "
            f"{field.characteristic}")
    factors = tuple(Partition(mu) for mu in candidate_factors)
    if not factors:
        raise ValueError("no candidate factors")
    if any(mu.size != module.degree for mu in factors):
        raise ValueError("factor sizes must equal the acting degree")

    labels: list[BlockLabel] = []
    by_label: dict = {}
    for mu in factors:
        lab = block_label(mu, field)
        if lab not in by_label:
            labels.append(lab)
            by_label[lab] = []
        by_label[lab].append(mu)
    if len({lab.core for lab in labels}) != len(labels):
        raise ArithmeticError(
            "factors with a common core disagree on central values")

    out = []
    for lab in labels:
        expected = sum(specht_dimension(mu) for mu in by_label[lab])
        space = Subspace.full(field, module.dim)
        for k, value in enumerate(lab.character_values, start=1):
            if space.dim == expected:
                break
            space = _refine(space, central_symmetric_action(module, k),
                            value, expected)
        if space.dim != expected:
            raise ArithmeticError(
                f"component {lab} has dimension {space.dim}, expected {expected}")
        out.append(BlockComponent(lab, tuple(by_label[lab]), space, module))

    if sum(c.dim for c in out) != module.dim:
        raise ArithmeticError("block dimensions do not sum to the module dimension")
    return out


def split_branching(module: GroupActionModule, lam: Partition,
                    direction: str) -> list[BlockComponent]:
    """block_split with the factors filled in from the branching rule."""
    return block_split(module, module.field.characteristic,
                       branching_factors(Partition(lam), direction))
