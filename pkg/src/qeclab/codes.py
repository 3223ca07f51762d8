"""Code constructions, the logical/stabilizer/detectable scans, and classification.

Subspace equality throughout is projector Frobenius distance < 1e-7, which is
basis independent.  Membership scans use 1e-8.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import frobenius, nullspace, orthonormal_columns, projector
from .cocycles import PhaseFunction, _greedy_generators, coboundary
from .groups import Subgroup, max_group_order
from .models import ProjectiveErrorModel, product_model
from .projreps import (
    ProjectiveRep,
    hom_space,
    inertia_group,
    inner_product,
    is_irreducible,
    make_rep,
    rep_from_phase_function,
    restrict,
)

__all__ = [
    "CodeError",
    "CodeSpace",
    "CodeReport",
    "weak_stabilizer_code",
    "stabilizer_code",
    "existence_phase",
    "code_dimension_formula",
    "clifford_code",
    "logical_group",
    "stabilizer_group",
    "detectable_set",
    "is_partitioning",
    "classify",
    "stabilizer_to_clifford",
    "product_code",
]

TOL_MEMBERSHIP = 1e-8
TOL_SUBSPACE = 1e-7


class CodeError(ValueError):
    """Raised on construction precondition failures and snap failures."""


@dataclass(eq=False)
class CodeSpace:
    """A nonzero subspace given by orthonormal basis columns."""

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self) -> None:
        self.basis = np.asarray(self.basis, dtype=complex)
        if self.basis.ndim != 2 or self.basis.shape[0] != self.ambient_dim:
            raise CodeError("basis must be an ambient_dim x k matrix")
        if self.basis.shape[1] == 0:
            raise CodeError("code spaces must be nonzero")
        gram = self.basis.conj().T @ self.basis
        if frobenius(gram - np.eye(self.dim)) > 1e-9:
            raise CodeError("basis columns are not orthonormal")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "CodeSpace":
        cols = np.asarray(vectors, dtype=complex).reshape(-1, ambient_dim).T
        basis = orthonormal_columns(cols)
        if basis.shape[1] == 0:
            raise CodeError("vectors span the zero space")
        return cls(ambient_dim, basis)

    def equals(self, other: "CodeSpace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            return False
        return frobenius(self.projector() - other.projector()) < TOL_SUBSPACE

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [
                [[float(z.real), float(z.imag)] for z in self.basis[:, k]]
                for k in range(self.dim)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CodeSpace":
        d = int(data["ambient_dim"])
        cols = [np.array([complex(re, im) for re, im in col]) for col in data["basis"]]
        basis = np.stack(cols, axis=1)
        return cls(d, basis)

    def __repr__(self) -> str:
        return f"CodeSpace(dim {self.dim} in {self.ambient_dim})"


def _subgroup_generators(sub: Subgroup) -> list[int]:
    """Generators of the subgroup as parent-group element indices."""
    inner = _greedy_generators(sub.as_group())
    if not inner:
        inner = [sub.as_group().identity]
    return [sub.members[i] for i in inner]


def _eigenspace_basis(model: ProjectiveErrorModel, members, values) -> np.ndarray | None:
    """Orthonormal basis of {v : pi(x) v = value_x v for the given elements}."""
    dim = model.dim
    eye = np.eye(dim, dtype=complex)
    stacked = np.vstack([model.rep.matrices[x] - c * eye for x, c in zip(members, values)])
    basis = nullspace(stacked)
    if basis.shape[1] == 0:
        return None
    return basis


def weak_stabilizer_code(
    model: ProjectiveErrorModel, sub: Subgroup, f: PhaseFunction
) -> CodeSpace | None:
    """Joint eigenspace {v : pi(x) v = f(x) v for all x in the subgroup}.

    Computed over a generating set first, then re-verified on the whole
    subgroup; if the generator space is too big the full stack is used.
    Returns None when the space is zero.
    """
    if f.domain is not sub and tuple(f.domain.members) != tuple(sub.members):
        raise CodeError("phase function domain does not match the subgroup")
    gens = _subgroup_generators(sub)
    gen_values = [f.value_at(x) for x in gens]
    basis = _eigenspace_basis(model, gens, gen_values)
    if basis is None:
        return None
    all_values = np.array([f.value_at(x) for x in sub.members])
    resid = np.einsum("xab,bk->xak", model.rep.matrices[list(sub.members)], basis)
    resid = resid - all_values[:, None, None] * basis[None, :, :]
    if np.abs(resid).max() > TOL_MEMBERSHIP:
        basis = _eigenspace_basis(model, list(sub.members), all_values)
        if basis is None:
            return None
    code = CodeSpace(model.dim, basis)
    _assert_projective_phase(model, sub, f)
    return code


def _assert_projective_phase(model: ProjectiveErrorModel, sub: Subgroup, f: PhaseFunction) -> None:
    # a nonzero joint eigenspace forces f to multiply like the cocycle does
    res = model.cocycle.restrict(sub)
    if f.is_exact:
        if coboundary(f) != res:
            raise RuntimeError("nonzero code with delta(f) != restricted cocycle")
        return
    got = np.multiply.outer(f.values, f.values)
    h = sub.as_group()
    expected = res.to_complex_table() * f.values[h.mul]
    if np.abs(got - expected).max() > TOL_SUBSPACE:
        raise RuntimeError("nonzero code with delta(f) != restricted cocycle")


def stabilizer_code(
    model: ProjectiveErrorModel, sub: Subgroup, f: PhaseFunction
) -> CodeSpace | None:
    """weak_stabilizer_code with the subgroup required to be normal."""
    if not sub.is_normal():
        raise CodeError("stabilizer codes need a normal subgroup")
    return weak_stabilizer_code(model, sub, f)


def existence_phase(model: ProjectiveErrorModel, sub: Subgroup) -> PhaseFunction | None:
    """A phase function with a guaranteed nonzero code, when one exists.

    Needs the subgroup abelian and the restricted cocycle a coboundary.  The
    choice among the 1-dimensional constituents is deterministic: each
    generator's eigenvalues are sorted by phase angle and the lowest-index
    joint eigenvector is taken.
    """
    from .cocycles import find_trivializing_phase

    if not sub.is_abelian():
        return None
    res = model.cocycle.restrict(sub)
    f0 = find_trivializing_phase(res, domain=sub)
    if f0 is None:
        return None
    h = sub.as_group()
    lin = model.rep.matrices[list(sub.members)] * f0.values.conj()[:, None, None]
    basis = np.eye(model.dim, dtype=complex)
    for g in _greedy_generators(h):
        block = basis.conj().T @ lin[g] @ basis
        eigvals, eigvecs = np.linalg.eig(block)
        angles = np.mod(np.angle(eigvals) / (2 * np.pi), 1.0)
        angles[angles > 1 - 1e-9] = 0.0
        target = angles.min()
        keep = np.abs(angles - target) < 1e-8
        basis = basis @ orthonormal_columns(eigvecs[:, keep])
    v = basis[:, 0]
    chi_values = np.einsum("a,xab,b->x", v.conj(), lin, v)
    chi = PhaseFunction.from_complex(sub, chi_values, max_den=len(sub))
    if not chi.is_exact:
        raise CodeError("constituent character did not snap to exact phases")
    return f0.multiply(chi)


def code_dimension_formula(model: ProjectiveErrorModel, sub: Subgroup, f: PhaseFunction) -> int:
    """Average of conj(f) against the model character, snapped to an integer."""
    chi = model.rep.character().values[list(sub.members)]
    total = np.sum(np.conj(f.values) * chi) / len(sub)
    nearest = round(total.real)
    if abs(total - nearest) > 1e-7 or nearest < 0:
        raise CodeError(f"dimension formula gave a non-integer value {total}")
    return int(nearest)


def clifford_code(model: ProjectiveErrorModel, sub: Subgroup, rho: ProjectiveRep) -> CodeSpace:
    """Image of the unique intertwiner from rho into the restricted action."""
    if not is_irreducible(rho):
        raise CodeError("clifford_code: the small representation must be irreducible")
    if rho.cocycle != model.cocycle.restrict(sub):
        raise CodeError(
            "clifford_code: the small representation's cocycle must equal the restricted cocycle"
        )
    res = restrict(model.rep, sub)
    maps = hom_space(rho, res)
    if len(maps) != 1:
        raise CodeError(
            f"clifford_code: need multiplicity one, got intertwiner space of dim {len(maps)}"
        )
    if sub.index() * rho.dim != model.dim:
        raise CodeError(
            "clifford_code: index times small dimension must equal the ambient dimension "
            f"({sub.index()} * {rho.dim} != {model.dim})"
        )
    basis = orthonormal_columns(maps[0])
    if basis.shape[1] != rho.dim:
        raise CodeError("clifford_code: intertwiner is not injective")
    return CodeSpace(model.dim, basis)


def logical_group(model: ProjectiveErrorModel, code: CodeSpace) -> Subgroup:
    """Elements whose action commutes with the code projector."""
    p = code.projector()
    mats = model.rep.matrices
    dev = np.einsum("ab,xbc->xac", p, mats) - np.einsum("xab,bc->xac", mats, p)
    norms = np.sqrt(np.sum(np.abs(dev) ** 2, axis=(1, 2)))
    members = np.flatnonzero(norms < TOL_MEMBERSHIP)
    return Subgroup(model.group, members)


def _compressed_scalars(model: ProjectiveErrorModel, code: CodeSpace) -> tuple[np.ndarray, np.ndarray]:
    """Per element: c = tr(P pi P)/dim W and the distance of P pi P from c P."""
    p = code.projector()
    mats = model.rep.matrices
    pmp = np.einsum("ab,xbc,cd->xad", p, mats, p)
    scalars = np.einsum("xaa->x", pmp) / code.dim
    dev = pmp - scalars[:, None, None] * p
    dists = np.sqrt(np.sum(np.abs(dev) ** 2, axis=(1, 2)))
    return scalars, dists


def stabilizer_group(
    model: ProjectiveErrorModel, code: CodeSpace
) -> tuple[Subgroup, PhaseFunction]:
    """Elements acting on the code as a unimodular scalar, with that scalar."""
    scalars, dists = _compressed_scalars(model, code)
    keep = (dists < TOL_MEMBERSHIP) & (np.abs(np.abs(scalars) - 1) < TOL_MEMBERSHIP)
    members = np.flatnonzero(keep)
    sub = Subgroup(model.group, members)
    f = PhaseFunction.from_complex(sub, scalars[members], max_den=4 * model.group.order)
    return sub, f


def detectable_set(model: ProjectiveErrorModel, code: CodeSpace) -> list[int]:
    """Elements acting as any scalar (including zero) on the code."""
    _, dists = _compressed_scalars(model, code)
    return [int(x) for x in np.flatnonzero(dists < TOL_MEMBERSHIP)]


def is_partitioning(
    model: ProjectiveErrorModel, code: CodeSpace
) -> tuple[bool, int | None]:
    """Whether every element maps the code into itself or into its complement.

    Returns (flag, witness); the witness is the first element breaking the
    dichotomy.  When the flag holds, the detectable set is cross-checked
    against its closed form (complement of the logical group, plus the
    stabilizer).
    """
    p = code.projector()
    mats = model.rep.matrices
    mp = np.einsum("xab,bc->xac", mats, p)
    pmp = np.einsum("ab,xbc->xac", p, mp)
    inside = np.sqrt(np.sum(np.abs(mp - pmp) ** 2, axis=(1, 2)))
    outside = np.sqrt(np.sum(np.abs(pmp) ** 2, axis=(1, 2)))
    bad = np.flatnonzero((inside >= TOL_MEMBERSHIP) & (outside >= TOL_MEMBERSHIP))
    if bad.size:
        return False, int(bad[0])
    logical = set(logical_group(model, code).members)
    stab = set(stabilizer_group(model, code)[0].members)
    closed_form = (set(range(model.group.order)) - logical) | stab
    if set(detectable_set(model, code)) != closed_form:
        raise RuntimeError("partitioning code whose detectable set is not the closed form")
    return True, None


@dataclass(eq=False)
class CodeReport:
    """Everything classify computes about one code in one model."""

    model: ProjectiveErrorModel
    code: CodeSpace
    logical: Subgroup
    stabilizer: Subgroup
    stabilizer_phase: PhaseFunction
    detectable: list[int]
    flags: dict[str, bool]
    witnesses: dict[str, object] = field(default_factory=dict)
    central_type_criterion: dict[str, bool] | None = None

    def __post_init__(self) -> None:
        lset = set(self.logical.members)
        sset = set(self.stabilizer.members)
        if not sset <= lset:
            raise RuntimeError("stabilizer group not contained in logical group")
        if not sset <= set(self.detectable):
            raise RuntimeError("stabilizer group not contained in detectable set")

    def to_json(self) -> dict:
        out = {
            "model": self.model.label,
            "group_order": self.model.group.order,
            "ambient_dim": self.model.dim,
            "code": self.code.to_json(),
            "code_dim": self.code.dim,
            "logical": [int(x) for x in self.logical.members],
            "stabilizer": [int(x) for x in self.stabilizer.members],
            "stabilizer_phase": self.stabilizer_phase.to_json(),
            "detectable": sorted(int(x) for x in self.detectable),
            "flags": dict(self.flags),
            "witnesses": dict(self.witnesses),
        }
        if self.central_type_criterion is not None:
            out["central_type_criterion"] = dict(self.central_type_criterion)
        return out


def _restrict_phase(f: PhaseFunction, sub: Subgroup) -> PhaseFunction:
    positions = [f.domain.position(x) for x in sub.members]
    if f.is_exact:
        return PhaseFunction.exact(sub, [f.phases[i] for i in positions])
    return PhaseFunction(sub, tuple(f.phases[i] for i in positions), f.values[positions])


def _find_normal_reconstruction(
    model: ProjectiveErrorModel,
    code: CodeSpace,
    stab: Subgroup,
    f: PhaseFunction,
) -> Subgroup | None:
    """A normal-in-G subgroup of the stabilizer whose code equals the input."""
    cap = max_group_order()
    if len(stab) > cap:
        raise CodeError(f"stabilizer order {len(stab)} exceeds subgroup search cap {cap}")
    g = model.group
    sgroup = stab.as_group()
    candidates = sorted(sgroup.all_subgroups(), key=len, reverse=True)
    p = code.projector()
    for inner in candidates:
        members = [stab.members[i] for i in inner.members]
        sub = Subgroup(g, members)
        if not sub.is_normal():
            continue
        rebuilt = weak_stabilizer_code(model, sub, _restrict_phase(f, sub))
        if rebuilt is not None and frobenius(rebuilt.projector() - p) < TOL_SUBSPACE:
            return sub
    return None


def _clifford_flag(model: ProjectiveErrorModel, code: CodeSpace, logical: Subgroup) -> tuple[bool, object]:
    g = model.group
    dim_v, dim_w = model.dim, code.dim
    if (dim_w * g.order) % dim_v != 0 or len(logical) * dim_v != dim_w * g.order:
        return False, (
            f"|L| = {len(logical)} != (dim W / dim V)|G| = {dim_w * g.order / dim_v}"
        )
    if logical.index() * dim_w != dim_v:
        return False, "[G:L] * dim W != dim V"
    p = code.projector()
    b = code.basis
    mats = model.rep.matrices[list(logical.members)]
    off = np.einsum("xab,bc->xac", mats, p) - np.einsum("ab,xbc,cd->xad", p, mats, p)
    if np.sqrt(np.sum(np.abs(off) ** 2, axis=(1, 2))).max() > TOL_MEMBERSHIP:
        return False, "code not invariant under the logical group"
    small = np.einsum("ab,xbc,cd->xad", b.conj().T, mats, b)
    try:
        rho = make_rep(logical.as_group(), small)
    except Exception as exc:  # pragma: no cover - invariance should preclude this
        return False, f"restricted action is not a representation: {exc}"
    if not is_irreducible(rho):
        return False, "restricted action on the code is reducible"
    if rho.cocycle != model.cocycle.restrict(logical):
        return False, "restricted action has the wrong cocycle"
    if len(hom_space(rho, restrict(model.rep, logical))) != 1:
        return False, "restricted action does not have multiplicity one"
    return True, None


def classify(model: ProjectiveErrorModel, code: CodeSpace) -> CodeReport:
    """Compute the three group invariants and all classification flags."""
    logical = logical_group(model, code)
    stab, f = stabilizer_group(model, code)
    detect = detectable_set(model, code)
    witnesses: dict[str, object] = {}

    rebuilt = weak_stabilizer_code(model, stab, f)
    weak_dist = (
        frobenius(rebuilt.projector() - code.projector()) if rebuilt is not None else np.inf
    )
    is_weak = weak_dist < TOL_SUBSPACE
    if not is_weak:
        witnesses["is_weak_stabilizer"] = f"projector distance {weak_dist:.3e}"

    is_cliff, cliff_witness = _clifford_flag(model, code, logical)
    if not is_cliff:
        witnesses["is_clifford"] = cliff_witness

    central = model.is_central_type()
    criterion: dict[str, bool] | None = None
    if central and is_cliff:
        crit_weak = model.group.order == len(logical) * len(stab)
        if crit_weak != is_weak:
            raise RuntimeError(
                "central-type weak stabilizer criterion disagrees with the direct test"
            )
        is_stab = is_weak and stab.is_normal()
        criterion = {"is_weak_stabilizer": crit_weak, "is_stabilizer": is_stab}
        if not is_stab and is_weak:
            witnesses["is_stabilizer"] = "stabilizer group is not normal"
        elif not is_stab:
            witnesses["is_stabilizer"] = "not a weak stabilizer code"
    else:
        if is_weak:
            found = _find_normal_reconstruction(model, code, stab, f)
            is_stab = found is not None
            if not is_stab:
                witnesses["is_stabilizer"] = (
                    "no normal subgroup of the stabilizer rebuilds the code"
                )
        else:
            is_stab = False
            witnesses["is_stabilizer"] = "not a weak stabilizer code"

    is_part, part_witness = is_partitioning(model, code)
    if not is_part:
        witnesses["is_partitioning"] = part_witness

    return CodeReport(
        model=model,
        code=code,
        logical=logical,
        stabilizer=stab,
        stabilizer_phase=f,
        detectable=detect,
        flags={
            "is_stabilizer": is_stab,
            "is_weak_stabilizer": is_weak,
            "is_clifford": is_cliff,
            "is_partitioning": is_part,
        },
        witnesses=witnesses,
        central_type_criterion=criterion,
    )


def stabilizer_to_clifford(
    model: ProjectiveErrorModel, sub: Subgroup, f: PhaseFunction
) -> tuple[Subgroup, CodeSpace]:
    """Present a nonzero stabilizer code as a Clifford code over the inertia group."""
    code = stabilizer_code(model, sub, f)
    if code is None:
        raise CodeError("zero stabilizer code has no Clifford presentation")
    if not f.is_exact:
        raise CodeError("need exact phases to compute the inertia group")
    theta = rep_from_phase_function(f)
    logical = inertia_group(theta, sub, model.cocycle)
    b = code.basis
    mats = model.rep.matrices[list(logical.members)]
    small = np.einsum("ab,xbc,cd->xad", b.conj().T, mats, b)
    rho = make_rep(logical.as_group(), small)
    rebuilt = clifford_code(model, logical, rho)
    if frobenius(rebuilt.projector() - code.projector()) >= TOL_SUBSPACE:
        raise RuntimeError("Clifford presentation disagrees with the stabilizer code")
    return logical, rebuilt


def product_code(
    m1: ProjectiveErrorModel,
    w1: CodeSpace,
    m2: ProjectiveErrorModel,
    w2: CodeSpace,
) -> tuple[ProjectiveErrorModel, CodeSpace]:
    """Tensor model and tensor code, with the group formulas verified."""
    model = product_model(m1, m2)
    basis = np.kron(w1.basis, w2.basis)
    code = CodeSpace(m1.dim * m2.dim, basis)
    n2 = m2.group.order
    l1 = logical_group(m1, w1)
    l2 = logical_group(m2, w2)
    expected_l = {x * n2 + y for x in l1.members for y in l2.members}
    if set(logical_group(model, code).members) != expected_l:
        raise RuntimeError("product logical group is not the product of the factors")
    s1 = stabilizer_group(m1, w1)[0]
    s2 = stabilizer_group(m2, w2)[0]
    expected_s = {x * n2 + y for x in s1.members for y in s2.members}
    if set(stabilizer_group(model, code)[0].members) != expected_s:
        raise RuntimeError("product stabilizer group is not the product of the factors")
    return model, code
