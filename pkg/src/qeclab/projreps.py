"""Projective representations of finite groups as explicit matrix tables.

A projective representation keeps one unitary per group element together
with its exactly-snapped cocycle, so pi(x)pi(y) = sigma(x,y) pi(xy) holds
to 1e-9 with sigma a table of exact rational phases.  Restriction,
induction, tensor products, conjugates, and inertia groups all stay at the
level of concrete matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._linalg import nullspace
from .cocycles import Cocycle, Phase, PhaseFunction, PhaseSnapError, coboundary, snap_phase
from .groups import FiniteGroup, Subgroup

__all__ = [
    "ProjectiveRep",
    "Character",
    "MakeRepError",
    "make_rep",
    "rep_from_phase_function",
    "character",
    "inner_product",
    "is_irreducible",
    "is_projectively_faithful",
    "hom_space",
    "restrict",
    "tensor",
    "induce",
    "conjugate_rep",
    "inertia_group",
    "frobenius_dims",
    "mackey_character_defect",
]

TOL_STRUCTURE = 1e-9
TOL_DERIVED = 1e-7


class MakeRepError(ValueError):
    """Raised when matrices fail the projective representation contract."""


class ProjectiveRep:
    """Unitary matrices indexed by group elements with a cached cocycle."""

    def __init__(
        self,
        group: FiniteGroup,
        matrices: np.ndarray,
        cocycle: Cocycle,
        label: str = "pi",
        validate: bool = True,
    ):
        self.group = group
        self.matrices = np.asarray(matrices, dtype=complex)
        self.cocycle = cocycle
        self.label = label
        if self.matrices.shape[0] != group.order or self.matrices.shape[1] != self.matrices.shape[2]:
            raise MakeRepError("need one square matrix per group element")
        self.dim = self.matrices.shape[1]
        if validate:
            self._validate()

    def _validate(self) -> None:
        m = self.matrices
        eye = np.eye(self.dim)
        gram = np.einsum("nab,ncb->nac", m, m.conj())
        worst = np.abs(gram - eye).max()
        if np.linalg.norm(gram - eye, axis=(1, 2)).max() >= TOL_STRUCTURE:
            raise MakeRepError(f"matrices are not unitary (deviation {worst:.2e})")
        if not self.cocycle.verify():
            raise MakeRepError("cached cocycle violates the cocycle identity")
        phases = self.cocycle.to_complex_table()
        mul = self.group.mul
        for x in range(self.group.order):
            products = np.einsum("ab,ybc->yac", m[x], m)
            expected = phases[x][:, None, None] * m[mul[x]]
            dev = np.linalg.norm(products - expected, axis=(1, 2)).max()
            if dev >= TOL_STRUCTURE:
                raise MakeRepError(
                    f"pi(x)pi(y) != sigma(x,y) pi(xy) at x={x} (deviation {dev:.2e})"
                )

    def matrix(self, x: int) -> np.ndarray:
        return self.matrices[x]

    def character(self) -> "Character":
        values = np.einsum("naa->n", self.matrices)
        return Character(self.group, values, self.cocycle)

    def restrict(self, sub: Subgroup) -> "ProjectiveRep":
        mem = np.array(sub.members)
        return ProjectiveRep(
            sub.as_group(),
            self.matrices[mem],
            self.cocycle.restrict(sub),
            label=f"{self.label}|H",
            validate=False,
        )

    def twist(self, f: PhaseFunction) -> "ProjectiveRep":
        """Multiply by a phase function on the whole group; the cocycle picks up df."""
        if len(f.domain) != self.group.order:
            raise ValueError("twist needs a phase function on the whole group")
        if not f.is_exact:
            raise ValueError("twist needs exact phases")
        delta = coboundary(f)
        return ProjectiveRep(
            self.group,
            f.values[:, None, None] * self.matrices,
            self.cocycle.multiply(Cocycle(self.group, delta.num, delta.den)),
            label=f"{self.label}*f",
            validate=False,
        )

    def to_json(self) -> dict:
        mats = [
            [[[float(v.real), float(v.imag)] for v in row] for row in m]
            for m in self.matrices
        ]
        return {"order": self.group.order, "dim": self.dim, "matrices": mats}

    @classmethod
    def from_json(cls, group: FiniteGroup, data: dict) -> "ProjectiveRep":
        mats = np.array(
            [[[complex(v[0], v[1]) for v in row] for row in m] for m in data["matrices"]]
        )
        return make_rep(group, mats)

    def __repr__(self) -> str:
        return f"ProjectiveRep({self.label}, order={self.group.order}, dim={self.dim})"


@dataclass
class Character:
    group: FiniteGroup
    values: np.ndarray
    cocycle: Cocycle

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=complex)
        at_identity = self.values[self.group.identity]
        nearest = round(at_identity.real)
        if abs(at_identity - nearest) > TOL_STRUCTURE or nearest < 1:
            raise ValueError("character value at the identity must be the dimension")


def make_rep(group: FiniteGroup, matrices, label: str = "pi") -> ProjectiveRep:
    """Build a rep from raw matrices, extracting the cocycle exactly.

    The scalar tr(pi(x) pi(y) pi(xy)^-1)/dim is snapped to a rational phase
    with denominator at most 4|G|; failure to snap means the matrices do not
    form a projective representation.
    """
    matrices = np.asarray(matrices, dtype=complex)
    n = group.order
    if matrices.shape[0] != n:
        raise MakeRepError("need one matrix per group element")
    dim = matrices.shape[1]
    mul = group.mul
    max_den = 4 * n
    raw = np.zeros((n, n), dtype=complex)
    for x in range(n):
        raw[x] = np.einsum("ab,ybc,yac->y", matrices[x], matrices, matrices[mul[x]].conj()) / dim
    phases: list[list[Phase]] = []
    for x in range(n):
        row = []
        for y in range(n):
            try:
                row.append(snap_phase(raw[x, y], max_den, TOL_STRUCTURE))
            except PhaseSnapError as exc:
                raise MakeRepError(
                    f"scalar snap failed at ({x},{y}): matrices do not form a projective rep ({exc})"
                ) from exc
        phases.append(row)
    cocycle = Cocycle.from_phases(group, phases)
    return ProjectiveRep(group, matrices, cocycle, label=label, validate=True)


def rep_from_phase_function(f: PhaseFunction) -> ProjectiveRep:
    """A phase function on H as a 1-dimensional rep of H with cocycle df."""
    if not f.is_exact:
        raise ValueError("need exact phases to form the 1-dimensional rep")
    group = f.domain.as_group()
    delta = coboundary(f)
    return ProjectiveRep(
        group, f.values[:, None, None].copy(), delta, label="f", validate=False
    )


def character(rep: ProjectiveRep) -> Character:
    return rep.character()


def inner_product(c1: Character, c2: Character) -> complex:
    """(1/|G|) sum chi1(x) conj(chi2(x)); counts intertwiners for same-cocycle reps."""
    if c1.group.order != c2.group.order:
        raise ValueError("characters on groups of different order")
    if c1.cocycle != c2.cocycle:
        raise ValueError("characters carry different cocycles")
    return complex(np.mean(c1.values * np.conj(c2.values)))


def is_irreducible(rep: ProjectiveRep) -> bool:
    chi = rep.character()
    return abs(inner_product(chi, chi) - 1) <= TOL_DERIVED


def is_projectively_faithful(rep: ProjectiveRep) -> bool:
    m = rep.matrices
    traces = np.einsum("naa->n", m) / rep.dim
    scalar_dev = np.linalg.norm(
        m - traces[:, None, None] * np.eye(rep.dim), axis=(1, 2)
    )
    scalars = np.where(scalar_dev < TOL_STRUCTURE)[0]
    return list(scalars) == [rep.group.identity]


def hom_space(r1: ProjectiveRep, r2: ProjectiveRep, rtol: float = 1e-8) -> list[np.ndarray]:
    """Orthonormal basis of {T : r2(x) T = T r1(x) for all x}."""
    if r1.group.order != r2.group.order:
        raise ValueError("reps on groups of different order")
    if r1.cocycle != r2.cocycle:
        raise ValueError("cocycle mismatch")
    n = r1.group.order
    d1, d2 = r1.dim, r2.dim
    eye1, eye2 = np.eye(d1), np.eye(d2)
    blocks = np.zeros((n, d2 * d1, d2 * d1), dtype=complex)
    for x in range(n):
        blocks[x] = np.kron(r2.matrices[x], eye1) - np.kron(eye2, r1.matrices[x].T)
    ns = nullspace(blocks.reshape(n * d2 * d1, d2 * d1), rtol)
    basis = [ns[:, k].reshape(d2, d1) for k in range(ns.shape[1])]
    expected = inner_product(r1.character(), r2.character()).real
    if abs(len(basis) - expected) > TOL_DERIVED * max(1.0, expected):
        raise RuntimeError(
            f"hom space dimension {len(basis)} disagrees with character count {expected:.6f}"
        )
    return basis


def restrict(rep: ProjectiveRep, sub: Subgroup) -> ProjectiveRep:
    return rep.restrict(sub)


def tensor(r1: ProjectiveRep, r2: ProjectiveRep) -> ProjectiveRep:
    """Outer tensor product on the direct product group."""
    from .groups import direct_product

    g = direct_product(r1.group, r2.group)
    n1, n2 = r1.group.order, r2.group.order
    d1, d2 = r1.dim, r2.dim
    mats = np.einsum("xab,ycd->xyacbd", r1.matrices, r2.matrices)
    mats = mats.reshape(n1 * n2, d1 * d2, d1 * d2)
    den1, den2 = r1.cocycle.den, r2.cocycle.den
    den = den1 * den2 // math.gcd(den1, den2)
    num = (
        np.add.outer(r1.cocycle.num * (den // den1), r2.cocycle.num * (den // den2))
        .transpose(0, 2, 1, 3)
        .reshape(n1 * n2, n1 * n2)
    ) % den
    return ProjectiveRep(
        g, mats, Cocycle(g, num, den), label=f"{r1.label}(x){r2.label}", validate=False
    )


def induce(theta: ProjectiveRep, sub: Subgroup, sigma: Cocycle) -> ProjectiveRep:
    """Induced representation on sub.parent along the cocycle sigma.

    Basis vectors are r (x) e_i over coset representatives r (identity coset
    first); for x*s = r'*h the action is
    x.(s (x) v) = sigma(x,s) conj(sigma(r',h)) (r' (x) theta(h) v).
    """
    g = sub.parent
    if sigma.group.order != g.order:
        raise ValueError("cocycle lives on a different group")
    if sigma.restrict(sub) != theta.cocycle:
        raise ValueError("theta's cocycle is not the restriction of sigma")
    reps = g.coset_representatives(sub)
    rep_pos = np.full(g.order, -1, dtype=np.int64)
    h_pos = np.full(g.order, -1, dtype=np.int64)
    for ri, r in enumerate(reps):
        for h in sub.members:
            y = int(g.mul[r, h])
            rep_pos[y] = ri
            h_pos[y] = sub.position(h)
    q, dt = len(reps), theta.dim
    dim = q * dt
    mats = np.zeros((g.order, dim, dim), dtype=complex)
    for x in range(g.order):
        for si, s in enumerate(reps):
            y = int(g.mul[x, s])
            ri = int(rep_pos[y])
            hi = int(h_pos[y])
            h_parent = sub.members[hi]
            scale = (sigma.phase(x, s) * sigma.phase(reps[ri], h_parent).inverse()).to_complex()
            mats[x, ri * dt : (ri + 1) * dt, si * dt : (si + 1) * dt] = scale * theta.matrices[hi]
    result = make_rep(g, mats, label=f"Ind({theta.label})")
    if result.cocycle != sigma:
        raise RuntimeError("induced representation's cocycle does not match sigma")
    return result


def conjugate_rep(theta: ProjectiveRep, sub: Subgroup, x: int, sigma: Cocycle) -> ProjectiveRep:
    """theta^x(y) = sigma(x^-1,y) conj(sigma(x^-1 y x, x^-1)) theta(x^-1 y x)."""
    g = sub.parent
    xi = int(g.inv[x])
    mats = np.zeros_like(theta.matrices)
    for i, y in enumerate(sub.members):
        z = int(g.mul[g.mul[xi, y], x])
        if z not in sub:
            raise ValueError("subgroup is not stable under conjugation by x")
        scale = (sigma.phase(xi, y) * sigma.phase(z, xi).inverse()).to_complex()
        mats[i] = scale * theta.matrices[sub.position(z)]
    return ProjectiveRep(
        sub.as_group(), mats, theta.cocycle, label=f"{theta.label}^x", validate=False
    )


def _conjugate_character_values(
    chi: np.ndarray, sub: Subgroup, x: int, sigma_complex: np.ndarray
) -> np.ndarray:
    """Character of theta^x computed directly from the character of theta."""
    g = sub.parent
    xi = int(g.inv[x])
    out = np.zeros(len(sub.members), dtype=complex)
    for i, y in enumerate(sub.members):
        z = int(g.mul[g.mul[xi, y], x])
        out[i] = sigma_complex[xi, y] * np.conj(sigma_complex[z, xi]) * chi[sub.position(z)]
    return out


def inertia_group(theta: ProjectiveRep, sub: Subgroup, sigma: Cocycle) -> Subgroup:
    """I_G(theta) = {x normalizing H : theta^x isomorphic to theta}.

    Isomorphism is decided by character equality, valid because conjugates
    keep the same cocycle.
    """
    g = sub.parent
    chi = theta.character().values
    sigma_complex = sigma.to_complex_table()
    mem = set(sub.members)
    members = []
    for x in range(g.order):
        if any(g.conjugate(g.inv[x], y) not in mem for y in sub.members):
            continue
        values = _conjugate_character_values(chi, sub, x, sigma_complex)
        if np.abs(values - chi).max() <= TOL_DERIVED:
            members.append(x)
    return Subgroup(g, members)


def frobenius_dims(theta: ProjectiveRep, sub: Subgroup, pi: ProjectiveRep) -> tuple[int, int]:
    """Both sides of Frobenius reciprocity as intertwiner-space dimensions."""
    ind = induce(theta, sub, pi.cocycle)
    lhs = len(hom_space(ind, pi))
    rhs = len(hom_space(theta, pi.restrict(sub)))
    return lhs, rhs


def mackey_character_defect(f: PhaseFunction, pi: ProjectiveRep) -> float:
    """Deviation in the Mackey identity for a 1-dim f on a normal subgroup.

    With l = dim Hom(f, Res pi) > 0, the character of Res_N pi must equal
    l * sum over coset representatives r of I_G(f) of the character of f^r.
    """
    sub = f.domain
    if not sub.is_normal():
        raise ValueError("Mackey check needs a normal subgroup")
    theta = rep_from_phase_function(f)
    res = pi.restrict(sub)
    if theta.cocycle != res.cocycle:
        raise ValueError("df is not the restricted cocycle")
    ell = len(hom_space(theta, res))
    if ell == 0:
        raise ValueError("f does not occur in the restriction")
    inertia = inertia_group(theta, sub, pi.cocycle)
    reps = sub.parent.coset_representatives(inertia)
    sigma_complex = pi.cocycle.to_complex_table()
    chi = theta.character().values
    total = np.zeros(len(sub.members), dtype=complex)
    for r in reps:
        total += _conjugate_character_values(chi, sub, r, sigma_complex)
    lhs = res.character().values
    return float(np.abs(lhs - ell * total).max())
