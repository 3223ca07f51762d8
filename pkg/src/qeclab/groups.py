"""Finite groups as explicit multiplication tables.

Elements of a group of order n are the integers 0..n-1.  The whole module
works with dense numpy index tables, which keeps every construction exact
and makes subgroup/coset computations plain integer array manipulation.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "cyclic",
    "dihedral",
    "direct_product",
    "inversion_semidirect",
    "permutation_semidirect",
    "symmetric",
    "group_from_mul_table",
    "max_group_order",
]

# Orders above this are validated by sampled (seeded) associativity checks
# instead of the full n^3 scan.
_FULL_ASSOC_SCAN_LIMIT = 64

# Hard cap for permutation_semidirect and other combinatorial constructors.
_MAX_CONSTRUCTED_ORDER = 10**6


def max_group_order(default: int = 64) -> int:
    """Cap for exhaustive subgroup enumeration, overridable via QECLAB_MAX_ORDER."""
    value = os.environ.get("QECLAB_MAX_ORDER")
    if value is None:
        return default
    return int(value)


class GroupValidationError(ValueError):
    """Raised when a multiplication table fails the group axioms."""


@dataclass(eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    mul[x, y] is the product x*y.  identity and inv are derived data kept
    alongside the table so callers never rescan for them.
    """

    order: int
    mul: np.ndarray
    identity: int
    inv: np.ndarray
    label: str = "G"
    element_names: list[str] | None = None

    def __post_init__(self) -> None:
        self.mul = np.asarray(self.mul, dtype=np.int64)
        self.inv = np.asarray(self.inv, dtype=np.int64)
        if self.mul.shape != (self.order, self.order):
            raise GroupValidationError("multiplication table has wrong shape")
        if self.element_names is not None and len(self.element_names) != self.order:
            raise GroupValidationError("element_names length mismatch")
        self._validate()

    def _validate(self) -> None:
        n = self.order
        mul = self.mul
        if mul.min() < 0 or mul.max() >= n:
            raise GroupValidationError("table entries out of range")
        e = self.identity
        if not (np.array_equal(mul[e], np.arange(n)) and np.array_equal(mul[:, e], np.arange(n))):
            raise GroupValidationError("identity element does not act as identity")
        if not np.all(mul[np.arange(n), self.inv] == e) or not np.all(mul[self.inv, np.arange(n)] == e):
            raise GroupValidationError("inverse table is wrong")
        if n <= _FULL_ASSOC_SCAN_LIMIT:
            left = mul[mul]            # left[x, y, z] = (x*y)*z
            right = mul[:, mul]        # right[x, y, z] = x*(y*z)
            if not np.array_equal(left, right):
                raise GroupValidationError("multiplication table is not associative")
        else:
            rng = np.random.default_rng(0)
            xs, ys, zs = rng.integers(0, n, size=(3, 20000))
            if not np.array_equal(mul[mul[xs, ys], zs], mul[xs, mul[ys, zs]]):
                raise GroupValidationError("multiplication table is not associative")

    def name_of(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y, x]
            k += 1
        return k

    def exponent(self) -> int:
        result = 1
        for x in range(self.order):
            result = _lcm(result, self.element_order(x))
        return result

    def conjugate(self, x: int, y: int) -> int:
        """x * y * x^-1."""
        return self.mul[self.mul[x, y], self.inv[x]]

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, members) -> "Subgroup":
        return Subgroup(self, members)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [self.identity])

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def subgroup_generated(self, gens) -> "Subgroup":
        members = {self.identity}
        frontier = [self.identity]
        gens = sorted(set(int(g) for g in gens) | {self.identity})
        for g in gens:
            if g not in members:
                members.add(g)
                frontier.append(g)
        while frontier:
            x = frontier.pop()
            # every element is multiplied against everything present when it
            # is popped; later arrivals pick up the missing pairs on their turn
            for y in list(members):
                for z in (self.mul[x, y], self.mul[y, x]):
                    if z not in members:
                        members.add(z)
                        frontier.append(z)
        return Subgroup(self, members)

    def center(self) -> "Subgroup":
        commutes = self.mul == self.mul.T
        members = [x for x in range(self.order) if commutes[x].all()]
        return Subgroup(self, members)

    def all_subgroups(self, max_order: int | None = None) -> list["Subgroup"]:
        """Every subgroup, by breadth-first closure extension from the trivial one.

        Each subgroup is reached by adjoining one generator at a time, so the
        enumeration is complete.  Guarded by the order cap since subgroup
        counts grow quickly.
        """
        cap = max_order if max_order is not None else max_group_order()
        if self.order > cap:
            raise ValueError(
                f"subgroup enumeration capped at order {cap} (group has {self.order}); "
                "raise QECLAB_MAX_ORDER to override"
            )
        seen = {frozenset([self.identity])}
        frontier = [frozenset([self.identity])]
        while frontier:
            new_frontier = []
            for sub in frontier:
                outside = [x for x in range(self.order) if x not in sub]
                for x in outside:
                    closure = frozenset(self.subgroup_generated(sub | {x}).members)
                    if closure not in seen:
                        seen.add(closure)
                        new_frontier.append(closure)
            frontier = new_frontier
        subs = [Subgroup(self, s) for s in seen]
        subs.sort(key=lambda h: (len(h.members), h.members))
        return subs

    def quotient(self, normal: "Subgroup") -> tuple["FiniteGroup", np.ndarray]:
        """Quotient by a normal subgroup; also returns the projection map.

        Cosets are ordered by their minimal element index.  projection[x] is
        the index of the coset of x.
        """
        if normal.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        if not normal.is_normal():
            raise ValueError("quotient requires a normal subgroup")
        members = np.array(normal.members)
        coset_of: dict[int, int] = {}
        cosets: list[np.ndarray] = []
        for x in range(self.order):
            if x in coset_of:
                continue
            coset = np.unique(self.mul[x, members])
            for y in coset:
                coset_of[int(y)] = len(cosets)
            cosets.append(coset)
        order_keys = sorted(range(len(cosets)), key=lambda i: int(cosets[i].min()))
        relabel = {old: new for new, old in enumerate(order_keys)}
        projection = np.array([relabel[coset_of[x]] for x in range(self.order)], dtype=np.int64)
        reps = [int(cosets[old].min()) for old in order_keys]
        q = len(reps)
        mul = np.zeros((q, q), dtype=np.int64)
        for i, r in enumerate(reps):
            mul[i] = projection[self.mul[r, reps]]
        identity = int(projection[self.identity])
        inv = np.array([int(np.where(mul[i] == identity)[0][0]) for i in range(q)])
        names = [f"[{self.name_of(r)}]" for r in reps]
        group = FiniteGroup(q, mul, identity, inv, label=f"{self.label}/N", element_names=names)
        return group, projection

    def coset_representatives(self, sub: "Subgroup") -> list[int]:
        """One representative per left coset xH, the identity representing H.

        The identity coset comes first; the rest are ordered by their minimal
        element index, which is also the chosen representative.
        """
        if sub.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        members = np.array(sub.members)
        seen = set()
        reps = []
        for x in range(self.order):
            if x in seen:
                continue
            coset = np.unique(self.mul[x, members])
            seen.update(int(y) for y in coset)
            if self.identity in coset:
                reps.insert(0, (self.identity, int(coset.min())))
            else:
                reps.append((int(coset.min()), int(coset.min())))
        reps = [reps[0]] + sorted(reps[1:], key=lambda t: t[1])
        return [r for r, _ in reps]


class Subgroup:
    """A subgroup of a FiniteGroup, stored as a sorted member list."""

    def __init__(self, parent: FiniteGroup, members):
        self.parent = parent
        self.members: tuple[int, ...] = tuple(sorted(set(int(m) for m in members)))
        self._position = {m: i for i, m in enumerate(self.members)}
        self._as_group: FiniteGroup | None = None
        if parent.identity not in self._position:
            raise GroupValidationError("subgroup must contain the identity")
        mem = np.array(self.members)
        products = parent.mul[np.ix_(mem, mem)]
        if not np.all(np.isin(products, mem)):
            raise GroupValidationError("member set is not closed under multiplication")
        if not np.all(np.isin(parent.inv[mem], mem)):
            raise GroupValidationError("member set is not closed under inversion")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return int(x) in self._position

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={len(self.members)}, members={list(self.members)})"

    def position(self, parent_index: int) -> int:
        """Index of a parent element inside this subgroup's own numbering."""
        return self._position[int(parent_index)]

    def index(self) -> int:
        return self.parent.order // len(self.members)

    def is_normal(self) -> bool:
        g = self.parent
        mem = set(self.members)
        for x in range(g.order):
            for h in self.members:
                if g.conjugate(x, h) not in mem:
                    return False
        return True

    def is_abelian(self) -> bool:
        g = self.parent
        return all(
            g.mul[a, b] == g.mul[b, a]
            for a, b in itertools.combinations(self.members, 2)
        )

    def as_group(self) -> FiniteGroup:
        """The subgroup relabeled as a standalone group on 0..|H|-1.

        Element i of the result is self.members[i]; the member order is
        preserved so phase tables restricted through this map stay aligned.
        """
        if self._as_group is None:
            mem = np.array(self.members)
            n = len(mem)
            lookup = np.full(self.parent.order, -1, dtype=np.int64)
            lookup[mem] = np.arange(n)
            mul = lookup[self.parent.mul[np.ix_(mem, mem)]]
            identity = int(lookup[self.parent.identity])
            inv = lookup[self.parent.inv[mem]]
            names = [self.parent.name_of(m) for m in self.members]
            self._as_group = FiniteGroup(
                n, mul, identity, inv,
                label=f"{self.parent.label}>sub{n}", element_names=names,
            )
        return self._as_group


# -- constructors ------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n >= 1, element k standing for g^k."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    inv = (-idx) % n
    names = ["1"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return FiniteGroup(n, mul, 0, inv, label=f"C{n}", element_names=names)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (n >= 2): b^k a^l with a^n = b^2 = 1, bab = a^-1.

    Element index is k*n + l for k in {0,1}, l in 0..n-1.
    """
    if n < 2:
        raise ValueError("dihedral group needs n >= 2")
    mul = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for k1, l1, k2, l2 in itertools.product(range(2), range(n), range(2), range(n)):
        k = (k1 + k2) % 2
        sign = -1 if k2 else 1
        l = (sign * l1 + l2) % n
        mul[k1 * n + l1, k2 * n + l2] = k * n + l
    identity = 0
    inv = np.array([int(np.where(mul[x] == identity)[0][0]) for x in range(2 * n)])
    names = []
    for k in range(2):
        for l in range(n):
            a_part = "" if l == 0 else ("a" if l == 1 else f"a^{l}")
            if k == 0:
                names.append(a_part or "1")
            else:
                names.append(("b " + a_part).strip())
    return FiniteGroup(2 * n, mul, identity, inv, label=f"D{n}", element_names=names)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product; element (x, y) has index x*|G2| + y."""
    n1, n2 = g1.order, g2.order
    x1, y1 = np.divmod(np.arange(n1 * n2), n2)
    mul = g1.mul[np.ix_(x1, x1)] * n2 + g2.mul[np.ix_(y1, y1)]
    identity = g1.identity * n2 + g2.identity
    inv = g1.inv[x1] * n2 + g2.inv[y1]
    names = [f"({g1.name_of(x)}|{g2.name_of(y)})" for x, y in zip(x1, y1)]
    return FiniteGroup(
        n1 * n2, mul, int(identity), inv,
        label=f"{g1.label}x{g2.label}", element_names=names,
    )


def inversion_semidirect(n: int) -> FiniteGroup:
    """(Z_n x Z_n) : Z_2 with the flip inverting both coordinates, n odd >= 3.

    Element (a, b, c) has index (a*n + b)*2 + c; the c = 1 flip sends
    (a, b) to (-a, -b).
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("inversion semidirect product needs odd n >= 3")
    order = 2 * n * n
    mul = np.zeros((order, order), dtype=np.int64)
    def pack(a, b, c):
        return (a * n + b) * 2 + c
    for a1, b1, c1 in itertools.product(range(n), range(n), range(2)):
        for a2, b2, c2 in itertools.product(range(n), range(n), range(2)):
            sign = -1 if c1 else 1
            a = (a1 + sign * a2) % n
            b = (b1 + sign * b2) % n
            mul[pack(a1, b1, c1), pack(a2, b2, c2)] = pack(a, b, (c1 + c2) % 2)
    identity = 0
    inv = np.array([int(np.where(mul[x] == identity)[0][0]) for x in range(order)])
    names = [f"({x // (2 * n)},{(x // 2) % n},{x % 2})" for x in range(order)]
    return FiniteGroup(order, mul, identity, inv, label=f"(C{n}xC{n}):C2", element_names=names)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n <= 6 letters; elements are permutations in
    lexicographic one-line order, product s*t meaning "apply t, then s"."""
    if not 1 <= n <= 6:
        raise ValueError("symmetric group supported for 1 <= n <= 6")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    mul = np.zeros((order, order), dtype=np.int64)
    for i, s in enumerate(perms):
        for j, t in enumerate(perms):
            mul[i, j] = index[tuple(s[t[k]] for k in range(n))]
    identity = index[tuple(range(n))]
    inv = np.array([int(np.where(mul[x] == identity)[0][0]) for x in range(order)])
    names = ["".join(str(v + 1) for v in p) for p in perms]
    return FiniteGroup(order, mul, identity, inv, label=f"S{n}", element_names=names)


def permutation_semidirect(base: FiniteGroup, n: int) -> FiniteGroup:
    """Wreath-type product base^n : S_n, S_n permuting the n coordinates.

    Element ((x_1..x_n), t) has index (sum_i x_i * |B|^(n-i)) * n! + t_idx.
    Group law: ((x), s) * ((y), t) = ((x_j * y_{s^-1(j)})_j, s*t).
    """
    sym = symmetric(n)
    b = base.order
    order = b**n * sym.order
    if order > _MAX_CONSTRUCTED_ORDER:
        raise ValueError(f"constructed order {order} exceeds cap {_MAX_CONSTRUCTED_ORDER}")
    perms = list(itertools.permutations(range(n)))
    tuples = list(itertools.product(range(b), repeat=n))
    tuple_index = {t: i for i, t in enumerate(tuples)}

    def pack(vec_idx: int, perm_idx: int) -> int:
        return vec_idx * sym.order + perm_idx

    mul = np.zeros((order, order), dtype=np.int64)
    for vi, xs in enumerate(tuples):
        for si, s in enumerate(perms):
            s_inv_positions = [0] * n
            for j in range(n):
                s_inv_positions[s[j]] = j
            row = pack(vi, si)
            for wi, ys in enumerate(tuples):
                permuted = tuple(ys[s_inv_positions[j]] for j in range(n))
                prod_vec = tuple(int(base.mul[xs[j], permuted[j]]) for j in range(n))
                pv = tuple_index[prod_vec]
                for ti in range(sym.order):
                    mul[row, pack(wi, ti)] = pack(pv, sym.mul[si, ti])
    identity = pack(tuple_index[tuple([base.identity] * n)], sym.identity)
    inv = np.zeros(order, dtype=np.int64)
    for x in range(order):
        inv[x] = int(np.where(mul[x] == identity)[0][0])
    names = [
        f"({','.join(base.name_of(v) for v in tuples[x // sym.order])};{sym.name_of(x % sym.order)})"
        for x in range(order)
    ]
    return FiniteGroup(
        order, mul, identity, inv,
        label=f"{base.label}^{n}:S{n}", element_names=names,
    )


def group_from_mul_table(mul, label: str = "G", element_names: list[str] | None = None) -> FiniteGroup:
    """Build a group from a bare table, locating identity and inverses."""
    mul = np.asarray(mul, dtype=np.int64)
    n = mul.shape[0]
    idx = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx):
            identity = e
            break
    if identity is None:
        raise GroupValidationError("table has no identity element")
    inv = np.zeros(n, dtype=np.int64)
    for x in range(n):
        hits = np.where(mul[x] == identity)[0]
        if len(hits) != 1 or mul[hits[0], x] != identity:
            raise GroupValidationError("table has no two-sided inverse for some element")
        inv[x] = hits[0]
    return FiniteGroup(n, mul, identity, inv, label=label, element_names=element_names)


def _lcm(a: int, b: int) -> int:
    import math

    return a * b // math.gcd(a, b)
