import pytest

from qeclab.groups import (
    GroupValidationError,
    cyclic,
    dihedral,
    direct_product,
    group_from_mul_table,
    inversion_semidirect,
    permutation_semidirect,
    symmetric,
)


def test_cyclic_basics():
    g = cyclic(6)
    assert g.order == 6
    assert g.identity == 0
    assert g.is_abelian()
    assert g.element_order(1) == 6
    assert g.element_order(2) == 3
    assert g.exponent() == 6
    for a in range(6):
        for b in range(6):
            assert g.mul[a, b] == (a + b) % 6


def test_dihedral_structure():
    g = dihedral(4)
    assert g.order == 8
    assert not g.is_abelian()
    # index k*n + l encodes b^k a^l with a^n = b^2 = 1, b a b = a^{-1}
    a, b = 1, 4
    assert g.element_order(a) == 4
    assert g.element_order(b) == 2
    aba = g.mul[b, g.mul[a, b]]
    assert aba == g.inv[a]
    assert g.center().members == (0, 2)


def test_dihedral_all_reflections_order_two():
    g = dihedral(5)
    for l in range(5):
        assert g.element_order(5 + l) == 2


def test_symmetric_group():
    g = symmetric(3)
    assert g.order == 6
    assert not g.is_abelian()
    assert sorted(g.element_order(x) for x in range(6)) == [1, 2, 2, 2, 3, 3]
    assert symmetric(4).order == 24


def test_direct_product_indexing():
    g1, g2 = cyclic(2), cyclic(3)
    g = direct_product(g1, g2)
    assert g.order == 6
    assert g.is_abelian()
    for x1 in range(2):
        for y1 in range(3):
            for x2 in range(2):
                for y2 in range(3):
                    lhs = g.mul[x1 * 3 + y1, x2 * 3 + y2]
                    rhs = ((x1 + x2) % 2) * 3 + (y1 + y2) % 3
                    assert lhs == rhs


def test_inversion_semidirect():
    g = inversion_semidirect(3)
    # Z3 x Z3 flipped by an order-2 inversion: nonabelian of order 18
    assert g.order == 18
    assert not g.is_abelian()
    flip = 1  # (0, 0, 1)
    assert g.element_order(flip) == 2
    a = (1 * 3 + 0) * 2 + 0  # (1, 0, 0)
    assert g.element_order(a) == 3
    # conjugation by the flip inverts the translation part
    assert g.conjugate(flip, a) == g.inv[a]


def test_inversion_semidirect_rejects_even():
    with pytest.raises(ValueError):
        inversion_semidirect(4)


def test_permutation_semidirect_order():
    base = cyclic(2)
    g = permutation_semidirect(base, 3)
    assert g.order == 2 ** 3 * 6
    # the vector part with identity permutation is an abelian subgroup
    vec = g.subgroup([k * 6 for k in range(8)])
    assert len(vec) == 8
    assert vec.is_abelian()
    # pure permutations form a copy of S3
    perms = g.subgroup(range(6))
    assert perms.as_group().order == 6
    assert not perms.is_abelian()


def test_group_from_mul_table_validation():
    ok = group_from_mul_table([[0, 1], [1, 0]])
    assert ok.order == 2
    with pytest.raises(GroupValidationError):
        group_from_mul_table([[0, 1], [0, 1]])  # not a latin square
    with pytest.raises(GroupValidationError):
        # latin square but not associative (order-5 quasigroup)
        group_from_mul_table(
            [
                [0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 4, 0, 1, 3],
                [3, 2, 4, 0, 1],
                [4, 3, 1, 2, 0],
            ]
        )


def test_subgroup_generated_and_membership():
    g = dihedral(6)
    rot = g.subgroup_generated([1])
    assert len(rot) == 6
    assert rot.is_normal()
    refl = g.subgroup_generated([6])
    assert len(refl) == 2
    assert not refl.is_normal()
    assert 1 in rot and 6 not in rot


def test_subgroup_as_group_relabels():
    g = dihedral(4)
    sub = g.subgroup_generated([2, 4])  # {1, a^2, b, a^2 b}: Klein four
    h = sub.as_group()
    assert h.order == 4
    assert h.is_abelian()
    assert all(h.element_order(x) in (1, 2) for x in range(4))
    # member order is preserved by the relabeling
    for i, m in enumerate(sub.members):
        assert sub.position(m) == i


def test_all_subgroups_klein_four():
    g = direct_product(cyclic(2), cyclic(2))
    subs = g.all_subgroups()
    # 1 trivial + 3 order-2 + the whole group
    assert len(subs) == 5
    sizes = sorted(len(s) for s in subs)
    assert sizes == [1, 2, 2, 2, 4]


def test_all_subgroups_d4_count():
    # the order-8 dihedral group has exactly 10 subgroups
    assert len(dihedral(4).all_subgroups()) == 10


def test_quotient_of_dihedral_by_rotations():
    g = dihedral(6)
    rot = g.subgroup_generated([1])
    q, proj = g.quotient(rot)
    assert q.order == 2
    assert proj.shape == (12,)
    assert proj[0] == 0
    for x in range(12):
        for y in range(12):
            assert q.mul[proj[x], proj[y]] == proj[g.mul[x, y]]


def test_quotient_requires_normal():
    g = dihedral(4)
    refl = g.subgroup_generated([4])
    assert not refl.is_normal()
    with pytest.raises(ValueError):
        g.quotient(refl)


def test_coset_representatives():
    g = dihedral(4)
    sub = g.subgroup_generated([1])
    reps = g.coset_representatives(sub)
    assert len(reps) == 2
    assert reps[0] in sub  # identity coset first
    seen = set()
    for r in reps:
        seen |= {g.mul[r, h] for h in sub.members}
    assert seen == set(range(8))


def test_center_of_quaternion_like():
    g = dihedral(4)
    z = g.center()
    assert len(z) == 2
    assert z.is_normal()


def test_element_names_compose():
    g = dihedral(3)
    assert g.name_of(0) == "1"
    names = {g.name_of(x) for x in range(6)}
    assert len(names) == 6
