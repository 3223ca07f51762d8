import pytest

from qeclab.codes import clifford_code, code_dimension_formula, weak_stabilizer_code
from qeclab.models import (
    family_c2_x_d2n,
    gen_pauli_model,
    product_model,
)
from qeclab.search import SearchError, enumerate_weak_stabilizer_codes, q3_probe


def test_enumerate_qubit_pauli_count():
    # by hand: six eigenlines (three mutually unbiased bases of two lines
    # each, from <Z>, <X>, <XZ>) plus the whole space from the trivial
    # subgroup; the full group admits no phase function at all
    model = gen_pauli_model(2)
    found = enumerate_weak_stabilizer_codes(model)
    assert len(found) == 7
    dims = sorted(code.dim for _, _, code in found)
    assert dims == [1, 1, 1, 1, 1, 1, 2]


def test_enumerate_qutrit_pauli_count():
    # four mutually unbiased bases of three lines each, plus the full space
    model = gen_pauli_model(3)
    found = enumerate_weak_stabilizer_codes(model)
    assert len(found) == 13
    dims = sorted(code.dim for _, _, code in found)
    assert dims == [1] * 12 + [3]


def test_enumerate_emits_reconstructible_codes():
    model = gen_pauli_model(3)
    for sub, f, code in enumerate_weak_stabilizer_codes(model):
        rebuilt = weak_stabilizer_code(model, sub, f)
        assert rebuilt is not None
        assert rebuilt.equals(code)
        assert code.dim == code_dimension_formula(model, sub, f)


def test_enumerate_deduplicates_projectors():
    model = gen_pauli_model(2)
    found = enumerate_weak_stabilizer_codes(model)
    for i in range(len(found)):
        for j in range(i + 1, len(found)):
            assert not found[i][2].equals(found[j][2])


def test_enumerate_cap_errors_not_truncates():
    model = gen_pauli_model(3)
    with pytest.raises(SearchError):
        enumerate_weak_stabilizer_codes(model, max_dim=2)
    with pytest.raises(SearchError):
        enumerate_weak_stabilizer_codes(model, max_order=4)


def test_q3_probe_rejects_non_central_type():
    from qeclab.models import dihedral_xp_model

    with pytest.raises(SearchError):
        q3_probe(dihedral_xp_model(4))


def test_q3_probe_two_qubit_pauli_empty():
    model = product_model(gen_pauli_model(2), gen_pauli_model(2))
    hits = q3_probe(model)
    assert hits == []


def test_q3_probe_family_code_is_candidate_not_hit():
    model, sub, rho = family_c2_x_d2n(2)
    named = clifford_code(model, sub, rho)
    hits, candidates = q3_probe(model, return_candidates=True)
    assert any(r.code.equals(named) for r in candidates)
    assert not any(r.code.equals(named) for r in hits)


def test_q3_probe_hits_are_degenerate_lines():
    # every literal hit in this model is a one-dimensional code whose
    # stabilizer equals its logical group; the order criterion is satisfied
    # and the stabilizer is genuinely non-normal
    model, _, _ = family_c2_x_d2n(2)
    hits = q3_probe(model)
    assert len(hits) > 0
    for r in hits:
        assert r.code.dim == 1
        assert not r.stabilizer.is_normal()
        assert model.group.order == len(r.logical) * len(r.stabilizer)
        assert r.flags["is_weak_stabilizer"]
        assert r.flags["is_clifford"]


def test_q3_hit_reconstructs_from_its_stabilizer():
    model, _, _ = family_c2_x_d2n(2)
    hits = q3_probe(model)
    r = hits[0]
    rebuilt = weak_stabilizer_code(model, r.stabilizer, r.stabilizer_phase)
    assert rebuilt is not None
    assert rebuilt.equals(r.code)
