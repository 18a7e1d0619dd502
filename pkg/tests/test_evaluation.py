import json
from pathlib import Path

import numpy as np
import pytest

from pragmaql import (
    Atom,
    JustificationValue,
    K,
    Model,
    N,
    NonQuantumFormulaError,
    Overlay,
    Projector,
    TruthValue3,
    UnknownNameError,
    born_probability,
    load_model,
    check_cc,
    classify_property,
    desugar,
    join,
    justify,
    leq,
    load_overlay,
    meet,
    ortho,
    parse_assertive,
    pragmatic_extension,
    precedes,
    projectors_close,
    random_state,
    sigma,
    state_projector,
    validate_overlay,
)

from helpers import random_quantum

FIXTURES = Path(__file__).parent / "fixtures"

J, U = JustificationValue.J, JustificationValue.U
TRUE, FALSE, UNDEF = TruthValue3.TRUE, TruthValue3.FALSE, TruthValue3.UNDEFINED


def overlay_fixture(name):
    return load_overlay(json.loads((FIXTURES / name).read_text()))


# ---------------------------------------------------------------------------
# born probability and classification


def test_born_eigenstate(qubit):
    assert born_probability(qubit, "z+", "Ez") == pytest.approx(1.0)


def test_born_crossing_state(qubit):
    # oracle: |<z+|x+>|^2 from the raw amplitudes
    z = qubit.state("z+").amplitudes
    x = qubit.state("x+").amplitudes
    expected = abs(np.vdot(z, x)) ** 2
    assert expected == pytest.approx(0.5)
    assert born_probability(qubit, "x+", "Ez") == pytest.approx(expected)


def test_born_orthogonal_state(qubit):
    assert born_probability(qubit, "z-", "Ez") == pytest.approx(0.0, abs=1e-15)


def test_classify_three_cases(qubit):
    assert classify_property(qubit, "z+", "Ez") is TRUE
    assert classify_property(qubit, "z-", "Ez") is FALSE
    assert classify_property(qubit, "x+", "Ez") is UNDEF


def test_classify_probability_and_subspace_tests_agree(qubit, qutrit):
    rng = np.random.default_rng(61)
    for model in (qubit, qutrit):
        probes = list(model.states.values())
        probes += [random_state(model.dim, rng) for _ in range(50)]
        for psi in probes:
            ray = state_projector(psi)
            for prop in model.properties:
                value = classify_property(model, psi, prop)
                p = born_probability(model, psi, prop)
                proj = model.projector(prop)
                assert (value is TRUE) == (abs(p - 1) <= model.eps)
                assert (value is TRUE) == leq(ray, proj, model.eps)
                assert (value is FALSE) == (p <= model.eps)


def test_unknown_names(qubit):
    with pytest.raises(UnknownNameError):
        born_probability(qubit, "y+", "Ez")
    with pytest.raises(UnknownNameError):
        born_probability(qubit, "z+", "Ey")


def test_complex_phases_through_the_whole_stack():
    h = 0.7071067811865476
    model = load_model({
        "dim": 2,
        "states": {"y+": [[h, 0], [0, h]], "z+": [[1, 0], [0, 0]]},
        "properties": {"Ey": {"span": [[[h, 0], [0, h]]]},
                       "Ez": {"span": [[[1, 0], [0, 0]]]}},
        "atoms": {"ay": "Ey", "az": "Ez"},
    })
    assert classify_property(model, "y+", "Ey") is TRUE
    assert born_probability(model, "y+", "Ez") == pytest.approx(0.5)
    assert justify(model, "y+", "|- ay") is J
    assert justify(model, "y+", "N(|- az)") is U
    assert sigma(model, "z+", "ay | az") is UNDEF


# ---------------------------------------------------------------------------
# sigma


def test_sigma_atomic_reduces_to_classify(qubit):
    for state in qubit.states:
        for atom, prop in qubit.atom_map.items():
            assert sigma(qubit, state, Atom(atom)) is \
                classify_property(qubit, state, prop)


def test_sigma_undefined_if_any_atom_undefined(qubit):
    assert sigma(qubit, "z+", "az | ax") is UNDEF


def test_sigma_classical_when_all_atoms_defined(qubit):
    assert sigma(qubit, "z+", "az & ~az") is FALSE
    assert sigma(qubit, "z+", "az | ~az") is TRUE
    assert sigma(qubit, "z-", "az -> az") is TRUE  # false antecedent


def test_sigma_molecular_radicals_evaluable(qutrit):
    # e2 is orthogonal to all three properties, so everything is defined
    assert sigma(qutrit, "e2", "aa | ab | ap") is FALSE
    assert sigma(qutrit, "e2", "~aa & ~ap") is TRUE
    assert sigma(qutrit, "e0", "aa <-> ap") is TRUE


def test_sigma_unknown_atom(qubit):
    with pytest.raises(UnknownNameError):
        sigma(qubit, "z+", "az & nosuch")
    # unknown atoms are reported even when another atom is undefined
    with pytest.raises(UnknownNameError):
        sigma(qubit, "x+", "az & nosuch")


# ---------------------------------------------------------------------------
# pragmatic extension


def test_extension_of_elementary_assertion(qubit):
    assert projectors_close(pragmatic_extension(qubit, "|- az"),
                            qubit.projector("Ez"))


def test_extension_of_negation(qubit):
    assert projectors_close(pragmatic_extension(qubit, "N(|- az)"),
                            ortho(qubit.projector("Ez")))


def test_extension_of_aq_with_complement_is_identity(qubit):
    p = pragmatic_extension(qubit, "(|- az) AQ (N (|- az))")
    assert p.rank == 2
    assert np.allclose(p.matrix, np.eye(2), atol=1e-9)


def test_extension_agrees_with_desugared_form(qubit):
    f = parse_assertive("((|- az) AQ (|- ax)) K N((|- az) AQ N(|- ax))")
    a = pragmatic_extension(qubit, f)
    b = pragmatic_extension(qubit, desugar(f))
    assert projectors_close(a, b, 1e-9)


def test_extension_rejects_non_quantum(qubit):
    for text in ("(|- az) A (|- ax)", "(|- az) C (|- ax)",
                 "(|- az) E (|- ax)", "|- (az & ax)"):
        with pytest.raises(NonQuantumFormulaError) as exc:
            pragmatic_extension(qubit, text)
        assert exc.value.violations


def test_extension_unknown_atom(qubit):
    with pytest.raises(UnknownNameError):
        pragmatic_extension(qubit, "|- nosuch")


def test_extension_homomorphism_random(qubit, qutrit, ququart):
    rng = np.random.default_rng(67)
    for model in (qubit, qutrit, ququart):
        atoms = list(model.atom_map)
        for _ in range(40):
            f = random_quantum(rng, 5, atoms, require_composite=True)
            got = pragmatic_extension(model, f)
            if isinstance(f, N):
                expected = ortho(pragmatic_extension(model, f.operand))
            elif isinstance(f, K):
                expected = meet(pragmatic_extension(model, f.left),
                                pragmatic_extension(model, f.right))
            else:
                expected = join(pragmatic_extension(model, f.left),
                                pragmatic_extension(model, f.right))
            assert projectors_close(got, expected, 1e-8)


# ---------------------------------------------------------------------------
# justification


def test_justify_examples(qubit):
    assert justify(qubit, "z+", "|- az") is J
    assert justify(qubit, "x+", "|- az") is U
    assert justify(qubit, "x+", "N(|- az)") is U  # the three-way middle case
    assert justify(qubit, "z-", "N(|- az)") is J


def test_justify_accepts_state_vectors(qubit):
    assert justify(qubit, qubit.state("z+"), "|- az") is J


def test_justify_rejects_non_quantum(qubit):
    with pytest.raises(NonQuantumFormulaError):
        justify(qubit, "z+", "(|- az) C (|- ax)")
    with pytest.raises(UnknownNameError):
        justify(qubit, "y+", "|- az")


def test_negation_sound_but_not_complete(qubit, qutrit):
    rng = np.random.default_rng(71)
    for model in (qubit, qutrit):
        atoms = list(model.atom_map)
        for _ in range(60):
            f = random_quantum(rng, 4, atoms)
            psi = random_state(model.dim, rng)
            if justify(model, psi, N(f)) is J:
                assert justify(model, psi, f) is U
    # the converse direction fails: witness from the middle case
    assert justify(qubit, "x+", "|- az") is U
    assert justify(qubit, "x+", "N(|- az)") is U


# ---------------------------------------------------------------------------
# precedes


def test_precedes_meet_below_argument(qubit):
    assert precedes(qubit, "(|- az) K (|- ax)", "|- az")


def test_precedes_distinct_lines(qubit):
    assert not precedes(qubit, "|- az", "|- ax")


def test_precedes_reflexive(qubit):
    rng = np.random.default_rng(73)
    for _ in range(10):
        f = random_quantum(rng, 3, list(qubit.atom_map))
        assert precedes(qubit, f, f)


def test_precedes_matches_statewise_justification(qubit):
    rng = np.random.default_rng(79)
    atoms = list(qubit.atom_map)
    pairs = [(random_quantum(rng, 3, atoms), random_quantum(rng, 3, atoms))
             for _ in range(10)]
    states = [random_state(qubit.dim, rng) for _ in range(1000)]
    ordered = [(f, g) for f, g in pairs if precedes(qubit, f, g)]
    assert ordered  # the sample must actually exercise the implication
    for f, g in ordered:
        for psi in states:
            if justify(qubit, psi, f) is J:
                assert justify(qubit, psi, g) is J


# ---------------------------------------------------------------------------
# correctness check


def test_check_cc_passes_on_bundled_models(all_models):
    for model in all_models.values():
        report = check_cc(model, samples=200, seed=1)
        assert report.ok, report.findings


def test_check_cc_refuses_invalid_model(qubit):
    bad = Projector(2, np.diag([1.0 + 1e-3, 0.0]).astype(complex), 1)
    corrupted = Model(dim=2, states=dict(qubit.states),
                      properties={**qubit.properties, "Ez": bad},
                      atom_map=dict(qubit.atom_map), eps=qubit.eps)
    report = check_cc(corrupted, samples=10, seed=0)
    assert not report.ok
    codes = {f.code for f in report.errors()}
    assert "model-invalid" in codes
    assert "not-idempotent" in codes
    assert "cc-counterexample" not in codes


def test_check_cc_deterministic(qubit):
    a = check_cc(qubit, samples=50, seed=5)
    b = check_cc(qubit, samples=50, seed=5)
    assert a == b


# ---------------------------------------------------------------------------
# overlays


def test_overlay_broader_than_quantum_is_ok(qubit):
    report = validate_overlay(qubit, overlay_fixture("overlay-consistent.json"))
    assert report.ok, report.findings


def test_overlay_contradiction_is_error(qubit):
    report = validate_overlay(qubit, overlay_fixture("overlay-contradicting.json"))
    assert not report.ok
    assert report.errors()[0].code == "contradicts-quantum-assignment"


def test_empty_overlay_ok(qubit):
    assert validate_overlay(qubit, Overlay({})).ok


def test_overlay_unknown_names(qubit):
    report = validate_overlay(
        qubit, Overlay({("y+", "az"): True, ("z+", "nosuch"): False}))
    codes = {f.code for f in report.errors()}
    assert codes == {"unknown-state", "unknown-atom"}


def test_load_overlay_schema():
    with pytest.raises(Exception):
        load_overlay({"assignments": [{"state": "z+"}]})
    with pytest.raises(Exception):
        load_overlay({})
    conflicting = {"assignments": [
        {"state": "z+", "atom": "az", "value": True},
        {"state": "z+", "atom": "az", "value": False},
    ]}
    with pytest.raises(Exception):
        load_overlay(conflicting)
    ov = load_overlay({"assignments": [
        {"state": "x+", "atom": "az", "value": True}]})
    assert ov.assignments == {("x+", "az"): True}
