#!/usr/bin/env python3
"""Declaring your own system, and checking broader truth assignments.

A model document is plain JSON-shaped data: a dimension, named states,
named properties (spanning vectors or matrices), and the atom map.  An
overlay asserts extra truth values on top of the model's partial ones,
e.g. from a hidden-value story; it may broaden, never contradict.
"""

from pragmaql import (
    check_cc,
    classify_property,
    load_model,
    load_overlay,
    validate_model,
    validate_overlay,
)

H = 0.7071067811865476  # 1/sqrt(2)

document = {
    "dim": 3,
    "states": {
        "ground": [[1, 0], [0, 0], [0, 0]],
        "mixed01": [[H, 0], [H, 0], [0, 0]],
        "top": [[0, 0], [0, 0], [1, 0]],
    },
    "properties": {
        "Eground": {"span": [[[1, 0], [0, 0], [0, 0]]]},
        "Elow": {"span": [[[1, 0], [0, 0], [0, 0]], [[0, 0], [1, 0], [0, 0]]]},
    },
    "atoms": {"g": "Eground", "low": "Elow"},
}

model = load_model(document)
print("loaded:", model.dim, "dimensional,", len(model.states), "states,",
      len(model.properties), "properties")
report = validate_model(model)
print("validates:", report.ok)

print()
print("partial truth across the declared states:")
for state in model.states:
    row = {atom: str(classify_property(model, state, prop))
           for atom, prop in model.atom_map.items()}
    print(f"  {state:8s} {row}")

print()
print("soundness sweep (1000 random states):", check_cc(model, seed=3).ok)

print()
print("an overlay may decide what the model leaves open...")
broader = load_overlay({"assignments": [
    {"state": "mixed01", "atom": "g", "value": True},   # model: Undefined
]})
print("  broader-but-consistent:", validate_overlay(model, broader).ok)

print("...but contradicting a defined value is flagged:")
wrong = load_overlay({"assignments": [
    {"state": "ground", "atom": "g", "value": False},   # model: True
]})
for finding in validate_overlay(model, wrong).findings:
    print(f"  {finding.severity} {finding.code}: {finding.message}")
