#!/usr/bin/env python3
"""From formulas to quantum logic: quotient by equal extension.

Identify two claims whenever they are justified in exactly the same
states.  Over the qubit's two incompatible lines this collapses the
infinite formula language to six classes: the "Chinese lantern" MO2,
orthomodular and resolutely non-distributive.  One commuting atom alone
gives a plain Boolean diamond instead.
"""

from pragmaql import (
    export_lattice,
    find_distributivity_violation,
    generate_quotient,
    qubit_zx,
    verify_isomorphism,
    verify_ortholattice,
    verify_orthomodular,
)

model = qubit_zx()

print("=== two incompatible atoms: the lantern ===")
lantern = generate_quotient(model, ["az", "ax"], depth=3)
print(f"classes: {len(lantern)}")
for e in lantern.elements:
    print(f"  [{e.index}] rank {e.projector.rank}: {e.label}"
          f"  ({len(e.members)} member formulas found)")

print()
print("laws:")
for report in verify_ortholattice(lantern):
    print(f"  {report.law}: {'holds' if report.holds else report.counterexample}")
om = verify_orthomodular(lantern)
print(f"  orthomodular: {'holds' if om.holds else om.counterexample}")
iso = verify_isomorphism(lantern)
print(f"  order-isomorphism onto the subspaces: "
      f"{'holds' if iso.holds else iso.counterexample}")

violation = find_distributivity_violation(lantern)
a, b, c = violation
print(f"  distributivity: FAILS at "
      f"({lantern.elements[a].label}, {lantern.elements[b].label}, "
      f"{lantern.elements[c].label})")

print()
print("=== one atom alone: Boolean after all ===")
diamond = generate_quotient(model, ["az"], depth=2)
print(f"classes: {len(diamond)}")
print("distributivity violation:", find_distributivity_violation(diamond))

print()
print("=== Hasse diagram (Graphviz) ===")
print(export_lattice(lantern, "dot"))
