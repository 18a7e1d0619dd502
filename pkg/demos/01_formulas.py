#!/usr/bin/env python3
"""Walk through the two-layer formula language.

Radical formulas describe; assertive formulas claim.  The assertion sign
|- turns a description into a claim, and the pragmatic operators N, K,
AQ (and the wider A, C, E) combine claims, never descriptions.
"""

from pragmaql import (
    desugar,
    parse_assertive,
    parse_radical,
    print_formula,
    quantum_fragment_check,
)

print("=== radicals: classical skeletons ===")
for text in ["p", "p & (q | ~r)", "p -> q -> r", "~p & q | r -> s <-> t"]:
    ast = parse_radical(text)
    print(f"  {text!r}  ->  {print_formula(ast)}")

print()
print("=== assertives: claims built from claims ===")
for text in ["|- p", "N(|- p) K (|- q)", "(|- p) AQ (|- q)",
             "N |- p K |- q", "(|- p) C (|- q) C (|- r)"]:
    ast = parse_assertive(text)
    print(f"  {text!r}  ->  {print_formula(ast)}")

print()
print("note how 'N |- p K |- q' groups: N binds before K, so the")
print("negation covers only the first assertion.")

print()
print("=== the quantum fragment ===")
for text in ["N(|- p) K (|- q)",      # fine: atoms under |-, only N/K above
             "|- (p & q)",            # molecular radical under |-
             "(|- p) C (|- q)",       # C has no justification subspace
             "(|- p) AQ (|- q)"]:     # AQ is fine: it unfolds to N/K
    report = quantum_fragment_check(parse_assertive(text))
    verdict = "quantum" if report.is_quantum else f"NOT quantum {list(report.violations)}"
    print(f"  {text!r}: {verdict}")

print()
print("=== AQ is definable ===")
f = parse_assertive("(|- p) AQ (|- q)")
print(f"  {print_formula(f)}  unfolds to  {print_formula(desugar(f))}")
g = parse_assertive("((|- p) AQ (|- q)) AQ (|- r)")
print(f"  {print_formula(g)}")
print(f"    -> {print_formula(desugar(g))}")
