#!/usr/bin/env python3
"""Truth is partial; justification is total.  They are not the same thing.

In the qubit model, the atom az names the property "points along z+".
In the state x+ that property has probability 1/2: neither true nor
false, simply undefined.  Yet every claim about it still gets a verdict:
neither |- az nor N(|- az) is justified there.
"""

from pragmaql import (
    born_probability,
    check_cc,
    classify_property,
    justify,
    pragmatic_extension,
    precedes,
    qubit_zx,
    sigma,
)

model = qubit_zx()

print("=== probabilities ===")
for state in ("z+", "z-", "x+"):
    for prop in ("Ez", "Ex"):
        p = born_probability(model, state, prop)
        print(f"  p({state}, {prop}) = {p:.3f}")

print()
print("=== partial truth (three-valued, state by state) ===")
for state in ("z+", "z-", "x+"):
    print(f"  in {state}: az is {classify_property(model, state, 'Ez')}, "
          f"ax is {classify_property(model, state, 'Ex')}")
print("  molecular radicals follow suit:")
print("    sigma(z+, 'az & ~az') =", sigma(model, "z+", "az & ~az"))
print("    sigma(z+, 'az | ax')  =", sigma(model, "z+", "az | ax"),
      " (ax is undefined at z+, so the whole thing is)")

print()
print("=== justification (two-valued, always defined) ===")
for state in ("z+", "x+", "z-"):
    a = justify(model, state, "|- az")
    na = justify(model, state, "N(|- az)")
    print(f"  in {state}: |- az is {a}, N(|- az) is {na}")
print()
print("the x+ row is the punchline: the claim and its pragmatic negation")
print("are BOTH unjustified, because unjustified does not mean refuted.")

print()
print("=== extensions: every claim denotes a subspace ===")
for text in ("|- az", "N(|- az)", "(|- az) K (|- ax)", "(|- az) AQ (N |- az)"):
    p = pragmatic_extension(model, text)
    print(f"  {text!r} -> rank {p.rank} subspace")

print()
print("=== the induced order ===")
print("  (|- az) K (|- ax) precedes |- az?", precedes(model, "(|- az) K (|- ax)", "|- az"))
print("  |- az precedes |- ax?", precedes(model, "|- az", "|- ax"))

print()
print("=== soundness: justified claims are true claims ===")
report = check_cc(model, samples=1000, seed=0)
print("  counterexamples over 1000 random states:", len(report.findings))
print("  ok:", report.ok)
