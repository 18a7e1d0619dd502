#!/usr/bin/env python3
"""The algebra of closed subspaces, where classical set logic bends.

Projectors stand in for subspaces.  Meet is plain intersection, but join
is the closed *span* of the union, and that single difference is where
distributivity dies.
"""

import numpy as np

from pragmaql import (
    identity_projector,
    join,
    leq,
    make_projector,
    meet,
    ortho,
    projector_from_span,
    projectors_close,
    random_projector,
)

p_z = projector_from_span([[1, 0]], dim=2)            # the z+ line
p_x = projector_from_span([np.array([1, 1]) / np.sqrt(2)])  # the x+ line

print("P_z =")
print(p_z.matrix.real)
print("P_x =")
print(p_x.matrix.real)

print()
print("two distinct lines in the plane:")
print("  meet(P_z, P_x) has rank", meet(p_z, p_x).rank, " (they only share 0)")
print("  join(P_z, P_x) has rank", join(p_z, p_x).rank, " (together they span C^2)")
print("  leq(P_z, P_x)?", leq(p_z, p_x))

print()
print("orthocomplement is an involution:")
print("  ortho(P_x) =")
print(ortho(p_x).matrix.real)
print("  ortho(ortho(P_x)) == P_x?", projectors_close(ortho(ortho(p_x)), p_x))

print()
print("De Morgan holds (join computed two ways):")
direct = join(p_z, p_x)
dual = ortho(meet(ortho(p_z), ortho(p_x)))
print("  max difference:", float(np.max(np.abs(direct.matrix - dual.matrix))))

print()
print("distributivity FAILS:")
left = meet(p_z, join(p_x, ortho(p_x)))
right = join(meet(p_z, p_x), meet(p_z, ortho(p_x)))
print("  P_z meet (P_x join P_x^perp) = P_z          (rank", left.rank, ")")
print("  (P_z meet P_x) join (P_z meet P_x^perp) = 0 (rank", right.rank, ")")

print()
print("but the orthomodular law survives.  For nested P <= Q,")
print("Q = P join (P^perp meet Q):")
rng = np.random.default_rng(1)
q = random_projector(4, 3, rng)
basis = q.basis()[:, :2]
p = make_projector(basis @ basis.conj().T)
restored = join(p, meet(ortho(p), q))
print("  max difference:", float(np.max(np.abs(restored.matrix - q.matrix))))
print("  identity check vs full space:", projectors_close(
    join(p, ortho(p)), identity_projector(4), 1e-8))
