"""Linear models of perverse sheaves: the two categories and their braid
actions.

TransportData holds the vanishing-cycle spaces and all rectilinear
transports; Quiver holds a central space with arms.  mu collapses a quiver
to transports, gmv_embed is its canonical section, and the braid group acts
on both sides compatibly.
"""

from fractions import Fraction as Q

from infrared.linalg import MatQ
from infrared.perverse import (
    TransportData,
    braid_act_quiver,
    braid_act_transport,
    braid_act_word,
    double_dual_check,
    dual_pair,
    gmv_embed,
    jacobson,
    mu,
    spherical_report,
    straight_line_vassiliev,
)
from infrared.randomgen import rand_transport, rng

# the Jacobson identity is the engine behind every invertibility statement
lhs, rhs = jacobson(MatQ([[2]]), MatQ([[3]]))
print("jacobson, scalars u=2, v=3:", lhs.entries, "=", rhs.entries)

r = rng(2024)
m = rand_transport(r, 3, max_dim=2)
q = gmv_embed(m)
print("dims:", m.dims, " Psi dim:", q.d_psi)
print("mu(gmv_embed(m)) == m:", mu(q) == m)

# Verdier duality at one marked point, and the double dual isomorphism
a, b = MatQ([[2]]), MatQ([[3]])
a1, b1 = dual_pair(a, b)
print("dual of (2, 3):", a1.entries, b1.entries)
print("double dual closes up:", double_dual_check(a, b))

# spherical package for a scalar instance t^2 = 2 B_phi / B_psi
rep = spherical_report(MatQ([[2]]), MatQ([[2]]), MatQ([[1]]))
print("scalar a=2 spherical:", rep.spherical, "package holds:", rep.package_holds)

# braid relations hold on the nose for both models
t1 = braid_act_word(m, [1, 2, 1])
t2 = braid_act_word(m, [2, 1, 2])
print("tau1 tau2 tau1 == tau2 tau1 tau2 on transports:", t1 == t2)
q1 = braid_act_word(q, [1, 2, 1])
q2 = braid_act_word(q, [2, 1, 2])
print("same on quivers:", q1 == q2)
g = 2
print(
    "naturality mu(tau_2 q) == tau_2 mu(q):",
    mu(braid_act_quiver(q, g)) == braid_act_transport(m, g),
)
print(
    "round trip tau_1 tau_1^{-1} is the identity:",
    braid_act_transport(braid_act_transport(m, 1), -1) == m,
)

# the alternating bend sum: passing below a point contributes the local
# twist, passing above contributes nothing, and the 2^k-term sum collapses
lhs, rhs = straight_line_vassiliev(q, [0, 1, 2])
print("Vassiliev alternating sum, k = 3:", lhs == rhs)
