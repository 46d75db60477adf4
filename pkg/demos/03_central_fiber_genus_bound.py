"""The collapsed central-fiber graph and the genus bound p_a(X) + T <= g.

In a one-parameter degeneration whose limit contains the fiber E0, the
central fiber splits into the residual part X, a curve dominating E0, and
contracted components Z.  The quantity T counts the connections between X
and the dominating curve; flatness forces p_a(X) + T <= g, with equality
pinning the whole shape: genus-one cover components and rational chains.
"""

from severi.dual_graph import (
    CentralFiber,
    arithmetic_genus,
    compute_T,
    genus_bound_check,
)

print("== an equality fiber ==")
fiber = CentralFiber(
    x_genus=2,
    e_parts=((1, 1),),          # one genus-1 component over E0, degree 1
    z_parts=(0,),               # one rational chain link
    edges=(("X", "Z0"), ("Z0", "E0")),
)
g = arithmetic_genus(fiber)
print(f"arithmetic genus {g}, T = {compute_T(fiber)}")
report = genus_bound_check(fiber, g)
print(f"bound holds: {report.holds}, equality: {report.equality}")
for name, ok in report.conditions:
    print(f"  {name}: {ok}")

print()
print("== strictness sources ==")
fat_chain = CentralFiber(
    x_genus=1,
    e_parts=((1, 1),),
    z_parts=(0,),
    edges=(("X", "Z0"), ("Z0", "E0"), ("Z0", "E0")),  # chain touches the cover twice
)
rep = genus_bound_check(fat_chain, arithmetic_genus(fat_chain))
print(f"chain with three nodes: p_a(X)+T = {rep.p_a_x + rep.T} < g = {rep.g}")

ramified = CentralFiber(
    x_genus=1,
    e_parts=((2, 2),),          # a genus-2 component cannot cover E0 unramified
    z_parts=(),
    edges=(("X", "E0"),),
)
rep = genus_bound_check(ramified, arithmetic_genus(ramified))
print(f"genus-2 cover component: p_a(X)+T = {rep.p_a_x + rep.T} < g = {rep.g}")

print()
print("== direct nodes count too ==")
multi = CentralFiber(
    x_genus=0, e_parts=((1, 3),), z_parts=(), edges=(("X", "E0"),) * 3
)
print(f"three direct nodes: T = {compute_T(multi)}, genus {arithmetic_genus(multi)}")
