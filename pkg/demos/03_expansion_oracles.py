"""
Brute-force expansion oracles and bound verification
====================================================

For graphs up to 24 vertices the vertex and edge expansion can be computed
exactly by walking every subset of at most half the vertices. That ground
truth then audits the spectral bounds: the diameter bound and the edge
expansion sandwich hold everywhere, while the vertex-expansion inequality
is a diagnostic with a documented failure mode on bipartite graphs.
"""

from hyperexpand.construct import GeneratorConfig, k_regular_bipartite
from hyperexpand.graphs import complete_bipartite_graph, cycle_graph, petersen_graph
from hyperexpand.oracle import edge_expansion, verify_bounds, vertex_expansion

# ---------------------------------------------------------------------------
# Witnesses carry the minimizing subset, not just the number.

c8 = cycle_graph(8)
vw = vertex_expansion(c8)
ew = edge_expansion(c8)
print("C8 vertex expansion:", vw.ratio, "witness", vw.subset)
print("C8 edge expansion:  ", ew.ratio, "witness", ew.subset)
print("(an arc of 4 vertices has 2 boundary vertices and 2 cut edges)")

# ---------------------------------------------------------------------------
# Auditing the spectral bounds on K_{3,3}. One full side has vertex
# expansion exactly 1, below the spectral estimate (k - lambda_2)/2 = 1.5,
# so that check comes back `known-discrepancy` instead of `pass`: on
# bipartite graphs the inequality genuinely fails and the report says so.

report = verify_bounds(complete_bipartite_graph(3))
print()
print("K_{3,3} bound audit:")
for check in report.checks:
    print(f"  {check.name:28s} status={check.status}")
eq4 = report.check("spectral_vertex_expansion")
print(f"  observed vertex expansion {eq4.observed} vs spectral bound {eq4.bound:.4f}")
print(f"  worst subset {eq4.detail['worst_subset']} margin {eq4.detail['worst_margin']:.3f}")

# ---------------------------------------------------------------------------
# The same audit on the Petersen graph and on a generated expander. The
# Petersen graph is the honest counterexample here: it is not bipartite,
# so its vertex-expansion violation is reported as `unexpected`.

print()
print("Petersen:")
for check in verify_bounds(petersen_graph()).checks:
    print(f"  {check.name:28s} status={check.status}")

print()
g = k_regular_bipartite(GeneratorConfig(n=7, k=3, seed=0)).to_graph()
report = verify_bounds(g)
print("generated (7+7)-vertex 3-regular expander:")
for check in report.checks:
    print(f"  {check.name:28s} status={check.status}")
print(f"  diameter {report.diameter} <= bound {report.check('chung_diameter').bound:.3f}")
print(
    f"  edge expansion {report.edge.ratio:.4f} inside "
    f"[{report.check('dodziuk_interval').detail['lower']:.4f}, "
    f"{report.check('dodziuk_interval').detail['upper']:.4f}]"
)
