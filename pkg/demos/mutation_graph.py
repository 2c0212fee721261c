"""Build the full mutation graph for Lambda(A3, t=2) and compare it to the shipped golden edges.

Run: python demos/mutation_graph.py [out.dot]
"""
import sys

from taumut import LocalCoefficientAlgebra, Quiver, Workspace

ws = Workspace(Quiver.linear_A(3), LocalCoefficientAlgebra.truncated_polynomial(2), {"M": "Ind(S2)"})
g = ws.graph()
print(f"{len(g.vertices)} vertices, {len(g.edges)} edges, connected={g.is_connected()}")
for s, i, t in g.edges[:6]:
    print(f"  phi_{i}: {ws.display_seq(s)} -> {ws.display_seq(t)}")
print("  ...")
for line in ws.verify(["figure1", "braid", "transitivity"]):
    print(line)
if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(ws.dot())
    print(f"DOT written to {sys.argv[1]}")
