"""Walk through R (x) kA3 with R = k[x]/(x^2): modules, sequences, one mutation.

Run: python demos/a3_walkthrough.py
"""
from taumut import LocalCoefficientAlgebra, Quiver, Workspace

ws = Workspace(Quiver.linear_A(3), LocalCoefficientAlgebra.truncated_polynomial(2), {"M": "Ind(S2)"})
print(f"Lambda has dimension {ws.algebra.dim} over Q")

print("\nIndecomposable kA3-modules, obtained by knitting:")
for e in ws.catalog.entries:
    print(f"  {e.name:3s} dims={e.module.dims} tau={e.tau or '-'}")

print("\nEach of them induces a tau-rigid Lambda-module:")
for x in ws.tau_rigid():
    print(f"  {ws.display(x):8s} dims={ws.ctx.rep(x).dims}")

ok, cert = ws.ctx.certify_complete()
print(f"\nCompleteness certificate: {cert}")

seqs = ws.sequences()
print(f"\n{len(seqs)} complete tau-exceptional sequences, for example {ws.display_seq(seqs[0])}")

start = ws.parse_seq("(P3,P2,P1)")
left = ws.mutate(start, 1)
back = ws.mutate(left, 1, right=True)
print(f"\nphi_1{ws.display_seq(start)} = {ws.display_seq(left)}")
print(f"right mutation returns {ws.display_seq(back)}")
