"""Coefficients that are not self-injective: R = k[x,y]/(x^2, xy, y^2).

Here the Auslander-Reiten translate of an induced module is D(R) (x) tau(X)
rather than R (x) tau(X); the two differ because D(R) is not isomorphic to R.
Mutation is unaffected.

Run: python demos/non_self_injective.py
"""
from taumut import Workspace
from taumut.catalog import verify_induced_tau
from taumut.cli import load_run_config

ws = Workspace.from_config(load_run_config("a3_square_zero"))
R = ws.coefficients
print(f"R has dimension {R.dim}; self-injective: {R.is_self_injective()}")

plain = verify_induced_tau(ws.algebra, ws.catalog, ws.lcatalog)
twisted = verify_induced_tau(ws.algebra, ws.catalog, ws.lcatalog, dual_coefficients=True)
for (name, ok_plain, _), (_, ok_twist, _) in zip(plain, twisted):
    print(f"  {name:8s} tau = R(x)tau X: {str(ok_plain):5s}  tau = D(R)(x)tau X: {ok_twist}")

for line in ws.verify(["sequences", "main-theorem", "braid", "mutation-complete"]):
    print(line)
