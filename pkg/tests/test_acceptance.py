"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run with pytest (lines appear in the "acceptance criteria" summary section)
or directly with ``python tests/test_acceptance.py``.
"""
import itertools
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import record  # noqa: E402

from taumut import LocalCoefficientAlgebra, Quiver, Workspace, build_path_algebra  # noqa: E402
from taumut.catalog import knit_hereditary_catalog, verify_induced_tau  # noqa: E402
from taumut.homology import tau  # noqa: E402
from taumut.modules import hom_space  # noqa: E402
from taumut.mutation import enumerate_complete, validate_exceptional  # noqa: E402

ALIASES = {"M": "Ind(S2)"}


def fresh(n_or_quiver, t=1, threads=4):
    q = Quiver.linear_A(n_or_quiver) if isinstance(n_or_quiver, int) else n_or_quiver
    R = LocalCoefficientAlgebra.truncated_polynomial(t) if t > 1 else None
    return Workspace(q, R, ALIASES if t > 1 and q.n == 3 else {}, threads=threads)


def check_lines(ws, names):
    lines = ws.verify(names)
    return all(" PASS " in ln for ln in lines), lines


def test_criterion_01_catalog_counts():
    start = time.perf_counter()
    counts = [len(knit_hereditary_catalog(build_path_algebra(q)))
              for q in (Quiver.linear_A(2), Quiver.linear_A(3), Quiver.D4())]
    elapsed = time.perf_counter() - start
    ok = counts == [3, 6, 12] and elapsed < 1.0
    record(1, ok, f"catalog counts A2,A3,D4 = {counts} in {elapsed:.2f}s")
    assert ok


def test_criterion_02_tau_rigid_classification():
    start = time.perf_counter()
    ws = fresh(3, 2)
    rigid = []
    for x in ws.ctx.names:
        X = ws.ctx.rep(x)
        if not hom_space(X, tau(X)):
            rigid.append(x)
    complete, cert = ws.ctx.certify_complete()
    elapsed = time.perf_counter() - start
    ok = (len(rigid) == 6 and "Ind(S2)" in rigid and sorted(rigid) == sorted(ws.ind.values())
          and complete and elapsed < 5.0)
    record(2, ok, f"{len(rigid)} tau-rigid over Lambda(A3,t=2): {', '.join(rigid)}; {cert}; {elapsed:.2f}s")
    assert ok


def test_criterion_03_tau_commutes_with_induction():
    results = []
    for t in (2, 3):
        ws = fresh(3, t)
        for name, ok, w in verify_induced_tau(ws.algebra, ws.catalog, ws.lcatalog):
            results.append(ok and w is not None and w.is_isomorphism())
    ok = len(results) == 12 and all(results)
    record(3, ok, f"{sum(results)}/12 isomorphism witnesses tau(Ind X) = Ind(tau X) for t = 2, 3")
    assert ok


def test_criterion_04_sequence_counts():
    lam, a3, a2 = fresh(3, 2), fresh(3), fresh(2)
    n_lam = len(lam.sequences())
    n_a3 = len(enumerate_complete(a3.ctx))
    brute = sum(1 for s in itertools.permutations(a3.ctx.names, 3) if validate_exceptional(a3.ctx, s))
    n_a2 = len(enumerate_complete(a2.ctx))
    ok = (n_lam, n_a3, brute, n_a2) == (16, 16, 16, 3)
    record(4, ok, f"Lambda(A3,t=2) {n_lam}, kA3 {n_a3} (brute force {brute}), A2 {n_a2}")
    assert ok


def test_criterion_05_figure1():
    start = time.perf_counter()
    ws = fresh(3, 2)
    ok, lines = check_lines(ws, ["figure1"])
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    record(5, ok, lines[0].split(" ", 3)[3] + f"; {elapsed:.2f}s")
    assert ok


def test_criterion_06_main_theorem():
    ok, lines = check_lines(fresh(3, 2), ["main-theorem"])
    ok = ok and "32/32" in lines[0]
    record(6, ok, lines[0])
    assert ok


def test_criterion_07_braid_relations():
    lines = []
    for t in (2, 3):
        lines += fresh(3, t).verify(["braid"])
    ok = all(" PASS 16/16" in ln for ln in lines)
    record(7, ok, " | ".join(f"t={t}: {ln}" for t, ln in zip((2, 3), lines)))
    assert ok


def test_criterion_08_transitivity():
    ok, lines = check_lines(fresh(3, 2), ["transitivity"])
    ok = ok and "16 vertices" in lines[0]
    record(8, ok, lines[0])
    assert ok


def test_criterion_09_e_map_suite():
    lines = []
    for n in (2, 3):
        lines += fresh(n, 2).verify(["e-square"])
    ok = all(" PASS " in ln for ln in lines)
    record(9, ok, " | ".join(f"A{n}: {ln}" for n, ln in zip((2, 3), lines)))
    assert ok


def test_criterion_10_r_exceptional():
    ok, lines = check_lines(fresh(3, 2), ["r-exceptional"])
    record(10, ok, lines[0])
    assert ok


def test_criterion_11_mutation_completeness():
    lines = []
    for t in (2, 3):
        lines += fresh(3, t).verify(["mutation-complete"])
    ok = all(" PASS " in ln for ln in lines)
    record(11, ok, " | ".join(f"t={t}: {ln}" for t, ln in zip((2, 3), lines)))
    assert ok


def test_criterion_12_property_suites():
    lines = []
    for q in (Quiver.linear_A(2), Quiver.linear_A(3)):
        lines += fresh(q, 2).verify(["properties", "uniqueness"])
    lines += fresh(Quiver.D4()).verify(["properties"])
    ok = all(" PASS " in ln for ln in lines)
    record(12, ok, f"{sum(' PASS ' in ln for ln in lines)}/{len(lines)} suites pass (A2, A3 at t=2; D4)")
    assert ok


def test_criterion_13_determinism(tmp_path):
    from taumut.workspace import CHECKS
    names = [c for c in CHECKS if c != "prime"]
    reports, dots = [], []
    for threads in (1, 8):
        ws = fresh(3, 2, threads=threads)
        reports.append("\n".join(ws.verify(names)).encode())
        path = tmp_path / f"graph{threads}.dot"
        path.write_text(ws.dot())
        dots.append(path.read_bytes())
    ok = reports[0] == reports[1] and dots[0] == dots[1]
    record(13, ok, f"reports {len(reports[0])} bytes, DOT {len(dots[0])} bytes, identical across 1 and 8 threads")
    assert ok


if __name__ == "__main__":
    import conftest
    import tempfile

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[:fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except AssertionError:
                failed += 1
    for n in sorted(conftest.ACCEPTANCE):
        status, text = conftest.ACCEPTANCE[n]
        print(f"criterion {n:2d} {status} {text}")
    sys.exit(1 if failed else 0)
