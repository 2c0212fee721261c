import pytest

from taumut import LocalCoefficientAlgebra, Quiver, Workspace

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(number: int, ok: bool, text: str) -> None:
    ACCEPTANCE[number] = ("PASS" if ok else "FAIL", text)


@pytest.fixture(scope="session")
def ws_cache():
    cache = {}

    def get(quiver: str, t: int = 1):
        key = (quiver, t)
        if key not in cache:
            q = {"A2": Quiver.linear_A(2), "A3": Quiver.linear_A(3), "D4": Quiver.D4()}[quiver]
            R = LocalCoefficientAlgebra.truncated_polynomial(t) if t > 1 else None
            aliases = {"M": "Ind(S2)"} if quiver == "A3" and t > 1 else {}
            cache[key] = Workspace(q, R, aliases)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def a3(ws_cache):
    return ws_cache("A3")


@pytest.fixture(scope="session")
def a2(ws_cache):
    return ws_cache("A2")


@pytest.fixture(scope="session")
def lam(ws_cache):
    return ws_cache("A3", 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d} {status} {text}")
