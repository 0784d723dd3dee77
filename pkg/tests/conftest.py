import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from planar_cayley.enumeration import build_finite
from planar_cayley.presentation import parse_presentation

PRISM = "<a,b | b^2, a^3, (ab)^2>"
CUBE = "<b,c,d | b^2, c^2, d^2, (bc)^2, (cd)^2, (db)^2>"
FREE_PRODUCT = "<a,b | b^2, a^3>"


@pytest.fixture(scope="session")
def prism_pres():
    return parse_presentation(PRISM)


@pytest.fixture(scope="session")
def prism(prism_pres):
    return build_finite(prism_pres)


@pytest.fixture(scope="session")
def cube_pres():
    return parse_presentation(CUBE)


@pytest.fixture(scope="session")
def cube(cube_pres):
    return build_finite(cube_pres)


# acceptance bookkeeping: criterion number -> list of (subcase, passed, detail)
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}
CRITERIA = {
    1: "finite-row exactness",
    2: "oracle agreement",
    3: "relator universality",
    4: "spin signatures",
    5: "connectivity table",
    6: "no-finite-face phenomenon",
    7: "hinge dichotomy",
    8: "pattern suite",
    9: "dividing-cycle structure",
    10: "ends",
}


def record(criterion: int, subcase: str, passed: bool, detail: str = "") -> bool:
    ACCEPTANCE.setdefault(criterion, []).append((subcase, bool(passed), detail))
    return bool(passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        cases = ACCEPTANCE.get(n)
        if not cases:
            tr.write_line(f"criterion {n:2} {title:28} NOT RUN")
            continue
        bad = [c for c in cases if not c[1]]
        status = "PASS" if not bad else "FAIL"
        note = f"{len(cases) - len(bad)}/{len(cases)} subcases"
        if bad:
            note += "; failing: " + ", ".join(f"{s} ({d})" if d else s for s, _, d in bad)
        tr.write_line(f"criterion {n:2} {title:28} {status}  {note}")
