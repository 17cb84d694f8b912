import random

import pytest

from latsort import Sequence, lattice_from_spec

# bot=0, a=1, b=2, c=3, top=4; written out by hand so the tests do not
# depend on the library's order-to-table construction.
M3_LEQ = {(0, x) for x in range(5)} | {(x, 4) for x in range(5)} | {(x, x) for x in range(5)}
N5_LEQ = M3_LEQ | {(1, 3)}


def table_from_leq(leq, n=5):
    def glb(i, j):
        lower = [c for c in range(n) if (c, i) in leq and (c, j) in leq]
        return next(c for c in lower if all((d, c) in leq for d in lower))

    def lub(i, j):
        upper = [c for c in range(n) if (i, c) in leq and (j, c) in leq]
        return next(c for c in upper if all((c, d) in leq for d in upper))

    meet = [[glb(i, j) for j in range(n)] for i in range(n)]
    join = [[lub(i, j) for j in range(n)] for i in range(n)]
    return meet, join


FAMILIES = {
    "int": "int",
    "div": "div",
    "powerset": "powerset:w,x,y,z",
    "product": "product:div+powerset:p,q",
    "m3": "m3",
    "n5": "n5",
}
DISTRIBUTIVE_FAMILIES = ["int", "div", "powerset", "product"]


def random_sequence(lattice, rng, n_min=1, n_max=8):
    n = rng.randint(n_min, n_max)
    return Sequence(lattice, tuple(lattice.random_element(rng) for _ in range(n)))


@pytest.fixture(params=sorted(FAMILIES))
def family(request):
    return request.param, lattice_from_spec(FAMILIES[request.param])


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def criterion(request):
    lines = request.config.stash.setdefault(_LINES, [])

    def record(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
        lines.append(line)
        print(line)
        return ok

    return record


_LINES = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
