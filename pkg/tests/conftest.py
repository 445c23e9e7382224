import itertools
import random
import sys

import numpy as np
import pytest

from finring.spec import GF, Mat, Op, Prod, UT, Z

SMALL_SPECS = [
    "Z(2)", "Z(6)", "Z(8)", "GF(4)", "GF(8)", "GF(9)", "M(2,GF(2))",
    "UT(2,GF(2))", "UT(2,GF(3))", "prod(Z(2),Z(3))", "prod(GF(4),GF(2))", "op(UT(2,GF(2)))",
]


def naive_axioms_hold(R) -> bool:
    """Triple loop over every axiom, no vectorization."""
    n, add, mul = R.order, R.add.tolist(), R.mul.tolist()
    els = range(n)
    zero = next(z for z in els if all(add[z][x] == x for x in els))
    for a, b in itertools.product(els, els):
        if add[a][b] != add[b][a]:
            return False
    for a in els:
        if not any(add[a][b] == zero for b in els):
            return False
        if mul[R.one][a] != a or mul[a][R.one] != a:
            return False
    for a, b, c in itertools.product(els, els, els):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return False
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return False
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return False
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            return False
    return True


def brute_subsets(R, predicate):
    """Every subset containing zero that satisfies ``predicate`` (bool array -> bool)."""
    others = [x for x in range(R.order) if x != R.zero]
    found = []
    for bits in range(1 << len(others)):
        arr = np.zeros(R.order, dtype=bool)
        arr[R.zero] = True
        for i, x in enumerate(others):
            if bits >> i & 1:
                arr[x] = True
        if predicate(arr):
            found.append(frozenset(np.flatnonzero(arr).tolist()))
    return set(found)


def random_spec(rng: random.Random, depth: int = 0):
    """Random spec tree; orders are not bounded because only parsing is exercised."""
    roll = rng.randrange(7 if depth < 3 else 2)
    if roll == 0:
        return Z(rng.randrange(2, 40))
    if roll == 1:
        return GF(rng.choice([2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27]))
    if roll == 2:
        return Mat(rng.randrange(1, 4), random_spec(rng, depth + 1))
    if roll == 3:
        return UT(rng.randrange(2, 4), random_spec(rng, depth + 1))
    if roll == 4:
        return Op(random_spec(rng, depth + 1))
    return Prod(tuple(random_spec(rng, depth + 1) for _ in range(rng.randrange(2, 4))))


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines after the run, outside output capture."""
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
