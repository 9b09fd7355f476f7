import itertools

import pytest

from patience_sorting import Permutation

# criterion number -> list of (part, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}
TITLES: dict[int, str] = {}


def sym(n):
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


@pytest.fixture(scope="session")
def sym_cache():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = sym(n)
        return cache[n]
    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p[1] for p in parts)
        failed = "; ".join(f"{name}: {detail}" for name, passed, detail in parts if not passed)
        line = f"{'PASS' if ok else 'FAIL'}  criterion {k}: {TITLES.get(k, '')}"
        tr.write_line(line + (f"  [{failed}]" if failed else ""))
