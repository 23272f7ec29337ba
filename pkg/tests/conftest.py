import hashlib
import json
import os
from pathlib import Path

import pytest

import jacob_ladder
from jacob_ladder.quadrature import CheckpointStore

DATA = Path(__file__).parent / "data"
STORE_ENV = "JACOB_LADDER_TEST_CACHE"

# (criterion, passed, detail) rows for the terminal summary
ACCEPTANCE: list[tuple[int | str, bool, str]] = []


def record(criterion, ok: bool, detail: str) -> None:
    ACCEPTANCE.append((criterion, bool(ok), detail))
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")


def _code_fingerprint() -> str:
    # a cached J(T) is only trusted if it came from the same integrand and rule
    src = Path(jacob_ladder.__file__).parent
    h = hashlib.sha256()
    for name in ("_kernels.py", "_tables.py", "zeta_core.py", "quadrature.py"):
        h.update((src / name).read_bytes())
    return h.hexdigest()[:16]


@pytest.fixture(scope="session")
def oracles():
    return json.loads((DATA / "oracles.json").read_text())


@pytest.fixture(scope="session")
def store(request):
    """Checkpoint store shared by the whole session.

    The file lives in the pytest cache (or at $JACOB_LADDER_TEST_CACHE) so a
    second run reuses J(T) up to ~1e7 instead of integrating again.
    """
    path = os.environ.get(STORE_ENV)
    if not path:
        d = request.config.cache.mkdir("jacob_ladder")
        path = str(d / f"checkpoints-{_code_fingerprint()}.tsv")
    s = CheckpointStore(path)
    yield s
    s.save()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {crit}: {detail}")
