import pytest

CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("LLTILT_CACHE_DIR", str(tmp_path / "cache"))


@pytest.fixture
def criterion(request):
    """Record a criterion verdict: criterion("3", ok, detail)."""
    def record(key, ok, detail=""):
        CRITERIA[key] = (bool(ok), detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: (int(k.rstrip("ab")), k)):
        ok, detail = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key:<3} {'PASS' if ok else 'FAIL'}  {detail}")
