import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {text}")


@pytest.fixture
def record():
    def _record(n: int, ok: bool, text: str):
        ACCEPTANCE[n] = ("PASS" if ok else "FAIL", text)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
    return _record
