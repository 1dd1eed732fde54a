import pytest

_acceptance: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _acceptance.get(name, "PASS")
        _acceptance[name] = "FAIL" if (rep.failed or prev == "FAIL") else "PASS"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion this test implements")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda n: int(n.split(".")[0])):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
