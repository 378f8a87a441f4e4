import pytest

# criterion id -> {"title": str, "results": [(nodeid, passed)]}
_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        cid, title = marker.args
        entry = _CRITERIA.setdefault(cid, {"title": title, "results": []})
        entry["results"].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_CRITERIA, key=lambda c: int(c[2:])):
        entry = _CRITERIA[cid]
        results = entry["results"]
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"{status}  {cid}  {entry['title']}  ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
