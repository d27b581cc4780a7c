import pytest

_ACCEPTANCE: dict[str, str] = {}


class Recorder:
    def __init__(self, key: str):
        self.key = key

    def check(self, ok: bool, detail: str) -> None:
        _ACCEPTANCE[self.key] = f"{'PASS' if ok else 'FAIL'}  {self.key}: {detail}"
        assert ok, detail

    def note(self, status: str, detail: str) -> None:
        _ACCEPTANCE[self.key] = f"{status}  {self.key}: {detail}"


@pytest.fixture
def criterion(request):
    key = request.node.get_closest_marker("criterion").args[0]
    rec = Recorder(key)
    yield rec
    _ACCEPTANCE.setdefault(key, f"FAIL  {key}: raised before a verdict was recorded")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test decides")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker and call.when == "call" and call.excinfo is not None:
        key = marker.args[0]
        if key not in _ACCEPTANCE:
            _ACCEPTANCE[key] = f"FAIL  {key}: {call.excinfo.typename}: {call.excinfo.value}"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split()[1])):
        terminalreporter.write_line(_ACCEPTANCE[key])
