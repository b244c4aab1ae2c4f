from hypothesis import settings

from criteria import RESULTS

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, secs, limit, note = RESULTS[num]
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {secs:7.2f}s (limit {limit}s)"
        terminalreporter.write_line(line + (f"  {note}" if note else ""))
