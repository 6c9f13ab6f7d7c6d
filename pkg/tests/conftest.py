from pathlib import Path
import sys

# src layout without an install still imports
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, desc, secs, detail = RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {desc}  ({secs:.1f}s) {detail}")
