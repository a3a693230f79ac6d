# criterion number -> (passed, summary); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def report(criterion: int, passed: bool, summary: str) -> None:
    ACCEPTANCE[criterion] = (passed, summary)
    print(f"criterion {criterion}: {'PASS' if passed else 'FAIL'} {summary}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        passed, summary = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if passed else 'FAIL'} {summary}")
