ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[num]
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(f"{line}  ({note})" if note else line)
