"""One pass/fail line per acceptance criterion (run with ``pytest -s`` to see them live)."""
import pytest

from wreathstab.acceptance import CLI_CRITERION, CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA + [CLI_CRITERION]], ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()
