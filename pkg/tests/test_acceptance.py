"""Acceptance suite: every bound the package promises, at its stated scale.

Each test prints one PASS line with the check's summary; `prodsets selftest`
runs the same checks from the command line.
"""

import pytest

from prodsets import acceptance


@pytest.mark.parametrize("name,check", acceptance.CHECKS,
                         ids=[name for name, _ in acceptance.CHECKS])
def test_acceptance(name, check):
    detail = check()   # raises CheckFailure on violation
    print(f"PASS {name}: {detail}")
