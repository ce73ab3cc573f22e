"""Acceptance criteria, one test each.

Every test records a ``PASS/FAIL criterion N: ...`` line; the lines are
printed in the terminal summary (see conftest.py) and when this file is
run directly with ``python3 tests/test_acceptance.py``.
"""

import pytest

from hopfcox import verify

RESULTS = {}

TITLES = {
    1: "Betti agreement (B), n<=5, d<=10",
    2: "Betti agreement (D and D'), 2<=n<=4, d<=8",
    3: "skyline figure rows 1-3",
    4: "Hopf / almost-Hopf axiom suite, 200 samples",
    5: "Quillen oracle (cup homomorphism, injectivity)",
    6: "chain-level oracle, components <= 4",
    7: "Steenrod suite (axioms and closed forms)",
    8: "small identities",
}

SUITES = {
    1: lambda: verify.betti_b(5, 10),
    2: lambda: verify.betti_d(4, 8),
    3: verify.figure,
    4: lambda: verify.axioms(200, 5, 8),
    5: verify.quillen_oracle,
    6: lambda: verify.chain_oracle(4),
    7: lambda: verify.steenrod_suite(4, 6, 8),
    8: verify.small_identities,
}


def judge(n):
    report = SUITES[n]()
    line = f"{'PASS' if report.ok else 'FAIL'} criterion {n}: {TITLES[n]}"
    if not report.ok:
        line += "\n" + "\n".join(l for l in report.lines if l.startswith("FAIL") or l.startswith("     "))
    RESULTS[n] = line
    print(line)
    return report


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8])
def test_criterion(n):
    report = judge(n)
    assert report.ok, "\n".join(report.lines)


# The gamma closed form disagrees with the Quillen pullback for gamma_{1,4}
# (Sq^3 and Sq^4); see the discrepancy report and the decisions ledger.
@pytest.mark.xfail(strict=True, reason="gamma closed form mismatches at gamma_{1,4}")
def test_criterion_7_steenrod():
    report = judge(7)
    assert report.ok, "\n".join(report.lines)


if __name__ == "__main__":
    for n in TITLES:
        judge(n)
