"""Acceptance sweep: every criterion as a suite run at its stated bounds.

All comparisons are exact integer or boolean equality; there are no
tolerances to tune.  Each test prints one pass/fail line (run pytest with
-s to see them as they happen) and drops the full JSON report under
build/reports/; failures list the offending cases.
"""

from pathlib import Path

import pytest

from abiso.report import write_report
from abiso.suites import run_suite

REPORT_DIR = Path(__file__).resolve().parent.parent / "build" / "reports"

CRITERIA = [
    ("C01", "psi-equivalence", {"order_max": 1024},
     "closed form equals brute-force sum for every type of order <= 1024"),
    ("C02", "psi-forms", {"max_exponent_sum": 10, "primes": (2, 3, 5, 7, 11, 101)},
     "both closed forms agree for exponent sums <= 10 at six primes"),
    ("C03", "isolation-equivalence", {"order_max": 64, "three_group_max": 81},
     "definition, sum-of-orders criterion and structural test agree on every subgroup"),
    ("C04", "example-2-6", {"include_p3_family2": True},
     "the three computed families have their closed-form isolated counts"),
    ("C05", "order-p-count", {"order_max": 64, "three_group_max": 81},
     "order-p counting formula matches enumeration for every p-group in the sweep"),
    ("C06", "psi-relative-identity", {"order_max": 64},
     "relative sums match |H|*psi(G/H) and the intersection-weighted sum"),
    ("C07", "lemma-2-3", {"order_max": 64, "three_group_max": 81},
     "groups with all exponents >= 2 have exactly the two trivial isolated subgroups"),
    ("C08", "lemma-2-1", {"order_max": 144},
     "coprime-product isolation matches per-prime brute force plus the support rule"),
    ("C09", "goursat-cross", {"order_max": 64},
     "goursat backend reproduces join-closure for all two-factor products"),
    ("C10", "omega1-containment", {"order_max": 64, "three_group_max": 81},
     "isolated proper subgroups sit strictly inside the p-socle, per prime"),
]


@pytest.mark.parametrize("cid,suite,params,description", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(cid, suite, params, description):
    report = run_suite(suite, params)
    summary = report.summary
    status = "PASS" if summary["failed"] == 0 else "FAIL"
    print(
        f"{cid} {status} [{suite}] {description} "
        f"({summary['passed']}/{summary['total']} cases, {report.runtime_ms} ms)"
    )
    failures = report.failures()
    for case in failures[:20]:
        print(f"  failing case: {case}")
    assert not failures, f"{cid}: {len(failures)} of {summary['total']} cases failed"
