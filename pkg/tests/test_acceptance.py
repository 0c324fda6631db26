"""Acceptance criteria, one test and one printed PASS/FAIL line each.

Criteria 1 through 7, 9, and 12 hold end to end.  Three encode claims the
exhaustive oracles refute, so their tests fail, with the refuting
witnesses in the assertion message:

* criterion 8: the depth-k continued-fraction truncation is claimed to
  deliver the q^i slices for i <= k; it delivers i <= k - 1, and the q^k
  slice first misses at t^(2k+1) (depth k+1 does deliver i <= k);
* criterion 10: the transport map behind the diagonal theorem does not
  carry 3-12 counts onto 23-1 counts (first failing word 2 4 1 3), and
  the reverse-pattern form of the max-anchor theorem fails from n = 3
  (the complement-pattern form holds everywhere);
* criterion 11: the bundled table's cycle-refined link between
  (3-12, 3-12) and (23-1, 23-1) fails at n = 6; the class count lands at
  107, so the asserted lower bound of 106 itself holds.

The verification suites (cyclepat verify) pin the same witnesses as
documented deviations.
"""

import time

from cyclepat import census, kernels, perms, series, verify
from cyclepat.series import MultiPoly


def report(num: int, label: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num:02d} [{label}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" -- {detail}"
    print(line)
    assert ok, line


def suite_outcome(name: str, bound: int | None = None):
    results = verify.run_suite(name, bound)
    failing = [r for r in results if r.status == "fail"]
    detail = "; ".join(f"{r.name} ({r.details})" for r in failing)
    return not failing, detail, results


def test_criterion_01_stirling_expansion():
    start = time.perf_counter()
    ok, detail, _ = suite_outcome("stirling", 10)
    elapsed = time.perf_counter() - start
    report(1, "stirling expansion to t^10", ok and elapsed < 1.0, detail or f"{elapsed:.2f}s")


def test_criterion_02_node_weight_identity():
    ok, detail, _ = suite_outcome("weights", 8)
    report(2, "node-weight identity over S_n, n <= 8", ok, detail)


def test_criterion_03_joint_distribution_pipeline():
    ok, detail, _ = suite_outcome("pipeline", 9)
    report(3, "occurrence/cycle census equals series rows, sizes <= 9", ok, detail)


def test_criterion_04_path_image_and_preimage():
    ok, detail, _ = suite_outcome("path-image", 7)
    report(4, "image is the no-low-flat paths with round-trips, n <= 7", ok, detail)


def test_criterion_05_class_weights():
    ok, detail, _ = suite_outcome("class-weights", 6)
    report(5, "fibre weight sums equal step products, lengths <= 6", ok, detail)


def test_criterion_06_contraction_bijection():
    ok, detail, _ = suite_outcome("contraction", 8)
    report(6, "contraction invertibility and weight transport, n <= 8", ok, detail)


def test_criterion_07_closed_forms():
    start = time.perf_counter()
    ok, detail, _ = suite_outcome("closed-forms")
    elapsed = time.perf_counter() - start
    report(
        7,
        "closed q-slices to t^12 and coefficient formulas to n = 10",
        ok and elapsed < 1.0,
        detail or f"{elapsed:.2f}s",
    )


def test_criterion_08_truncation_range():
    f = series.expand_f(10, 4, y=1)
    mismatches = []
    for k in range(1, 4):
        trunc = series.truncated_cf(series.pattern_truncation(k), 10, q_max=4)
        for i in range(k + 1):
            if trunc.coefficient_poly("q", i) == f.coefficient_poly("q", i):
                continue
            mine = trunc.coefficient_poly("q", i).specialize(x=1)
            full = f.coefficient_poly("q", i).specialize(x=1)
            first = next(
                (n, mine.coeff(t=n), full.coeff(t=n))
                for n in range(11)
                if mine.coeff(t=n) != full.coeff(t=n)
            )
            mismatches.append({"k": k, "i": i, "first (t, got, want)": first})
    report(
        8,
        "depth-k truncation delivers q^i for i <= k, n <= 10",
        not mismatches,
        f"agreement holds only for i <= k - 1; the q^k slice needs depth k + 1; {mismatches}",
    )


def test_criterion_09_marked_permutations():
    ok, detail, _ = suite_outcome("marked", 9)
    report(9, "cycle marking identity to n = 9 with the size-3 cell table", ok, detail)


def test_criterion_10_listing_theorems():
    parts = []
    diagonal = census.check_diagonal_collapse(6)
    bad_diag = [r["pattern"] for r in diagonal if not r["holds"]]
    parts.append(("diagonal equidistribution", not bad_diag, f"failing {bad_diag}"))

    dmap = census.check_dmap_transport(6)
    parts.append(
        (
            "transport map carries 3-12 counts to 23-1 counts",
            dmap["claim_holds"],
            f"first failing word {dmap['witness_first_failure']}, "
            f"refined censuses split at {dmap['census_first_divergence']}",
        )
    )

    exchange = census.check_exchange_identities(6)
    bad_exchange = [r["p_b"] for r in exchange if not r["holds"]]
    parts.append(("increasing listing order via block exchange", not bad_exchange, f"failing {bad_exchange}"))

    anchors = census.check_anchor_identities(6)
    parts.append(
        (
            "max-anchor listings via reversed patterns",
            anchors["reverse_counterexample"] is None,
            f"counterexample {anchors['reverse_counterexample']}; "
            f"complemented patterns hold instead: {anchors['complement_holds']}",
        )
    )

    failing = [(label, detail) for label, ok, detail in parts if not ok]
    report(
        10,
        "listing-convention theorems, n <= 6",
        not failing,
        "; ".join(f"{label}: {detail}" for label, detail in failing),
    )


def test_criterion_11_class_table_conjecture():
    start = time.perf_counter()
    records = census.check_conjectured_equivalences(7)
    classes = census.partition_classes(7)
    elapsed = time.perf_counter() - start
    failing = [
        {"row": r["row"], "kind": r["kind"], "first_failure": r["first_failure"]}
        for r in records
        if not r["holds"]
    ]
    count_ok = len(classes) >= 106
    report(
        11,
        "bundled class table holds to n = 7 with >= 106 classes",
        not failing and count_ok and elapsed < 120.0,
        f"{len(classes)} classes in {elapsed:.1f}s; >= 106 {'holds' if count_ok else 'fails'}; "
        f"failing rows {failing}",
    )


def test_criterion_12_t3_slice_discrepancy():
    ok, detail, results = suite_outcome("t3-row")
    documented = any(r.status == "deviation" for r in results)
    report(
        12,
        "series and S_4 oracles agree on the t^3 row; the variant row is documented",
        ok and documented,
        detail or f"rejected variant {verify.REJECTED_T3_ROW}",
    )


def test_every_criterion_is_covered():
    # the acceptance list has twelve entries; keep the count pinned
    import sys

    me = sys.modules[__name__]
    names = [n for n in dir(me) if n.startswith("test_criterion_")]
    assert len(names) == 12
