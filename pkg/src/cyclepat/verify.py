"""End-to-end verification suites cross-checking every result pair.

Each suite compares two independently computed sides: a structural
construction (bijection, weight product, census) against a series
expansion or closed formula.  A check can pass, fail, or record a
*deviation*: a claim the bundled data or a transcribed formula makes that
the oracles refute.  Deviations are pinned by exact witnesses, so they
double as regression guards; a deviation whose witness stops reproducing
turns into a failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import census, kernels, paths, perms, series
from .perms import parse_pattern
from .series import MultiPoly, WEIGHTS1, WEIGHTS2

#: Census row for t^3 at x = y = 1 rejected by both oracles; kept so the
#: difference (one count of the top coefficient) stays pinned down.
REJECTED_T3_ROW = {0: 14, 1: 8, 2: 1}


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    status: str  # "pass", "fail", or "deviation"
    details: str

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _check(suite: str, name: str, condition: bool, details: str = "") -> CheckResult:
    return CheckResult(suite, name, "pass" if condition else "fail", details)


def _deviation(suite: str, name: str, reproduced: bool, details: str) -> CheckResult:
    """Record a refuted claim; fail instead if the refutation changed shape."""
    status = "deviation" if reproduced else "fail"
    return CheckResult(suite, name, status, details)


# ---------------------------------------------------------------------------
# Series against permutation counts


def suite_stirling(n_max: int = 10) -> list[CheckResult]:
    """x-marginal of the series at q = y = 1 against cycle-count numbers."""
    suite = "stirling"
    f = series.expand_f(n_max, q=1, y=1)
    bad = [
        (n, j)
        for n in range(n_max + 1)
        for j in range(n + 2)
        if f.coeff(x=j, t=n) != series.stirling_unsigned(n + 1, j + 1)
    ]
    results = [
        _check(
            suite,
            f"[x^j t^n] at q=y=1 equals the (n+1, j+1) cycle count for n <= {n_max}",
            not bad,
            f"first mismatch at {bad[0]}" if bad else "",
        )
    ]
    row = [f.coeff(x=j, t=3) for j in range(4)]
    results.append(
        _check(suite, "t^3 row is (6, 11, 6, 1)", row == [6, 11, 6, 1], f"got {row}")
    )
    return results


def suite_weights(n_max: int = 8) -> list[CheckResult]:
    """Node-weight products against cycle and occurrence counts."""
    suite = "weights"
    example = ((2, 7, 5, 3, 6, 8), (1, 4))
    product = paths.weight_product(example)
    results = [
        _check(
            suite,
            "(2 7 5 3 6 8)(1 4) has node-weight product q^4 x^2",
            product == MultiPoly.monomial({"q": 4, "x": 2}),
            f"got {product.to_text()}",
        )
    ]
    bad = {n: kernels.weight_identity_failures(n) for n in range(n_max + 1)}
    results.append(
        _check(
            suite,
            f"every S_n word's product is x^cycles q^occurrences for n <= {n_max}",
            not any(bad.values()),
            f"failing words per size: { {n: v for n, v in bad.items() if v} }",
        )
    )
    return results


def suite_pipeline(n_max: int = 9) -> list[CheckResult]:
    """Joint (occurrences, cycles) census against the q, x series."""
    suite = "pipeline"
    f = series.expand_f(n_max - 1, y=1)
    pattern = parse_pattern("2-13")
    bad = []
    for n in range(1, n_max + 1):
        table = kernels.single_census(n, pattern)
        row = f.coefficient_poly("t", n - 1)
        expected = {
            (key[0], key[1] + 1): coeff for key, coeff in row.terms.items()
        }
        got = {
            (occ, cyc): int(count)
            for (occ, cyc), count in _nonzero_cells(table)
        }
        if got != expected:
            bad.append(n)
    return [
        _check(
            suite,
            f"S_n census of (occurrences, cycles) matches [t^(n-1)] of the series for n <= {n_max}",
            not bad,
            f"mismatch at sizes {bad}" if bad else "",
        )
    ]


def _nonzero_cells(table):
    rows, cols = table.shape
    for occ in range(rows):
        for cyc in range(cols):
            if table[occ, cyc]:
                yield (occ, cyc), table[occ, cyc]


# ---------------------------------------------------------------------------
# Path bijections


def suite_path_image(n_max: int = 7) -> list[CheckResult]:
    """Image and preimages of the permutation-to-path map."""
    suite = "path-image"
    image_ok = True
    round_ok = True
    details = ""
    for n in range(n_max + 1):
        image = {paths.to_motzkin_path(w) for w in perms.enumerate_permutations(n)}
        expected = {
            p
            for p in paths.enumerate_motzkin_paths(n)
            if not paths.has_flat_at_zero(p)
        }
        if image != expected:
            image_ok = False
            details = f"image mismatch at length {n}"
            break
        for path in expected:
            if paths.to_motzkin_path(paths.path_preimage(path)) != path:
                round_ok = False
                details = f"preimage of {path} maps elsewhere"
                break
    return [
        _check(
            suite,
            f"images are exactly the paths with no flat at zero, lengths <= {n_max}",
            image_ok,
            details if not image_ok else "",
        ),
        _check(
            suite,
            "every such path round-trips through its preimage",
            round_ok,
            details if not round_ok else "",
        ),
    ]


def suite_class_weights(n_max: int = 6) -> list[CheckResult]:
    """Summed node weights per path against class-scheme step products."""
    suite = "class-weights"
    bad = None
    for n in range(n_max + 1):
        fibres: dict[str, MultiPoly] = {}
        for word in perms.enumerate_permutations(n):
            path = paths.to_motzkin_path(word)
            weight = paths.weight_product(perms.to_cycle_form(word))
            fibres[path] = fibres.get(path, MultiPoly.zero()) + weight
        for path in paths.enumerate_motzkin_paths(n):
            got = fibres.get(path, MultiPoly.zero())
            if got != paths.path_weight(path, WEIGHTS2):
                bad = (n, path)
                break
        if bad:
            break
    return [
        _check(
            suite,
            f"fibre weight sums equal class-scheme products for lengths <= {n_max}",
            bad is None,
            f"first mismatch {bad}" if bad else "",
        )
    ]


def suite_contraction(n_max: int = 8) -> list[CheckResult]:
    """The length-reducing path bijection and its weight transport."""
    suite = "contraction"
    x = MultiPoly.variable("x")
    round_in = round_out = transport = True
    details = ""
    for n in range(n_max + 1):
        for path in paths.enumerate_motzkin_paths(n + 1, allow_flat_at_zero=False):
            reduced = paths.contract_path(path)
            if paths.expand_path(reduced) != path:
                round_in = False
                details = details or f"expand(contract({path})) differs"
            lhs = paths.path_weight(path, WEIGHTS2)
            rhs = x * paths.path_weight(reduced, WEIGHTS1)
            if lhs != rhs:
                transport = False
                details = details or f"weight transport fails for {path}"
        for path in paths.enumerate_motzkin_paths(n):
            if paths.contract_path(paths.expand_path(path)) != path:
                round_out = False
                details = details or f"contract(expand({path})) differs"
    return [
        _check(suite, f"contract then expand is the identity, lengths <= {n_max + 1}", round_in, details),
        _check(suite, f"expand then contract is the identity, lengths <= {n_max}", round_out, details),
        _check(
            suite,
            "class weight of a path is x times the path weight of its contraction",
            transport,
            details,
        ),
    ]


# ---------------------------------------------------------------------------
# Closed forms and truncations


def suite_closed_forms(t_max: int = 12, n_max: int = 10) -> list[CheckResult]:
    """Closed q-slices and coefficient formulas against the raw expansion."""
    suite = "closed-forms"
    results = []
    f = series.expand_f(t_max, 2, y=1)
    for k in range(3):
        closed = series.q_slice_closed(k, t_max)
        wanted = f.coefficient_poly("q", k)
        results.append(
            _check(suite, f"q^{k} slice closed form matches to t^{t_max}", closed == wanted)
        )
    bad = [
        (i, m, n)
        for i in range(3)
        for n in range(n_max + 1)
        for m in range(n + 1)
        if series.coeff_closed(i, m, n) != f.coeff(q=i, x=m, t=n)
    ]
    results.append(
        _check(
            suite,
            f"coefficient formulas match for i <= 2, m <= n <= {n_max}",
            not bad,
            f"first mismatch at {bad[0]}" if bad else "",
        )
    )
    anchors = (
        all(series.coeff_closed(0, 0, n) == series.catalan_number(n) for n in range(n_max + 1))
        and series.coeff_closed(0, 1, 2) == 2
        and series.coeff_closed(1, 1, 2) == 1
    )
    results.append(
        _check(suite, "anchor values: Catalan column and the two (m, n) = (1, 2) cells", anchors)
    )
    results.append(
        _deviation(
            suite,
            "q^2 bracket constants were refit: a transcribed variant scaled by 2 "
            "and missing one factor of C in its x^0 block is rejected",
            _g2_transcription_rejected(t_max=8),
            "see tools/fit_closed_forms.py for the exact fit and the rejected variant",
        )
    )
    results.append(
        _deviation(
            suite,
            "the x^0 column of the q^2 coefficient formula follows n(n-1)(n-2)(n-3), "
            "not the m >= 1 numerator continued to m = 0",
            _phi2_m0_split_reproduced(n_max),
            "continuing the m >= 1 numerator to m = 0 falls short by 20(n+1)(2n+1) "
            "times the binomial factor over the common denominator",
        )
    )
    return results


def _g2_transcription_rejected(t_max: int) -> bool:
    """The transcribed q^2 variant has exactly two defects.

    Scaled by 2 and with one factor of C dropped from its x^0 block, the
    variant misses the oracle; fixing either defect alone still misses;
    fixing both gives the shipped closed form.
    """
    expansion = series.expand_f(t_max, 2, y=1).coefficient_poly("q", 2)
    bounds = (0, None, 0, t_max)
    one = MultiPoly.const(1, bounds)
    x_var = MultiPoly.variable("x", bounds=bounds)
    t_var = MultiPoly.variable("t", bounds=bounds)
    c = series.catalan_series(t_max, bounds)
    xtc_inv = (one - x_var * t_var * c).inverse()
    pref = (1 - c) ** 3 * (2 - c).inverse() ** 3 * xtc_inv**3
    x0_as_transcribed = (-1, 6, -7, 2)  # misses one factor of C
    higher = series._G2_BRACKET[1:]

    def build(restore_c: bool, factor: int) -> MultiPoly:
        rows = (series._G2_BRACKET[0] if restore_c else x0_as_transcribed,) + higher
        body = MultiPoly.zero(bounds)
        for j, coeffs in enumerate(rows):
            piece = MultiPoly.zero(bounds)
            c_pow = one
            for co in coeffs:
                piece = piece + c_pow * co
                c_pow = c_pow * c
            body = body + x_var**j * piece
        return factor * pref * body

    return (
        build(False, 2) != expansion
        and build(False, 1) != expansion
        and build(True, 2) != expansion
        and build(True, 1) == expansion
    )


def _phi2_m0_split_reproduced(n_max: int) -> bool:
    """Continuing the m >= 1 numerator to m = 0 deviates exactly as recorded."""
    for n in range(4, n_max + 1):
        continued = series._phi2_numerator(0, n)
        true_numer = n * (n - 1) * (n - 2) * (n - 3)
        if true_numer - continued != 20 * (n + 1) * (2 * n + 1):
            return False
    return True


def suite_truncation(t_max: int = 10) -> list[CheckResult]:
    """Finite-depth truncations against the full expansion, low q slices."""
    suite = "truncation"
    results = []
    f = series.expand_f(t_max, 4, y=1)
    truncs = {
        depth: series.truncated_cf(series.pattern_truncation(depth), t_max, q_max=4)
        for depth in range(1, 5)
    }
    for k in range(4):
        agree = all(
            truncs[k + 1].coefficient_poly("q", i) == f.coefficient_poly("q", i)
            for i in range(k + 1)
        )
        results.append(
            _check(
                suite,
                f"depth-{k + 1} truncation matches coefficients of q^i, "
                f"i <= {k}, to t^{t_max}",
                agree,
            )
        )
    results.append(
        _deviation(
            suite,
            "the depth-k truncation misses the q^k slice; delivering q^k "
            "takes depth k+1",
            _truncation_gap_reproduced(truncs, f),
            "at x = 1 the q^k slice of the depth-k truncation first falls short "
            "by 2 at t^(2k+1): 6 not 8 (k=1), 196 not 198 (k=2), 8398 not 8400 "
            "(k=3); widening only the tail weight does not close the gap",
        )
    )
    return results


def _truncation_gap_reproduced(truncs: dict[int, MultiPoly], f: MultiPoly) -> bool:
    """The q^k slice of the depth-k truncation first misses at t^(2k+1)."""
    pinned = {1: (3, 6, 8), 2: (5, 196, 198), 3: (7, 8398, 8400)}
    for k, (first_t, got, want) in pinned.items():
        trunc_slice = truncs[k].coefficient_poly("q", k).specialize(x=1)
        f_slice = f.coefficient_poly("q", k).specialize(x=1)
        for n in range(first_t):
            if trunc_slice.coeff(t=n) != f_slice.coeff(t=n):
                return False
        if trunc_slice.coeff(t=first_t) != got or f_slice.coeff(t=first_t) != want:
            return False
    return True


def suite_marked(n_max: int = 9, census_n_max: int = 6) -> list[CheckResult]:
    """Two-variable cycle marking against binomial-weighted cycle counts."""
    suite = "marked"
    failures = series.marked_identity_check(n_max, census_n_max)
    results = [
        _check(
            suite,
            f"series rows and marked censuses match the formula table for n <= {n_max}",
            not failures,
            "; ".join(failures),
        )
    ]
    cells: dict[tuple[int, int], int] = {}
    for marked in perms.enumerate_marked(3):
        key = (marked.marked_count, marked.unmarked_count)
        cells[key] = cells.get(key, 0) + 1
    expected = {
        (0, 1): 2, (1, 0): 2,
        (0, 2): 3, (1, 1): 6, (2, 0): 3,
        (0, 3): 1, (1, 2): 3, (2, 1): 3, (3, 0): 1,
    }
    results.append(
        _check(
            suite,
            "the 24 marked size-3 permutations fill the marked/unmarked table",
            cells == expected,
            f"got {sorted(cells.items())}",
        )
    )
    return results


# ---------------------------------------------------------------------------
# Listing conventions and the class table


def suite_symmetry(n_max: int = 6) -> list[CheckResult]:
    """Listing-convention theorems and the diagonal pattern collapse."""
    suite = "symmetry"
    results = []
    collapse = census.check_diagonal_collapse(n_max)
    results.append(
        _check(
            suite,
            f"seven diagonal pairs collapse to plain occurrence counts, n <= {n_max}",
            all(r["holds"] for r in collapse),
            str([r for r in collapse if not r["holds"]]),
        )
    )
    exchange = census.check_exchange_identities(n_max)
    results.append(
        _check(
            suite,
            f"swapping the glued block compensates reversed listing order, n <= {n_max}",
            all(r["holds"] for r in exchange),
            str([r for r in exchange if not r["holds"]]),
        )
    )
    anchors = census.check_anchor_identities(n_max)
    results.append(
        _check(
            suite,
            f"max-anchored censuses equal min-anchored ones under complemented patterns, n <= {n_max}",
            anchors["complement_holds"],
            str(anchors["complement_first_failure"]),
        )
    )
    reverse_cx = anchors["reverse_counterexample"]
    results.append(
        _deviation(
            suite,
            "the reverse-pattern form of the max-anchor identity is refuted",
            reverse_cx is not None and reverse_cx["n"] == 3,
            f"first counterexample {reverse_cx}",
        )
    )
    dmap = census.check_dmap_transport(n_max)
    results.append(
        _check(
            suite,
            "complement-reverse preserves cycle counts and the plain censuses of "
            "(3-12, 3-12) and (23-1, 23-1) agree",
            dmap["cycles_preserved"] and dmap["plain_census_equal"],
        )
    )
    witness = dmap["witness_first_failure"]
    results.append(
        _deviation(
            suite,
            "the claimed pointwise transport of 3-12 totals onto 23-1 totals fails",
            witness is not None and witness["n"] == 4 and witness["word"] == [2, 4, 1, 3],
            f"first failing word {witness}",
        )
    )
    divergence = dmap["census_first_divergence"]
    results.append(
        _deviation(
            suite,
            "the cycle-refined censuses of (3-12, 3-12) and (23-1, 23-1) split at n = 6",
            dmap["census_equal_up_to"] == 5
            and divergence is not None
            and divergence["n"] == 6,
            f"diverging cells {divergence['cells'] if divergence else None}",
        )
    )
    return results


#: The one distribution coincidence the bundled table misses: these seven
#: pairs share a single distribution, cycle-refined included, up to n = 9.
UNLISTED_MERGED_CLASS = (
    ("1-23", "2-13"),
    ("1-23", "31-2"),
    ("1-32", "2-13"),
    ("1-32", "2-31"),
    ("1-32", "31-2"),
    ("3-21", "2-31"),
    ("3-21", "31-2"),
)


def suite_equivalences(n_max: int = 7) -> list[CheckResult]:
    """The bundled table of conjectured classes, and the class counts."""
    suite = "equivalences"
    results = []
    control = census.partition_vincular_patterns(n_max)
    results.append(
        _check(
            suite,
            "the twelve patterns fall into three plain-distribution classes",
            len(control) == 3,
            f"got {len(control)} classes",
        )
    )
    records = census.check_conjectured_equivalences(n_max)
    failing = [r for r in records if not r["holds"]]
    results.append(
        _check(
            suite,
            f"28 of the 29 bundled groups hold for n <= {n_max}",
            len(records) == 29 and len(failing) == 1,
            f"failing groups {[(r['row'], r['kind']) for r in failing]}",
        )
    )
    row27 = next((r for r in failing if r["row"] == 27 and r["kind"] == "cycles"), None)
    results.append(
        _deviation(
            suite,
            "bundled row 27's cycle-refined link fails first at n = 6",
            row27 is not None and row27["first_failure"]["n"] == 6,
            f"group record {row27}",
        )
    )
    plain = census.partition_classes(n_max, "sum", False)
    refined = census.partition_classes(n_max, "sum", True)
    results.append(
        _check(
            suite,
            f"at least 106 classes under the sum statistic at n_max = {n_max}",
            len(plain) >= 106,
            f"{len(plain)} plain classes, {len(refined)} cycle-refined",
        )
    )
    results.append(
        _deviation(
            suite,
            "no reading yields exactly 106 classes: 107 plain and 111 cycle-refined",
            len(plain) == 107 and len(refined) == 111,
            "counts are stable from n_max = 7 through 9; the bundled table's own "
            "27 rows plus 81 unlisted pairs would give 108",
        )
    )
    merged = [cls for cls in plain if tuple(cls) == tuple(UNLISTED_MERGED_CLASS)]
    merged_refined = [cls for cls in refined if tuple(cls) == tuple(UNLISTED_MERGED_CLASS)]
    results.append(
        _deviation(
            suite,
            "the bundled table misses one coincidence: rows 11 and 16 share a "
            "distribution, forming one seven-pair class",
            bool(merged) and bool(merged_refined),
            "holds under both plain and cycle-refined readings",
        )
    )
    return results


def suite_t3_row() -> list[CheckResult]:
    """The t^3 slice at x = y = 1 from the series and from brute force."""
    suite = "t3-row"
    f_row = {
        key[0]: coeff
        for key, coeff in series.expand_f(3, q=None, x=1, y=1)
        .coefficient_poly("t", 3)
        .terms.items()
    }
    table = kernels.single_census(4, parse_pattern("2-13"))
    brute = {}
    for (occ, cyc), count in _nonzero_cells(table):
        brute[occ] = brute.get(occ, 0) + int(count)
    results = [
        _check(
            suite,
            "series slice and S_4 census agree",
            f_row == brute == {0: 14, 1: 8, 2: 2},
            f"series {f_row}, census {brute}",
        )
    ]
    results.append(
        _deviation(
            suite,
            "the rejected variant row 14 + 8q + q^2 differs from both oracles "
            "exactly in the q^2 cell",
            REJECTED_T3_ROW != brute
            and {k: v for k, v in REJECTED_T3_ROW.items() if k != 2}
            == {k: v for k, v in brute.items() if k != 2}
            and brute.get(2) == 2
            and REJECTED_T3_ROW.get(2) == 1,
            f"variant {REJECTED_T3_ROW}, oracle {brute}",
        )
    )
    return results


# ---------------------------------------------------------------------------
# Runner

SUITES = {
    "stirling": suite_stirling,
    "weights": suite_weights,
    "pipeline": suite_pipeline,
    "path-image": suite_path_image,
    "class-weights": suite_class_weights,
    "contraction": suite_contraction,
    "closed-forms": suite_closed_forms,
    "truncation": suite_truncation,
    "marked": suite_marked,
    "symmetry": suite_symmetry,
    "equivalences": suite_equivalences,
    "t3-row": suite_t3_row,
}


#: Suites over a fixed instance rather than a sweep; they take no bound.
UNBOUNDED_SUITES = frozenset({"t3-row"})


def run_suite(name: str, bound: int | None = None) -> list[CheckResult]:
    """Run one named suite, optionally overriding its sweep bound.

    The bound replaces the suite's leading size parameter (a t-degree for
    the series suites, a permutation size elsewhere).  Deviation witnesses
    are pinned at the default bounds, so narrowing a suite below its
    witness sizes turns its deviations into failures.
    """
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; available: {', '.join(SUITES)}"
        ) from None
    if bound is None or name in UNBOUNDED_SUITES:
        return suite()
    return suite(bound)


def run_all(
    names: list[str] | None = None, bound: int | None = None
) -> list[CheckResult]:
    selected = list(SUITES) if names is None else names
    results: list[CheckResult] = []
    for name in selected:
        results.extend(run_suite(name, bound))
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = []
    width = max(len(r.suite) for r in results)
    for r in results:
        tag = {"pass": "PASS", "fail": "FAIL", "deviation": "DEVIATION"}[r.status]
        line = f"{tag:9s} [{r.suite:<{width}s}] {r.name}"
        if r.details and r.status != "pass":
            line += f"\n          {r.details}"
        lines.append(line)
    counts = {s: sum(1 for r in results if r.status == s) for s in ("pass", "fail", "deviation")}
    lines.append(
        f"{counts['pass']} passed, {counts['fail']} failed, "
        f"{counts['deviation']} documented deviations"
    )
    return "\n".join(lines)
