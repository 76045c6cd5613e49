"""Acceptance criteria, one test per criterion.

Every criterion prints a single pass/fail line.  Criterion 1 is implemented
faithfully and is expected to fail on exactly three instances: the catalog
entries T8#5, T8#6 and T8#7 transcribe constructions that are not string
C-groups (independently confirmed by the naive oracle and a chain-free
brute-force closure; see the regression test in test_classify.py).  All
other criteria pass.
"""

import math
import os
import random
import time
from pathlib import Path

import pytest

from stringc.ambients import named_ambient
from stringc.analysis import (
    all_swap_permutation,
    block_action,
    classify_kernel,
    delta_vector,
    alpha_vector,
    table3_cell,
)
from stringc.classify import (
    brute_force_search,
    catalog_instances,
    exhaustive_search,
    verify_catalog,
)
from stringc.families import descriptor, instantiate_family
from stringc.perms import BlockSystem, PermGroup, Permutation
from stringc.prgraph import emit_dot, graph_to_sggi, parse_graph, sggi_to_graph
from stringc.sggi import Sggi, SggiError, check_intersection_property, schlafli

GOLDENS = Path(__file__).parent / "goldens"


def _line(number, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number}: {status} - {detail}")
    return ok


@pytest.fixture(scope="module")
def catalog_reports():
    started = time.perf_counter()
    reports = verify_catalog(14, jobs=max(1, os.cpu_count() or 1))
    elapsed = time.perf_counter() - started
    return reports, elapsed


def _table_reports(reports):
    return [
        r
        for r in reports
        if r.instance.split("#")[0] in ("T4", "T5", "T6", "T7", "T8")
    ]


class TestCriterion1:
    def test_catalog_verification_all_pass(self, catalog_reports):
        """Every admissible Tables 4-8 instance at n=14 verifies PASS."""
        reports, elapsed = catalog_reports
        failures = sorted(
            f"{r.instance}{r.params}" for r in _table_reports(reports)
            if not r.passed
        )
        ok = _line(
            1,
            not failures and elapsed < 120,
            f"{len(_table_reports(reports))} table instances, "
            f"failures: {failures or 'none'}, wall {elapsed:.1f}s",
        )
        assert ok, (
            "Criterion 1 is red on exactly the catalog entries T8#5, T8#6, "
            "T8#7, whose tabulated constructions provably violate the "
            "intersection property (the tabulated constructions are defective; see the "
            "decisions ledger and test_classify.TestVerifyInstance."
            "test_m2_table_defects_reported for the pinned evidence). "
            f"Failing instances: {failures}"
        )

    def test_all_other_instances_pass_within_budget(self, catalog_reports):
        """The satisfiable part: 48 of 51 table instances verify, < 120 s."""
        reports, elapsed = catalog_reports
        known_defects = {"T8#5", "T8#6", "T8#7"}
        unexpected = [
            f"{r.instance}{r.params}" for r in _table_reports(reports)
            if not r.passed and r.instance not in known_defects
        ]
        assert unexpected == []
        assert elapsed < 120, f"verify --n 14 --all took {elapsed:.1f}s"
        for rep in _table_reports(reports):
            if rep.instance in known_defects:
                continue
            rank_expected = 8 if rep.instance in (
                "T4#1", "T4#2", "T4#7", "T4#8") else 7
            assert rep.checks["rank"]["evidence"]["rank"] == rank_expected
            assert rep.checks["transitive"]["status"] == "pass"
            assert rep.checks["imprimitive"]["status"] == "pass"
            assert rep.checks["proper_subgroup"]["status"] == "pass"


class TestCriterion2:
    def test_p61_instances(self):
        """Both P61 instances: order 10080 = 2*7!, Schlafli {2,3,3,3,3,3}."""
        ok = True
        for fid in ("P61#1", "P61#2"):
            s = graph_to_sggi(instantiate_family(fid, {"n": 14}))
            group = PermGroup(list(s.gens), 14)
            ok = ok and group.order() == 2 * math.factorial(7)
            ok = ok and tuple(schlafli(s)) == (2, 3, 3, 3, 3, 3)
        assert _line(2, ok, "P61#1/P61#2 at n=14: order 10080, {2,3,3,3,3,3}")


class TestCriterion3:
    def test_rep2n_instances(self):
        """REP2N at n=7: orders 5040, transitive on 14, ranks 6 and 5."""
        s1 = graph_to_sggi(instantiate_family("REP2N#1", {"n": 7}))
        s2 = graph_to_sggi(instantiate_family("REP2N#2", {"n": 7}))
        g1 = PermGroup(list(s1.gens), 14)
        g2 = PermGroup(list(s2.gens), 14)
        ok = (
            g1.order() == g2.order() == 5040
            and g1.is_transitive()
            and g2.is_transitive()
            and (s1.rank, s2.rank) == (6, 5)
            and tuple(schlafli(s2))[:2] == (4, 6)
        )
        assert _line(
            3, ok,
            f"orders {g1.order()}/{g2.order()}, ranks {s1.rank}/{s2.rank}, "
            f"rank-5 Schlafli {schlafli(s2)}",
        )


class TestCriterion4:
    def test_table1_alt5_sym5(self):
        """Degree-6 primitive rows reproduced exactly, under 120 s."""
        started = time.perf_counter()
        alt5 = exhaustive_search(named_ambient("alt5-deg6"), 3, 5)
        sym5 = exhaustive_search(named_ambient("sym5-deg6"), 3, 5)
        elapsed = time.perf_counter() - started
        ok = (
            alt5.completed
            and sym5.completed
            and alt5.schlafli_set() == [(3, 5), (5, 5)]
            and sym5.schlafli_set()
            == [(3, 3, 3), (4, 5), (4, 6), (5, 6), (6, 6)]
            and elapsed < 120
        )
        assert _line(
            4, ok,
            f"Alt5 {alt5.schlafli_set()}, Sym5 {sym5.schlafli_set()}, "
            f"{elapsed:.1f}s",
        )

    @pytest.mark.skipif(
        not os.environ.get("STRINGC_STRETCH"),
        reason="stretch row (Sym6 on 10 points, 15-minute budget); "
        "set STRINGC_STRETCH=1 to run",
    )
    def test_table1_stretch_sym6(self):
        outcome = exhaustive_search(
            named_ambient("sym6-deg10"), 5, 5, budget_sec=900
        )
        assert not outcome.completed or (3, 3, 3, 3) in outcome.schlafli_set()
        if outcome.completed:
            assert outcome.schlafli_set() == [(3, 3, 3, 3)]
        _line(
            "4-stretch", True,
            f"Sym6-deg10 {outcome.schlafli_set()} "
            f"(completed: {outcome.completed}, {outcome.elapsed_sec:.0f}s)",
        )


class TestCriterion5:
    def test_table2_degree8_row(self):
        """The order-576 group 2^4:S3:S3 with {3,4,4,3} at rank 5, < 300 s.

        An order-384 ambient cannot contain an order-576 subgroup
        (Lagrange), so the search runs in S4 wr S2 (order 1152) filtered to
        subgroup order 576, parallel to the degree-6 order-72/order-36
        pattern.
        """
        started = time.perf_counter()
        outcome = exhaustive_search(
            named_ambient("s4wrS2-deg8"), 5, 5,
            subgroup_order=576, transitive_only=True,
        )
        elapsed = time.perf_counter() - started
        orders = sorted({sig.order for _, sig in outcome.items})
        ok = (
            outcome.completed
            and (3, 4, 4, 3) in outcome.schlafli_set()
            and orders == [576]
            and elapsed < 300
        )
        assert _line(
            5, ok,
            f"degree-8 row: {outcome.schlafli_set()} orders {orders}, "
            f"{elapsed:.1f}s",
        )

    def test_table2_degree6_rows(self):
        order48 = exhaustive_search(named_ambient("c2wrS3-deg6"), 4, 5)
        order72 = exhaustive_search(
            named_ambient("s3wrS2-deg6"), 4, 5,
            subgroup_order=36, transitive_only=True,
        )
        # Printed rows {2,3,3} and {2,3,4} reproduced; the suite additionally
        # finds {2,4,3} (C2 x hemicube) and the S3xS3 row comes out as
        # {3,2,3} -- the printed {2,3,3} needs a central involution S3xS3
        # does not have (ledger).
        found48 = set(order48.schlafli_set())
        assert {(2, 3, 3), (2, 3, 4)} <= found48
        assert order72.schlafli_set() == [(3, 2, 3)]

    def test_order384_wreath_has_no_rank5_c_group(self):
        outcome = exhaustive_search(named_ambient("c2wrS4-deg8"), 5, 5)
        assert outcome.items == []


class TestCriterion6:
    def test_kernel_classification_k2(self):
        """Kernel class never OTHER; wreath index constrained; all-swap
        membership at index 2^(m-1); over all k=2 instances, n in {14,18}."""
        violations = []
        for n in (14, 18):
            m = n // 2
            columns = BlockSystem(n, [(j, j + m) for j in range(1, m + 1)])
            for fid, params in catalog_instances(n):
                if fid.split("#")[0] not in ("T4", "T5", "T6", "T7"):
                    continue
                s = graph_to_sggi(
                    instantiate_family(fid, params)
                )
                group = PermGroup(list(s.gens), n)
                res = block_action(group, columns)
                kclass = classify_kernel(res, m)
                wreath_order = (2**m) * res.image_order
                if wreath_order % group.order():
                    violations.append((fid, params, "index not integral"))
                    continue
                index = wreath_order // group.order()
                if kclass == "OTHER":
                    violations.append((fid, params, "kernel OTHER"))
                if index not in (1, 2, 2 ** (m - 1), 2**m):
                    violations.append((fid, params, f"index {index}"))
                if index == 2 ** (m - 1):
                    if all_swap_permutation(columns) not in group:
                        violations.append((fid, params, "all-swap missing"))
        assert _line(6, not violations, f"violations: {violations or 'none'}")


class TestCriterion7:
    def test_delta_calculus(self):
        """T7: exactly {delta_x, delta_x+1} nontrivial, all named forms in
        the possibilities table; T6: exactly one U and rho_0 as classified."""
        columns = BlockSystem(14, [(j, j + 7) for j in range(1, 8)])
        violations = []
        for fid, params in catalog_instances(14):
            table = fid.split("#")[0]
            if table not in ("T6", "T7"):
                continue
            s = graph_to_sggi(instantiate_family(fid, params))
            deltas = {i: delta_vector(s, i, columns) for i in range(1, s.rank - 1)}
            alphas = {i: alpha_vector(s, i, columns) for i in range(1, s.rank)}
            for i, vec in deltas.items():
                cell = table3_cell(s.rank, i, alphas[i].form, alphas[i + 1].form)
                if cell != vec.form:
                    violations.append((fid, params, i, "table mismatch"))
                if vec.weight() % 2 and vec.form != ("U", None):
                    violations.append((fid, params, i, "odd delta"))
            nontrivial = sorted(
                i for i, v in deltas.items() if v.form != ("O", None)
            )
            if table == "T7":
                x = params["x"]
                if nontrivial != [x, x + 1]:
                    violations.append((fid, params, "window", nontrivial))
            else:
                u_at = [i for i, v in deltas.items() if v.form == ("U", None)]
                if len(u_at) != 1 or nontrivial != u_at:
                    violations.append((fid, params, "U count", u_at))
                from stringc.classify import kernel_vector_of_rho0

                rho0 = kernel_vector_of_rho0(s, columns)
                expected = descriptor(fid).expected["rho0"]
                if rho0 != expected:
                    violations.append((fid, params, "rho0", rho0))
        assert _line(7, not violations, f"violations: {violations or 'none'}")


class TestCriterion8:
    def test_oracle_equivalence_random(self):
        """Naive and recursive checks agree on 200 random sggis."""
        rng = random.Random(20260809)
        disagreements = 0
        produced = 0
        while produced < 200:
            degree = rng.randint(4, 12)
            rank = rng.randint(2, 5)
            gens = []
            for _ in range(rank):
                pts = list(range(1, degree + 1))
                rng.shuffle(pts)
                k = rng.randint(1, degree // 2)
                gens.append(
                    Permutation.from_cycles(
                        [[pts[2 * t], pts[2 * t + 1]] for t in range(k)], degree
                    )
                )
            try:
                s = Sggi(gens)
            except SggiError:
                continue
            produced += 1
            naive = check_intersection_property(s, "naive")
            recursive = check_intersection_property(s, "recursive")
            if naive.passed != recursive.passed:
                disagreements += 1
        assert _line(
            8, disagreements == 0,
            f"200 random sggis, {disagreements} disagreements",
        )

    def test_oracle_equivalence_catalog(self, catalog_reports):
        """Both modes agree wherever both ran on catalog instances."""
        reports, _ = catalog_reports
        for rep in reports:
            oracle = rep.checks.get("naive_oracle")
            if oracle and oracle["status"] != "skip":
                assert oracle["evidence"]["modes_agree"], rep.instance


class TestCriterion9:
    def test_round_trips_and_dot_goldens(self):
        """graph<->sggi round-trip on the golden corpus; DOT bit-exact."""
        prg_files = sorted(GOLDENS.glob("*.prg"))
        assert len(prg_files) == 59
        checked = 0
        for prg in prg_files:
            graph = parse_graph(prg.read_text())
            assert sggi_to_graph(graph_to_sggi(graph)) == graph
            dot_file = prg.with_suffix(".dot")
            assert emit_dot(graph) == dot_file.read_text()
            checked += 1
        assert _line(9, True, f"{checked} golden pairs round-trip, DOT bit-exact")


class TestCriterion10:
    def test_toy_completeness(self):
        """Pruned search over Sym4 equals the unpruned brute force."""
        ambient = named_ambient("sym4-deg4")
        pruned = exhaustive_search(ambient, 2, 3)
        brute = brute_force_search(ambient, 2, 3)
        same = [sig.key() for _, sig in pruned.items] == [
            sig.key() for _, sig in brute.items
        ]
        assert _line(
            10, same,
            f"Sym4: pruned {pruned.schlafli_set()} == brute {brute.schlafli_set()}",
        )
