"""Verification harness and exhaustive small-degree search.

verify_instance runs every checkable claim about one catalog instance and
returns a structured report; verify_catalog sweeps a whole degree.
exhaustive_search enumerates ordered involution tuples of a small ambient
group with lossless pruning (commuting property, independence, divisibility
and incremental interval intersection checks) and returns the string
C-groups found, deduplicated by signature and duality.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .ambients import named_ambient
from .analysis import (
    NOT_IN_KERNEL,
    AnalysisError,
    all_swap_permutation,
    alpha_vector,
    block_action,
    classify_kernel,
    delta_vector,
    lcr_decompose,
    table3_cell,
)
from .families import descriptor, family_catalog, duality_partner
from .perms import BlockSystem, PermGroup, Permutation
from .prgraph import graph_to_sggi, is_connected, sggi_to_graph
from .sggi import (
    IPBudgetExceeded,
    Sggi,
    SubsetLattice,
    check_intersection_property,
    dual,
    is_independent,
    schlafli,
)


# ---------------------------------------------------------------------------
# Signatures.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    """Conjugation-invariant fingerprint of an sggi.

    A necessary-but-not-sufficient isomorphism invariant: equal signatures
    are merged during deduplication and flagged, distinct signatures are
    certainly distinct C-groups.
    """

    degree: int
    rank: int
    order: int
    schlafli: tuple
    gen_cycle_types: tuple
    block_shapes: tuple
    kernel_classes: tuple

    def key(self):
        return (
            self.degree,
            self.rank,
            self.order,
            self.schlafli,
            self.gen_cycle_types,
            self.block_shapes,
            self.kernel_classes,
        )


def signature(s: Sggi) -> Signature:
    group = PermGroup(list(s.gens), s.degree)
    if group.is_transitive():
        systems = group.minimal_block_systems()
        shapes = tuple(sorted((b.block_count, b.block_size) for b in systems))
        kernels = tuple(
            sorted(
                classify_kernel(block_action(group, b), b.block_count)
                for b in systems
            )
        )
    else:
        shapes = ()
        kernels = ()
    return Signature(
        degree=s.degree,
        rank=s.rank,
        order=group.order(),
        schlafli=tuple(schlafli(s)) if s.rank >= 2 else (),
        gen_cycle_types=tuple(sorted(g.cycle_type() for g in s.gens)),
        block_shapes=shapes,
        kernel_classes=kernels,
    )


# ---------------------------------------------------------------------------
# Reports.
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    instance: str
    params: dict
    checks: dict = field(default_factory=dict)
    schlafli: tuple = ()
    order: int = 0
    timing_ms: float = 0.0

    def record(self, name, status, **evidence):
        self.checks[name] = {"status": status, "evidence": evidence}

    @property
    def passed(self):
        return all(c["status"] != "fail" for c in self.checks.values())

    def to_dict(self, no_timing=False):
        out = {
            "instance": self.instance,
            "params": self.params,
            "checks": self.checks,
            "schlafli": list(self.schlafli),
            "order": self.order,
            "status": "PASS" if self.passed else "FAIL",
        }
        if not no_timing:
            out["timing_ms"] = round(self.timing_ms, 1)
        return out


def _expect(report, name, condition, **evidence):
    report.record(name, "pass" if condition else "fail", **evidence)


# ---------------------------------------------------------------------------
# Per-instance verification.
# ---------------------------------------------------------------------------

NAIVE_ORACLE_MAX_RANK = 7


def _column_system(degree):
    half = degree // 2
    return BlockSystem(degree, [(j, j + half) for j in range(1, half + 1)])


def _two_block_system(group):
    for system in group.all_block_systems():
        if system.block_count == 2:
            return system
    return None


def _expected_lcr_sizes(tag, rank):
    left, mid, right = tag.split(",")

    def value(expr):
        if expr.startswith("r"):
            return rank - int(expr.split("-")[1]) if "-" in expr else rank
        return int(expr)

    return (value(left), value(mid), value(right))


def verify_instance(family_id, params, with_duality=True) -> VerificationReport:
    """Run every checkable predicate for one instance."""
    started = time.perf_counter()
    desc = descriptor(family_id)
    params = dict(params)
    n = params["n"]
    build_params = {k: v for k, v in params.items() if k != "n"}
    report = VerificationReport(instance=family_id, params=params)

    try:
        graph = desc.instantiate(n, build_params)
        report.record("graph_valid", "pass", edges=len(graph.edges))
    except Exception as exc:  # domain or structural failure
        report.record("graph_valid", "fail", error=str(exc))
        report.timing_ms = (time.perf_counter() - started) * 1000
        return report

    try:
        s = graph_to_sggi(graph)
        Sggi(s.gens)  # strict re-validation (distinctness included)
        report.record("sggi_valid", "pass", rank=s.rank, degree=s.degree)
    except Exception as exc:
        report.record("sggi_valid", "fail", error=str(exc))
        report.timing_ms = (time.perf_counter() - started) * 1000
        return report

    group = PermGroup(list(s.gens), s.degree).finalize()
    order = group.order()
    symbol = schlafli(s)
    report.order = order
    report.schlafli = tuple(symbol)

    _expect(report, "rank", s.rank == desc.rank_for(n),
            rank=s.rank, expected=desc.rank_for(n))
    _expect(report, "round_trip", sggi_to_graph(s) == graph)
    _expect(report, "independent", is_independent(s))

    lattice = SubsetLattice(s)
    try:
        recursive = check_intersection_property(s, "recursive", lattice=lattice)
        report.record(
            "intersection_property",
            "pass" if recursive.passed else "fail",
            witness=_witness_str(recursive),
        )
    except IPBudgetExceeded as exc:
        recursive = None
        report.record("intersection_property", "skip", reason=str(exc))
    if s.rank <= NAIVE_ORACLE_MAX_RANK:
        try:
            naive = check_intersection_property(s, "naive", lattice=lattice)
            agree = recursive is None or naive.passed == recursive.passed
            report.record(
                "naive_oracle",
                "pass" if naive.passed and agree else "fail",
                naive=naive.passed,
                modes_agree=agree,
                witness=_witness_str(naive),
            )
        except IPBudgetExceeded as exc:
            report.record("naive_oracle", "skip", reason=str(exc))

    _expect(report, "transitive", group.is_transitive() == is_connected(graph)
            and group.is_transitive())

    is_table = desc.table in ("T4", "T5", "T6", "T7", "T8", "P61")
    if is_table:
        _expect(report, "proper_subgroup", order < math.factorial(s.degree),
                order=order)
        systems = group.minimal_block_systems()
        _expect(report, "imprimitive", bool(systems),
                systems=[(b.block_count, b.block_size) for b in systems])

    expected = desc.expected
    if expected.get("order") == "2*(n/2)!":
        _expect(report, "order_expected", order == 2 * math.factorial(n // 2),
                order=order)
    elif expected.get("order") == "n!":
        _expect(report, "order_expected", order == math.factorial(n),
                order=order)

    tag = expected.get("schlafli")
    if tag:
        _expect(report, "schlafli_expected",
                _schlafli_matches(tag, tuple(symbol)), schlafli=str(symbol))

    if expected.get("blocks") == "k2":
        _verify_k2(report, desc, s, group, n, build_params)
    elif expected.get("blocks") == "m2":
        _verify_m2(report, desc, s, group, n)

    if with_duality:
        try:
            partner = duality_partner(family_id, n)
        except Exception:
            partner = None
        dd = sggi_to_graph(dual(dual(s))) == graph
        report.record("duality", "pass" if dd else "fail",
                      partner=partner if partner else "unlisted",
                      dual_is_involution=dd)

    report.timing_ms = (time.perf_counter() - started) * 1000
    return report


def _witness_str(result):
    if result.passed:
        return None
    j, k = result.witness
    return [sorted(j), sorted(k)]


def _schlafli_matches(tag, symbol):
    if tag == "3..3":
        return all(p == 3 for p in symbol)
    if tag == "2,3..3":
        return symbol[0] == 2 and all(p == 3 for p in symbol[1:])
    if tag == "4,6,3..3":
        return symbol[:2] == (4, 6) and all(p == 3 for p in symbol[2:])
    raise ValueError(f"unknown schlafli tag {tag}")


def _verify_k2(report, desc, s, group, n, build_params):
    m = n // 2
    columns = _column_system(n)
    _expect(
        report,
        "column_blocks",
        all(columns.is_invariant_under(g) for g in group.generators)
        and columns in group.minimal_block_systems(),
    )

    res = block_action(group, columns)
    kclass = classify_kernel(res, m)
    _expect(report, "kernel_class", kclass != "OTHER", kernel_class=kclass,
            kernel_order=res.kernel_order)

    wreath_order = (2**m) * res.image_order
    index = wreath_order // group.order()
    _expect(report, "wreath_index",
            wreath_order % group.order() == 0
            and index in (1, 2, 2 ** (m - 1), 2**m),
            index=index)
    if index == 2 ** (m - 1):
        _expect(report, "all_swap_member",
                all_swap_permutation(columns) in group)

    dec = lcr_decompose(s, columns)
    expected_sizes = _expected_lcr_sizes(desc.expected["lcr"], s.rank)
    _expect(report, "lcr", dec.sizes() == expected_sizes,
            sizes=dec.sizes(), expected=expected_sizes)
    _expect(report, "lcr_bounds", len(dec.C) <= 1 and len(dec.L) <= m - 1,
            C=len(dec.C), L=len(dec.L))

    if desc.table in ("T6", "T7"):
        _verify_delta_calculus(report, desc, s, columns, m, build_params)


def _verify_delta_calculus(report, desc, s, columns, m, build_params):
    g0 = PermGroup(list(s.gens[1:]), s.degree)
    res0 = block_action(g0, columns)
    kclass0 = classify_kernel(res0, m)
    expected0 = "C2" if desc.table == "T6" else "C2^(m-1)"
    _expect(report, "kernel_g0", kclass0 == expected0,
            kernel_class=kclass0, expected=expected0)

    deltas = {}
    alphas = {}
    for i in range(1, s.rank - 1):
        deltas[i] = delta_vector(s, i, columns)
        alphas[i] = alpha_vector(s, i, columns)
    alphas[s.rank - 1] = alpha_vector(s, s.rank - 1, columns)

    in_kernel = all(v is not NOT_IN_KERNEL for v in deltas.values())
    _expect(report, "deltas_block_fixing", in_kernel)
    if not in_kernel:
        return

    parity_ok = all(
        v.weight() % 2 == 0 or v.form == ("U", None) for v in deltas.values()
    )
    _expect(report, "deltas_even_or_allswap", parity_ok)

    table_ok = True
    mismatches = []
    for i in range(1, s.rank - 1):
        cell = table3_cell(s.rank, i, alphas[i].form, alphas[i + 1].form)
        if cell != deltas[i].form:
            table_ok = False
            mismatches.append(
                {"i": i, "alpha_i": alphas[i].name,
                 "alpha_next": alphas[i + 1].name,
                 "delta": deltas[i].name, "table": str(cell)}
            )
    _expect(report, "deltas_match_table", table_ok, mismatches=mismatches)

    nontrivial = sorted(i for i, v in deltas.items() if v.form != ("O", None))
    if desc.table == "T6":
        u_indices = [i for i, v in deltas.items() if v.form == ("U", None)]
        expected_u = _expected_u_index(desc, s.rank, build_params)
        _expect(report, "unique_u_delta",
                nontrivial == u_indices and len(u_indices) == 1
                and u_indices[0] == expected_u,
                u_indices=u_indices, expected=expected_u)
        rho0 = kernel_vector_of_rho0(s, columns)
        expected_rho0 = desc.expected["rho0"]
        _expect(report, "rho0_vector", rho0 == expected_rho0,
                rho0=rho0, expected=expected_rho0)
    else:  # T7
        x = build_params["x"]
        _expect(report, "delta_window", nontrivial == [x, x + 1],
                nontrivial=nontrivial, expected=[x, x + 1])
        rho0 = kernel_vector_of_rho0(s, columns)
        _expect(report, "rho0_vector", rho0 == "U", rho0=rho0, expected="U")


def kernel_vector_of_rho0(s, columns):
    from .analysis import block_path_order, kernel_vector

    ordered = block_path_order(s, columns)
    try:
        return kernel_vector(s.gens[0], ordered).name
    except AnalysisError:
        return NOT_IN_KERNEL


def _expected_u_index(desc, rank, build_params):
    tag = desc.expected["u_index"]
    if tag == "i":
        return build_params["i"]
    if tag == "1":
        return 1
    if tag == "r-2":
        return rank - 2
    raise ValueError(tag)


def _verify_m2(report, desc, s, group, n):
    two = _two_block_system(group)
    _expect(report, "two_block_system", two is not None)
    if two is None:
        return
    res = block_action(group, two)
    _expect(report, "two_block_image", res.image_order == 2,
            image_order=res.image_order)
    dec = lcr_decompose(s, two)
    expected_sizes = _expected_lcr_sizes(desc.expected["lcr"], s.rank)
    _expect(report, "lcr", dec.sizes() == expected_sizes,
            sizes=dec.sizes(), expected=expected_sizes)
    _expect(report, "lcr_bounds", len(dec.C) <= two.block_size - 1,
            C=len(dec.C))


# ---------------------------------------------------------------------------
# Catalog sweep.
# ---------------------------------------------------------------------------


def catalog_instances(n):
    """(family_id, params) pairs admissible on n points."""
    out = []
    for desc in family_catalog():
        if desc.table == "REP2N":
            if n % 2 != 0:
                continue
            param_n = n // 2
        else:
            param_n = n
        if desc.domain_error(param_n):
            continue
        if desc.degree_for(param_n) != n:
            continue
        for params in desc.param_sweep(param_n):
            out.append((desc.id, {"n": param_n, **params}))
    return out


def _verify_star(args):
    return verify_instance(*args)


def verify_catalog(n, ids=None, jobs=1):
    """Verify every admissible instance on n points; returns reports."""
    if n % 2 == 0 and n // 2 < 7:
        raise ValueError(f"catalog degrees need n/2 >= 7, got n = {n}")
    work = [
        (fid, params, True)
        for fid, params in catalog_instances(n)
        if ids is None or fid in ids
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_star, work))
    else:
        reports = [_verify_star(item) for item in work]
    return reports


def reports_to_json(reports, no_timing=False):
    return json.dumps(
        [r.to_dict(no_timing=no_timing) for r in reports], indent=2
    ) + "\n"


# ---------------------------------------------------------------------------
# Exhaustive search.
# ---------------------------------------------------------------------------


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchOutcome:
    items: list  # (Sggi, Signature), deduplicated, deterministic order
    completed: bool
    elapsed_sec: float
    merged_duplicates: int = 0  # tuples merged by equal signature or duality

    def schlafli_set(self):
        return sorted({item[1].schlafli for item in self.items})


class _AmbientModel:
    """Index arithmetic for a small group: elements as 0..N-1."""

    TABLE_LIMIT = 4096

    def __init__(self, group: PermGroup):
        order = group.order()
        if order > 10**6:
            raise ValueError(
                f"ambient of order {order} exceeds the search budget 10^6"
            )
        self.group = group
        self.elements = sorted(group.elements())
        self.index = {g.images: i for i, g in enumerate(self.elements)}
        self.identity = self.index[tuple(range(group.degree))]
        self.order = len(self.elements)
        if self.order <= self.TABLE_LIMIT:
            self._table = [
                [self.index[(a * b).images] for b in self.elements]
                for a in self.elements
            ]
        else:
            self._table = None

    def mul(self, a, b):
        if self._table is not None:
            return self._table[a][b]
        return self.index[(self.elements[a] * self.elements[b]).images]

    def involution_indices(self):
        return [i for i, g in enumerate(self.elements) if g.is_involution()]

    def subgroup_closure(self, gens):
        """Index set of the subgroup generated by the given element indices."""
        current = {self.identity}
        frontier = [self.identity]
        if self._table is not None:
            table = self._table
            while frontier:
                nxt = []
                for a in frontier:
                    row = table[a]
                    for g in gens:
                        b = row[g]
                        if b not in current:
                            current.add(b)
                            nxt.append(b)
                frontier = nxt
        else:
            while frontier:
                nxt = []
                for a in frontier:
                    for g in gens:
                        b = self.mul(a, g)
                        if b not in current:
                            current.add(b)
                            nxt.append(b)
                frontier = nxt
        return frozenset(current)

    def index2_subgroups(self):
        """Element sets of all index-2 subgroups.

        Every hom to C2 kills squares and commutators, so the index-2
        subgroups are exactly the preimages of the hyperplanes of the
        elementary abelian quotient by the subgroup those generate.
        """
        from itertools import combinations

        seeds = {self.mul(i, i) for i in range(self.order)}
        gens = [self.index[g.images] for g in self.group.generators]
        inv = {i: self.index[self.elements[i].inverse().images] for i in gens}
        for a in gens:
            for b in gens:
                seeds.add(self.mul(self.mul(a, b), self.mul(inv[a], inv[b])))
        core = self.subgroup_closure(sorted(seeds))
        if len(core) == self.order:
            return []
        cosets = []
        seen = set()
        for i in range(self.order):
            if i in seen:
                continue
            coset = frozenset(self.mul(i, c) for c in core)
            seen |= coset
            cosets.append(coset)
        member = {}
        for idx, coset in enumerate(cosets):
            for e in coset:
                member[e] = idx
        identity_idx = member[self.identity]
        q = len(cosets)
        reps = [min(c) for c in cosets]
        qmul = [
            [member[self.mul(reps[a], reps[b])] for b in range(q)]
            for a in range(q)
        ]
        out = []
        rest = [i for i in range(q) if i != identity_idx]
        for half in combinations(rest, q // 2 - 1):
            chosen = {identity_idx, *half}
            if all(qmul[a][b] in chosen for a in chosen for b in chosen):
                out.append(
                    frozenset().union(*(cosets[i] for i in chosen))
                )
        return out


def _accepts(model, intervals, depth, target):
    return len(intervals[(0, depth - 1)]) == target


def exhaustive_search(
    ambient: PermGroup,
    min_rank: int,
    max_rank: int,
    subgroup_order=None,
    budget_sec=None,
    jobs=1,
    transitive_only=False,
) -> SearchOutcome:
    """Enumerate string C-groups generated by ordered involution tuples.

    Accepted tuples generate the whole ambient (or a subgroup of exactly
    subgroup_order when given), satisfy the commuting property, and pass the
    incremental interval intersection-property criterion (lossless pruning;
    every interval parabolic of a string C-group is itself a string
    C-group).  Results are deduplicated by signature and duality; output
    order is deterministic and independent of the worker count.
    transitive_only drops intransitive subgroups (only possible when
    subgroup_order is given).
    """
    if min_rank < 2:
        raise ValueError("min_rank must be at least 2")
    target = subgroup_order or ambient.order()
    if ambient.order() % target:
        raise ValueError("subgroup_order must divide the ambient order")
    started = time.perf_counter()
    if jobs > 1:
        raw, completed = _parallel_raw_search(
            ambient, min_rank, max_rank, target, budget_sec, jobs
        )
    else:
        model = _AmbientModel(ambient)
        raw, completed = _raw_search(
            model, min_rank, max_rank, target, budget_sec, None
        )
        raw = [[model.elements[e].images for e in combo] for combo in raw]
    if transitive_only:
        raw = [
            combo
            for combo in raw
            if PermGroup(
                [Permutation(im) for im in combo], ambient.degree
            ).is_transitive()
        ]
    items, merged = _dedup(ambient.degree, raw)
    return SearchOutcome(items, completed, time.perf_counter() - started, merged)


def _raw_search(model, min_rank, max_rank, target, budget_sec, first_slice):
    """DFS over element indices; returns accepted tuples (element indices).

    first_slice restricts the depth-0 candidates (for parallel splitting).
    """
    invs = model.involution_indices()
    npos = len(invs)
    commute = []
    for i in range(npos):
        mask = 0
        for j in range(npos):
            if model.mul(invs[i], invs[j]) == model.mul(invs[j], invs[i]):
                mask |= 1 << j
        commute.append(mask)
    all_mask = (1 << npos) - 1

    half_masks = None
    if target * 2 == model.order:
        subgroups = model.index2_subgroups()
        if subgroups:
            half_masks = []
            for i in range(npos):
                mask = 0
                for k, sub in enumerate(subgroups):
                    if invs[i] in sub:
                        mask |= 1 << k
                half_masks.append(mask)

    deadline = None if budget_sec is None else time.perf_counter() + budget_sec
    found = []
    completed = [True]

    def dfs(tuple_pos, intervals, half_mask):
        depth = len(tuple_pos)
        if deadline is not None and time.perf_counter() > deadline:
            completed[0] = False
            return
        if depth >= min_rank and len(intervals[(0, depth - 1)]) == target:
            if invs[tuple_pos[0]] <= invs[tuple_pos[-1]]:
                # The reversed tuple generates the dual sggi; duality
                # deduplication makes exploring both redundant.
                found.append([invs[p] for p in tuple_pos])
        if depth == max_rank:
            return
        allowed = all_mask
        for p in tuple_pos[:-1]:
            allowed &= commute[p]
        if depth == 0 and first_slice is not None:
            slice_mask = 0
            for p in first_slice:
                slice_mask |= 1 << p
            allowed &= slice_mask
        remaining_for_min = max(0, min_rank - depth - 1)
        mask = allowed
        while mask:
            low = mask & -mask
            pos = low.bit_length() - 1
            mask ^= low
            gen = invs[pos]
            if depth and gen in intervals[(0, depth - 1)]:
                continue  # dependent candidates can never pass the IP
            new_half = half_mask
            if half_masks is not None:
                new_half = half_mask & half_masks[pos]
                if not new_half:
                    continue  # no common index-2 subgroup remains
            new_intervals = dict(intervals)
            new_intervals[(depth, depth)] = frozenset(
                (model.identity, gen)
            )
            for a in range(depth - 1, -1, -1):
                gens_idx = [invs[p] for p in tuple_pos[a:]] + [gen]
                new_intervals[(a, depth)] = model.subgroup_closure(gens_idx)
            order = len(new_intervals[(0, depth)])
            if target % order or order * (2**remaining_for_min) > target:
                continue
            ip_ok = True
            for a in range(0, depth - 1):
                left = new_intervals[(a, depth - 1)]
                right = new_intervals[(a + 1, depth)]
                middle = new_intervals[(a + 1, depth - 1)]
                if len(left & right) != len(middle):
                    ip_ok = False
                    break
            if not ip_ok:
                continue
            tuple_pos.append(pos)
            dfs(tuple_pos, new_intervals, new_half)
            tuple_pos.pop()

    dfs([], {}, (1 << 64) - 1)
    return found, completed[0]


def _search_chunk(args):
    gens_images, degree, min_rank, max_rank, target, budget_sec, chunk = args
    group = PermGroup([Permutation(im) for im in gens_images], degree)
    model = _AmbientModel(group)
    raw, completed = _raw_search(
        model, min_rank, max_rank, target, budget_sec, chunk
    )
    return (
        [[model.elements[e].images for e in combo] for combo in raw],
        completed,
    )


def _parallel_raw_search(ambient, min_rank, max_rank, target, budget_sec, jobs):
    model = _AmbientModel(ambient)
    npos = len(model.involution_indices())
    slices = [list(range(i, npos, jobs)) for i in range(jobs)]
    gens_images = [g.images for g in ambient.generators]
    work = [
        (gens_images, ambient.degree, min_rank, max_rank, target, budget_sec,
         chunk)
        for chunk in slices
        if chunk
    ]
    raw = []
    completed = True
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk_raw, chunk_done in pool.map(_search_chunk, work):
            raw.extend(chunk_raw)
            completed = completed and chunk_done
    return raw, completed


def _dedup(degree, raw_tuples):
    """Signature+duality deduplication over raw generator-image tuples.

    The stored representative is the orientation (sggi or its dual) with the
    lexicographically smaller signature, so reported Schlafli symbols are
    canonical under reversal.
    """
    merged = 0
    items = {}
    for images_list in sorted(raw_tuples):
        gens = [Permutation(images) for images in images_list]
        s = Sggi(gens)
        sig = signature(s)
        co = dual(s)
        co_sig = signature(co)
        if co_sig.key() < sig.key():
            s, sig = co, co_sig
        key = sig.key()
        if key in items:
            merged += 1
            continue
        items[key] = (s, sig)
    ordered = [items[k] for k in sorted(items)]
    return ordered, merged


def search_named_ambient(name, min_rank, max_rank=None, subgroup_order=None,
                         budget_sec=None, jobs=1):
    ambient = named_ambient(name)
    if max_rank is None:
        max_rank = ambient.degree - 1
    return exhaustive_search(
        ambient, min_rank, max_rank, subgroup_order=subgroup_order,
        budget_sec=budget_sec, jobs=jobs,
    )


def brute_force_search(ambient: PermGroup, min_rank, max_rank):
    """Unpruned oracle: all involution tuples, naive IP check at the end.

    Only usable for toy ambients; certifies that the pruned search is
    lossless (same deduplicated output).
    """
    from itertools import product

    model = _AmbientModel(ambient)
    invs = model.involution_indices()
    raw = []
    for rank in range(min_rank, max_rank + 1):
        for combo in product(invs, repeat=rank):
            gens = [model.elements[i] for i in combo]
            try:
                s = Sggi(gens)
            except Exception:
                continue
            if PermGroup(gens, ambient.degree).order() != ambient.order():
                continue
            if not check_intersection_property(s, "naive").passed:
                continue
            raw.append([g.images for g in gens])
    items, merged = _dedup(ambient.degree, raw)
    return SearchOutcome(items, True, 0.0, merged)


__all__ = [
    "Signature",
    "signature",
    "VerificationReport",
    "verify_instance",
    "verify_catalog",
    "catalog_instances",
    "reports_to_json",
    "SearchOutcome",
    "SearchBudgetExceeded",
    "exhaustive_search",
    "search_named_ambient",
    "brute_force_search",
]
