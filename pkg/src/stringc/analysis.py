"""Block-action analysis for imprimitive sggis.

Covers the structural toolkit used by the verification harness: the action
on a block system with its kernel, the L/C/R decomposition of the generator
list, classification of kernels inside (C2)^m, and the delta calculus for
size-2 blocks (delta_i = (rho_i rho_{i+1})^3, recorded as a 0/1 vector over
the path-ordered blocks together with the table of admissible named forms).
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import BlockSystem, PermError, PermGroup, Permutation, StabilizerChain
from .sggi import IndexSet, Sggi


class AnalysisError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Block action and kernel.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockActionResult:
    image: PermGroup
    image_order: int
    kernel: PermGroup
    kernel_order: int
    kernel_generators: tuple

    def wreath_index(self):
        """Index of the analysed group inside C2 wr (image), size-2 blocks."""
        block_count = self.image.degree
        return (2**block_count * self.image_order) // (
            self.image_order * self.kernel_order
        )


def block_action(group: PermGroup, system: BlockSystem) -> BlockActionResult:
    """Image on block indices plus the kernel (block-fixing subgroup).

    Kernel generators come from a stabilizer chain on the action degree
    n + m whose base starts with the m block points.
    """
    if group.degree != system.degree:
        raise AnalysisError("group and block system degrees differ")
    n = group.degree
    m = system.block_count
    images = []
    combined = []
    for g in group.generators:
        try:
            act = system.action_on_blocks(g)
        except PermError as exc:
            raise AnalysisError(f"block system not invariant: {exc}") from exc
        images.append(act)
        combined.append(Permutation(list(g.images) + [n + a for a in act.images]))
    image = PermGroup(images, m)
    chain = StabilizerChain(combined, n + m, base_prefix=range(n, n + m))
    kernel_gens = tuple(
        Permutation(g.images[:n]) for g in chain.prefix_stabilizer_generators()
    )
    kernel = PermGroup(list(kernel_gens), n)
    result = BlockActionResult(
        image=image,
        image_order=image.order(),
        kernel=kernel,
        kernel_order=kernel.order(),
        kernel_generators=kernel_gens,
    )
    if result.image_order * result.kernel_order != group.order():
        raise AnalysisError("kernel/image order mismatch (chain bug)")
    return result


KERNEL_CLASSES = ("TRIVIAL", "C2", "C2^(m-1)", "C2^m", "OTHER")


def classify_kernel(result: BlockActionResult, m: int) -> str:
    """Classify the kernel among the subgroups of (C2)^m that occur."""
    order = result.kernel_order
    if order == 1:
        return "TRIVIAL"
    elementary = all(
        g.is_involution() for g in result.kernel_generators
    ) and all(
        a * b == b * a
        for i, a in enumerate(result.kernel_generators)
        for b in result.kernel_generators[i + 1 :]
    )
    if not elementary:
        return "OTHER"
    if order == 2:
        return "C2"
    if order == 2 ** (m - 1):
        return "C2^(m-1)"
    if order == 2**m:
        return "C2^m"
    return "OTHER"


def all_swap_permutation(system: BlockSystem) -> Permutation:
    """The involution swapping the two points of every size-2 block."""
    if system.block_size != 2:
        raise AnalysisError("all-swap needs blocks of size two")
    return Permutation.from_cycles([list(b) for b in system.blocks], system.degree)


# ---------------------------------------------------------------------------
# L/C/R decomposition.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LCRDecomposition:
    L: IndexSet
    C: IndexSet
    R: IndexSet

    def sizes(self):
        return (len(self.L), len(self.C), len(self.R))


def lcr_decompose(s: Sggi, system: BlockSystem) -> LCRDecomposition:
    """Deterministic L/C/R split of the generators against a block system.

    L: greedy minimal independent set of block-action images (scan 0..r-1,
    keep when the image falls outside the span of earlier keepers, then
    prune right-to-left); C: generators commuting with every kept one;
    R: the rest.
    """
    m = system.block_count
    images = []
    for g in s.gens:
        try:
            images.append(system.action_on_blocks(g))
        except PermError as exc:
            raise AnalysisError(f"block system not invariant: {exc}") from exc
    kept = []
    for idx in range(s.rank):
        span = PermGroup([images[i] for i in kept], m)
        if images[idx] not in span:
            kept.append(idx)
    for idx in sorted(kept, reverse=True):
        others = [images[i] for i in kept if i != idx]
        if images[idx] in PermGroup(others, m):
            kept.remove(idx)
    L = IndexSet(kept)
    C = IndexSet(
        idx
        for idx in range(s.rank)
        if idx not in L
        and all(s.gens[idx] * s.gens[i] == s.gens[i] * s.gens[idx] for i in L)
    )
    R = IndexSet(set(range(s.rank)) - L - C)
    return LCRDecomposition(L, C, R)


# ---------------------------------------------------------------------------
# Kernel vectors and the delta calculus (size-2 blocks).
# ---------------------------------------------------------------------------

NOT_IN_KERNEL = "NOT_IN_KERNEL"


@dataclass(frozen=True)
class KernelVector:
    """0/1 pattern of a block-fixing element over the path-ordered blocks.

    form is one of ("O",None), ("U",None), ("L",k), ("R",k), ("V",k),
    ("T",k) or ("OTHER",None); L/R/V/T carry the prefix length k.
    """

    bits: tuple
    form: tuple

    @property
    def name(self):
        kind, k = self.form
        return kind if k is None else f"{kind}{k}"

    def weight(self):
        return sum(self.bits)

    def __str__(self):
        return "(" + "".join(map(str, self.bits)) + f")={self.name}"


def _classify_bits(bits):
    m = len(bits)
    ones = sum(bits)
    if ones == 0:
        return ("O", None)
    if ones == m:
        return ("U", None)
    # leading block of ones then zeros: L_k
    k = 0
    while k < m and bits[k] == 1:
        k += 1
    if all(b == 0 for b in bits[k:]):
        return ("L", k)
    zeros = 0
    while zeros < m and bits[zeros] == 0:
        zeros += 1
    if all(b == 1 for b in bits[zeros:]):
        return ("R", zeros)
    if k >= 1:
        gap = 0
        j = k
        while j < m and bits[j] == 0:
            gap += 1
            j += 1
        if all(b == 1 for b in bits[j:]) and j < m:
            if gap == 2:
                return ("V", k)
            if gap == 3:
                return ("T", k)
    return ("OTHER", None)


def kernel_vector(perm: Permutation, ordered_blocks) -> KernelVector:
    """Vector of a permutation that fixes every (size-2) block setwise."""
    bits = []
    for a, b in ordered_blocks:
        if perm.apply(a) == b and perm.apply(b) == a:
            bits.append(1)
        elif perm.apply(a) == a and perm.apply(b) == b:
            bits.append(0)
        else:
            raise AnalysisError("permutation does not fix the blocks")
    bits = tuple(bits)
    return KernelVector(bits, _classify_bits(bits))


def block_path_order(s: Sggi, system: BlockSystem):
    """Blocks ordered along the block-action path.

    Every generator with nontrivial block image must induce a transposition;
    the union of those edges must be a path.  The first block is the
    degree-1 endpoint whose incident edge label is smallest.
    """
    m = system.block_count
    adj = {i: [] for i in range(m)}
    for lbl, g in enumerate(s.gens):
        act = system.action_on_blocks(g)
        cycles = act.cycles()
        if not cycles:
            continue
        if len(cycles) != 1 or len(cycles[0]) != 2:
            raise AnalysisError(
                f"generator {lbl} does not act as a block transposition"
            )
        a, b = cycles[0][0] - 1, cycles[0][1] - 1
        adj[a].append((lbl, b))
        adj[b].append((lbl, a))
    degrees = {v: len(e) for v, e in adj.items()}
    endpoints = [v for v, d in degrees.items() if d == 1]
    if sorted(degrees.values())[-1] > 2 or len(endpoints) != 2:
        raise AnalysisError("block action is not a path")
    start = min(endpoints, key=lambda v: (min(lbl for lbl, _ in adj[v]), v))
    order = [start]
    prev = None
    while len(order) < m:
        nxt = [w for _, w in adj[order[-1]] if w != prev]
        if not nxt:
            raise AnalysisError("block action path is disconnected")
        prev = order[-1]
        order.append(nxt[0])
    return [system.blocks[i] for i in order]


def delta_vector(s: Sggi, i: int, system: BlockSystem):
    """delta_i = (rho_i rho_{i+1})^3 as a kernel vector, or NOT_IN_KERNEL."""
    if not 1 <= i <= s.rank - 2:
        raise AnalysisError(f"delta index {i} outside 1..{s.rank - 2}")
    if system.block_size != 2:
        raise AnalysisError("delta calculus needs blocks of size two")
    delta = (s.gens[i] * s.gens[i + 1]) ** 3
    ordered = block_path_order(s, system)
    try:
        return kernel_vector(delta, ordered)
    except AnalysisError:
        return NOT_IN_KERNEL


def alpha_vector(s: Sggi, i: int, system: BlockSystem):
    """Vector of alpha_i in rho_i = alpha_i beta_i, with beta_i the
    row-paired swap of the path-adjacent blocks i, i+1 (1-based)."""
    if not 1 <= i <= s.rank - 1:
        raise AnalysisError(f"alpha index {i} outside 1..{s.rank - 1}")
    if system.block_size != 2:
        raise AnalysisError("alpha factorization needs blocks of size two")
    ordered = block_path_order(s, system)
    left, right = ordered[i - 1], ordered[i]
    beta = Permutation.from_cycles(
        [[left[0], right[0]], [left[1], right[1]]], s.degree
    )
    act = system.action_on_blocks(s.gens[i])
    cycles = act.cycles()
    wanted = {system.blocks.index(left) + 1, system.blocks.index(right) + 1}
    if len(cycles) != 1 or set(cycles[0]) != wanted:
        raise AnalysisError(
            f"generator {i} does not swap the path-adjacent blocks {i},{i + 1}"
        )
    alpha = s.gens[i] * beta
    return kernel_vector(alpha, ordered)


# ---------------------------------------------------------------------------
# Possibilities for delta_i given (alpha_i, alpha_{i+1}).
# ---------------------------------------------------------------------------

ODD = "odd"


def table3_cell(r: int, i: int, row_form, col_form):
    """Expected named form of delta_i (or ODD), or None if the pair is not a
    row/column of the table for this index."""
    table = _table3(r, i)
    return table.get((row_form, col_form))


def _table3(r, i):
    O = ("O", None)
    U = ("U", None)

    def L(k):
        return ("L", k)

    def R(k):
        return ("R", k)

    def V(k):
        return ("V", k)

    def T(k):
        return ("T", k)

    if i == 1:
        return {
            (O, O): O,
            (O, L(1)): ODD,
            (O, R(3)): R(3),
            (O, V(1)): U,
            (R(2), O): U,
            (R(2), L(1)): R(3),
            (R(2), R(3)): ODD,
            (R(2), V(1)): O,
        }
    if i == r - 2:
        return {
            (O, O): O,
            (O, L(r - 2)): U,
            (L(r - 3), O): L(r - 3),
            (L(r - 3), L(r - 2)): ODD,
            (R(r - 1), O): ODD,
            (R(r - 1), L(r - 2)): L(r - 3),
            (V(r - 3), O): U,
            (V(r - 3), L(r - 2)): O,
        }
    return {
        (O, O): O,
        (O, L(i)): L(i + 2),
        (O, R(i + 2)): R(i + 2),
        (O, V(i)): U,
        (L(i - 1), O): L(i - 1),
        (L(i - 1), L(i)): ODD,
        (L(i - 1), R(i + 2)): T(i - 1),
        (L(i - 1), V(i)): R(i - 1),
        (R(i + 1), O): R(i - 1),
        (R(i + 1), L(i)): T(i - 1),
        (R(i + 1), R(i + 2)): ODD,
        (R(i + 1), V(i)): L(i - 1),
        (V(i - 1), O): U,
        (V(i - 1), L(i)): R(i + 2),
        (V(i - 1), R(i + 2)): L(i + 2),
        (V(i - 1), V(i)): O,
    }


__all__ = [
    "AnalysisError",
    "BlockActionResult",
    "block_action",
    "KERNEL_CLASSES",
    "classify_kernel",
    "all_swap_permutation",
    "LCRDecomposition",
    "lcr_decompose",
    "KernelVector",
    "kernel_vector",
    "block_path_order",
    "delta_vector",
    "alpha_vector",
    "NOT_IN_KERNEL",
    "ODD",
    "table3_cell",
]
