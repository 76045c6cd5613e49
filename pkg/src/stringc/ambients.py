"""Named ambient groups for the exhaustive search.

Generator lists are built here (not read from data files) so the search
acceptance runs need no external group data.  Degree-6 projective actions
realize Alt_5 and Sym_5 transitively on 6 points; the degree-10 action of
Sym_6 is on partitions of {1..6} into two triples.
"""

from __future__ import annotations

from itertools import combinations

from .perms import PermGroup, Permutation, parse_perm


def _sym6_on_partitions():
    base = frozenset(range(1, 7))
    partitions = sorted(
        tuple(sorted([tuple(sorted(c)), tuple(sorted(base - frozenset(c)))]))
        for c in combinations(range(1, 7), 3)
    )
    partitions = sorted(set(partitions))
    index = {p: i for i, p in enumerate(partitions)}

    def act(perm_images):
        def apply_point(x):
            return perm_images[x - 1] + 1

        images = []
        for p in partitions:
            moved = tuple(
                sorted(tuple(sorted(apply_point(x) for x in triple)) for triple in p)
            )
            images.append(index[moved])
        return Permutation(images)

    transposition = parse_perm("(1,2)", 6).images
    cycle = parse_perm("(1,2,3,4,5,6)", 6).images
    return [act(transposition), act(cycle)]


def _builders():
    return {
        "sym4-deg4": lambda: [parse_perm("(1,2)", 4), parse_perm("(1,2,3,4)", 4)],
        "alt5-deg6": lambda: [
            parse_perm("(2,3,4,5,6)", 6),
            parse_perm("(1,2)(3,6)", 6),
        ],
        "sym5-deg6": lambda: [
            parse_perm("(2,3,4,5,6)", 6),
            parse_perm("(1,2)(3,6)", 6),
            parse_perm("(3,4,6,5)", 6),
        ],
        "s3wrS2-deg6": lambda: [
            parse_perm("(1,2)", 6),
            parse_perm("(1,2,3)", 6),
            parse_perm("(4,5)", 6),
            parse_perm("(1,4)(2,5)(3,6)", 6),
        ],
        "c2wrS3-deg6": lambda: [
            parse_perm("(1,4)", 6),
            parse_perm("(1,2)(4,5)", 6),
            parse_perm("(2,3)(5,6)", 6),
        ],
        "c2wrS4-deg8": lambda: [
            parse_perm("(1,5)", 8),
            parse_perm("(1,2)(5,6)", 8),
            parse_perm("(2,3)(6,7)", 8),
            parse_perm("(3,4)(7,8)", 8),
        ],
        "s4wrS2-deg8": lambda: [
            parse_perm("(1,2)", 8),
            parse_perm("(1,2,3,4)", 8),
            parse_perm("(1,5)(2,6)(3,7)(4,8)", 8),
        ],
        "sym6-deg10": _sym6_on_partitions,
    }


AMBIENT_ORDERS = {
    "sym4-deg4": 24,
    "alt5-deg6": 60,
    "sym5-deg6": 120,
    "s3wrS2-deg6": 72,
    "c2wrS3-deg6": 48,
    "c2wrS4-deg8": 384,
    "s4wrS2-deg8": 1152,
    "sym6-deg10": 720,
}


def ambient_names():
    return sorted(_builders())


def named_ambient(name) -> PermGroup:
    builders = _builders()
    if name not in builders:
        raise KeyError(
            f"unknown ambient {name!r}; known: {', '.join(sorted(builders))}"
        )
    group = PermGroup(builders[name]())
    expected = AMBIENT_ORDERS[name]
    if group.order() != expected:
        raise AssertionError(
            f"ambient {name} has order {group.order()}, expected {expected}"
        )
    return group


__all__ = ["named_ambient", "ambient_names", "AMBIENT_ORDERS"]
