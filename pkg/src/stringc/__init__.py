"""String C-groups over permutation groups: catalog, verification, search."""

__version__ = "0.1.0"
