"""Stored weighted Dynkin diagram tables for distinguished nilpotent orbits.

Labels are indexed by simple roots in Bourbaki order. The classical rows
are also reproduced by the sl2-weight recipe in orbits.py; the test suite
checks the two sources agree byte for byte. Exceptional labels follow the
naming convention of Carter's tables.
"""

from __future__ import annotations

#: source citations for the stored rows, keyed by table name
PROVENANCE = {
    "D": "Carter, Finite Groups of Lie Type (1985), pp. 174-175",
    "E6": "Carter, Finite Groups of Lie Type (1985), p. 176",
    "E7": "Carter, Finite Groups of Lie Type (1985), p. 176",
    "F4-Levi": "Carter, Finite Groups of Lie Type (1985), pp. 174-175",
}

#: distinguished orbits of so(2n), keyed by rank: (partition, labels)
D_TABLE: dict[int, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]] = {
    4: (
        ((5, 3), (2, 0, 2, 2)),
        ((7, 1), (2, 2, 2, 2)),
    ),
    5: (
        ((7, 3), (2, 2, 0, 2, 2)),
        ((9, 1), (2, 2, 2, 2, 2)),
    ),
    6: (
        ((7, 5), (2, 0, 2, 0, 2, 2)),
        ((9, 3), (2, 2, 2, 0, 2, 2)),
        ((11, 1), (2, 2, 2, 2, 2, 2)),
    ),
    7: (
        ((9, 5), (2, 2, 0, 2, 0, 2, 2)),
        ((11, 3), (2, 2, 2, 2, 0, 2, 2)),
        ((13, 1), (2, 2, 2, 2, 2, 2, 2)),
    ),
}

#: distinguished orbits of E6: (label, labels on alpha_1..alpha_6)
E6_TABLE: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("E6", (2, 2, 2, 2, 2, 2)),
    ("E6(a1)", (2, 2, 2, 0, 2, 2)),
    ("E6(a2)", (2, 0, 0, 2, 0, 2)),
)

#: distinguished orbits of E7: (label, labels on alpha_1..alpha_7)
E7_TABLE: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("E7", (2, 2, 2, 2, 2, 2, 2)),
    ("E7(a1)", (2, 2, 2, 0, 2, 2, 2)),
    ("E7(a2)", (2, 2, 2, 0, 2, 0, 2)),
    ("E7(a3)", (2, 0, 0, 2, 0, 2, 2)),
    ("E7(a4)", (2, 0, 0, 2, 0, 0, 2)),
    ("E7(a5)", (0, 0, 0, 2, 0, 0, 2)),
)

#: distinguished diagrams of the proper Levi types of F4 that are not
#: type A: (orbit label, factor type name, labels in Bourbaki order)
F4_LEVI_TABLE: tuple[tuple[str, str, tuple[int, ...]], ...] = (
    ("C2", "C2", (2, 2)),
    ("C3", "C3", (2, 2, 2)),
    ("C3(a1)", "C3", (2, 0, 2)),
    ("B3", "B3", (2, 2, 2)),
)
