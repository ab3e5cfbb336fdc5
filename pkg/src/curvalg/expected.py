"""Reference values the reports are checked against.

These are fixed known-good results, kept as data so that a failure
cleanly separates "computation drifted" from "reference mistyped".
Scalar entries are expression strings in the fixture grammar
(integers, 'nu', 'w', fractions like '1/2').
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# Pivot-set survey for the eta class: pivot label -> (delta nonzero,
# reduced length for symmetric W, reduced length for alternating W).
# ---------------------------------------------------------------------------
TABLE1: dict[str, tuple[bool, int | None, int | None]] = {
    "12": (True, 12, 20),
    "13": (True, 16, 20),
    "14": (True, 12, 20),
    "15": (True, 16, 20),
    "16": (False, None, None),
    "23": (True, 12, 20),
    "24": (False, None, None),
    "25": (True, 12, 20),
    "26": (True, 12, 20),
    "34": (True, 12, 20),
    "35": (False, None, None),
    "36": (True, 16, 20),
    "45": (True, 12, 20),
    "46": (True, 12, 20),
    "56": (True, 16, 20),
}

# ---------------------------------------------------------------------------
# Pivot-set survey for the generic xi family: label -> (roots of the pivot
# determinant, generic length for symmetric W, for alternating W).
# ---------------------------------------------------------------------------
_EIS = ("1+w", "-w")  # the two primitive sixth roots of unity in Q(w)

TABLE2: dict[str, tuple[tuple[str, ...], int, int]] = {
    "12": (("1", "-1"), 16, 20),
    "13": (("0", "2"), 16, 20),
    "14": (_EIS, 16, 20),
    "15": (_EIS, 16, 20),
    "16": (("1/2",), 16, 20),
    "23": (_EIS, 16, 20),
    "24": (("1/2",), 16, 20),
    "25": (("0", "2"), 16, 20),
    "26": (_EIS, 16, 20),
    "34": (("1", "-1"), 16, 20),
    "35": (("1/2",), 16, 20),
    "36": (_EIS, 16, 20),
    "45": (_EIS, 16, 20),
    "46": (("0", "2"), 16, 20),
    "56": (("1", "-1"), 16, 20),
}

# ---------------------------------------------------------------------------
# Non-generic survey: label -> {epsilon: {allowed numerator root: length}}.
# TABLE3 covers the first eight pivot sets, TABLE4 the remaining seven.
# ---------------------------------------------------------------------------
TABLE3: dict[str, dict[int, dict[str, int]]] = {
    "12": {1: {"0": 12, "2": 14}, -1: {"2": 12}},
    "13": {1: {"-1": 14}, -1: {"-1": 18}},
    "14": {1: {"-1": 14, "0": 12, "2": 12}, -1: {"-1": 18, "2": 10}},
    "15": {1: {"-1": 12, "0": 12, "1": 12, "2": 14}, -1: {"-1": 10, "2": 12}},
    "16": {1: {"-1": 12, "0": 12, "1": 12, "2": 12}, -1: {"-1": 10, "2": 10}},
    "23": {1: {"-1": 14, "0": 12, "2": 14}, -1: {"-1": 18, "2": 12}},
    "24": {1: {"-1": 14, "2": 14}, -1: {"-1": 18, "2": 18}},
    "25": {1: {"-1": 12, "1": 12}, -1: {"-1": 10}},
}

TABLE4: dict[str, dict[int, dict[str, int]]] = {
    "26": {1: {"-1": 12, "1": 12, "2": 14}, -1: {"-1": 10, "2": 18}},
    "34": {1: {"0": 12, "2": 12}, -1: {"2": 10}},
    "35": {1: {"-1": 14, "0": 12, "1": 12, "2": 14}, -1: {"-1": 12, "2": 12}},
    "36": {1: {"-1": 14, "0": 12, "1": 12, "2": 12}, -1: {"-1": 12, "2": 10}},
    "45": {1: {"-1": 14, "1": 12, "2": 14}, -1: {"-1": 12, "2": 18}},
    "46": {1: {"-1": 14, "1": 12}, -1: {"-1": 12}},
    "56": {1: {"2": 14}, -1: {"2": 18}},
}

SUMMARY_MIN_LENGTH: dict[int, int] = {1: 12, -1: 10}
SUMMARY_ROOT_UNION: dict[int, tuple[str, ...]] = {
    1: ("-1", "0", "1", "2"),
    -1: ("-1", "2"),
}

# ---------------------------------------------------------------------------
# Commutation-symmetry scan: symmetrizer name -> the single family member it
# fixes ("eta" or a nu value); symmetrizers absent here fix none.
# ---------------------------------------------------------------------------
COMMUTATION_PAIRS: dict[str, str] = {
    "sym2a": "0",
    "sym2b": "eta",
    "sym2c": "1",
    "alt2a": "2",
    "alt2b": "1/2",
    "alt2c": "-1",
    "z1": "1+w",
    "z2": "-w",
}

COMMUTATION_NONE: tuple[str, ...] = ("sym3", "sym6", "alt6")

# ---------------------------------------------------------------------------
# Reference identity systems, stored in the solved functional form
# 0 = sum_{p in P} x_p U_p + U_s: position of s -> x row over the pivots.
# ---------------------------------------------------------------------------
ETA_P12_IDENTITIES: dict[int, tuple[str, str]] = {
    3: ("1", "1"),
    4: ("0", "-1"),
    5: ("1", "1"),
    6: ("-1", "0"),
}

XI_P12_IDENTITIES: dict[int, tuple[str, str]] = {
    3: ("(nu^2-nu+1)/(nu^2-1)", "(nu^2-2*nu)/(nu^2-1)"),
    4: ("(2*nu-1)/(nu^2-1)", "-(nu^2-nu+1)/(nu^2-1)"),
    5: ("(nu^2-2*nu)/(nu^2-1)", "(nu^2-nu+1)/(nu^2-1)"),
    6: ("-(nu^2-nu+1)/(nu^2-1)", "(2*nu-1)/(nu^2-1)"),
}

XI_P16_IDENTITIES: dict[int, tuple[str, str]] = {
    2: ("-(nu^2-nu+1)/(2*nu-1)", "(nu^2-1)/(2*nu-1)"),
    3: ("(nu^2-nu+1)/(2*nu-1)", "-(nu^2-2*nu)/(2*nu-1)"),
    4: ("-(nu^2-2*nu)/(2*nu-1)", "(nu^2-nu+1)/(2*nu-1)"),
    5: ("(nu^2-1)/(2*nu-1)", "-(nu^2-nu+1)/(2*nu-1)"),
}

# ---------------------------------------------------------------------------
# Reference 4-term generator formula for a fully symmetric order-3 factor,
# in the 1/24 normalization of the reduced polynomials.
# ---------------------------------------------------------------------------
GAMMAHAT_TERMS: tuple[tuple[str, str, str], ...] = (
    ("jlr", "ik", "-1/6"),
    ("jkr", "il", "1/6"),
    ("ilr", "jk", "1/6"),
    ("ikr", "jl", "-1/6"),
)
