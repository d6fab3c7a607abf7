"""
Test dataset for the orbifold computations.
Contains the reference rows, worked examples and series values the suite checks against.
"""

from catalog.golden import load_golden_rows

GOLDEN_ROWS = load_golden_rows()

# Rows cheap enough to recompute on every run (groups of order at most 18)
FAST_ROW_KEYS = [
    ("C2", ""), ("C3", ""), ("C2p2", ""), ("C4", ""), ("S3", ""), ("C6", ""), ("C2p3", ""),
    ("D4", ""), ("C2xC4", ""), ("C3p2", ""), ("A4", ""), ("D6", ""), ("C2xC6", ""),
    ("C2xD4", ""), ("C2p2C4", ""), ("C4p2", ""), ("A33", "id"), ("A33", "not-id"), ("C3xS3", ""),
]

# Invariant-lattice ranks by the trace formula
XIAO_RANKS = [
    {"group": "C2", "rank": 14},
    {"group": "C3", "rank": 10},
    {"group": "C2p2", "rank": 10},
    {"group": "C4", "rank": 8},
    {"group": "S3", "rank": 8},
    {"group": "A4", "rank": 6},
    {"group": "C2p2C4", "rank": 5},
    {"group": "C2p4", "rank": 7},
    {"group": "A4p2", "rank": 3},
]

# b2 of S(G)^[3] for the abelian series
SERIES_B2 = {
    "C2": 15, "C3": 11, "C4": 9, "C5": 7, "C6": 7, "C7": 5, "C8": 5,
    "C2p2": 11, "C2xC4": 7, "C2xC6": 5, "C3p2": 7, "C4p2": 5, "C2p3": 9, "C2p4": 8,
}

DIMENSION_SIX_B2 = [15, 11, 9, 8]

# Published singularity data that fails the rationality criterion (factor 9)
ERRATUM_CASE = {
    "profile": "a2=45,a4=2",
    "b2": 6,
    "factor": "9",
    "b4": 55,
    "chi": 69,
    "c4": 45,
    "S0": "27/16",
    "c2_squared": 330,
    "radicand": 1278,
    "squarefree": 142,
}

HISTORICAL_SQUAREFREE = [930, 19, 7, 210]

DEDUP_EXPECTED = {
    "rows": 32,
    "absorbed": {"C2p3": "C2", "C2xD4": "C2p2", "C2p2wrC2:id": "C2", "C2p4S3:id": "S3"},
    "couples": [["C4", "C2p2C4"], ["D4", "C2p2wrC2:not-id"], ["D6", "C2xS4"]],
    "lower_bound": 29,
    "headline": "29 + 4 = 33",
}
