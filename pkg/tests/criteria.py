"""Which laws each acceptance criterion runs, and its time limit in seconds."""

CRITERIA = {
    1: (["CG-EQUIV"], 60),
    2: (["CG-COUNT-XCHECK"], 30),
    3: (["CG-CANON"], 120),
    4: (["CG-CONN-OR-COCONN", "CG-PARITY", "CG-SINGLETON", "CG-CODEPTH-NEG", "CG-INTERLEAVE", "CG-PAW-DEPTH"], 120),
    5: (["MOR-FACTOR-UNIQUE", "MOR-PULLBACK-CLOSED", "MOR-PUSHOUT-DA"], 120),
    6: (["MOR-NEG-DUALITY"], 60),
    7: (["MOR-FIB-SUM"], 60),
    8: (["ONE-COUNT"], 60),
    9: (["ISO-REG", "ISO-SK2-FIXED", "ISO-COTRANS", "ISO-TENSOR-COLIM", "ISO-SK2-SUBSET"], 120),
    10: (["LINE-L-ORACLE", "LINE-TENSOR-ORACLE"], 120),
    11: (["LINE-RAN-HOM", "LINE-RAN-SK2", "LINE-RAN-ASSOC"], 180),
    12: (["FAC-PUSHPULL", "FAC-HECKE-GROUPOID"], 120),
    13: ([], 120),
}

COVERED = {law for laws, _ in CRITERIA.values() for law in laws}

# filled in by test_acceptance: number -> (passed, seconds, limit, note)
RESULTS: dict[int, tuple[bool, float, int, str]] = {}
