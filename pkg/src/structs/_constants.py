BRUTEFORCE_MAX_N = 10
DP_MAX_N = 24
INSERTION_ORACLE_MAX_N = 6
MERGE_ORACLE_MAX_GROUP = 10
FLOAT_REL_TOL = 1e-12

HEURISTIC_NAMES = ("insertion", "merge", "selection", "bubble", "quick")
ALGORITHM_NAMES = HEURISTIC_NAMES + ("exact",)
