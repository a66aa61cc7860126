CHAIN_BASES = (10, 9, 8, 7, 6, 5, 4, 3, 2)
FINEST_BASE = 10
COARSEST_BASE = 2
BAIRE_LEVELS = len(CHAIN_BASES)
ZERO_EIGENVALUE = 1e-12
DEFAULT_AXES = 5
