"""
Centralized numerical tolerances.
Every module compares against these so the documented bounds stay consistent.
"""

# Generator validation
ANTI_HERMITIAN_TOL = 1e-12
RANK_TOL = 1e-9

# Group elements
UNITARY_TOL = 1e-9

# Distances closer than this are treated as equal when picking the best word
TIE_TOL = 1e-12

# Relative slack on the per-edge |theta| <= eps' coarseness rule
COARSENESS_SLACK = 1e-9

# Words above this count are never enumerated
MAX_WORDS = 10**7
