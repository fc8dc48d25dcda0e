"""
Exact series expansions of powers of inverse (hyperbolic) cosine expressions,
Stirling numbers of the first kind, partial Bell polynomials and pi series.
"""

__version__ = "1.0"
