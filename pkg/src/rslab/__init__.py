"""
rslab: exact enumerative toolkit around run-sorting.

Submodules:

- ``perms``       words, permutations, runs, runsort, scalar/set statistics
- ``bijections``  set-partition correspondence, insertion bijections,
                  admissibility predicates, residual classes, and the
                  peak-transport bijection
- ``polynomials`` exact univariate/multivariate polynomials and the
                  descent/peak counting families
- ``series``      truncated formal power series and the closed-form EGFs
- ``realroot``    Sturm counts, root isolation, interlacing, same-phase
                  stability sampling
- ``binwords``    run-sorted binary words, biwords, reverse-complement
                  symmetry, product/count identities
- ``stats``       expectations, golden sequence data, scatter data
- ``cli``         the ``rslab`` command
"""
from . import bijections, binwords, perms, polynomials, prng, realroot, series, stats

__version__ = "0.1.0"

__all__ = [
    "bijections",
    "binwords",
    "perms",
    "polynomials",
    "prng",
    "realroot",
    "series",
    "stats",
    "__version__",
]
