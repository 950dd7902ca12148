"""Numerical verification of Cauchy-Schloemilch integral identities.

Submodules: ``specfun`` (special functions), ``quad`` (double-exponential
quadrature), ``expr`` (expression language), ``transform`` (transformation
checks), ``identities`` (exact and series identities), ``catalog`` (evaluated
integrals), ``distributions`` (transformation-of-scale densities) and ``cli``.
"""

__version__ = "0.1.0"
