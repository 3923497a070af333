"""hsalg: exact computer algebra for conformal algebras, singleton modules
and higher-spin symmetry algebras.

Everything is computed over the Gaussian rationals Q(i); every check in the
library is an exact identity (no tolerances anywhere).
"""

__version__ = "0.1.0"
