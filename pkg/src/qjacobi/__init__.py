"""Exact computations with quasi-Jacobi forms and holomorphic anomaly equations
for elliptically fibered threefolds."""
from .rational import RationalFunction
from .ring import G, MeroQJac, QJacPoly, derived_derivative, evaluate, fit, parse_poly
from .series import FourierSeries, JetSeries

__version__ = "0.1.0"

__all__ = [
    "RationalFunction", "FourierSeries", "JetSeries", "QJacPoly", "MeroQJac", "G", "evaluate",
    "fit", "derived_derivative", "parse_poly",
]
