"""Integral homology of Coxeter groups in degrees 1 to 3.

Closed formulas read off derived diagrams of the Coxeter matrix, plus a
brute-force oracle built on an explicit free resolution.
"""

from .coxeter import INF, CoxeterMatrix, classify, is_spherical
from .families import parse_family
from .formulas import h1, h2, h3, homology_le3, kunneth_h_le3
from .linalg import AbelianGroup
from .resolution import homology_dcs

__all__ = ["INF", "CoxeterMatrix", "classify", "is_spherical", "parse_family", "h1", "h2",
           "h3", "homology_le3", "kunneth_h_le3", "AbelianGroup", "homology_dcs"]
