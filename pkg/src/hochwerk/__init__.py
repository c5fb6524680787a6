"""Hochschild and cyclic-bar cochains of finite group algebras, with cup-i products."""

from .cochains import BarCochain, DualCochain, HomCochain
from .cohomology import coboundary_witness, hh_report, hh_reports, is_coboundary
from .differentials import b_star, bar_coboundary, hochschild_delta
from .groups import FiniteGroup, build_group, group_by_name
from .products import (bracket, circle_j, cup_i, cup_one, gerstenhaber_cup, pre_lie,
                       simplicial_cup, steenrod_square)
from .rings import GF, GF2, QQ, ZZ, parse_ring
from .transport import phi, psi

__version__ = "0.1.0"

__all__ = ["BarCochain", "DualCochain", "HomCochain", "FiniteGroup", "build_group",
           "group_by_name", "GF", "GF2", "QQ", "ZZ", "parse_ring",
           "hochschild_delta", "b_star", "bar_coboundary", "phi", "psi",
           "gerstenhaber_cup", "circle_j", "pre_lie", "bracket", "simplicial_cup",
           "cup_one", "cup_i", "steenrod_square",
           "hh_report", "hh_reports", "coboundary_witness", "is_coboundary"]
