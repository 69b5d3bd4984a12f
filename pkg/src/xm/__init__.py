"""Both sides of X = M in type A: energy-graded paths and cocharge-graded rigged configurations."""

from .bijection import delta, delta_inverse, phi, phi_bar, phi_bar_inverse, phi_inverse
from .crystal import Path, classical_e, classical_f, enumerate_paths, make_path, promote_path
from .energy import config_sum, tail_energy
from .fermionic import bethe_count, m_bar, m_level, m_unrestricted
from .qlaurent import QLaurent, format_poly, qbinomial
from .rigged import RiggedConfiguration, cocharge, make_rc, rc_e, rc_f, rc_promotion
from .shapes import MultiplicityArray, TensorShape, multiplicity_of, parse_tensor

__all__ = [
    "MultiplicityArray",
    "Path",
    "QLaurent",
    "RiggedConfiguration",
    "TensorShape",
    "bethe_count",
    "classical_e",
    "classical_f",
    "cocharge",
    "config_sum",
    "delta",
    "delta_inverse",
    "enumerate_paths",
    "format_poly",
    "m_bar",
    "m_level",
    "m_unrestricted",
    "make_path",
    "make_rc",
    "multiplicity_of",
    "parse_tensor",
    "phi",
    "phi_bar",
    "phi_bar_inverse",
    "phi_inverse",
    "promote_path",
    "qbinomial",
    "rc_e",
    "rc_f",
    "rc_promotion",
    "tail_energy",
]
