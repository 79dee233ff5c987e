"""Hamiltonian paths of odd-even directed grid graphs and domino tilings."""
from .bijection import path_to_tiling, tiling_to_path
from .grid import build_grid
from .hamilton import HamPath, count_ham_paths, enumerate_ham_paths
from .tilings import Domino, Tiling, count_tilings_exact, enumerate_tilings

__version__ = "0.1.0"
