"""Finite CAT(0) cube complexes, stored as median graphs, and their stable cylinders."""
from .complex import CubeComplex, build_complex
from .cylinders import Cylinder, cylinder, d_peripheral, intersection_number
from .errors import CubeComplexError, NotMedian
from .generators import (gen_grid, gen_hypercube, gen_path, gen_random_dual, gen_staircase,
                         gen_tree, sageev_dual)
from .hyperbolicity import geometry, max_grid_size, stability_constants
from .intervals import embed_interval, gromov_product, interval, median, project
from .io import dumps_complex, load_complex, loads_complex, save_complex, to_dot
from .stability import check_invariance, check_triple, stability_sweep

__version__ = "0.1.0"

__all__ = [
    "CubeComplex", "build_complex", "Cylinder", "cylinder", "d_peripheral",
    "intersection_number", "CubeComplexError", "NotMedian", "gen_grid", "gen_hypercube",
    "gen_path", "gen_random_dual", "gen_staircase", "gen_tree", "sageev_dual", "geometry",
    "max_grid_size", "stability_constants", "embed_interval", "gromov_product", "interval",
    "median", "project", "dumps_complex", "load_complex", "loads_complex", "save_complex",
    "to_dot", "check_invariance", "check_triple", "stability_sweep",
]
