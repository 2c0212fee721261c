"""Exact computation of tau-tilting mutation of tau-exceptional sequences over R (x) kQ."""
from .algebra import LocalCoefficientAlgebra, PathAlgebra, Quiver, build_path_algebra, tensor_algebra
from .catalog import induced_catalog, knit_hereditary_catalog
from .config import load_config, parse_config
from .modules import Representation, hom_space, induce, is_isomorphic
from .mutation import enumerate_complete, mutation_graph, phi, phi_inverse, sigma
from .tilting import Context
from .workspace import Workspace

__version__ = "0.1.0"

__all__ = [
    "Context",
    "LocalCoefficientAlgebra",
    "PathAlgebra",
    "Quiver",
    "Representation",
    "Workspace",
    "build_path_algebra",
    "enumerate_complete",
    "hom_space",
    "induce",
    "induced_catalog",
    "is_isomorphic",
    "knit_hereditary_catalog",
    "load_config",
    "mutation_graph",
    "parse_config",
    "phi",
    "phi_inverse",
    "sigma",
    "tensor_algebra",
]
