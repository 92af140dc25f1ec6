"""Exact tools for distance-regular graphs whose local graphs have second eigenvalue at most 1."""
from .arrays import IntersectionArray, derive, feasibility, spectrum
from .constructions import build, check_drg, is_locally
from .graphcore import Graph, local_graph

__version__ = "0.1.0"

__all__ = ["Graph", "IntersectionArray", "build", "check_drg", "derive", "feasibility", "is_locally",
           "local_graph", "spectrum"]
