"""Local p-structure computations for explicit finite permutation groups."""

from .kernels import BACKEND
from .permgroup import Permutation, PermGroup, SubgroupHandle, GroupHom, load_group

__version__ = "0.1.0"

__all__ = ["BACKEND", "Permutation", "PermGroup", "SubgroupHandle", "GroupHom",
           "load_group", "__version__"]
