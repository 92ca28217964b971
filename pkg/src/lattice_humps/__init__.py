"""Lattice paths, humps, and a bijection between marked Motzkin-type paths
and super paths whose first non-flat step is up."""
from .paths import Family, FamilyKind, Path, PathError, parse_path

__all__ = ["Family", "FamilyKind", "Path", "PathError", "parse_path", "__version__"]
__version__ = "0.1.0"
