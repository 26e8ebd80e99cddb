"""Exact computations for highest-weight modules of affine sl2."""

from .partitions import ColoredPartition, Part, cmp, parse_partition
from .liealg import HighestWeight, ModuleVector

__all__ = [
    "ColoredPartition",
    "Part",
    "cmp",
    "parse_partition",
    "HighestWeight",
    "ModuleVector",
]
__version__ = "0.1.0"
