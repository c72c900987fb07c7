"""Mitsch's natural partial order and inclusion on binary relations and partition diagrams."""

from .errors import DimensionMismatch, ParseError, PreconditionError, UniverseTooLarge
from .partitions import Partition
from .relations import Relation
from .universe import UniverseTable, enumerate_universe

__all__ = [
    "Relation",
    "Partition",
    "UniverseTable",
    "enumerate_universe",
    "DimensionMismatch",
    "ParseError",
    "PreconditionError",
    "UniverseTooLarge",
]

__version__ = "0.1.0"
