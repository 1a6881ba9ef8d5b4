"""Exact equivariant localization for origami partition functions."""

from .kchar import Character, EvalPoint, Monomial
from .partitions import Partition, PartitionTuple, RankVector, enumerate_tuples

__all__ = ["Character", "EvalPoint", "Monomial", "Partition", "PartitionTuple", "RankVector", "enumerate_tuples"]
