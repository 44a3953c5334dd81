from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Tuple

from src.utils.exceptions import DomainError


class Family(Enum):
    """
    Which series an index tuple names.
    """

    FULL = "full"
    STAR = "star"
    COTH = "coth"


@dataclass(frozen=True)
class IndexTuple(object):
    """
    Exponent signature (2p_1, ..., 2p_r) of a multiple Eisenstein-type series.

    Attributes
    ----------
    halves : tuple of int
        (p_1, ..., p_r), every entry >= 1.
    family : Family
        Full series (m = 0 row included), star series (m != 0 only) or the coth family.
    """

    halves: Tuple[int, ...]
    family: Family = Family.FULL

    def __post_init__(self):

        object.__setattr__(self, "halves", tuple(int(p) for p in self.halves))

        if not self.halves:
            raise DomainError("an index tuple needs at least one entry")

        if any(p < 1 for p in self.halves):
            raise DomainError(f"all exponent halves must be >= 1, got {self.halves}")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], family: Family = Family.FULL) -> "IndexTuple":
        """
        Build an index tuple from the literal even exponents 2p_j used to label the series.
        """

        exponents = list(exponents)

        if not exponents:
            raise DomainError("indices must not be empty")

        if any(e <= 0 for e in exponents):
            raise DomainError("indices must be positive")

        if any(e % 2 for e in exponents):
            raise DomainError("indices must be even")

        return cls(tuple(e // 2 for e in exponents), family)

    @property
    def depth(self) -> int:
        return len(self.halves)

    @property
    def weight(self) -> int:
        return 2 * sum(self.halves)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(2 * p for p in self.halves)

    def with_family(self, family: Family) -> "IndexTuple":
        return replace(self, family=family)

    def extended(self, p: int) -> "IndexTuple":
        return IndexTuple(self.halves + (p,), self.family)

    def label(self) -> str:

        prefix = {Family.FULL: "G~", Family.STAR: "G~*", Family.COTH: "C"}[self.family]

        return f"{prefix}_{{{','.join(str(e) for e in self.exponents)}}}"


@dataclass(frozen=True)
class CothIndex(object):
    """
    Index of the coth-weighted series C_r^<2k>(2p_1, ..., 2p_r; tau).

    Attributes
    ----------
    base : IndexTuple
        The exponent signature; its family is forced to ``Family.COTH``.
    k : int
        Half the coth power, the series carries coth^(2k) of the last lattice variable.
    """

    base: IndexTuple
    k: int

    def __post_init__(self):

        if self.k < 0:
            raise DomainError(f"the coth power must be non-negative, got 2k = {2 * self.k}")

        if self.base.family is not Family.COTH:
            object.__setattr__(self, "base", self.base.with_family(Family.COTH))

    @property
    def power(self) -> int:
        return 2 * self.k

    def label(self) -> str:
        return f"C_{self.base.depth}^<{self.power}>({','.join(str(e) for e in self.base.exponents)})"
