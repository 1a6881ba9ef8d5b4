"""Integer partitions, rank vectors and the partition tuples indexing fixed points."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Mapping

from .kchar import Character, Monomial, canonicalize

LABELS = ("12", "13", "14", "23", "24", "34")
THREE = ("12", "13", "23")
SIX_MINUS_THREE = ("14", "24", "34")


def complement(label: str) -> str:
    return "".join(c for c in "1234" if c not in label)


def phi(label: str) -> int:
    return int(min(complement(label)))


def psi(label: str) -> int:
    return int(max(complement(label)))


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    Box (i, j) lies in the partition iff j < parts[i]; i indexes rows.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def boxes(self) -> list:
        return [(i, j) for i, row in enumerate(self) for j in range(row)]

    def __contains__(self, box) -> bool:  # type: ignore[override]
        i, j = box
        return 0 <= i < len(self) and 0 <= j < self[i]

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for row in self if row > j) for j in range(self[0]))

    def arm(self, i: int, j: int) -> int:
        return self[i] - j - 1

    def leg(self, i: int, j: int) -> int:
        return self.conjugate()[j] - i - 1 if self else 0

    def hook(self, i: int, j: int) -> int:
        """Hook length at (i, j); zero outside the partition."""
        if i < 0 or j < 0:
            raise ValueError("box coordinates must be nonnegative")
        if (i, j) not in self:
            return 0
        right = sum(1 for jj in range(j, self[i]))
        below = sum(1 for ii in range(i + 1, len(self)) if self[ii] > j)
        return right + below

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()")
        return cls(int(x) for x in text.split(",") if x.strip())


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n in reverse lexicographic order, largest first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


class RankVector(tuple):
    """Ranks r_A for the six labels, stored in label order."""

    def __new__(cls, ranks: Mapping[str, int] | None = None):
        ranks = dict(ranks or {})
        for key, val in ranks.items():
            if key not in LABELS:
                raise ValueError(f"unknown label {key!r}")
            if val < 0:
                raise ValueError(f"negative rank for {key}")
        return super().__new__(cls, tuple(int(ranks.get(a, 0)) for a in LABELS))

    def __getitem__(self, key):  # type: ignore[override]
        if isinstance(key, str):
            return tuple.__getitem__(self, LABELS.index(key))
        return tuple.__getitem__(self, key)

    def as_dict(self) -> dict:
        return {a: r for a, r in zip(LABELS, self) if r}

    @property
    def total(self) -> int:
        return sum(self)

    def slots(self) -> list:
        return [(a, alpha) for a, r in zip(LABELS, self) for alpha in range(1, r + 1)]

    def __str__(self) -> str:
        return ",".join(f"{a}={r}" for a, r in self.as_dict().items())

    def __repr__(self) -> str:
        return f"RankVector({self.as_dict()})"


class PartitionTuple(tuple):
    """Partitions attached to the framing slots of a rank vector."""

    def __new__(cls, ranks: RankVector, entries: Mapping | None = None):
        entries = dict(entries or {})
        slots = ranks.slots()
        for key in entries:
            if tuple(key) not in slots:
                raise ValueError(f"slot {key} not allowed by ranks {ranks}")
        obj = super().__new__(cls, tuple(Partition(entries.get(s, ())) for s in slots))
        obj.ranks = ranks
        obj.slots = slots
        return obj

    def __getnewargs__(self):
        return (self.ranks, dict(self.items()))

    def __eq__(self, other):
        return isinstance(other, PartitionTuple) and self.ranks == other.ranks and tuple.__eq__(self, other)

    def __hash__(self):
        return hash((tuple(self.ranks), tuple(self)))

    def items(self):
        return zip(self.slots, tuple.__iter__(self))

    def get(self, slot) -> Partition:
        return tuple.__getitem__(self, self.slots.index(tuple(slot)))

    @property
    def size(self) -> int:
        return sum(p.size for p in tuple.__iter__(self))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}.{alpha}:{p}" for (a, alpha), p in self.items()) + "}"

    def __repr__(self) -> str:
        return f"PartitionTuple({self})"

    @classmethod
    def parse(cls, ranks: RankVector, text: str) -> "PartitionTuple":
        body = text.strip().strip("{}").strip()
        entries = {}
        if body:
            for part in _split_tuple_entries(body):
                key, val = part.split(":")
                label, alpha = key.strip().split(".")
                entries[(label, int(alpha))] = Partition.parse(val)
        return cls(ranks, entries)


def _split_tuple_entries(body: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return out


def _compositions(n: int, k: int) -> Iterator[tuple]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def iter_tuples(ranks: RankVector, n: int) -> Iterator[PartitionTuple]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    slots = ranks.slots()
    for sizes in _compositions(n, len(slots)):
        for parts in itertools.product(*(partitions_of(s) for s in sizes)):
            yield PartitionTuple(ranks, dict(zip(slots, parts)))


@lru_cache(maxsize=None)
def enumerate_tuples(ranks: RankVector, n: int) -> tuple:
    """All partition tuples of total size n, in a fixed order."""
    return tuple(iter_tuples(ranks, n))


def k_char(lam: Partition, label: str, alpha: int) -> Character:
    """Sum over boxes of t_a^i t_b^j w_{A,alpha} for A = {a < b}."""
    a, b = int(label[0]), int(label[1])
    slot = ((label, alpha), 2)
    terms = {}
    for i, j in lam.boxes():
        dt4 = [0, 0, 0, 0]
        dt4[a - 1] += 2 * i
        dt4[b - 1] += 2 * j
        terms[canonicalize(dt4, (slot,))] = 1
    return Character(terms)


def z_char(lam: Partition) -> Character:
    """Sum over boxes of t1^i t2^j (no framing)."""
    return Character({Monomial((2 * i, 2 * j, 0)): 1 for i, j in lam.boxes()})
