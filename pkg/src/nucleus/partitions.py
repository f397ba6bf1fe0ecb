"""Partition values, constrained enumeration, and the fuse/decay maps.

A partition here is always a weakly decreasing tuple of positive parts.
"Nuclear" partitions are those with no part equal to 1; they regenerate
all remaining partitions of the same size through decay (trading units
off the largest part for trailing 1's), with fusion as the inverse map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Partition:
    """A weakly decreasing tuple of positive integer parts."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        previous = None
        for part in parts:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
            if previous is not None and part > previous:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
            previous = part
        self._parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a literal like ``5,2``, ``[5,2]`` or ``(5,2)``."""
        body = text.strip()
        if body[:1] in ("(", "["):
            closer = ")" if body[0] == "(" else "]"
            if not body.endswith(closer):
                raise ValueError(f"unbalanced brackets in partition literal {text!r}")
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls()
        try:
            parts = [int(piece.strip()) for piece in body.split(",")]
        except ValueError:
            raise ValueError(f"partition literal must be comma-separated integers, got {text!r}") from None
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Sum of the parts; 0 for the empty partition."""
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, index):
        return self._parts[index]

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self._parts) + ")"


def _trusted(parts: tuple[int, ...]) -> Partition:
    # Construction bypass for already-validated tuples; enumeration yields
    # millions of values, so skipping __init__ checks matters.
    value = Partition.__new__(Partition)
    value._parts = parts
    return value


def _as_parts(value) -> tuple[int, ...]:
    if isinstance(value, Partition):
        return value.parts
    return Partition(value).parts


@dataclass(frozen=True)
class EnumerationConstraint:
    """Part bounds for enumeration.

    Covers the three restricted families in one record: ``min_part=2``
    selects nuclear partitions, ``forbidden_part=k`` the partitions with
    no part k, and ``max_part=m`` the bounded-part variants.
    """

    min_part: int = 1
    max_part: int | None = None
    forbidden_part: int | None = None

    def __post_init__(self):
        if self.min_part < 1:
            raise ValueError(f"min_part must be >= 1, got {self.min_part}")
        if self.max_part is not None and self.max_part < self.min_part:
            raise ValueError(f"max_part {self.max_part} is below min_part {self.min_part}")
        if self.forbidden_part is not None and self.forbidden_part < 1:
            raise ValueError(f"forbidden_part must be >= 1, got {self.forbidden_part}")

    def satisfies(self, partition) -> bool:
        """True iff every part obeys the bounds."""
        for part in _as_parts(partition):
            if part < self.min_part or part == self.forbidden_part:
                return False
            if self.max_part is not None and part > self.max_part:
                return False
        return True


NUCLEAR = EnumerationConstraint(min_part=2)
UNRESTRICTED = EnumerationConstraint()


def iter_parts(n: int, constraint: EnumerationConstraint | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of ``n`` under ``constraint`` as raw tuples.

    Order is reverse-lexicographic on part sequences, so ``(n,)`` comes
    first and the all-minimal partition last.  Memory use is proportional
    to the partition length, never to the number of partitions.  ``n = 0``
    yields exactly the empty tuple under any constraint; a constraint
    impossible to meet yields nothing.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative total, got {n}")
    c = constraint or UNRESTRICTED
    cap = n if c.max_part is None else min(n, c.max_part)
    return _descend(n, cap, c.min_part, c.forbidden_part, [])


def _descend(remaining, cap, lo, forbidden, prefix):
    if remaining == 0:
        yield tuple(prefix)
        return
    for part in range(min(cap, remaining), lo - 1, -1):
        if part == forbidden:
            continue
        rest = remaining - part
        if rest and rest < lo:
            continue
        prefix.append(part)
        yield from _descend(rest, part, lo, forbidden, prefix)
        prefix.pop()


def enumerate_partitions(n: int, constraint: EnumerationConstraint | None = None) -> Iterator[Partition]:
    """Yield Partition values; see iter_parts for order and guarantees."""
    for parts in iter_parts(n, constraint):
        yield _trusted(parts)


def is_nuclear(partition) -> bool:
    """True iff no part equals 1.  The empty partition qualifies."""
    return 1 not in _as_parts(partition)


def is_ground_state(partition) -> bool:
    """True iff nuclear with at least two parts and the top two equal.

    Ground states have decay capacity 0: with the two largest parts tied
    there is no slack to shed into 1's.
    """
    parts = _as_parts(partition)
    return len(parts) >= 2 and parts[0] == parts[1] and 1 not in parts


def multiplicity(partition, k: int) -> int:
    """Number of parts equal to ``k``."""
    if k < 1:
        raise ValueError(f"part values are positive, got {k}")
    return _as_parts(partition).count(k)


def fuse(partition) -> Partition:
    """Delete all 1's and add their count to the largest remaining part.

    Defined only on non-nuclear input; the result has the same size and
    is nuclear for every size except 1.  An all-1's partition fuses to
    the single-part partition, so (1) fuses to itself: size 1 has no
    nuclear partition to land on.
    """
    parts = _as_parts(partition)
    ones = parts.count(1)
    if ones == 0:
        raise ValueError(f"fuse needs a part equal to 1, got {Partition(parts)}")
    rest = parts[:-ones]
    if rest:
        return _trusted((rest[0] + ones,) + rest[1:])
    return _trusted((ones,))


def decay_capacity(partition) -> int:
    """Number of distinct decay products of a nuclear partition.

    The gap between the two largest parts, except the single-part
    partition of n which decays n-1 times (down to all 1's).
    """
    parts = _require_nuclear_nonempty(partition)
    if len(parts) == 1:
        return parts[0] - 1
    return parts[0] - parts[1]


def decay_step(partition, j: int) -> Partition:
    """Lower the largest part by ``j`` and append ``j`` parts equal to 1.

    Requires nuclear input and 1 <= j <= decay_capacity; the result is a
    non-nuclear partition of the same size.
    """
    parts = _require_nuclear_nonempty(partition)
    cap = parts[0] - 1 if len(parts) == 1 else parts[0] - parts[1]
    if not 1 <= j <= cap:
        raise ValueError(f"decay step must be in 1..{cap} for {Partition(parts)}, got {j}")
    return _trusted((parts[0] - j,) + parts[1:] + (1,) * j)


def decay_chain(partition) -> list[Partition]:
    """All decay products, in step order; empty for a ground state."""
    parts = _require_nuclear_nonempty(partition)
    cap = parts[0] - 1 if len(parts) == 1 else parts[0] - parts[1]
    return [_trusted((parts[0] - j,) + parts[1:] + (1,) * j) for j in range(1, cap + 1)]


def _require_nuclear_nonempty(partition) -> tuple[int, ...]:
    parts = _as_parts(partition)
    if not parts:
        raise ValueError("the empty partition does not decay")
    if 1 in parts:
        raise ValueError(f"decay is defined on nuclear partitions only, got {Partition(parts)}")
    return parts
