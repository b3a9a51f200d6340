"""Integer partitions, structural operators, and excludant statistics.

A partition is kept internally as (value, multiplicity) pairs with strictly
decreasing values; the flat weakly-decreasing parts view is materialized on
demand.  Every value is immutable after construction, so partitions are safe
to share and hash.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator


class PartitionError(ValueError):
    """Raised for malformed partition data or out-of-range indices."""


class Partition:
    """A partition of a non-negative integer (the empty partition is valid)."""

    __slots__ = ("_pairs",)

    def __init__(self, parts: Iterable[int] = ()):
        pairs = []
        prev = None
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise PartitionError(f"parts must be positive integers, got {p!r}")
            if prev is not None and p > prev:
                raise PartitionError("parts must be weakly decreasing")
            if pairs and pairs[-1][0] == p:
                pairs[-1][1] += 1
            else:
                pairs.append([p, 1])
            prev = p
        self._pairs = tuple((v, m) for v, m in pairs)

    @classmethod
    def _from_pairs(cls, pairs: tuple) -> "Partition":
        # Trusted constructor: pairs already strictly decreasing with
        # positive multiplicities.
        self = object.__new__(cls)
        self._pairs = pairs
        return self

    @classmethod
    def of_multiset(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def from_counts(cls, counts: dict) -> "Partition":
        """Build a partition from a value -> multiplicity mapping."""
        pairs = []
        for v in sorted(counts, reverse=True):
            m = counts[v]
            if m < 0:
                raise PartitionError(f"negative multiplicity for part {v}")
            if m == 0:
                continue
            if not isinstance(v, int) or v < 1:
                raise PartitionError(f"parts must be positive integers, got {v!r}")
            pairs.append((v, m))
        return cls._from_pairs(tuple(pairs))

    @classmethod
    def parse(cls, text: str, sort: bool = False) -> "Partition":
        """Parse the canonical text form ``[7,4,4,1]`` (``[]`` for empty).

        By default the literal must already be weakly decreasing; pass
        ``sort=True`` to normalize arbitrary order.
        """
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise PartitionError(f"partition literal must be bracketed: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls()
        try:
            parts = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise PartitionError(f"bad partition literal: {text!r}") from None
        return cls.of_multiset(parts) if sort else cls(parts)

    # -- views ------------------------------------------------------------

    @property
    def pairs(self) -> tuple:
        """(value, multiplicity) pairs, values strictly decreasing."""
        return self._pairs

    @property
    def parts(self) -> tuple:
        """Flat weakly decreasing parts."""
        out = []
        for v, m in self._pairs:
            out.extend([v] * m)
        return tuple(out)

    @property
    def weight(self) -> int:
        return sum(v * m for v, m in self._pairs)

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self._pairs)

    @property
    def largest(self) -> int:
        """Largest part; 0 for the empty partition."""
        return self._pairs[0][0] if self._pairs else 0

    @property
    def smallest(self):
        """Smallest part, or None for the empty partition."""
        return self._pairs[-1][0] if self._pairs else None

    @property
    def is_empty(self) -> bool:
        return not self._pairs

    def multiplicity(self, value: int) -> int:
        for v, m in self._pairs:
            if v == value:
                return m
            if v < value:
                break
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __len__(self) -> int:
        return self.num_parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    # -- structural operators ---------------------------------------------

    def conjugate(self) -> "Partition":
        """Transpose of the Ferrers diagram; weight is preserved."""
        if not self._pairs:
            return self
        # Column j (1-based) has height = number of parts >= j.  Running
        # down the multiplicity pairs gives the conjugate directly.
        pairs = []
        above = 0
        prev_value = None
        for v, m in self._pairs:
            above += m
            width = (prev_value - v) if prev_value is not None else 0
            if width:
                pairs.append((above - m, width))
            prev_value = v
        pairs.append((above, self._pairs[-1][0]))
        # pairs were built with increasing heights; reverse for the
        # strictly-decreasing convention and merge equal heights.
        pairs.reverse()
        merged = []
        for v, m in pairs:
            if merged and merged[-1][0] == v:
                merged[-1] = (v, merged[-1][1] + m)
            else:
                merged.append((v, m))
        return Partition._from_pairs(tuple(merged))

    def concat(self, other: "Partition") -> "Partition":
        """Multiset union of parts."""
        counts = {v: m for v, m in self._pairs}
        for v, m in other._pairs:
            counts[v] = counts.get(v, 0) + m
        return Partition.from_counts(counts)

    def cut_up(self, i: int) -> "Partition":
        """Parts strictly above cut position i, i.e. the first i-1 parts."""
        if not 1 <= i <= self.num_parts + 1:
            raise PartitionError(f"cut index {i} out of range 1..{self.num_parts + 1}")
        return Partition(self.parts[: i - 1])

    def cut_down(self, i: int) -> "Partition":
        """Parts from position i onward."""
        if not 1 <= i <= self.num_parts + 1:
            raise PartitionError(f"cut index {i} out of range 1..{self.num_parts + 1}")
        return Partition(self.parts[i - 1:])

    def with_copies(self, value: int, delta: int) -> "Partition":
        """Return a copy with the multiplicity of ``value`` changed by delta."""
        counts = {v: m for v, m in self._pairs}
        new = counts.get(value, 0) + delta
        if new < 0:
            raise PartitionError(
                f"cannot remove {-delta} copies of {value}; only {counts.get(value, 0)} present")
        counts[value] = new
        return Partition.from_counts(counts)


EMPTY = Partition()


# -- membership predicates -------------------------------------------------

def is_regular(lam: Partition, r: int) -> bool:
    """True if no part is divisible by r."""
    return all(v % r != 0 for v, _ in lam.pairs)


def is_strict(lam: Partition, r: int) -> bool:
    """True if every part has multiplicity < r."""
    return all(m < r for _, m in lam.pairs)


def in_gap_class(lam: Partition, r: int) -> bool:
    """Membership in the gap-bounded class: every gap between successive
    parts is at most r and the smallest part is at most r.  The empty
    partition is a member.  The complement is exactly where the r-chain
    maximal excludant is positive."""
    if lam.is_empty:
        return True
    values = [v for v, _ in lam.pairs]
    for a, b in zip(values, values[1:]):
        if a - b > r:
            return False
    return values[-1] <= r


class GapClass:
    """Tagged class P^0_r (gap-bounded) or its complement P^+_r."""

    __slots__ = ("kind", "r")
    BOUNDED = "bounded"
    EXCEEDS = "exceeds"

    def __init__(self, kind: str, r: int):
        if kind not in (self.BOUNDED, self.EXCEEDS):
            raise PartitionError(f"unknown class kind {kind!r}")
        if r < 1:
            raise PartitionError("chain length r must be >= 1")
        self.kind = kind
        self.r = r

    def __repr__(self):
        return f"GapClass({self.kind!r}, r={self.r})"


def in_class(lam: Partition, cls: GapClass) -> bool:
    member = in_gap_class(lam, cls.r)
    return member if cls.kind == GapClass.BOUNDED else not member


# -- excludant statistics ----------------------------------------------------

def chain_mex(lam: Partition, r: int) -> int:
    """Smallest k >= 1 such that k, k+1, ..., k+r-1 all fail to be parts.

    For r = 1 this is the classic minimal excludant.
    """
    if r < 1:
        raise PartitionError("chain length r must be >= 1")
    present = {v for v, _ in lam.pairs}
    k = 1
    while True:
        if all(k + t not in present for t in range(r)):
            return k
        k += 1


def chain_maex(lam: Partition, r: int) -> int:
    """Largest k with r <= k < largest part such that k, k-1, ..., k-r+1
    are all absent from the partition; 0 if no such k exists.

    The lower bound k >= r is forced by requiring the whole chain to consist
    of positive integers.  The result is positive exactly on the complement
    of the gap-bounded class, and then it is at least r.
    """
    if r < 1:
        raise PartitionError("chain length r must be >= 1")
    present = {v for v, _ in lam.pairs}
    for k in range(lam.largest - 1, r - 1, -1):
        if all(k - t not in present for t in range(r)):
            return k
    return 0


def mex_offset(lam: Partition, r: int) -> int:
    """Class weight added to the r-chain mex: 0 on the gap-bounded class,
    r-1 on its complement."""
    return 0 if in_gap_class(lam, r) else r - 1


def maex_offset(lam: Partition, r: int) -> int:
    """Class weight added in the maex sums: 1 on the gap-bounded class,
    r on its complement."""
    return 1 if in_gap_class(lam, r) else r


def parts_above_mex(lam: Partition, r: int) -> int:
    """Number of parts strictly greater than the r-chain mex."""
    m = chain_mex(lam, r)
    return sum(mult for v, mult in lam.pairs if v > m)


def parts_above_maex(lam: Partition, r: int) -> int:
    """Number of parts strictly greater than the r-chain maex."""
    m = chain_maex(lam, r)
    return sum(mult for v, mult in lam.pairs if v > m)


def largest_repeating(lam: Partition, r: int) -> int:
    """Largest part value with multiplicity >= r; 0 if none."""
    for v, m in lam.pairs:
        if m >= r:
            return v
    return 0


def smallest_repeating(lam: Partition, r: int) -> int:
    """Smallest part value with multiplicity >= r; 0 if none."""
    for v, m in reversed(lam.pairs):
        if m >= r:
            return v
    return 0


def count_multiples(lam: Partition, r: int) -> int:
    """Number of parts divisible by r, counted with multiplicity."""
    return sum(m for v, m in lam.pairs if v % r == 0)


def top_multiple_multiplicity(lam: Partition, r: int) -> int:
    """Multiplicity of the largest part divisible by r; 0 if none."""
    for v, m in lam.pairs:
        if v % r == 0:
            return m
    return 0


# -- enumeration -------------------------------------------------------------

def partitions(n: int, predicate: Callable[[Partition], bool] = None,
               max_part: int = None) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in decreasing lexicographic
    order of the parts list, optionally filtered by ``predicate``."""
    if n < 0:
        raise PartitionError("cannot partition a negative integer")

    def gen(remaining, cap, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for first in range(min(remaining, cap), 0, -1):
            prefix.append(first)
            yield from gen(remaining - first, first, prefix)
            prefix.pop()

    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        cap = 0
    for parts in gen(n, cap, []) if n else iter([()]):
        lam = Partition(parts)
        if predicate is None or predicate(lam):
            yield lam
