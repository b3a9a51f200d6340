"""Weight-preserving constructive maps between partition families.

Every forward map here has an explicit inverse and an independent
codomain-membership checker.  The two main families:

* merge/split style maps between partitions classified by multiples of r
  and partitions classified by r-repeating parts (``glaisher_merge``,
  ``multiples_to_repeats``, ``top_multiple_to_repeats`` and inverses);

* index-to-pair maps that turn a partition together with a cut index into
  an ordered pair (alpha, beta), where alpha is (r+1)-strict and beta has
  constrained multiplicities (``mex_pairing``, ``mex_pairing_colored``,
  ``maex_pairing`` and inverses).  These realize the excludant-sum
  identities at the level of individual objects.

The CLI exposes the index-to-pair maps under the names gamma, gamma-star
and delta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .partition import (
    Partition,
    PartitionError,
    chain_maex,
    chain_mex,
    in_gap_class,
    is_regular,
    is_strict,
    maex_offset,
    mex_offset,
    parts_above_mex,
)


class DomainError(ValueError):
    """Raised when an input violates a map's domain contract."""


@dataclass(frozen=True)
class ColoredEmpty:
    """An empty beta side carrying one of r colors (1-based)."""
    color: int

    def to_json(self):
        return {"empty_color": self.color}

    def __str__(self):
        return f"[]#{self.color}"


BetaSide = Union[Partition, ColoredEmpty]


@dataclass(frozen=True)
class PartitionPair:
    """Ordered pair (alpha, beta); beta may be a colored empty partition.

    ``case`` records which branch of the forward map produced the pair; it
    is debugging metadata and excluded from equality.
    """
    alpha: Partition
    beta: BetaSide
    case: Optional[str] = field(default=None, compare=False)

    @property
    def weight(self) -> int:
        beta_weight = 0 if isinstance(self.beta, ColoredEmpty) else self.beta.weight
        return self.alpha.weight + beta_weight

    def to_json(self):
        beta = (self.beta.to_json() if isinstance(self.beta, ColoredEmpty)
                else str(self.beta))
        return {"alpha": str(self.alpha), "beta": beta}


class IndexedPartition(NamedTuple):
    lam: Partition
    i: int


# ---------------------------------------------------------------------------
# Glaisher-style merge/split
# ---------------------------------------------------------------------------

def glaisher_merge(lam: Partition, r: int) -> Partition:
    """Merge every r equal copies into a single r-fold part, repeatedly,
    until every multiplicity is below r.  Input must be r-regular."""
    if r < 2:
        raise DomainError("merge modulus r must be >= 2")
    for v, _ in lam.pairs:
        if v % r == 0:
            raise DomainError(f"part {v} is divisible by {r}; input must be {r}-regular")
    counts = {v: m for v, m in lam.pairs}
    stack = sorted(counts)
    while stack:
        v = stack.pop()
        m = counts.get(v, 0)
        if m < r:
            continue
        counts[v] = m % r
        merged = v * r
        had = counts.get(merged, 0)
        counts[merged] = had + m // r
        stack.append(merged)
    return Partition.from_counts(counts)


def glaisher_split(lam: Partition, r: int) -> Partition:
    """Split every part divisible by r into r equal copies, repeatedly,
    until no part is divisible by r.  Input must be r-strict."""
    if r < 2:
        raise DomainError("split modulus r must be >= 2")
    for v, m in lam.pairs:
        if m >= r:
            raise DomainError(f"part {v} has multiplicity {m}; input must be {r}-strict")
    counts = {v: m for v, m in lam.pairs}
    stack = sorted(counts)
    while stack:
        v = stack.pop()
        m = counts.pop(v, 0)
        if m == 0:
            continue
        if v % r == 0:
            child = v // r
            counts[child] = counts.get(child, 0) + m * r
            stack.append(child)
        else:
            counts[v] = m
    return Partition.from_counts(counts)


# ---------------------------------------------------------------------------
# Maps between multiples-of-r and r-repeating families
# ---------------------------------------------------------------------------

def _split_by_multiples(lam: Partition, r: int):
    """Split into (parts not divisible by r, parts divisible by r)."""
    other = {v: m for v, m in lam.pairs if v % r != 0}
    mult = {v: m for v, m in lam.pairs if v % r == 0}
    return Partition.from_counts(other), Partition.from_counts(mult)


def _to_repeat_form(lam: Partition, r: int) -> Partition:
    other, mult = _split_by_multiples(lam, r)
    return glaisher_merge(other, r).concat(mult.conjugate())


def _to_multiple_form(nu: Partition, r: int) -> Partition:
    # Extract the largest multiple of r from each multiplicity; what stays
    # behind is r-strict, what leaves has all multiplicities divisible by r.
    repeated = {v: r * (m // r) for v, m in nu.pairs if m >= r}
    rest = {v: m % r for v, m in nu.pairs}
    kappa = glaisher_split(Partition.from_counts(rest), r)
    gamma = Partition.from_counts(repeated).conjugate()
    return kappa.concat(gamma)


def multiples_to_repeats(lam: Partition, r: int) -> Partition:
    """Send a partition with j multiples of r (any j >= 0) to one whose
    largest r-repeating part is j, preserving weight."""
    if r < 2:
        raise DomainError("r must be >= 2")
    return _to_repeat_form(lam, r)


def repeats_to_multiples(nu: Partition, r: int) -> Partition:
    """Inverse of multiples_to_repeats."""
    if r < 2:
        raise DomainError("r must be >= 2")
    return _to_multiple_form(nu, r)


def top_multiple_to_repeats(lam: Partition, r: int) -> Partition:
    """Send a partition whose largest multiple of r occurs exactly j times
    to one whose smallest r-repeating part is j.  Requires at least one
    part divisible by r."""
    if r < 2:
        raise DomainError("r must be >= 2")
    if all(v % r != 0 for v, _ in lam.pairs):
        raise DomainError(f"input has no part divisible by {r}")
    return _to_repeat_form(lam, r)


def repeats_to_top_multiple(nu: Partition, r: int) -> Partition:
    """Inverse of top_multiple_to_repeats.  Requires an r-repeating part."""
    if r < 2:
        raise DomainError("r must be >= 2")
    if all(m < r for _, m in nu.pairs):
        raise DomainError(f"input has no {r}-repeating part")
    return _to_multiple_form(nu, r)


# ---------------------------------------------------------------------------
# Pair operators: reduce beta multiplicities mod (r+1), one end kept intact
# ---------------------------------------------------------------------------

def _shift_residues(alpha: Partition, beta: Partition, r: int, keep: str):
    """Core of the two pair operators.

    Write each beta multiplicity as q(r+1)+h with 0 <= h <= r.  The kept
    end (largest or smallest value) stays untouched; for every other value
    the h leftover copies migrate to alpha.  Returns the new pair plus the
    move list for tracing.
    """
    pairs = beta.pairs
    if not pairs:
        return alpha, beta, []
    kept_index = 0 if keep == "largest" else len(pairs) - 1
    alpha_counts = {v: m for v, m in alpha.pairs}
    beta_counts = {}
    moves = []
    for idx, (v, m) in enumerate(pairs):
        if idx == kept_index:
            beta_counts[v] = m
            continue
        h = m % (r + 1)
        beta_counts[v] = m - h
        if h:
            alpha_counts[v] = alpha_counts.get(v, 0) + h
            moves.append({"value": v, "copies": h})
    return (Partition.from_counts(alpha_counts),
            Partition.from_counts(beta_counts), moves)


def shift_residues_keep_largest(alpha: Partition, beta: Partition, r: int) -> PartitionPair:
    """Pair operator keeping all copies of beta's largest value."""
    a, b, _ = _shift_residues(alpha, beta, r, "largest")
    return PartitionPair(a, b)


def shift_residues_keep_smallest(alpha: Partition, beta: Partition, r: int) -> PartitionPair:
    """Mirror operator keeping all copies of beta's smallest value."""
    a, b, _ = _shift_residues(alpha, beta, r, "smallest")
    return PartitionPair(a, b)


# ---------------------------------------------------------------------------
# Codomain checkers (independent of the forward constructions)
# ---------------------------------------------------------------------------

def in_mex_codomain(pair: PartitionPair, r: int) -> bool:
    """Pairs hit by mex_pairing: alpha is (r+1)-strict; if beta is nonempty
    its largest value has multiplicity not divisible by r+1 and every
    smaller value has multiplicity divisible by r+1."""
    if isinstance(pair.beta, ColoredEmpty):
        return False
    if not is_strict(pair.alpha, r + 1):
        return False
    beta = pair.beta
    if beta.is_empty:
        return True
    top_value, top_mult = beta.pairs[0]
    if top_mult % (r + 1) == 0:
        return False
    return all(m % (r + 1) == 0 for v, m in beta.pairs if v != top_value)


def in_colored_codomain(pair: PartitionPair, r: int) -> bool:
    """Pairs hit by mex_pairing_colored: as in_mex_codomain but the empty
    beta is replaced by r colored copies."""
    if isinstance(pair.beta, ColoredEmpty):
        return 1 <= pair.beta.color <= r and is_strict(pair.alpha, r + 1)
    return (not pair.beta.is_empty) and in_mex_codomain(pair, r)


def in_maex_codomain(pair: PartitionPair, r: int) -> bool:
    """Pairs hit by maex_pairing: alpha is (r+1)-strict; in beta every
    value above the smallest has multiplicity divisible by r+1."""
    if isinstance(pair.beta, ColoredEmpty):
        return False
    if not is_strict(pair.alpha, r + 1):
        return False
    beta = pair.beta
    if beta.is_empty:
        return True
    bottom = beta.smallest
    return all(m % (r + 1) == 0 for v, m in beta.pairs if v != bottom)


def _require(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


# ---------------------------------------------------------------------------
# Index-to-pair map for the chain-mex sum (CLI name: gamma)
# ---------------------------------------------------------------------------

def _mex_pairing(lam: Partition, i: int, r: int):
    _require(r >= 1, "r must be >= 1")
    m = chain_mex(lam, r)
    bound = m + mex_offset(lam, r)
    _require(1 <= i <= bound, f"index {i} outside 1..{bound} for {lam}")
    lp = lam.conjugate()
    trace = {"conjugate": str(lp), "cut_index": i}
    gap_bounded = in_gap_class(lam, r)
    upper, lower = lp.cut_up(i), lp.cut_down(i)
    alpha, beta, moves = _shift_residues(upper, lower, r, "largest")
    trace["moves"] = moves
    if gap_bounded or i <= m - 1:
        case = "case1" if gap_bounded else "case2"
    else:
        g = parts_above_mex(lam, r)
        assert g > 0, "a part above the chain mex must exist off the gap class"
        k = lp.multiplicity(g)
        if (k - (i - m)) % (r + 1) == 0:
            case = "case3.2"
            extra = r - (i - m)
            beta = beta.with_copies(g, -extra)
            alpha = alpha.with_copies(g, extra)
            trace["extra_move"] = {"value": g, "copies": extra}
        else:
            case = "case3.1"
    trace["case"] = case
    return PartitionPair(alpha, beta, case), trace


def mex_pairing(lam: Partition, i: int, r: int) -> PartitionPair:
    """Map (lam, i) with 1 <= i <= chain_mex + offset to a pair (alpha, beta)
    with alpha (r+1)-strict and beta constrained as in in_mex_codomain.
    Weight is preserved: |alpha| + |beta| = |lam|."""
    return _mex_pairing(lam, i, r)[0]


def mex_pairing_trace(lam: Partition, i: int, r: int) -> dict:
    """Forward map plus a JSON-friendly trace of the intermediate steps."""
    pair, trace = _mex_pairing(lam, i, r)
    return {
        "input": {"lambda": str(lam), "i": i, "r": r},
        "case": trace["case"],
        "intermediate": {k: trace[k] for k in trace if k != "case"},
        "output": pair.to_json(),
    }


def mex_pairing_inv(pair: PartitionPair, r: int) -> IndexedPartition:
    """Inverse of mex_pairing."""
    _require(in_mex_codomain(pair, r), f"pair {pair.to_json()} violates the codomain constraints")
    alpha, beta = pair.alpha, pair.beta
    lam = alpha.concat(beta).conjugate()
    m = chain_mex(lam, r)
    g = parts_above_mex(lam, r)
    # The branch that moved extra copies leaves exactly r copies of g in
    # alpha and keeps g on top of beta; outside it beta's largest value
    # exceeds g whenever g occurs in alpha at all.
    if g > 0 and alpha.multiplicity(g) == r and not beta.is_empty and beta.largest == g:
        k = lam.conjugate().multiplicity(g)
        i = m + (k % (r + 1))
    else:
        i = 1 + sum(mult for v, mult in alpha.pairs if v >= beta.largest)
    return IndexedPartition(lam, i)


# ---------------------------------------------------------------------------
# Colored extension (CLI name: gamma-star)
# ---------------------------------------------------------------------------

def mex_pairing_colored(lam: Partition, i: int, r: int) -> PartitionPair:
    """Extension of mex_pairing to the uniform index range
    1 <= i <= chain_mex + r - 1; the surplus indices on the gap-bounded
    class map to pairs whose empty beta carries a color in 1..r.

    Beta is emitted in the same orientation as mex_pairing; apply
    ``conjugate_beta`` to match the convention where beta counts
    (r+1)-regular partitions with all parts in one residue class.
    """
    _require(r >= 1, "r must be >= 1")
    m = chain_mex(lam, r)
    bound = m + r - 1
    _require(1 <= i <= bound, f"index {i} outside 1..{bound} for {lam}")
    if in_gap_class(lam, r) and i >= m:
        return PartitionPair(lam.conjugate(), ColoredEmpty(i - m + 1), case="colored")
    return mex_pairing(lam, i, r)


def mex_pairing_colored_inv(pair: PartitionPair, r: int) -> IndexedPartition:
    """Inverse of mex_pairing_colored."""
    _require(in_colored_codomain(pair, r),
             f"pair {pair.to_json()} violates the colored codomain constraints")
    if isinstance(pair.beta, ColoredEmpty):
        lam = pair.alpha.conjugate()
        _require(in_gap_class(lam, r), "colored empty beta requires a gap-bounded preimage")
        return IndexedPartition(lam, chain_mex(lam, r) + pair.beta.color - 1)
    return mex_pairing_inv(pair, r)


def conjugate_beta(pair: PartitionPair) -> PartitionPair:
    """Replace beta by its conjugate (colored empties are fixed)."""
    if isinstance(pair.beta, ColoredEmpty):
        return pair
    return PartitionPair(pair.alpha, pair.beta.conjugate(), pair.case)


# ---------------------------------------------------------------------------
# Index-to-pair map for the chain-maex sum (CLI name: delta)
# ---------------------------------------------------------------------------

def _maex_pairing(lam: Partition, i: int, r: int):
    _require(r >= 1, "r must be >= 1")
    top = lam.largest
    bound = top - chain_maex(lam, r) + maex_offset(lam, r)
    _require(1 <= i <= bound, f"index {i} outside 1..{bound} for {lam}")
    lp = lam.conjugate()
    cut = top + 2 - i
    # alpha grows out of the lower piece, beta out of the upper piece
    alpha, beta, moves = _shift_residues(lp.cut_down(cut), lp.cut_up(cut), r, "smallest")
    trace = {"conjugate": str(lp), "cut_index": cut, "moves": moves, "case": "cut"}
    return PartitionPair(alpha, beta, "cut"), trace


def maex_pairing(lam: Partition, i: int, r: int) -> PartitionPair:
    """Map (lam, i) with 1 <= i <= largest - chain_maex + offset to a pair
    satisfying in_maex_codomain; weight is preserved."""
    return _maex_pairing(lam, i, r)[0]


def maex_pairing_trace(lam: Partition, i: int, r: int) -> dict:
    pair, trace = _maex_pairing(lam, i, r)
    return {
        "input": {"lambda": str(lam), "i": i, "r": r},
        "case": trace["case"],
        "intermediate": {k: trace[k] for k in trace if k != "case"},
        "output": pair.to_json(),
    }


def maex_pairing_inv(pair: PartitionPair, r: int) -> IndexedPartition:
    """Inverse of maex_pairing.  The smallest part of an empty beta counts
    as infinity, so every part of alpha lies below it."""
    _require(in_maex_codomain(pair, r), f"pair {pair.to_json()} violates the codomain constraints")
    alpha, beta = pair.alpha, pair.beta
    lam = alpha.concat(beta).conjugate()
    if beta.is_empty:
        below = alpha.num_parts
    else:
        below = sum(mult for v, mult in alpha.pairs if v <= beta.smallest)
    return IndexedPartition(lam, 1 + below)
