"""Non-crossing partitions of {1..n}.

Provides enumeration of NC(n), the crossing test, the Kreweras complement,
the lattice join and the interval partitions used when grouping cumulants.

Ordering conventions:
- blocks inside a partition are sorted by their minimum element;
- enumerate_nc lists partitions by lexicographic block signature, i.e. by
  the tuple of blocks compared as tuples of integers.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import SizeError, ValidationError

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
Blocks = Tuple[Block, ...]

# Catalan(12) = 208012 partitions; above that enumeration stops being desk-scale.
DEFAULT_NC_CAP = 12


def catalan(n: int) -> int:
    """Return the n-th Catalan number."""
    return comb(2 * n, n) // (n + 1)


def _canonical_blocks(blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> Tuple[int, Blocks]:
    """Validate that blocks partition {1..n} and return (n, canonical blocks)."""
    canon: List[Block] = []
    for block in blocks:
        items = tuple(block)
        if not items:
            raise ValidationError("Partition contains an empty block")
        for x in items:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"Partition element is not an integer: {x!r}")
        canon.append(tuple(sorted(items)))
    canon.sort(key=lambda b: b[0])

    elements = sorted(x for b in canon for x in b)
    size = len(elements) if n is None else n
    if elements != list(range(1, size + 1)):
        raise ValidationError(f"Blocks {[list(b) for b in canon]} do not partition {{1..{size}}}")
    return size, tuple(canon)


def _find_crossing(n: int, blocks: Blocks) -> Optional[Tuple[int, int]]:
    """Return indices of two crossing blocks, or None if the partition is non-crossing.

    Single left-to-right scan with a stack of open blocks: when an element
    returns to a block that is not on top of the stack, the top block
    opened inside the gap and is still open, so the two blocks interleave.
    """
    label = [0] * (n + 1)
    for idx, block in enumerate(blocks):
        for x in block:
            label[x] = idx
    last = [block[-1] for block in blocks]
    opened = [False] * len(blocks)
    stack: List[int] = []

    for i in range(1, n + 1):
        b = label[i]
        if opened[b]:
            if stack[-1] != b:
                return stack[-1], b
            if i == last[b]:
                stack.pop()
        else:
            opened[b] = True
            if i != last[b]:
                stack.append(b)
    return None


@dataclass(frozen=True)
class NCPartition:
    """A non-crossing partition of {1..n}.

    Blocks are stored as strictly increasing tuples, sorted by minimum.
    Construction validates both the partition property and the
    non-crossing property.
    """

    n: int
    blocks: Blocks

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"Ground set size must be a positive integer, got {self.n!r}")
        n, canon = _canonical_blocks(self.blocks, self.n)
        if _find_crossing(n, canon) is not None:
            raise ValidationError(f"Partition {[list(b) for b in canon]} is crossing")
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def _trusted(cls, n: int, blocks: Blocks) -> "NCPartition":
        # Skips validation; callers guarantee canonical non-crossing blocks.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "blocks", blocks)
        return obj

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> "NCPartition":
        """Build a partition from any iterable of blocks, inferring n if omitted."""
        size, canon = _canonical_blocks(blocks, n)
        if size < 1:
            raise ValidationError("Partition of the empty set is not supported")
        return cls(size, canon)

    @classmethod
    def zero(cls, n: int) -> "NCPartition":
        """0_n: all singletons."""
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def one(cls, n: int) -> "NCPartition":
        """1_n: a single block."""
        return cls(n, (tuple(range(1, n + 1)),))

    @property
    def size(self) -> int:
        """Number of blocks |π|."""
        return len(self.blocks)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(sorted(len(b) for b in self.blocks))

    def refines(self, other: "NCPartition") -> bool:
        """True iff every block of self lies inside a block of other (self <= other)."""
        if other.n != self.n:
            raise ValidationError(f"Ground sets differ: {self.n} vs {other.n}")
        owner = [0] * (self.n + 1)
        for idx, block in enumerate(other.blocks):
            for x in block:
                owner[x] = idx
        return all(len({owner[x] for x in block}) == 1 for block in self.blocks)

    def rotated(self, k: int) -> "NCPartition":
        """Relabel every element i as i+k modulo n (values kept in 1..n)."""
        n = self.n
        return NCPartition(n, tuple(tuple((x - 1 + k) % n + 1 for x in b) for b in self.blocks))

    def to_list(self) -> List[List[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else ","
        return "(" + "|".join(sep.join(str(x) for x in b) for b in self.blocks) + ")"


def is_noncrossing(blocks: Iterable[Iterable[int]]) -> bool:
    """Return True iff the given partition of {1..n} has no crossing pair of blocks.

    Raises:
        ValidationError: if blocks do not partition {1..n}.
    """
    n, canon = _canonical_blocks(blocks)
    return _find_crossing(n, canon) is None


def _check_size(n: int, cap: Optional[int]) -> int:
    limit = DEFAULT_NC_CAP if cap is None else cap
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SizeError(f"n must be a positive integer, got {n!r}")
    if n > limit:
        raise SizeError(f"n={n} exceeds the enumeration cap {limit} (Catalan({n})={catalan(n)})")
    return n


@lru_cache(maxsize=None)
def _nc_block_lists(n: int) -> Tuple[Blocks, ...]:
    """All of NC(n) as canonical block tuples, by first-block decomposition.

    The block containing 1 cuts {2..n} into arcs (the gaps between its
    consecutive elements and the tail after its maximum); the arcs are
    partitioned independently.
    """
    if n == 0:
        return ((),)
    result: List[Blocks] = []
    for k in range(n):
        for rest in combinations(range(2, n + 1), k):
            first = (1,) + rest
            bounds = first + (n + 1,)
            arc_choices = []
            for j in range(len(first)):
                lo, hi = bounds[j] + 1, bounds[j + 1] - 1
                offset = lo - 1
                arc_choices.append(
                    [tuple(tuple(x + offset for x in b) for b in p) for p in _nc_block_lists(hi - lo + 1)]
                )
            for combo in product(*arc_choices):
                blocks = [first]
                for part in combo:
                    blocks.extend(part)
                blocks.sort(key=lambda b: b[0])
                result.append(tuple(blocks))
    result.sort()
    return tuple(result)


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> Tuple[NCPartition, ...]:
    parts = tuple(NCPartition._trusted(n, blocks) for blocks in _nc_block_lists(n))
    logger.debug("enumerated NC(%d): %d partitions", n, len(parts))
    return parts


def enumerate_nc(n: int, cap: Optional[int] = None) -> Tuple[NCPartition, ...]:
    """Return every non-crossing partition of {1..n} exactly once.

    Args:
        n: Ground set size, 1 <= n <= cap.
        cap: Largest n accepted (default DEFAULT_NC_CAP).

    Returns:
        Tuple of Catalan(n) partitions in lexicographic block-signature order.

    Raises:
        SizeError: if n is not in 1..cap.
    """
    return _enumerate_cached(_check_size(n, cap))


def _kreweras_blocks(p: NCPartition) -> Blocks:
    n = p.n
    # prev[x]: predecessor of x inside its block, cyclically (min -> max)
    prev = [0] * (n + 1)
    for block in p.blocks:
        for j, x in enumerate(block):
            prev[x] = block[j - 1]
    # On the circle 1, 1', 2, 2', ..., n, n' the bar k' is linked to the bar
    # just before the block-predecessor of k+1.
    succ = [0] * (n + 1)
    for k in range(1, n + 1):
        succ[k] = prev[k % n + 1]

    seen = [False] * (n + 1)
    blocks: List[Block] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = succ[x]
        blocks.append(tuple(sorted(cycle)))
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks)


def kreweras(p: NCPartition) -> NCPartition:
    """Kreweras complement K(p) on the same ground set.

    The result is the coarsest partition of the barred copy {1', ..., n'}
    whose union with p stays non-crossing on the interleaved circle; it
    satisfies |p| + |K(p)| = n + 1.
    """
    return NCPartition._trusted(p.n, _kreweras_blocks(p))


def kreweras_squared_shift(p: NCPartition) -> NCPartition:
    """Return K(K(p)), checking that it is p rotated by one step (i -> i-1, 1 -> n)."""
    result = kreweras(kreweras(p))
    expected = p.rotated(-1)
    if result != expected:
        raise RuntimeError(f"K^2({p}) = {result}, expected the rotation {expected}")
    return result


@lru_cache(maxsize=None)
def _kreweras_pairs_cached(n: int) -> Tuple[Tuple[NCPartition, NCPartition], ...]:
    return tuple((p, kreweras(p)) for p in _enumerate_cached(n))


def kreweras_pairs(n: int, cap: Optional[int] = None) -> Tuple[Tuple[NCPartition, NCPartition], ...]:
    """Memoized (π, K(π)) for every π in NC(n), in enumerate_nc order."""
    return _kreweras_pairs_cached(_check_size(n, cap))


class _DisjointSet:
    """Union-find over 1..n with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.rank = [0] * (n + 1)

    def find(self, x: int) -> int:
        if self.parent[x] != x:
            self.parent[x] = self.find(self.parent[x])
        return self.parent[x]

    def unite(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True

    def blocks(self, n: int) -> Blocks:
        groups = {}
        for x in range(1, n + 1):
            groups.setdefault(self.find(x), []).append(x)
        return tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: b[0]))


def nc_join(p: NCPartition, q: NCPartition) -> NCPartition:
    """Least upper bound of p and q in NC(n).

    Merges blocks transitively (the join in the lattice of all partitions)
    and then merges crossing blocks until none remain.

    Raises:
        ValidationError: if the ground sets differ.
    """
    if p.n != q.n:
        raise ValidationError(f"Cannot join partitions of different ground sets: {p.n} vs {q.n}")
    n = p.n
    ds = _DisjointSet(n)
    for part in (p, q):
        for block in part.blocks:
            for x in block[1:]:
                ds.unite(block[0], x)

    while True:
        blocks = ds.blocks(n)
        crossing = _find_crossing(n, blocks)
        if crossing is None:
            return NCPartition._trusted(n, blocks)
        a, b = crossing
        ds.unite(blocks[a][0], blocks[b][0])


def interval_partition(n: int, cuts: Sequence[int]) -> NCPartition:
    """Interval partition {1..j1}, {j1+1..j2}, ... for cuts j1 < j2 < ... < jm = n.

    Raises:
        ValidationError: if the cuts are empty, not strictly increasing, start
            below 1 or do not end at n.
    """
    cuts = list(cuts)
    if not cuts:
        raise ValidationError("Interval partition needs at least one cut")
    if cuts[0] < 1 or cuts[-1] != n or any(a >= b for a, b in zip(cuts, cuts[1:])):
        raise ValidationError(f"Invalid cuts {cuts} for n={n}: need 1 <= j1 < ... < jm = n")
    blocks = []
    start = 1
    for cut in cuts:
        blocks.append(tuple(range(start, cut + 1)))
        start = cut + 1
    return NCPartition(n, tuple(blocks))
