"""
Permutations of {1..n}: cycle structure, sampling, and the canonical
factorization into descending runs of adjacent transpositions.

Conventions used throughout the package:

- Points are 1-based. A permutation w is stored in one-line notation as the
  tuple (w(1), ..., w(n)).
- Products read left to right: (p * q)(x) = q(p(x)), so the left factor acts
  first. This makes the map from positive braid words to permutations a
  homomorphism for word concatenation, and fixes the direction of 3-cycles
  produced by the cycle reduction (see braidentropy.reduction).
- The canonical factorization writes w as a product of factors
  (s_{i_1} .. s_1)(s_{i_2} .. s_2) ... (s_{i_n} .. s_n), with factor j empty
  exactly when i_j = j - 1. The indices are unique given the constraints
  j - 1 <= i_j <= n - 1, and they are what turns a permutation into its
  positive braid lift.
"""

from __future__ import annotations

import dataclasses
import hashlib
import random
from typing import Iterable, Sequence


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: images[i-1] = w(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of {{1..{n}}}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose with the left factor acting first: (p * q)(x) = q(p(x)).

        >>> s1, s2 = simple(3, 1), simple(3, 2)
        >>> (s2 * s1).images
        (2, 3, 1)
        """
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        return Permutation(tuple(other.images[y - 1] for y in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple(n: int, i: int) -> Permutation:
    """The adjacent transposition s_i swapping i and i + 1 in degree n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple transposition index {i} out of range for degree {n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product with the left factor acting first; see Permutation.__mul__."""
    return p * q


@dataclasses.dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering {1..n}; each cycle starts at its smallest
    point, and cycles are ordered by smallest point."""

    n: int
    cycles: tuple[tuple[int, ...], ...]

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def to_permutation(self) -> Permutation:
        images = [0] * self.n
        for cycle in self.cycles:
            for i, x in enumerate(cycle):
                images[x - 1] = cycle[(i + 1) % len(cycle)]
        return Permutation(tuple(images))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    """Trace out the orbits of p.

    >>> cycle_decomposition(Permutation((2, 1, 4, 5, 6, 3))).cycles
    ((1, 2), (3, 4, 5, 6))
    """
    seen = [False] * p.n
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        x = p(start)
        while x != start:
            cycle.append(x)
            seen[x - 1] = True
            x = p(x)
        cycles.append(tuple(cycle))
    return CycleDecomposition(p.n, tuple(cycles))


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation of {1..n} from disjoint cycles; omitted points are
    fixed."""
    images = list(range(1, n + 1))
    used: set[int] = set()
    for cycle in cycles:
        for x in cycle:
            if not 1 <= x <= n:
                raise ValueError(f"point {x} out of range for degree {n}")
            if x in used:
                raise ValueError(f"point {x} appears in two cycles")
            used.add(x)
        for i, x in enumerate(cycle):
            images[x - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(tuple(images))


# A cycle is "relevant" when its length is divisible by 3 and long enough for
# the density bound behind the certification theorem; the certifier itself is
# sound for any length divisible by 3, which the min_length=3 mode exposes.
RELEVANT_MIN_LENGTH = 21


def relevant_cycles(p: Permutation, min_length: int = RELEVANT_MIN_LENGTH) -> tuple[tuple[int, ...], ...]:
    """Cycles of p whose length is divisible by 3 and at least min_length."""
    return tuple(
        c for c in cycle_decomposition(p).cycles
        if len(c) % 3 == 0 and len(c) >= min_length
    )


def approx_equivalent(p: Permutation, q: Permutation) -> bool:
    """True when p and q have identical irrelevant cycles (as cyclic
    sequences) and identical relevant orbits (as sets)."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} != {q.n}")

    def split(w: Permutation):
        irrelevant, relevant_orbits = [], []
        for c in cycle_decomposition(w).cycles:
            if len(c) % 3 == 0 and len(c) >= RELEVANT_MIN_LENGTH:
                relevant_orbits.append(frozenset(c))
            else:
                irrelevant.append(c)
        return set(irrelevant), set(relevant_orbits)

    return split(p) == split(q)


@dataclasses.dataclass(frozen=True)
class SimpleFactorization:
    """The unique indices (i_1, ..., i_n) with j - 1 <= i_j <= n - 1 writing a
    permutation as (s_{i_1} .. s_1)(s_{i_2} .. s_2) ... (s_{i_n} .. s_n)."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != self.n:
            raise ValueError("need exactly one index per point")
        for j, ij in enumerate(self.indices, start=1):
            if not j - 1 <= ij <= self.n - 1:
                raise ValueError(f"index i_{j} = {ij} violates {j - 1} <= i_{j} <= {self.n - 1}")


def canonical_factorization(p: Permutation) -> SimpleFactorization:
    """Compute the factorization indices.

    Factor j is the cycle moving position i_j + 1 down to j while shifting
    j..i_j up by one, so i_j + 1 is the current preimage of j; peeling factors
    off from the left determines each index in turn.

    >>> canonical_factorization(identity(3)).indices
    (0, 1, 2)
    """
    v = list(p.images)  # v[x-1] = current value at x

    def preimage(val: int) -> int:
        return v.index(val) + 1

    indices = []
    for j in range(1, p.n + 1):
        ij = preimage(j) - 1
        indices.append(ij)
        # strip factor j off the left: v <- v o F_j^{-1}, where F_j^{-1} sends
        # j to i_j + 1 and m + 1 to m for j <= m <= i_j
        block = v[j - 1:ij + 1]
        if block:
            v[j - 1:ij + 1] = [block[-1]] + block[:-1]
    return SimpleFactorization(p.n, tuple(indices))


def reconstruct(f: SimpleFactorization) -> Permutation:
    """Multiply the factors back out; inverse of canonical_factorization."""
    w = identity(f.n)
    for j, ij in enumerate(f.indices, start=1):
        for i in range(ij, j - 1, -1):
            w = w * simple(f.n, i)
    return w


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

def subseed(seed: int, index: int) -> int:
    """Derive the seed for one sample of a Monte Carlo batch.

    Hashing (seed, index) rather than using seed + index avoids the
    correlated low-entropy seeding of nearby integers and makes any sharding
    of a batch reproduce the exact same per-sample streams.
    """
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def _shuffled(items: list, rng: random.Random) -> list:
    # Fisher-Yates, spelled out so the byte-for-byte output depends only on
    # the Mersenne Twister stream, not on stdlib shuffle internals.
    for i in range(len(items) - 1, 0, -1):
        j = rng.randrange(i + 1)
        items[i], items[j] = items[j], items[i]
    return items


def sample_uniform(n: int, seed: int) -> Permutation:
    """A uniform element of the symmetric group on n points; deterministic in
    (n, seed)."""
    if n < 1:
        raise ValueError("degree must be positive")
    return Permutation(tuple(_shuffled(list(range(1, n + 1)), random.Random(seed))))


def sample_full_cycle(m: int, seed: int) -> Permutation:
    """A uniform single m-cycle in degree m: a uniform arrangement of {2..m}
    follows 1 around the cycle."""
    if m < 1:
        raise ValueError("degree must be positive")
    order = [1] + _shuffled(list(range(2, m + 1)), random.Random(seed))
    return from_cycles(m, [order])


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def format_one_line(p: Permutation) -> str:
    """One-line notation, e.g. "2,1,4,5,6,3"."""
    return ",".join(str(x) for x in p.images)


def parse_one_line(text: str) -> Permutation:
    try:
        images = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad one-line permutation {text!r}") from exc
    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    """Cycle notation, e.g. "(1 2)(3 4 5 6)"."""
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycle_decomposition(p).cycles)


def parse_cycles(text: str, n: int) -> Permutation:
    stripped = text.replace(" ", "")
    if stripped in ("", "()"):
        return identity(n)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        try:
            cycles.append([int(part) for part in chunk.split()])
        except ValueError as exc:
            raise ValueError(f"bad cycle notation {text!r}") from exc
    return from_cycles(n, cycles)
