"""Characters on the spaces of symmetric and skew-symmetric matrices.

This module collects the weight combinatorics attached to the two spaces:

* the weight sets describing the simple equivariant modules (one family
  indexed by s for skew-symmetric matrices, two flavors per index for
  symmetric ones), their membership tests and witness weights;
* the Weyl dimension formula;
* characters of the coordinate ring, of the ideals I_z generated by a
  single irreducible, of the cyclic subquotients J_{x,p}, and the
  filtration consistency check tying all of these together.

Infinite characters are truncated by total weight size: a character "at
bound D" lists exactly the weights of size at most D, completely.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod

from .partitions import (
    Partition,
    Weight,
    dominates,
    doubled,
    duplicated,
    enumerate_box,
    enumerate_weights,
    padded,
    partition,
    size,
    weight,
)

SKEW = "skew"
SYMM = "symm"
GENERAL = "general"


def _check_space(space: str) -> str:
    if space not in (SKEW, SYMM):
        raise ValueError(f"space must be '{SKEW}' or '{SYMM}', got {space!r}")
    return space


@dataclass(frozen=True, order=True)
class SimpleLabel:
    """Label of a simple equivariant module on skew/symmetric n x n matrices.

    Skew-symmetric matrices carry floor(n/2)+1 simples, indexed by
    s = 0..floor(n/2) with no flavor.  Symmetric matrices carry 2n+1
    simples: index s = 0..n with flavor 1 or 2, where both flavors of s = n
    name the same module (canonical label: flavor None).
    """

    space: str
    n: int
    s: int
    flavor: int | None = None

    def __post_init__(self):
        _check_space(self.space)
        if self.space == SKEW:
            if not 0 <= self.s <= self.n // 2:
                raise ValueError(f"skew index s={self.s} out of range for n={self.n}")
            if self.flavor is not None:
                raise ValueError("skew labels carry no flavor")
        else:
            if not 0 <= self.s <= self.n:
                raise ValueError(f"symm index s={self.s} out of range for n={self.n}")
            if self.s == self.n:
                if self.flavor is not None:
                    object.__setattr__(self, "flavor", None)
            elif self.flavor not in (1, 2):
                raise ValueError("symm labels with s < n require flavor 1 or 2")


def all_labels(space: str, n: int) -> list[SimpleLabel]:
    """Every simple label: floor(n/2)+1 for skew, 2n+1 for symm."""
    if _check_space(space) == SKEW:
        return [SimpleLabel(SKEW, n, s) for s in range(n // 2 + 1)]
    out = [SimpleLabel(SYMM, n, s, j) for s in range(n) for j in (1, 2)]
    out.append(SimpleLabel(SYMM, n, n))
    return out


def member_skew(lam: Weight, s: int, n: int) -> bool:
    """Is lam in the weight set of the skew simple with index s?

    For n = 2m the set is {lam dominant : lam_{2s} >= 2s-1,
    lam_{2s+1} <= 2s, lam_{2i-1} = lam_{2i} for all i}; for n = 2m+1 it is
    {lam : lam_{2s+1} = 2s, lam_{2i-1} = lam_{2i} for i <= s,
    lam_{2i} = lam_{2i+1} for i > s}.  Conditions on out-of-range indices
    are vacuous.
    """
    lam = weight(lam)
    if len(lam) != n:
        raise ValueError(f"weight {lam} does not have rank {n}")
    m = n // 2
    if not 0 <= s <= m:
        raise ValueError(f"index s={s} out of range for n={n}")
    if n % 2 == 0:
        if any(lam[2 * i] != lam[2 * i + 1] for i in range(m)):
            return False
        if s >= 1 and lam[2 * s - 1] < 2 * s - 1:
            return False
        if 2 * s + 1 <= n and lam[2 * s] > 2 * s:
            return False
        return True
    if lam[2 * s] != 2 * s:
        return False
    if any(lam[2 * i - 2] != lam[2 * i - 1] for i in range(1, s + 1)):
        return False
    if any(lam[2 * i - 1] != lam[2 * i] for i in range(s + 1, m + 1)):
        return False
    return True


def member_symm(lam: Weight, s: int, flavor: int, n: int) -> bool:
    """Is lam in the weight set of the symm simple with index s and flavor?

    Flavor 1: all entries congruent to s+1 mod 2, and
    lam_s >= s+1 >= lam_{s+2}.  Flavor 2: entries 1..s congruent to s+1,
    entries s+1..n congruent to s, and lam_s >= s+1, lam_{s+1} <= s.
    """
    lam = weight(lam)
    if len(lam) != n:
        raise ValueError(f"weight {lam} does not have rank {n}")
    if not 0 <= s <= n:
        raise ValueError(f"index s={s} out of range for n={n}")
    if flavor not in (1, 2):
        raise ValueError(f"flavor must be 1 or 2, got {flavor}")
    if flavor == 1:
        if any((a - s - 1) % 2 for a in lam):
            return False
        if s >= 1 and lam[s - 1] < s + 1:
            return False
        if s + 2 <= n and lam[s + 1] > s + 1:
            return False
        return True
    if any((lam[i] - s - 1) % 2 for i in range(s)):
        return False
    if any((lam[i] - s) % 2 for i in range(s, n)):
        return False
    if s >= 1 and lam[s - 1] < s + 1:
        return False
    if s + 1 <= n and lam[s] > s:
        return False
    return True


def member(label: SimpleLabel, lam: Weight) -> bool:
    """Membership of lam in the weight set of the labelled simple module."""
    if label.space == SKEW:
        return member_skew(lam, label.s, label.n)
    if label.s == label.n:
        return member_symm(lam, label.s, 1, label.n)
    return member_symm(lam, label.s, label.flavor, label.n)


def witness_weight(label: SimpleLabel) -> Weight:
    """The weight occurring in this simple module's character and in no
    other: (2s)^n for skew; (s+1)^n for symm flavor 1 and
    ((s+1)^s, s^(n-s)) for flavor 2."""
    n, s = label.n, label.s
    if label.space == SKEW:
        return (2 * s,) * n
    if label.flavor == 2 and s < n:
        return (s + 1,) * s + (s,) * (n - s)
    return (s + 1,) * n


def enumerate_members(label: SimpleLabel, entry_bound: int) -> list[Weight]:
    """All weights of the labelled set with every |entry| <= entry_bound.

    The sets are infinite (unbounded below), so an entry bound is required
    to make the listing finite.
    """
    return [
        lam
        for lam in enumerate_weights(label.n, -entry_bound, entry_bound)
        if member(label, lam)
    ]


def schur_dimension(lam: Weight, n: int | None = None) -> int:
    """Dimension of the irreducible GL representation with highest weight
    lam, by the Weyl formula prod_{i<j} (lam_i - lam_j + j - i)/(j - i)."""
    lam = weight(lam, n)
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    assert num % den == 0
    return num // den


def _ring_partitions(space: str, n: int, bound: int):
    """Pairs (z, shape(z)) where shape is 2z (symm) or z repeated (skew),
    over all z giving |shape| <= bound."""
    rows = n if space == SYMM else n // 2
    for z in enumerate_box(rows, bound // 2):
        if 2 * size(z) <= bound:
            yield z, (doubled(z) if space == SYMM else duplicated(z))


def space_character(space: str, n: int, bound: int) -> Counter:
    """Character of the coordinate ring, truncated at total size <= bound:
    all 2z (symm) resp. z repeated (skew), each with multiplicity 1."""
    _check_space(space)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return Counter(shape for _, shape in _ring_partitions(space, n, bound))


def ideal_character(space: str, n: int, z: Partition, bound: int) -> Counter:
    """Character of the ideal generated by the irreducible attached to z:
    the shapes coming from y >= z componentwise, truncated at bound."""
    _check_space(space)
    z = partition(z)
    rows = n if space == SYMM else n // 2
    if len(z) > rows:
        raise ValueError(f"z={z} needs at most {rows} parts for {space} n={n}")
    return Counter(
        shape for y, shape in _ring_partitions(space, n, bound) if dominates(y, z)
    )


def layer_character(space: str, n: int, x: Partition, p: int, bound: int) -> Counter:
    """Character of the cyclic subquotient generated by the x-isotypic
    component: all x + 2y (symm) resp. x + (y repeated) (skew) for y with at
    most p parts, truncated at total size <= bound.

    Requires the first p (symm) resp. 2p (skew) parts of x to be equal,
    which makes every listed weight a partition and the decomposition
    multiplicity-free.
    """
    _check_space(space)
    x = partition(x)
    if len(x) > n:
        raise ValueError(f"x={x} needs at most {n} parts")
    head = p if space == SYMM else 2 * p
    if p < 0 or (space == SYMM and p > n) or (space == SKEW and 2 * p > n):
        raise ValueError(f"invalid p={p} for {space} n={n}")
    xp = padded(x, n)
    if any(xp[i] != xp[0] for i in range(head)):
        raise ValueError(f"first {head} parts of x={x} must be equal")
    out: Counter = Counter()
    budget = bound - size(x)
    if budget < 0:
        return out
    for y in enumerate_box(p, budget // 2):
        add = doubled(y) if space == SYMM else duplicated(y)
        if 2 * size(y) <= budget:
            out[partition(tuple(a + b for a, b in zip(xp, padded(add, n))))] += 1
    return out


def filtration_layers(space: str, n: int, p: int, bound: int) -> list[Partition]:
    """The ordered list of partitions indexing the rank filtration: all z
    (at most n parts for symm, floor(n/2) for skew) with
    z_1 = ... = z_{p+1} and |shape(z)| <= bound, ordered by size then
    lexicographically.

    Any linear order with no earlier term componentwise >= a later one
    works; size-then-lex is such an order and is fixed here for
    reproducibility.
    """
    _check_space(space)
    rows = n if space == SYMM else n // 2
    if not 0 <= p < rows:
        raise ValueError(f"invalid p={p} for {space} n={n}")
    out = []
    for z in enumerate_box(rows, bound // 2):
        zp = padded(z, rows)
        if 2 * size(z) <= bound and all(zp[i] == zp[0] for i in range(p + 1)):
            out.append(z)
    out.sort(key=lambda z: (size(z), z))
    return out


@dataclass
class FiltrationReport:
    """Outcome of the filtration consistency check."""

    ok: bool
    space: str
    n: int
    p: int
    bound: int
    layers: list[Partition]
    mismatch: dict | None = None


def filtration_check(space: str, n: int, p: int, bound: int) -> FiltrationReport:
    """Verify, below the truncation bound, that the rank filtration works:

    * each successive ideal quotient has exactly the character of the
      cyclic subquotient attached to its indexing partition, and
    * the layer characters together exhaust the coordinate ring (the graded
      pieces sum to the full direct-sum module).

    Reports the first layer where the characters disagree.
    """
    layers = filtration_layers(space, n, p, bound)
    shape = doubled if space == SYMM else duplicated
    # character of the ideal sum(i >= r) I_{layer_i}, built from the back
    suffix: list[set] = [set()] * (len(layers) + 1)
    running: set = set()
    for r in range(len(layers) - 1, -1, -1):
        running = running | set(ideal_character(space, n, layers[r], bound))
        suffix[r] = running
    union_layers: Counter = Counter()
    for r, lam in enumerate(layers):
        expected = Counter({w: 1 for w in suffix[r] - suffix[r + 1]})
        got = layer_character(space, n, shape(lam), p, bound)
        union_layers += got
        if expected != got:
            return FiltrationReport(
                False, space, n, p, bound, layers,
                mismatch={
                    "layer": r,
                    "partition": list(lam),
                    "quotient_character": sorted(map(list, expected)),
                    "cyclic_character": sorted(map(list, got)),
                },
            )
    full = space_character(space, n, bound)
    if union_layers != full:
        return FiltrationReport(
            False, space, n, p, bound, layers,
            mismatch={
                "layer": None,
                "union_of_layers": sorted(map(list, union_layers)),
                "ring_character": sorted(map(list, full)),
            },
        )
    return FiltrationReport(True, space, n, p, bound, layers)
