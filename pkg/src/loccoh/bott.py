"""Cohomology of irreducible homogeneous bundles on Grassmannians.

``bott`` runs the classical sort-and-count-inversions algorithm for the
bundle S_beta(R) (x) S_alpha(Q) on the Grassmannian G(k, V) of k-dimensional
quotients of an n-dimensional space: at most one cohomological degree is
nonzero, and both the degree and the resulting irreducible are produced.
``trivial_isotypic`` and ``wedge_isotypic`` are the closed-form answers for
when that cohomology contributes a trivial summand, respectively a
wedge-power summand; they are checked against the algorithm by a sweep in
the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, Weight, conjugate, dual, padded, partition, size, weight
from .qseries import LaurentPoly


@dataclass(frozen=True)
class BottCohomology:
    """Nonzero outcome: a single cohomological degree and a dominant weight."""

    degree: int
    weight: Weight


def bott(alpha: Weight, beta: Weight, n: int) -> BottCohomology | None:
    """All cohomology of S_beta(R) (x) S_alpha(Q) on G(k, V), k = len(alpha).

    Returns None when every cohomology group vanishes.  Otherwise the unique
    nonzero group sits in degree l = #{x < y : gamma_x - x < gamma_y - y}
    (gamma the concatenation of alpha and beta) and is the irreducible with
    highest weight sort(gamma + delta) - delta, delta = (n-1, ..., 1, 0).

    k = 0 and k = n are permitted; the empty factor is the trivial bundle.
    """
    alpha = weight(alpha)
    beta = weight(beta)
    k = len(alpha)
    if not 0 <= k <= n or len(beta) != n - k:
        raise ValueError(f"rank mismatch: |alpha|={k}, |beta|={len(beta)}, n={n}")
    gamma = alpha + beta
    c = [gamma[i] + n - 1 - i for i in range(n)]
    if len(set(c)) != n:
        return None
    # within each of the two blocks c is strictly decreasing, so all
    # inversions pair the alpha block with the beta block
    head, tail = c[:k], c[k:]
    degree = sum(1 for a in head for b in tail if a < b)
    c.sort(reverse=True)
    return BottCohomology(degree, tuple(c[i] - (n - 1 - i) for i in range(n)))


def sigma_of_partition(t: Partition, k: int, n: int) -> tuple[int, ...]:
    """The permutation of {1..n} attached to a partition t in the
    (n-k) x k box, in one-line form.

    sigma(i) = t'_{k+1-i} + i for i <= k and sigma(i) = i - t_{i-k} for
    i > k; it increases on each block and its inversion number is |t|.
    """
    t = partition(t)
    if len(t) > n - k or (t and t[0] > k):
        raise ValueError(f"{t} is not inside a {n - k}x{k} box")
    tp = padded(conjugate(t), k)
    tt = padded(t, n - k)
    head = [tp[k - i] + i for i in range(1, k + 1)]
    tail = [i - tt[i - k - 1] for i in range(k + 1, n + 1)]
    sigma = tuple(head + tail)
    if sorted(sigma) != list(range(1, n + 1)):
        raise AssertionError(f"not a permutation: {sigma}")
    return sigma


def inversions(sigma: tuple[int, ...]) -> int:
    """Number of pairs x < y with sigma(x) > sigma(y)."""
    return sum(
        1 for x in range(len(sigma)) for y in range(x + 1, len(sigma)) if sigma[x] > sigma[y]
    )


def trivial_isotypic(beta: Partition, k: int, n: int) -> tuple[LaurentPoly, Weight | None]:
    """Multiplicity generating function of the trivial representation in
    H^*(G(k,V), S_beta(R) (x) S_alpha(Q)), together with the unique alpha
    achieving it.

    A trivial summand occurs (in degree |beta|, for the single weight
    alpha = dual(beta')) exactly when beta fits the (n-k) x k box; the
    returned polynomial is q^|beta| then, zero otherwise.
    """
    beta = partition(beta)
    if len(beta) > n - k:
        raise ValueError(f"beta={beta} needs at most {n - k} parts")
    if beta and beta[0] > k:
        return LaurentPoly.zero(), None
    alpha = dual(padded(conjugate(beta), k))
    return LaurentPoly.q(size(beta)), alpha


def wedge_isotypic(beta: Partition, k: int, n: int, s: int) -> tuple[LaurentPoly, Weight | None]:
    """Like ``trivial_isotypic`` for the (n-s)-th wedge power of the ambient
    space, i.e. the dominant weight (0^s, (-1)^(n-s)).

    Requires n-k <= s <= n and every beta_i >= n-s (zero-padded to n-k
    parts); the contributing alpha is dual(beta') shifted by
    (0^(s-n+k), (-1)^(n-s)).  ``s = n`` recovers ``trivial_isotypic``.
    """
    beta = partition(beta)
    if len(beta) > n - k:
        raise ValueError(f"beta={beta} needs at most {n - k} parts")
    if not n - k <= s <= n:
        raise ValueError(f"need n-k <= s <= n, got s={s}, k={k}, n={n}")
    if any(b < n - s for b in padded(beta, n - k)):
        raise ValueError(f"beta={beta} violates beta_i >= n-s = {n - s}")
    if beta and beta[0] > k:
        return LaurentPoly.zero(), None
    base = dual(padded(conjugate(beta), k))
    alpha = tuple(a + (0 if i < s - n + k else -1) for i, a in enumerate(base))
    return LaurentPoly.q(size(beta)), alpha
