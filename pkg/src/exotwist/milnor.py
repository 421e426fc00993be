"""Intersection-form invariants of the Brieskorn-Pham Milnor fiber M_c(p,q,r).

The second cohomology of the fiber carries a symmetric intersection form of
rank mu = (p-1)(q-1)(r-1).  Its inertia (b+, b-, nullity) is computed by the
classical lattice-point count: each triple (i,j,k) with 1 <= i <= p-1,
1 <= j <= q-1, 1 <= k <= r-1 contributes an eigenvector whose sign is read
off from s = i/p + j/q + k/r modulo 2:

    s mod 2 in (0,1)  ->  positive eigenvalue
    s mod 2 in (1,2)  ->  negative eigenvalue
    s integral        ->  null vector

All comparisons are done on the integer N = i*qr + j*pr + k*pq against the
multiples pqr and 2pqr, so the classification is exact at every size.  Since
0 < s < 3, "s mod 2 in (0,1)" means N < pqr or N > 2pqr.

The boundary of the fiber inherits a canonical contact structure; its d3
invariant is the exact rational -sigma/4 - b+ - 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, PreconditionError

__all__ = [
    "MilnorInvariants",
    "milnor_number",
    "brieskorn_count",
    "from_counts",
    "invariants",
    "b_plus_via_lemma",
    "is_spin_with_canonical_spinc",
]

# Above this many lattice points the (i,j) grid is evaluated with numpy
# (int64; guarded against overflow).  Pure-Python integers below, where the
# array overhead would dominate.
_NUMPY_CUTOFF = 4096

# int64 guard: every intermediate is bounded by 3*pqr + pq.
_INT64_SAFE = 2**62


def _validate_exponents(p: int, q: int, r: int) -> None:
    for name, value in (("p", p), ("q", q), ("r", r)):
        if not isinstance(value, int) or value < 2:
            raise PreconditionError(f"exponent {name} must be an integer >= 2, got {value!r}")


@dataclass(frozen=True)
class MilnorInvariants:
    """Inertia of the intersection form plus the boundary d3 invariant.

    mu = sigma_plus + sigma_minus + nullity is the second Betti number;
    sigma_plus and sigma_minus are b+ and b-.
    """

    mu: int
    sigma_plus: int
    sigma_minus: int
    nullity: int
    sigma: int
    d3: Fraction


def milnor_number(p: int, q: int, r: int) -> int:
    """Milnor number (p-1)(q-1)(r-1) of the singularity x^p + y^q + z^r.

    >>> milnor_number(2, 3, 5)
    8
    >>> milnor_number(2, 3, 7)
    12
    """
    _validate_exponents(p, q, r)
    return (p - 1) * (q - 1) * (r - 1)


def _count_slab(a: int, b: int, c: int, i: int, j: int) -> tuple[int, int, int]:
    # Counts along the k-axis for one fixed (i, j), in O(1) integer steps.
    # N = i*bc + j*ac + k*ab partitions k in [1, c-1] into runs according to
    # N < abc, N = abc, abc < N < 2abc, N = 2abc, N > 2abc.
    ab = a * b
    abc = ab * c
    base = i * b * c + j * a * c
    d1 = abc - base          # N < abc  <=>  k*ab < d1
    d2 = d1 + abc            # N < 2abc <=>  k*ab < d2
    plus = minus = null = 0
    if d1 > 0:
        plus += min((d1 - 1) // ab, c - 1)
        if d1 % ab == 0 and 1 <= d1 // ab <= c - 1:
            null += 1
    lo = max(d1 // ab + 1, 1)
    hi = min((d2 - 1) // ab, c - 1)
    if hi >= lo:
        minus += hi - lo + 1
    if d2 % ab == 0 and 1 <= d2 // ab <= c - 1:
        null += 1
    lo2 = max(d2 // ab + 1, 1)
    if c - 1 >= lo2:
        plus += c - lo2
    return plus, minus, null


def _count_python(a: int, b: int, c: int) -> tuple[int, int, int]:
    plus = minus = null = 0
    for i in range(1, a):
        for j in range(1, b):
            dp, dm, dn = _count_slab(a, b, c, i, j)
            plus += dp
            minus += dm
            null += dn
    return plus, minus, null


def _count_numpy(a: int, b: int, c: int) -> tuple[int, int, int]:
    # Same arithmetic as _count_slab, vectorized over the whole (i, j) grid.
    ab = a * b
    abc = ab * c
    i = np.arange(1, a, dtype=np.int64) * (b * c)
    j = np.arange(1, b, dtype=np.int64) * (a * c)
    base = np.add.outer(i, j).ravel()
    d1 = abc - base
    d2 = d1 + abc
    plus = np.sum(np.minimum((d1 - 1) // ab, c - 1).clip(min=0))
    k1 = d1 // ab
    null = np.sum((d1 % ab == 0) & (k1 >= 1) & (k1 <= c - 1))
    k2 = d2 // ab
    null += np.sum((d2 % ab == 0) & (k2 >= 1) & (k2 <= c - 1))
    lo = np.maximum(k1 + 1, 1)
    hi = np.minimum((d2 - 1) // ab, c - 1)
    minus = np.sum((hi - lo + 1).clip(min=0))
    lo2 = np.maximum(k2 + 1, 1)
    plus += np.sum((c - lo2).clip(min=0))
    return int(plus), int(minus), int(null)


def brieskorn_count(p: int, q: int, r: int) -> tuple[int, int, int]:
    """(sigma_plus, sigma_minus, nullity) of the intersection form of M_c(p,q,r).

    Symmetric in the exponents; internally the k-run along the largest
    exponent is resolved by interval arithmetic rather than point-by-point,
    so the cost is O(ab) for sorted exponents a <= b <= c.

    >>> brieskorn_count(2, 2, 3)
    (0, 2, 0)
    >>> brieskorn_count(2, 3, 5)
    (0, 8, 0)
    >>> brieskorn_count(2, 3, 7)
    (2, 10, 0)
    """
    _validate_exponents(p, q, r)
    a, b, c = sorted((p, q, r))
    if (a - 1) * (b - 1) >= _NUMPY_CUTOFF and 3 * a * b * c + a * b < _INT64_SAFE:
        return _count_numpy(a, b, c)
    return _count_python(a, b, c)


def _d3(sigma: int, sigma_plus: int) -> Fraction:
    return Fraction(-sigma, 4) - sigma_plus - Fraction(1, 2)


def from_counts(p: int, q: int, r: int, sigma_plus: int, nullity: int) -> MilnorInvariants:
    """Assemble an invariant record from the positive-part and null counts.

    sigma_minus is forced by mu; a negative remainder means the supplied
    counts cannot belong to M_c(p,q,r).

    >>> from_counts(2, 3, 7, 2, 0).sigma
    -8
    """
    mu = milnor_number(p, q, r)
    sigma_minus = mu - sigma_plus - nullity
    if sigma_plus < 0 or nullity < 0 or sigma_minus < 0:
        raise ConsistencyError(
            f"counts (sigma_plus={sigma_plus}, nullity={nullity}) incompatible with "
            f"mu = {mu} for ({p}, {q}, {r})"
        )
    sigma = sigma_plus - sigma_minus
    return MilnorInvariants(
        mu=mu,
        sigma_plus=sigma_plus,
        sigma_minus=sigma_minus,
        nullity=nullity,
        sigma=sigma,
        d3=_d3(sigma, sigma_plus),
    )


def invariants(p: int, q: int, r: int) -> MilnorInvariants:
    """Assemble the full invariant record for M_c(p,q,r).

    >>> inv = invariants(2, 3, 5)
    >>> (inv.mu, inv.sigma, inv.sigma_plus, inv.d3)
    (8, -8, 0, Fraction(3, 2))
    >>> invariants(2, 3, 7).d3
    Fraction(-1, 2)
    """
    sigma_plus, sigma_minus, nullity = brieskorn_count(p, q, r)
    inv = from_counts(p, q, r, sigma_plus, nullity)
    if inv.sigma_minus != sigma_minus:
        raise ConsistencyError(
            f"count ({sigma_plus}, {sigma_minus}, {nullity}) does not sum to "
            f"mu = {inv.mu} for ({p}, {q}, {r})"
        )
    return inv


def b_plus_via_lemma(q: int, r: int) -> int:
    """b+ of M_c(2,q,r) by the genus route: g(T(q,r)) + sigma(T(q,r))/2.

    Independent of reading b+ off the lattice count directly; the certifier
    asserts the two routes agree.  Requires odd coprime q, r >= 3.

    >>> b_plus_via_lemma(3, 7)
    2
    >>> b_plus_via_lemma(3, 5)
    0
    """
    for name, value in (("q", q), ("r", r)):
        if not isinstance(value, int) or value < 3 or value % 2 == 0:
            raise PreconditionError(f"{name} must be an odd integer >= 3, got {value!r}")
    # local import: torus_knot depends on this module for the count route
    from .torus_knot import knot_signature_count, slice_genus

    g = slice_genus(q, r)
    sigma = knot_signature_count(q, r)
    if sigma % 2 != 0:
        raise ConsistencyError(f"odd knot signature {sigma} for T({q},{r}); count is defective")
    return g + sigma // 2


def is_spin_with_canonical_spinc(p: int, q: int, r: int) -> bool:
    """Every Milnor fiber is spin, and its canonical spin-c structure is the
    spin one (the canonical bundle of the fiber is trivial).

    Constant by mathematics; exists so certificates can cite the hypothesis.

    >>> is_spin_with_canonical_spinc(3, 4, 5)
    True
    """
    _validate_exponents(p, q, r)
    return True
