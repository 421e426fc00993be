"""The ring KO0(S^1) = Z[l]/(l^2 - 1, 2l - 2) and the framing ledger.

Elements are written in the basis {(l - 1), 1}: the pair (t, n) stands for
t*(l - 1) + n with t in Z/2 and n in Z.  The class l is the Moebius line
bundle; the relations force (l - 1)^2 = 0 and 2(l - 1) = 0, so the torsion
coordinate t is a parity and the rank coordinate n an ordinary integer.

The ledger at the bottom replays, in this ring, the parity argument that
separates the mapping-torus family of a boundary Dehn twist from the product
family: pulling back along the double cover of S^1 kills the torsion
coordinate, while changing the stable framing by the Moebius class flips it
whenever the rank coordinate is odd.  Exoticness at the ledger level is the
disagreement of those two torsion values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError

__all__ = [
    "KOElement",
    "FramingClass",
    "EigenDecomposition",
    "LedgerReport",
    "add",
    "mul",
    "mul_l",
    "pullback_double_cover",
    "framing_change",
    "pullback_framing_class",
    "exoticness_ledger",
]


@dataclass(frozen=True)
class KOElement:
    """t*(l - 1) + n in KO0(S^1), with t in {0, 1} and n in Z."""

    t: int
    n: int

    def __post_init__(self) -> None:
        if self.t not in (0, 1):
            raise PreconditionError(f"torsion coordinate must be 0 or 1, got {self.t!r}")
        if not isinstance(self.n, int):
            raise PreconditionError(f"rank coordinate must be an integer, got {self.n!r}")

    def __add__(self, other: "KOElement") -> "KOElement":
        return add(self, other)

    def __mul__(self, other: "KOElement") -> "KOElement":
        return mul(self, other)


#: the Moebius class l = (l - 1) + 1
L = KOElement(1, 1)
#: multiplicative identity
ONE = KOElement(0, 1)


@dataclass(frozen=True)
class FramingClass:
    """Difference class of two stable framings of a bundle over S^1 (Z/2)."""

    c: int

    def __post_init__(self) -> None:
        if self.c not in (0, 1):
            raise PreconditionError(f"framing class must be 0 or 1, got {self.c!r}")


@dataclass(frozen=True)
class EigenDecomposition:
    """Splitting of H+ under a diffeomorphism acting as -1 on a subspace:
    H+ = R^(b_plus - 4k - 2) + l^(4k + 2), so the -1-eigenspace has
    dimension 4k + 2."""

    b_plus: int
    k: int

    def __post_init__(self) -> None:
        if self.b_plus < 0 or self.k < 0:
            raise PreconditionError("b_plus and k must be nonnegative")
        if self.b_plus - 4 * self.k - 2 < 0:
            raise PreconditionError(
                f"invalid decomposition: b_plus = {self.b_plus} < 4k + 2 = {4 * self.k + 2}"
            )


def add(x: KOElement, y: KOElement) -> KOElement:
    """Ring addition.

    >>> add(KOElement(1, 0), KOElement(1, 0))
    KOElement(t=0, n=0)
    >>> add(KOElement(0, 3), KOElement(1, 2))
    KOElement(t=1, n=5)
    """
    return KOElement((x.t + y.t) % 2, x.n + y.n)


def mul(x: KOElement, y: KOElement) -> KOElement:
    """Ring multiplication; uses (l - 1)^2 = -(2l - 2) = 0.

    >>> mul(L, L)
    KOElement(t=0, n=1)
    >>> mul(KOElement(1, 0), KOElement(1, 0))
    KOElement(t=0, n=0)
    """
    return KOElement((x.t * y.n + y.t * x.n) % 2, x.n * y.n)


def mul_l(x: KOElement) -> KOElement:
    """Multiplication by the Moebius class l = (1, 1).

    >>> mul_l(KOElement(0, 1))
    KOElement(t=1, n=1)
    >>> mul_l(KOElement(1, 0))
    KOElement(t=1, n=0)
    """
    return KOElement((x.t + x.n) % 2, x.n)


def pullback_double_cover(x: KOElement) -> KOElement:
    """Pullback along the degree-2 cover S^1 -> S^1: (t, n) -> (0, n).

    The Moebius bundle pulls back to the trivial bundle, so the torsion
    coordinate dies and the rank survives.

    >>> pullback_double_cover(KOElement(1, 5))
    KOElement(t=0, n=5)
    """
    return KOElement(0, x.n)


def framing_change(x: KOElement, delta: FramingClass) -> KOElement:
    """Effect of changing the stable framing by delta: the Thom class twists
    by the Moebius bundle exactly when delta is the nontrivial class.

    >>> framing_change(KOElement(0, 1), FramingClass(1))
    KOElement(t=1, n=1)
    >>> framing_change(KOElement(0, 1), FramingClass(0))
    KOElement(t=0, n=1)
    """
    return mul_l(x) if delta.c == 1 else x


def pullback_framing_class(e: EigenDecomposition) -> FramingClass:
    """Framing class by which the pulled-back family framing differs from the
    product framing: one Moebius pair per 2 dimensions of the -1-eigenspace,
    hence (2k + 1) blocks, always an odd count.

    >>> pullback_framing_class(EigenDecomposition(b_plus=2, k=0))
    FramingClass(c=1)
    """
    return FramingClass((2 * e.k + 1) % 2)


@dataclass(frozen=True)
class LedgerReport:
    """Outcome of the parity ledger.

    exotic is the verdict; failed_hypothesis names the violated eigenspace
    condition when the ledger does not apply at all (and exotic is False).
    The two compared torsion carriers are kept for certificates.
    """

    exotic: bool
    failed_hypothesis: str | None = None
    pulled_back: KOElement | None = None
    twisted: KOElement | None = None

    def __bool__(self) -> bool:
        return self.exotic


def exoticness_ledger(d: int, psi0_is_unit: bool) -> LedgerReport:
    """Replay the parity argument for a -1-eigenspace of dimension d.

    Requires d = 4k + 2 (even, not divisible by 4); otherwise returns a
    hypothesis-failure report rather than raising.  The invariant of the
    pulled-back-framing family has torsion forced to 0 by the double cover;
    re-framing by the pullback framing class multiplies by l, which flips the
    torsion exactly when the rank coordinate is a unit.  The verdict is True
    iff the two torsion values disagree.

    >>> exoticness_ledger(2, True).exotic
    True
    >>> exoticness_ledger(4, True).failed_hypothesis
    'eigenspace dimension 4 is divisible by 4'
    >>> exoticness_ledger(2, False).exotic
    False
    """
    if d < 0 or not isinstance(d, int):
        raise PreconditionError(f"eigenspace dimension must be a nonnegative integer, got {d!r}")
    if d % 2 != 0:
        return LedgerReport(False, f"eigenspace dimension {d} is odd")
    if d % 4 == 0:
        return LedgerReport(False, f"eigenspace dimension {d} is divisible by 4")
    k = (d - 2) // 4
    decomposition = EigenDecomposition(b_plus=d, k=k)
    rank = 1 if psi0_is_unit else 0
    pulled_back = pullback_double_cover(KOElement(1, rank))
    twisted = framing_change(pulled_back, pullback_framing_class(decomposition))
    return LedgerReport(
        exotic=pulled_back.t != twisted.t,
        failed_hypothesis=None,
        pulled_back=pulled_back,
        twisted=twisted,
    )
