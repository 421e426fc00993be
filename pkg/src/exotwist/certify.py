"""Certification of exotic boundary Dehn twists on M_c(p,q,r).

Two routes are evaluated.  The DIRECT route applies to p = 2 with q, r odd
and coprime: the twist on M_c(2,q,r) is certified exotic when the quarter
genus (q-1)(r-1)/4 is odd, equivalently when b+ = 2 (mod 4), and the parity
ledger confirms the framing flip.  The EMBEDDING route applies to pairwise
coprime 2 <= p < q < r with r >= 7: M_c(2,3,7) embeds in M_c(p,q,r) by
exponent monotonicity, and the extension of its boundary twist is an exotic
diffeomorphism of the larger fiber.  A certificate records every condition
checked, the fiber invariants, and the eigenspace dimension fed to the
ledger.

The b+ = 2 (mod 4) condition is computed three ways (lattice count, genus
plus half signature, quarter-genus parity); any disagreement raises
ConsistencyError because it would falsify the arithmetic chain the
certificates rest on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import Triple, quarter_genus_is_odd
from .errors import ConsistencyError, PreconditionError
from .ko_ring import exoticness_ledger
from .milnor import MilnorInvariants, b_plus_via_lemma, invariants, is_spin_with_canonical_spinc

__all__ = [
    "ROUTE_DIRECT",
    "ROUTE_EMBEDDING",
    "ROUTE_NONE",
    "Condition",
    "Certificate",
    "certify_direct",
    "certify_embedding",
    "certify",
    "CSV_HEADER",
]

ROUTE_DIRECT = "DIRECT"
ROUTE_EMBEDDING = "EMBEDDING"
ROUTE_NONE = "NONE"

NOTE_SPIN = (
    "M_c(p,q,r) is spin, and its canonical spin-c structure is the spin one "
    "(the canonical bundle of the fiber is trivial)."
)
NOTE_Q3_PRIOR = (
    "For q = 3 the quarter-genus route reproduces cases, including (2,3,7) and "
    "(2,3,11), already known to be exotic by earlier methods."
)
NOTE_DIRECT_EIGENSPACE = (
    "The boundary twist acts as -1 on all of H+, so the -1-eigenspace "
    "dimension equals b+."
)
NOTE_EMBEDDING = (
    "EMBEDDING certifies the extension of the boundary twist of an embedded "
    "M_c(2,3,7), which is an exotic diffeomorphism of M_c(p,q,r); it does not "
    "certify the boundary twist of M_c(p,q,r) itself."
)
NOTE_EMBEDDING_EIGENSPACE = (
    "The -1-eigenspace is H+ of the embedded M_c(2,3,7), of dimension 2, "
    "split off the ambient H+ by Mayer-Vietoris."
)
NOTE_PSI_UNIT = (
    "The ledger takes the rank component of the family invariant to be a unit, "
    "recording the contact-geometric hypothesis satisfied by Milnor fibers."
)

CSV_HEADER = "p,q,r,route,mu,sigma,b_plus,b_minus,d3,eigenspace_dim,conditions_failed"


@dataclass(frozen=True)
class Condition:
    name: str
    expected: str
    actual: str
    ok: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.ok,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Condition":
        return cls(name=d["name"], expected=d["expected"], actual=d["actual"], ok=d["pass"])


@dataclass(frozen=True)
class Certificate:
    triple: Triple
    route: str
    conditions: tuple[Condition, ...]
    invariants: MilnorInvariants
    eigenspace_dim: int | None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def failed_conditions(self) -> list[Condition]:
        return [c for c in self.conditions if not c.ok]

    def to_dict(self) -> dict:
        inv = self.invariants
        return {
            "triple": {"p": self.triple.p, "q": self.triple.q, "r": self.triple.r},
            "route": self.route,
            "conditions": [c.to_dict() for c in self.conditions],
            "invariants": {
                "mu": inv.mu,
                "sigma_plus": inv.sigma_plus,
                "sigma_minus": inv.sigma_minus,
                "nullity": inv.nullity,
                "sigma": inv.sigma,
                "d3": str(inv.d3),
            },
            "eigenspace_dim": self.eigenspace_dim,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        inv = d["invariants"]
        return cls(
            triple=Triple(d["triple"]["p"], d["triple"]["q"], d["triple"]["r"]),
            route=d["route"],
            conditions=tuple(Condition.from_dict(c) for c in d["conditions"]),
            invariants=MilnorInvariants(
                mu=inv["mu"],
                sigma_plus=inv["sigma_plus"],
                sigma_minus=inv["sigma_minus"],
                nullity=inv["nullity"],
                sigma=inv["sigma"],
                d3=Fraction(inv["d3"]),
            ),
            eigenspace_dim=d["eigenspace_dim"],
            notes=tuple(d["notes"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def to_csv_row(self) -> str:
        inv = self.invariants
        eigen = "" if self.eigenspace_dim is None else str(self.eigenspace_dim)
        failed = ";".join(c.name for c in self.failed_conditions())
        return (
            f"{self.triple.p},{self.triple.q},{self.triple.r},{self.route},"
            f"{inv.mu},{inv.sigma},{inv.sigma_plus},{inv.sigma_minus},"
            f"{inv.d3},{eigen},{failed}"
        )

    def to_text(self) -> str:
        inv = self.invariants
        lines = [
            f"triple        ({self.triple.p}, {self.triple.q}, {self.triple.r})",
            f"route         {self.route}",
            f"mu            {inv.mu}",
            f"signature     {inv.sigma}   (b+ = {inv.sigma_plus}, b- = {inv.sigma_minus}, "
            f"nullity = {inv.nullity})",
            f"d3            {inv.d3}",
            f"eigenspace    {'-' if self.eigenspace_dim is None else self.eigenspace_dim}",
            "conditions:",
        ]
        for c in self.conditions:
            mark = "ok " if c.ok else "FAIL"
            lines.append(f"  [{mark:4}] {c.name}: expected {c.expected}; {c.actual}")
        if self.notes:
            lines.append("notes:")
            lines.extend(f"  - {note}" for note in self.notes)
        return "\n".join(lines)


def _base_notes(p: int, q: int, r: int) -> list[str]:
    # is_spin_with_canonical_spinc is constant truth; invoked so the note is
    # tied to the predicate rather than free-floating prose.
    return [NOTE_SPIN] if is_spin_with_canonical_spinc(p, q, r) else []


def certify_direct(q: int, r: int, *, _inv: MilnorInvariants | None = None) -> Certificate:
    """Certify the boundary twist of M_c(2,q,r) by the quarter-genus route.

    Invalid q, r produce failing conditions rather than exceptions (only
    non-integers or values below 2 are rejected outright).
    """
    for name, value in (("q", q), ("r", r)):
        if not isinstance(value, int) or value < 2:
            raise PreconditionError(f"{name} must be an integer >= 2, got {value!r}")
    conditions: list[Condition] = [
        Condition("direct.q_odd", "q odd", f"q = {q}", q % 2 == 1),
        Condition("direct.r_odd", "r odd", f"r = {r}", r % 2 == 1),
        Condition("direct.q_at_least_3", "q >= 3", f"q = {q}", q >= 3),
        Condition("direct.r_at_least_3", "r >= 3", f"r = {r}", r >= 3),
        Condition(
            "direct.coprime", "gcd(q, r) = 1", f"gcd({q}, {r}) = {math.gcd(q, r)}",
            math.gcd(q, r) == 1,
        ),
    ]
    prereqs_ok = all(c.ok for c in conditions)
    inv = _inv if _inv is not None else invariants(2, q, r)
    eigenspace_dim: int | None = None
    notes = _base_notes(2, q, r)
    if prereqs_ok:
        parity = quarter_genus_is_odd(q, r)
        quarter = (q - 1) * (r - 1) // 4
        b_plus = inv.sigma_plus
        b_lemma = b_plus_via_lemma(q, r)
        if b_plus != b_lemma:
            raise ConsistencyError(
                f"b+ of M_c(2,{q},{r}) disagrees between count ({b_plus}) and "
                f"genus route ({b_lemma})"
            )
        if (b_plus % 4 == 2) != parity:
            raise ConsistencyError(
                f"quarter-genus parity ({parity}) disagrees with b+ mod 4 "
                f"({b_plus} mod 4 = {b_plus % 4}) for (2,{q},{r})"
            )
        conditions.append(
            Condition(
                "direct.quarter_genus_odd", "(q-1)(r-1)/4 odd",
                f"(q-1)(r-1)/4 = {quarter}", parity,
            )
        )
        conditions.append(
            Condition(
                "direct.b_plus_2_mod_4", "b+ = 2 (mod 4), two independent routes",
                f"b+ = {b_plus} (count) = {b_lemma} (genus route)", b_plus % 4 == 2,
            )
        )
        ledger = exoticness_ledger(b_plus, psi0_is_unit=True)
        if ledger.failed_hypothesis is not None:
            actual = f"ledger hypothesis failed: {ledger.failed_hypothesis}"
        else:
            actual = (
                f"torsion {ledger.pulled_back.t} (pulled back) vs "
                f"{ledger.twisted.t} (re-framed)"
            )
        conditions.append(
            Condition(
                "direct.ledger_flip", "framing change flips the torsion coordinate",
                actual, ledger.exotic,
            )
        )
        eigenspace_dim = b_plus
    else:
        unevaluated = "not evaluated (prerequisites failed)"
        for cname, expectation in (
            ("direct.quarter_genus_odd", "(q-1)(r-1)/4 odd"),
            ("direct.b_plus_2_mod_4", "b+ = 2 (mod 4), two independent routes"),
            ("direct.ledger_flip", "framing change flips the torsion coordinate"),
        ):
            conditions.append(Condition(cname, expectation, unevaluated, False))
    route = ROUTE_DIRECT if all(c.ok for c in conditions) else ROUTE_NONE
    if route == ROUTE_DIRECT:
        notes.append(NOTE_DIRECT_EIGENSPACE)
        notes.append(NOTE_PSI_UNIT)
        if min(q, r) == 3:
            notes.append(NOTE_Q3_PRIOR)
    return Certificate(
        triple=Triple(2, q, r),
        route=route,
        conditions=tuple(conditions),
        invariants=inv,
        eigenspace_dim=eigenspace_dim,
        notes=tuple(notes),
    )


def certify_embedding(
    p: int, q: int, r: int, *, _inv: MilnorInvariants | None = None
) -> Certificate:
    """Certify an exotic diffeomorphism of M_c(p,q,r) via an embedded
    M_c(2,3,7)."""
    triple = Triple(p, q, r)
    g_pq, g_qr, g_pr = math.gcd(p, q), math.gcd(q, r), math.gcd(p, r)
    conditions = (
        Condition(
            "embedding.pairwise_coprime", "gcd(p,q) = gcd(q,r) = gcd(p,r) = 1",
            f"gcd(p,q) = {g_pq}, gcd(q,r) = {g_qr}, gcd(p,r) = {g_pr}",
            g_pq == g_qr == g_pr == 1,
        ),
        Condition(
            "embedding.strictly_ordered", "2 <= p < q < r",
            f"(p, q, r) = ({p}, {q}, {r})", 2 <= p < q < r,
        ),
        Condition("embedding.r_at_least_7", "r >= 7", f"r = {r}", r >= 7),
    )
    passed = all(c.ok for c in conditions)
    notes = _base_notes(p, q, r)
    if passed:
        notes.append(NOTE_EMBEDDING)
        notes.append(NOTE_EMBEDDING_EIGENSPACE)
    return Certificate(
        triple=triple,
        route=ROUTE_EMBEDDING if passed else ROUTE_NONE,
        conditions=conditions,
        invariants=_inv if _inv is not None else invariants(p, q, r),
        eigenspace_dim=2 if passed else None,
        notes=tuple(notes),
    )


def certify(t: Triple, *, _inv: MilnorInvariants | None = None) -> Certificate:
    """Dispatch: try the direct route for p = 2, then the embedding route.

    NONE certificates enumerate the failed conditions of both routes.
    """
    if not isinstance(t, Triple):
        t = Triple(*t)
    inv = _inv if _inv is not None else invariants(t.p, t.q, t.r)
    if t.p == 2:
        direct = certify_direct(t.q, t.r, _inv=inv)
        if direct.route == ROUTE_DIRECT:
            return direct
        direct_conditions = direct.conditions
        direct_eigen = direct.eigenspace_dim
        direct_notes = direct.notes
    else:
        direct_conditions = (
            Condition("direct.p_is_2", "p = 2", f"p = {t.p}", False),
        )
        direct_eigen = None
        direct_notes = tuple(_base_notes(t.p, t.q, t.r))
    embedded = certify_embedding(t.p, t.q, t.r, _inv=inv)
    seen: set[str] = set()
    notes = tuple(
        note
        for note in (*direct_notes, *embedded.notes)
        if not (note in seen or seen.add(note))
    )
    return Certificate(
        triple=t,
        route=embedded.route,
        conditions=(*direct_conditions, *embedded.conditions),
        invariants=inv,
        eigenspace_dim=embedded.eigenspace_dim
        if embedded.route == ROUTE_EMBEDDING
        else direct_eigen,
        notes=notes,
    )
