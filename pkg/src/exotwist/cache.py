"""Persistent cache of fiber invariants, keyed by sorted exponent triple.

JSON-lines format, one record per line, each stamped with a format version.
Records whose version differs from the current one are ignored on load, so
bumping FORMULA_VERSION invalidates old caches without deleting the file.
Corrupt lines are skipped with a warning; the cache rebuilds itself as new
values are stored.  A record optionally carries the torus-knot signature of
T(q,r) by both computation routes for triples (2,q,r); later lines for the
same key win field by field.

Writes are buffered in memory and persisted by flush(), so a scan appends
one batch instead of reopening the file per triple.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path

from .milnor import MilnorInvariants

__all__ = ["FORMULA_VERSION", "InvariantCache"]

# Bump whenever the meaning of a stored field changes.
FORMULA_VERSION = 1

_INV_FIELDS = ("mu", "sigma_plus", "sigma_minus", "nullity", "sigma")

logger = logging.getLogger(__name__)


def _key(p: int, q: int, r: int) -> tuple[int, int, int]:
    a, b, c = sorted((p, q, r))
    return a, b, c


def _parse_invariants(rec: dict) -> MilnorInvariants | None:
    block = rec.get("invariants")
    if block is None:
        return None
    return MilnorInvariants(
        mu=block["mu"],
        sigma_plus=block["sigma_plus"],
        sigma_minus=block["sigma_minus"],
        nullity=block["nullity"],
        sigma=block["sigma"],
        d3=Fraction(block["d3"]),
    )


class InvariantCache:
    """In-memory view over a JSON-lines cache file."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self._data: dict[tuple[int, int, int], dict] = {}
        self._pending: list[dict] = []
        self._load()
        # Surface unwritable paths now, not after a long scan.  Creates the
        # file (empty) if absent; never creates parent directories.
        with open(self.path, "a", encoding="utf-8"):
            pass

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    if rec["version"] != FORMULA_VERSION:
                        continue
                    key = (rec["p"], rec["q"], rec["r"])
                    entry = {
                        "inv": _parse_invariants(rec),
                        "sig_count": rec.get("sig_count"),
                        "sig_seifert": rec.get("sig_seifert"),
                    }
                except (json.JSONDecodeError, KeyError, TypeError, ValueError,
                        ZeroDivisionError):
                    logger.warning("%s:%d: skipping corrupt cache line", self.path, lineno)
                    continue
                merged = self._data.setdefault(key, {})
                for field, value in entry.items():
                    if value is not None:
                        merged[field] = value

    def __len__(self) -> int:
        return len(self._data)

    def lookup(self, p: int, q: int, r: int) -> MilnorInvariants | None:
        return self._data.get(_key(p, q, r), {}).get("inv")

    def lookup_signature(self, q: int, r: int, method: str) -> int | None:
        if method not in ("count", "seifert"):
            raise ValueError(f"unknown signature method {method!r}")
        return self._data.get(_key(2, q, r), {}).get(f"sig_{method}")

    def store(self, p: int, q: int, r: int, inv: MilnorInvariants) -> None:
        key = _key(p, q, r)
        entry = self._data.setdefault(key, {})
        if entry.get("inv") is not None:
            return
        entry["inv"] = inv
        self._queue(key, entry)

    def store_signature(self, q: int, r: int, *, sig_count: int, sig_seifert: int) -> None:
        key = _key(2, q, r)
        entry = self._data.setdefault(key, {})
        if entry.get("sig_count") == sig_count and entry.get("sig_seifert") == sig_seifert:
            return
        entry["sig_count"] = sig_count
        entry["sig_seifert"] = sig_seifert
        self._queue(key, entry)

    def _queue(self, key: tuple[int, int, int], entry: dict) -> None:
        inv = entry.get("inv")
        rec = {
            "version": FORMULA_VERSION,
            "p": key[0],
            "q": key[1],
            "r": key[2],
            "invariants": None
            if inv is None
            else {**{f: getattr(inv, f) for f in _INV_FIELDS}, "d3": str(inv.d3)},
            "sig_count": entry.get("sig_count"),
            "sig_seifert": entry.get("sig_seifert"),
        }
        self._pending.append(rec)

    def flush(self) -> None:
        """Append all queued records to the backing file.

        A key queued several times in one batch (invariants first, signatures
        later) is written once, in its final state.
        """
        if not self._pending:
            return
        last = {(rec["p"], rec["q"], rec["r"]): rec for rec in self._pending}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.writelines(json.dumps(rec) + "\n" for rec in last.values())
        self._pending.clear()
