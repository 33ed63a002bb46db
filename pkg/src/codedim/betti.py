"""Multigraded Betti tables of Stanley-Reisner rings, without resolutions.

The table is assembled degree by degree: for every subset s of the
vertices, the reduced homology of the induced subcomplex on s is read
off, and a nonzero dimension in degree k lands at step i = |s| - k - 1.
Boundary matrices are built once for the whole complex; each subset
only selects the columns whose faces it contains (the discarded rows
are zero there, so ranks are unaffected).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterator

from .complexes import SimplicialComplex, VertexSet
from .errors import GuardError, InputError, VoidComplexError
from .homology import chain_data, profile_from_counts_and_ranks
from .linalg import PrimeField, rank_array

DEFAULT_SWEEP_GUARD = 20


def sweep_guard() -> int:
    """Subset-sweep vertex limit; CODEDIM_MAX_N overrides the default."""
    raw = os.environ.get("CODEDIM_MAX_N", "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"CODEDIM_MAX_N={raw!r} is not an integer") from None
    return DEFAULT_SWEEP_GUARD


@dataclass(frozen=True)
class RValue:
    """|sigma| - i attached to a positive table entry."""

    i: int
    sigma: VertexSet
    value: int


class BettiTable:
    """Map (step i, grading sigma) -> beta, positive entries only."""

    __slots__ = ("n", "field", "_entries")

    def __init__(
        self,
        n: int,
        field: PrimeField,
        entries: dict[tuple[int, VertexSet], int],
    ):
        for (i, sigma), beta in entries.items():
            if beta <= 0:
                raise InputError(f"entry ({i}, {sigma.binary()}) has beta {beta}")
            if sigma.n != n:
                raise InputError("grading ambient differs from table ambient")
            if sigma:
                if not 1 <= i <= len(sigma):
                    raise InputError(
                        f"step {i} out of range for grading {sigma.binary()}"
                    )
            elif i != 0:
                raise InputError("the empty grading only appears at step 0")
        if entries.get((0, VertexSet.empty(n))) != 1:
            raise InputError("a table must carry the step-0 entry (0, {}) -> 1")
        self.n = n
        self.field = field
        self._entries = dict(
            sorted(entries.items(), key=lambda kv: _entry_key(kv[0]))
        )

    def beta(self, i: int, sigma: VertexSet) -> int:
        return self._entries.get((i, sigma), 0)

    def items(self) -> Iterator[tuple[int, VertexSet, int]]:
        """Entries sorted by (i, |sigma|, bit pattern)."""
        for (i, sigma), beta in self._entries.items():
            yield i, sigma, beta

    def entries(self) -> dict[tuple[int, VertexSet], int]:
        return dict(self._entries)

    def max_step(self) -> int:
        return max(i for i, _ in self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (
            self.n == other.n
            and self.field == other.field
            and self._entries == other._entries
        )

    def __repr__(self) -> str:
        return f"BettiTable(n={self.n}, {self.field}, {len(self)} entries)"


def _entry_key(key: tuple[int, VertexSet]) -> tuple[int, int, int]:
    i, sigma = key
    return (i, len(sigma), sigma.bits)


def graded_subset_bits(n: int) -> list[int]:
    """All 2^n bit patterns sorted by cardinality, then value."""
    return sorted(range(1 << n), key=lambda b: (b.bit_count(), b))


def ensure_within_sweep_guard(d: SimplicialComplex, max_n: int | None = None) -> None:
    limit = max_n if max_n is not None else sweep_guard()
    if d.n > limit:
        raise GuardError(
            f"a sweep over n={d.n} vertices touches {1 << d.n} subsets, "
            f"above the guard of n={limit} ({1 << limit} subsets); "
            "raise --max-n or CODEDIM_MAX_N if you mean it"
        )


def subset_homology_profiles(
    d: SimplicialComplex,
    field: PrimeField = PrimeField(2),
    max_n: int | None = None,
) -> Iterator[tuple[int, dict[int, int]]]:
    """Reduced homology of every induced subcomplex, in graded order.

    Yields (sigma_bits, {degree: dimension}) with zero dimensions
    omitted.  One pass drives both the Betti table and the restriction
    maximum behind the strongest dimension bound.
    """
    if d.is_void:
        raise VoidComplexError(
            "void complex has no Stanley-Reisner presentation in this tool"
        )
    ensure_within_sweep_guard(d, max_n)
    by_card, boundaries = chain_data(d._face_bits())
    p = field.p
    for sigma in graded_subset_bits(d.n):
        not_sigma = ~sigma
        counts: list[int] = []
        masks = []
        for arr in by_card:
            mask = (arr & not_sigma) == 0
            inside = int(mask.sum())
            if inside == 0:
                break
            counts.append(inside)
            masks.append(mask)
        ranks = [0]
        for c in range(1, len(counts)):
            if counts[c] == len(by_card[c]):
                sub = boundaries[c]
            else:
                sub = boundaries[c][:, masks[c]]
            ranks.append(rank_array(sub, p))
        profile = profile_from_counts_and_ranks(counts, ranks, field)
        yield sigma, profile.dims


def hochster_table(
    d: SimplicialComplex,
    field: PrimeField = PrimeField(2),
    max_n: int | None = None,
) -> BettiTable:
    """Betti table of the Stanley-Reisner ring of d over the given field."""
    entries: dict[tuple[int, VertexSet], int] = {}
    for sigma_bits, dims in subset_homology_profiles(d, field, max_n):
        if not dims:
            continue
        size = sigma_bits.bit_count()
        sigma = VertexSet(sigma_bits, d.n)
        for k in sorted(dims, reverse=True):
            entries[(size - k - 1, sigma)] = dims[k]
    return BettiTable(d.n, field, entries)


def r_values(t: BettiTable) -> frozenset[RValue]:
    """One |sigma| - i value per positive entry at step >= 1."""
    return frozenset(
        RValue(i, sigma, len(sigma) - i) for i, sigma, _ in t.items() if i >= 1
    )


def level_ranks(t: BettiTable) -> list[int]:
    """Total rank per resolution step; index 0 is the rank of F_0."""
    totals = [0] * (t.max_step() + 1)
    for i, _, beta in t.items():
        totals[i] += beta
    while len(totals) > 1 and totals[-1] == 0:
        totals.pop()
    return totals


def table_to_json(t: BettiTable) -> str:
    """Canonical JSON: entry list sorted by (i, |sigma|, bits)."""
    obj = {
        "n": t.n,
        "field": t.field.p,
        "entries": [
            {"i": i, "sigma": sigma.binary(), "beta": beta}
            for i, sigma, beta in t.items()
        ],
    }
    return json.dumps(obj, indent=2, sort_keys=True)


def table_from_json(text: str) -> BettiTable:
    obj = json.loads(text)
    try:
        n = int(obj["n"])
        field = PrimeField(int(obj["field"]))
        entries = {
            (int(e["i"]), VertexSet.parse(e["sigma"], n)): int(e["beta"])
            for e in obj["entries"]
        }
    except (KeyError, TypeError) as exc:
        raise InputError(f"not a serialized Betti table: {exc}") from None
    return BettiTable(n, field, entries)


def table_to_m2(t: BettiTable) -> str:
    """BettiTally-style text block, machine-normalized."""
    lines = ["BettiTally{"]
    for i, sigma, beta in t.items():
        pattern = ", ".join(sigma.binary())
        lines.append(f"  ({i}, {{{pattern}}}, {len(sigma)}) => {beta}")
    lines.append("}")
    return "\n".join(lines)
