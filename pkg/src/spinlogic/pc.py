"""Parameter-centric (PC) classification.

The PC signature of a table is the pair of multisets counting distinct output
values per row and per column, taken in either order.  The signature is
invariant under every relabelling transform (output permutations preserve
distinct counts, input permutations shuffle whole rows or columns, and an
input swap exchanges the two multisets), so each equivalence class from
:mod:`spinlogic.npn` lies wholly inside one PC class; some PC classes merge
several of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import npn
from .ternary import NUM_FUNCTIONS, TernaryFunction, decode


@dataclass(frozen=True)
class PcSignature:
    """Unordered pair of sorted distinct-count multisets.

    Stored normalized (lexicographically smaller multiset first), so
    constructing from (rows, cols) and (cols, rows) yields equal values.
    """

    first: tuple[int, ...]
    second: tuple[int, ...]

    @classmethod
    def of(cls, row_counts: Sequence[int], col_counts: Sequence[int]) -> "PcSignature":
        r, c = tuple(sorted(row_counts)), tuple(sorted(col_counts))
        return cls(min(r, c), max(r, c))


def line_counts(grid: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Distinct-output counts per row and per column, each sorted ascending."""
    rows = tuple(sorted(len(set(row)) for row in grid))
    cols = tuple(sorted(len({row[j] for row in grid}) for j in range(len(grid[0]))))
    return rows, cols


def signature_of_grid(grid: Sequence[Sequence[int]]) -> PcSignature:
    return PcSignature.of(*line_counts(grid))


def pc_signature(f: TernaryFunction) -> PcSignature:
    return signature_of_grid(f.rows())


@dataclass(frozen=True)
class PcClass:
    """All functions sharing one signature, with the canonical indices of the
    equivalence classes they span."""

    signature: PcSignature
    members: tuple[int, ...]
    npn_canonicals: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def single_npn(self) -> bool:
        return len(self.npn_canonicals) == 1


def pc_classify_all() -> list[PcClass]:
    """Partition all 19,683 ternary functions by PC signature, each class
    annotated with the NPN canonicals occurring among its members; sorted by
    normalized signature."""
    canon = npn.canonical_map(3)
    members: dict[PcSignature, list[int]] = {}
    canonicals: dict[PcSignature, set[int]] = {}
    for i in range(NUM_FUNCTIONS):
        sig = pc_signature(decode(i))
        members.setdefault(sig, []).append(i)
        canonicals.setdefault(sig, set()).add(int(canon[i]))
    return [
        PcClass(sig, tuple(members[sig]), tuple(sorted(canonicals[sig])))
        for sig in sorted(members, key=lambda s: (s.first, s.second))
    ]


def binary_grid(index: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """2x2 table of binary function ``index``, rows in input-A order 0, 1."""
    d = npn.digits_of_index(index, 2)
    return ((d[0], d[1]), (d[2], d[3]))


def binary_signature(index: int) -> PcSignature:
    return signature_of_grid(binary_grid(index))


@dataclass(frozen=True)
class BinaryPcReport:
    """Outcome of applying the two measures to all 16 binary gates."""

    pc_classes: tuple[tuple[PcSignature, tuple[int, ...]], ...]
    npn_classes: tuple[tuple[int, ...], ...]
    matches: bool

    @property
    def pc_class_count(self) -> int:
        return len(self.pc_classes)


def pc_binary_check() -> BinaryPcReport:
    """Compare the binary PC partition with the binary NPN partition.

    A mismatch is reported in the result, not raised.
    """
    groups: dict[PcSignature, list[int]] = {}
    for i in range(16):
        groups.setdefault(binary_signature(i), []).append(i)
    pc_classes = tuple(
        (sig, tuple(groups[sig])) for sig in sorted(groups, key=lambda s: (s.first, s.second))
    )
    npn_classes = tuple(c.members for c in npn.classify_binary())
    matches = {frozenset(m) for _, m in pc_classes} == {frozenset(m) for m in npn_classes}
    return BinaryPcReport(pc_classes, npn_classes, matches)
