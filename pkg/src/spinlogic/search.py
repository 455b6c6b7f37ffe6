"""Mapping simulated experiments onto logic tables, and searching parameter
grids for implementations of target equivalence classes.

A sequence template is a pulse-sequence document in which numeric fields of
sequence elements may be the placeholder strings "$A" or "$B".  Binding three
values to each placeholder yields nine experiments whose quantized readouts
form a 3x3 logic table: the i-th chosen A value plays the logic input
``(-1, 0, +1)[i]``, and likewise for B.  Since permuting the three chosen
values only relabels an input, any one ordering of a value triple represents
all six, so the search enumerates ascending triples from each grid.
"""

from __future__ import annotations

import copy
import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from . import npn
from .pc import PcSignature, pc_signature
from .spinsim import PulseSequence, SpinSystem, document_from_dict, read_mx, run_sequence
from .ternary import TernaryFunction

RAW_SLACK = 1e-9


@dataclass(frozen=True)
class Quantizer:
    """Threshold map from readout to {-1, 0, +1}: magnitudes below epsilon
    become 0, everything else keeps its sign.  Readouts beyond saturation
    (plus slack) indicate a simulator contract violation, not a logic value."""

    epsilon: float = 0.25
    saturation: float = 1.0

    def __post_init__(self) -> None:
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if self.saturation <= 0:
            raise ValueError(f"saturation must be positive, got {self.saturation}")


def quantize(x: float, q: Quantizer = Quantizer()) -> int:
    if abs(x) > q.saturation + RAW_SLACK:
        raise ValueError(f"readout {x} outside [-{q.saturation}, {q.saturation}]")
    if x >= q.epsilon:
        return 1
    if x <= -q.epsilon:
        return -1
    return 0


PLACEHOLDERS = ("$A", "$B")


class SequenceTemplate:
    """Pulse-sequence document with exactly two free parameters, $A and $B."""

    def __init__(self, document: dict):
        self.document = copy.deepcopy(document)
        found = set()
        for element in self.document.get("sequence", []):
            for key, value in element.items():
                if isinstance(value, str) and value.startswith("$") and key != "type":
                    if value not in PLACEHOLDERS:
                        raise ValueError(f"unknown placeholder {value!r} in field {key!r}")
                    found.add(value)
        missing = [p for p in PLACEHOLDERS if p not in found]
        if missing:
            raise ValueError(f"template must use both $A and $B, missing {missing}")

    @classmethod
    def from_json(cls, text: str) -> "SequenceTemplate":
        return cls(json.loads(text))

    def instantiate(self, a: float, b: float) -> tuple[SpinSystem, PulseSequence]:
        doc = copy.deepcopy(self.document)
        binding = {"$A": float(a), "$B": float(b)}
        for element in doc["sequence"]:
            for key, value in element.items():
                if isinstance(value, str) and value in binding:
                    element[key] = binding[value]
        return document_from_dict(doc)

    def run(self, a: float, b: float) -> float:
        system, sequence = self.instantiate(a, b)
        return read_mx(run_sequence(system, sequence))


def single_pulse_template() -> SequenceTemplate:
    """One on-resonance peak, one pulse: flip angle $A, phase $B."""
    return SequenceTemplate(
        {
            "peaks": [{"label": "s", "offset_rad_s": 0.0}],
            "sequence": [{"type": "hard_pulse", "beta": "$A", "phi": "$B"}],
        }
    )


def two_pulse_template(phi1: float = 3 * math.pi / 2, beta2: float = math.pi / 2) -> SequenceTemplate:
    """One peak, two pulses: first flip angle $A at fixed phase phi1, then a
    fixed beta2 rotation at phase $B."""
    return SequenceTemplate(
        {
            "peaks": [{"label": "s", "offset_rad_s": 0.0}],
            "sequence": [
                {"type": "hard_pulse", "beta": "$A", "phi": phi1},
                {"type": "hard_pulse", "beta": beta2, "phi": "$B"},
            ],
        }
    )


def selective_delay_template(omega_a: float = math.pi) -> SequenceTemplate:
    """Two peaks at omega_a and 2*omega_a, a selective pi/2 excitation at
    frequency $B, then a precession delay $A before acquisition."""
    if omega_a <= 0:
        raise ValueError(f"omega_a must be positive, got {omega_a}")
    return SequenceTemplate(
        {
            "peaks": [
                {"label": "A", "offset_rad_s": omega_a},
                {"label": "B", "offset_rad_s": 2 * omega_a},
            ],
            "sequence": [
                {
                    "type": "selective_pulse",
                    "beta": math.pi / 2,
                    "phi": math.pi / 2,
                    "target_offset": "$B",
                    "tolerance": omega_a / 4,
                },
                {"type": "delay", "tau": "$A"},
            ],
        }
    )


def selective_delay_inputs(
    omega_a: float = math.pi,
) -> tuple[SequenceTemplate, tuple[float, float, float], tuple[float, float, float]]:
    """The selective-delay template with the delay triple (0, quarter turn of
    peak A, half turn of peak A) and the frequency triple (peak A, midpoint,
    peak B)."""
    template = selective_delay_template(omega_a)
    delays = (0.0, math.pi / (2 * omega_a), math.pi / omega_a)
    frequencies = (omega_a, 1.5 * omega_a, 2 * omega_a)
    return template, delays, frequencies


@dataclass(frozen=True)
class ExperimentTable:
    """Nine experiments laid out as a logic table: raw readouts and their
    quantization, with row i driven by param_a[i] and column j by param_b[j]."""

    param_a: tuple[float, float, float]
    param_b: tuple[float, float, float]
    raw: tuple[tuple[float, float, float], ...]
    logic: TernaryFunction


def evaluate_table(
    template: SequenceTemplate,
    a_vals,
    b_vals,
    q: Quantizer = Quantizer(),
) -> ExperimentTable:
    """Run the 3x3 grid of experiments and quantize into a truth table."""
    a_vals, b_vals = tuple(a_vals), tuple(b_vals)
    if len(a_vals) != 3 or len(b_vals) != 3:
        raise ValueError("evaluate_table needs exactly 3 values per parameter")
    raw = tuple(tuple(template.run(a, b) for b in b_vals) for a in a_vals)
    logic = TernaryFunction.from_rows([[quantize(x, q) for x in row] for row in raw])
    return ExperimentTable(a_vals, b_vals, raw, logic)


def pc_of_experiment(table: ExperimentTable) -> PcSignature:
    return pc_signature(table.logic)


@dataclass(frozen=True)
class SearchHit:
    a_values: tuple[float, float, float]
    b_values: tuple[float, float, float]
    index: int
    npn_class: npn.NpnClass


def _quantized_grid(template: SequenceTemplate, grid_a, grid_b, q: Quantizer) -> np.ndarray:
    """Digit (value + 1) readout for every grid point; triples index into this."""
    digits = np.empty((len(grid_a), len(grid_b)), dtype=np.uint8)
    for i, a in enumerate(grid_a):
        for j, b in enumerate(grid_b):
            digits[i, j] = quantize(template.run(a, b), q) + 1
    return digits


def _table_indices(digits: np.ndarray) -> tuple[np.ndarray, list, list, np.ndarray]:
    """Function index of every ascending-triple pair drawn from the grid."""
    n, m = digits.shape
    if n < 3 or m < 3:
        raise ValueError(f"grids need at least 3 points each, got {n} and {m}")
    a_combos = list(itertools.combinations(range(n), 3))
    b_combos = list(itertools.combinations(range(m), 3))
    ai = np.array(a_combos, dtype=np.intp)
    bi = np.array(b_combos, dtype=np.intp)
    sub = digits[ai[:, None, :, None], bi[None, :, None, :]].astype(np.int64)
    powers = 3 ** (3 * np.arange(3, dtype=np.int64)[:, None] + np.arange(3, dtype=np.int64))
    indices = (sub * powers[None, None]).sum(axis=(2, 3))
    canon = npn.canonical_map(3)[indices]
    return indices, a_combos, b_combos, canon


def search(
    template: SequenceTemplate,
    grid_a,
    grid_b,
    q: Quantizer = Quantizer(),
    targets=frozenset(),
) -> list[SearchHit]:
    """All ascending triple choices whose table lands in a target class,
    in lexicographic triple order.  ``targets`` holds function indices; each
    is resolved to its canonical representative first.  An empty result is a
    valid answer (the template cannot realize the targets on these grids)."""
    grid_a, grid_b = tuple(grid_a), tuple(grid_b)
    if len(grid_a) < 3 or len(grid_b) < 3:
        raise ValueError(f"grids need at least 3 points each, got {len(grid_a)} and {len(grid_b)}")
    if not targets:
        return []
    wanted = np.array(sorted({npn.canonical_index(t) for t in targets}), dtype=np.int64)
    digits = _quantized_grid(template, grid_a, grid_b, q)
    indices, a_combos, b_combos, canon = _table_indices(digits)
    mask = np.isin(canon, wanted)
    classes: dict[int, npn.NpnClass] = {}
    hits = []
    for k, l in zip(*np.nonzero(mask)):
        c = int(canon[k, l])
        hits.append(
            SearchHit(
                tuple(grid_a[i] for i in a_combos[k]),
                tuple(grid_b[j] for j in b_combos[l]),
                int(indices[k, l]),
                classes.setdefault(c, npn.orbit(c)),
            )
        )
    return hits


def achievable_classes(
    template: SequenceTemplate,
    grid_a,
    grid_b,
    q: Quantizer = Quantizer(),
) -> dict[int, int]:
    """Canonical index -> number of triple pairs realizing that class, over
    every ascending triple choice from the grids."""
    grid_a, grid_b = tuple(grid_a), tuple(grid_b)
    if len(grid_a) < 3 or len(grid_b) < 3:
        raise ValueError(f"grids need at least 3 points each, got {len(grid_a)} and {len(grid_b)}")
    digits = _quantized_grid(template, grid_a, grid_b, q)
    _, _, _, canon = _table_indices(digits)
    values, counts = np.unique(canon, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}
