"""Relabelling symmetries of two-input logic tables.

A transform applies a value permutation to each input, optionally swaps the
two inputs, and applies a value permutation to the output.  For radix 3 that
gives a group of 6*6*2*6 = 432 elements; for radix 2 (binary gates, where the
only nontrivial value permutation is negation) it is the classical NPN group
of order 16.  Two functions are equivalent when some transform maps one onto
the other, i.e. when one physical implementation realizes both under a
relabelling of its levels; the orbits of this action are the equivalence
classes.

Tables are handled internally as tuples of ``radix**2`` digits in
``range(radix)``, with the cell for inputs ``(da, db)`` at flat position
``radix*da + db``.  For radix 3 a digit is the logic value plus one, matching
:mod:`spinlogic.ternary`; for radix 2 digits are the logic values themselves.

Applying a transform ``t`` to ``f`` yields ``g`` with

    g(a, b) = perm_out(f(perm_a^-1(a'), perm_b^-1(b')))

where ``(a', b') = (b, a)`` if ``t.swap_inputs`` else ``(a, b)``.  The
inverse-permutation convention makes transforms compose like group elements:
``apply(t2, apply(t1, f)) == apply(compose(t2, t1), f)``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .ternary import TernaryFunction


def _check_perm(perm: tuple[int, ...], radix: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(radix)):
        raise ValueError(f"not a permutation of range({radix}): {perm!r}")
    return perm


@dataclass(frozen=True)
class NpnTransform:
    """One element of the relabelling group: value permutations on each
    input, an optional input swap, and a value permutation on the output."""

    perm_a: tuple[int, ...]
    perm_b: tuple[int, ...]
    swap_inputs: bool
    perm_out: tuple[int, ...]

    def __post_init__(self) -> None:
        radix = len(self.perm_a)
        object.__setattr__(self, "perm_a", _check_perm(self.perm_a, radix))
        object.__setattr__(self, "perm_b", _check_perm(self.perm_b, radix))
        object.__setattr__(self, "perm_out", _check_perm(self.perm_out, radix))
        object.__setattr__(self, "swap_inputs", bool(self.swap_inputs))

    @property
    def radix(self) -> int:
        return len(self.perm_a)


def identity_transform(radix: int = 3) -> NpnTransform:
    ident = tuple(range(radix))
    return NpnTransform(ident, ident, False, ident)


@functools.lru_cache(maxsize=None)
def all_transforms(radix: int = 3) -> tuple[NpnTransform, ...]:
    """The full group, identity first; 432 elements for radix 3, 16 for 2."""
    perms = tuple(itertools.permutations(range(radix)))
    return tuple(
        NpnTransform(pa, pb, swap, po)
        for pa in perms
        for pb in perms
        for swap in (False, True)
        for po in perms
    )


def value_permutation(mapping: dict[int, int]) -> tuple[int, ...]:
    """Digit permutation from a mapping on logic values.

    Accepts a bijection on {-1, 0, 1} (radix 3) or on {0, 1} (radix 2).
    """
    keys = sorted(mapping)
    if keys == [-1, 0, 1]:
        return _check_perm(tuple(mapping[v] + 1 for v in keys), 3)
    if keys == [0, 1]:
        return _check_perm(tuple(mapping[v] for v in keys), 2)
    raise ValueError(f"mapping must cover {{-1,0,1}} or {{0,1}}, got keys {keys}")


def compose(t2: NpnTransform, t1: NpnTransform) -> NpnTransform:
    """Group product: applying the result equals applying t1 then t2."""
    if t1.radix != t2.radix:
        raise ValueError("cannot compose transforms of different radix")

    def after(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(f[g[d]] for d in range(len(g)))

    # When t1 swaps, t2's input permutations land on the exchanged inputs.
    if t1.swap_inputs:
        perm_a = after(t2.perm_b, t1.perm_a)
        perm_b = after(t2.perm_a, t1.perm_b)
    else:
        perm_a = after(t2.perm_a, t1.perm_a)
        perm_b = after(t2.perm_b, t1.perm_b)
    return NpnTransform(
        perm_a,
        perm_b,
        t1.swap_inputs != t2.swap_inputs,
        after(t2.perm_out, t1.perm_out),
    )


def digits_of_index(index: int, radix: int = 3) -> tuple[int, ...]:
    """Little-endian base-``radix`` digit table of a function index."""
    cells = radix * radix
    count = radix**cells
    if not 0 <= index < count:
        raise ValueError(f"function index must be in [0, {count - 1}], got {index}")
    digits = []
    for _ in range(cells):
        digits.append(index % radix)
        index //= radix
    return tuple(digits)


def index_of_digits(digits: tuple[int, ...], radix: int = 3) -> int:
    index = 0
    for d in reversed(digits):
        index = index * radix + d
    return index


def apply_to_digits(t: NpnTransform, digits: tuple[int, ...]) -> tuple[int, ...]:
    """Transform a digit table; works for any radix."""
    r = t.radix
    out = [0] * (r * r)
    for da in range(r):
        ia = t.perm_a[da]
        for db in range(r):
            ib = t.perm_b[db]
            dst = r * ib + ia if t.swap_inputs else r * ia + ib
            out[dst] = t.perm_out[digits[r * da + db]]
    return tuple(out)


def apply_transform(t: NpnTransform, f: TernaryFunction) -> TernaryFunction:
    """Transform a ternary truth table."""
    if t.radix != 3:
        raise ValueError("apply_transform on a TernaryFunction needs a radix-3 transform")
    digits = tuple(v + 1 for v in f.outputs)
    return TernaryFunction(tuple(d - 1 for d in apply_to_digits(t, digits)))


@dataclass(frozen=True)
class NpnClass:
    """An orbit of the relabelling group, canonicalized by its minimum index."""

    canonical: int
    members: tuple[int, ...]
    radix: int = 3

    @property
    def size(self) -> int:
        return len(self.members)


def orbit(index: int, radix: int = 3) -> NpnClass:
    """Full equivalence class of one function, by explicit closure over the group."""
    digits = digits_of_index(index, radix)
    members = {index_of_digits(apply_to_digits(t, digits), radix) for t in all_transforms(radix)}
    ordered = tuple(sorted(members))
    return NpnClass(ordered[0], ordered, radix)


def stabilizer(index: int, radix: int = 3) -> tuple[NpnTransform, ...]:
    """All transforms fixing the function; its length times the orbit size
    equals the group order."""
    digits = digits_of_index(index, radix)
    return tuple(t for t in all_transforms(radix) if apply_to_digits(t, digits) == digits)


@functools.lru_cache(maxsize=None)
def _all_digit_tables(radix: int = 3) -> np.ndarray:
    """(num_functions, cells) digit matrix covering every function index."""
    cells = radix * radix
    count = radix**cells
    out = np.empty((count, cells), dtype=np.uint8)
    rem = np.arange(count, dtype=np.int64)
    for c in range(cells):
        out[:, c] = rem % radix
        rem //= radix
    out.flags.writeable = False
    return out


@functools.lru_cache(maxsize=None)
def _gather_tables(radix: int = 3) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Per transform: source cell for each destination cell, plus the output
    digit map, so a whole function set transforms in one numpy gather."""
    r = radix
    tables = []
    for t in all_transforms(radix):
        src_of_dst = np.empty(r * r, dtype=np.intp)
        for da in range(r):
            for db in range(r):
                ia, ib = t.perm_a[da], t.perm_b[db]
                dst = r * ib + ia if t.swap_inputs else r * ia + ib
                src_of_dst[dst] = r * da + db
        tables.append((src_of_dst, np.array(t.perm_out, dtype=np.uint8)))
    return tuple(tables)


@functools.lru_cache(maxsize=None)
def canonical_map(radix: int = 3) -> np.ndarray:
    """Canonical (minimum orbit member) index for every function index."""
    digits = _all_digit_tables(radix)
    cells = radix * radix
    powers = radix ** np.arange(cells, dtype=np.int64)
    canon = np.arange(radix**cells, dtype=np.int64)
    for src_of_dst, vperm in _gather_tables(radix):
        image = vperm[digits[:, src_of_dst]].astype(np.int64) @ powers
        np.minimum(canon, image, out=canon)
    canon.flags.writeable = False
    return canon


def canonical_index(index: int, radix: int = 3) -> int:
    """Canonical representative of the class containing ``index``."""
    return int(canonical_map(radix)[index])


def _classify(radix: int) -> list[NpnClass]:
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(canonical_map(radix).tolist()):
        groups.setdefault(c, []).append(i)
    return [NpnClass(c, tuple(members), radix) for c, members in sorted(groups.items())]


def classify_all() -> list[NpnClass]:
    """Partition all 19,683 ternary functions into equivalence classes,
    sorted by canonical index."""
    return _classify(3)


def classify_binary() -> list[NpnClass]:
    """Same machinery specialized to the 16 two-input binary gates."""
    return _classify(2)


def fixed_point_counts(radix: int = 3) -> list[int]:
    """Number of functions fixed by each transform, aligned with
    :func:`all_transforms`; counted by brute force over every function."""
    digits = _all_digit_tables(radix)
    counts = []
    for src_of_dst, vperm in _gather_tables(radix):
        image = vperm[digits[:, src_of_dst]]
        counts.append(int((image == digits).all(axis=1).sum()))
    return counts


def burnside_count(radix: int = 3) -> int:
    """Class count via Burnside's lemma: average number of fixed points."""
    counts = fixed_point_counts(radix)
    total, order = sum(counts), len(counts)
    quotient, rem = divmod(total, order)
    if rem:
        raise AssertionError(f"fixed-point total {total} not divisible by group order {order}")
    return quotient
