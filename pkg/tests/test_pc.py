import random

from spinlogic import npn, pc
from spinlogic.ternary import NUM_FUNCTIONS, TernaryFunction, decode, multiplication


def counts_oracle(grid):
    """Direct distinct-count tally, kept separate from the library path."""
    rows = sorted(len({v for v in row}) for row in grid)
    ncols = len(grid[0])
    cols = sorted(len({grid[i][j] for i in range(len(grid))}) for j in range(ncols))
    return tuple(rows), tuple(cols)


def test_multiplication_signature():
    sig = pc.pc_signature(multiplication())
    assert sig == pc.PcSignature.of((1, 3, 3), (1, 3, 3))
    assert sig.first == (1, 3, 3) and sig.second == (1, 3, 3)


def test_constant_signature():
    sig = pc.pc_signature(decode(9841))
    assert sig == pc.PcSignature.of((1, 1, 1), (1, 1, 1))


def test_projection_signature():
    f = TernaryFunction.from_callable(lambda a, b: a)
    rows, cols = counts_oracle(f.rows())
    assert (rows, cols) == ((1, 1, 1), (3, 3, 3))
    assert pc.pc_signature(f) == pc.PcSignature.of(rows, cols)


def test_signature_pair_is_unordered():
    assert pc.PcSignature.of((1, 2, 3), (2, 2, 3)) == pc.PcSignature.of((2, 2, 3), (1, 2, 3))
    rng = random.Random(3)
    for _ in range(25):
        f = decode(rng.randrange(NUM_FUNCTIONS))
        rows = f.rows()
        transposed = tuple(tuple(rows[i][j] for i in range(3)) for j in range(3))
        assert pc.signature_of_grid(rows) == pc.signature_of_grid(transposed)


def test_signature_invariant_under_all_transforms():
    rng = random.Random(41)
    transforms = npn.all_transforms(3)
    for _ in range(50):
        f = decode(rng.randrange(NUM_FUNCTIONS))
        sig = pc.pc_signature(f)
        for t in transforms:
            assert pc.pc_signature(npn.apply_transform(t, f)) == sig


def test_pc_classify_all_structure():
    classes = pc.pc_classify_all()
    assert sum(c.size for c in classes) == NUM_FUNCTIONS
    # every NPN class sits inside exactly one PC class
    assert sum(len(c.npn_canonicals) for c in classes) == 84
    seen = set()
    for c in classes:
        assert not seen.intersection(c.npn_canonicals)
        seen.update(c.npn_canonicals)
    assert len(seen) == 84
    sigs = [(c.signature.first, c.signature.second) for c in classes]
    assert sigs == sorted(sigs)


def test_multiplication_pc_class_is_a_single_npn_class():
    sig = pc.pc_signature(multiplication())
    (cls,) = [c for c in pc.pc_classify_all() if c.signature == sig]
    assert cls.single_npn
    assert cls.npn_canonicals == (npn.canonical_index(multiplication().index),)


def test_binary_signatures():
    # XOR is digits (0,1,1,0) -> index 6; every line holds both values.
    assert pc.binary_signature(6) == pc.PcSignature.of((2, 2), (2, 2))
    assert pc.binary_signature(0) == pc.PcSignature.of((1, 1), (1, 1))


def test_binary_pc_partition_matches_npn():
    report = pc.pc_binary_check()
    assert report.matches
    assert report.pc_class_count == 4
    pc_partition = {frozenset(members) for _, members in report.pc_classes}
    npn_partition = {frozenset(c.members) for c in npn.classify_binary()}
    assert pc_partition == npn_partition
