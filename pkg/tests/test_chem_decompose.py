import pytest

from vlekit.activity.unifac import ORIGINAL, MODIFIED, load_unifac_tables
from vlekit.bundled import data_path
from vlekit.chem import GroupPattern, decompose, parse_smiles
from vlekit.errors import DecompositionFailed


@pytest.fixture(scope="module")
def original_patterns():
    _, patterns = load_unifac_tables(
        data_path("unifac_original", "groups.csv"),
        data_path("unifac_original", "interactions.csv"),
        ORIGINAL,
    )
    return patterns


@pytest.fixture(scope="module")
def names():
    table, _ = load_unifac_tables(
        data_path("unifac_original", "groups.csv"),
        data_path("unifac_original", "interactions.csv"),
        ORIGINAL,
    )
    return {g.gid: g.name for g in table.groups.values()}


def counts_by_name(smiles, patterns, names):
    raw = decompose(parse_smiles(smiles), patterns)
    return {names[g]: n for g, n in raw.items()}


# standard group assignments for the demo molecules
FRAGMENTATIONS = [
    ("CCCCCC", {"CH3": 2, "CH2": 4}),
    ("CCO", {"CH3": 1, "CH2": 1, "OH": 1}),
    ("CO", {"CH3OH": 1}),
    ("O", {"H2O": 1}),
    ("CN", {"CH3NH2": 1}),
    ("c1ccccc1", {"ACH": 6}),
    ("Cc1ccccc1", {"ACH": 5, "ACCH3": 1}),
    ("Oc1ccccc1", {"ACH": 5, "AC": 1, "OH": 1}),
    ("CCCc1ccccc1N", {"CH3": 1, "CH2": 1, "ACCH2": 1, "ACH": 4, "ACNH2": 1}),
    ("CC(C)O", {"CH3": 2, "CH": 1, "OH": 1}),
    ("CCCCCCC", {"CH3": 2, "CH2": 5}),
    ("CCN", {"CH3": 1, "CH2NH2": 1}),
    ("CC(C)N", {"CH3": 2, "CHNH2": 1}),
    ("CC(C)(C)O", {"CH3": 3, "C": 1, "OH": 1}),
    ("CCc1ccccc1", {"CH3": 1, "ACH": 5, "ACCH2": 1}),
]


@pytest.mark.parametrize("smiles,expected", FRAGMENTATIONS)
def test_demo_fragmentations(smiles, expected, original_patterns, names):
    assert counts_by_name(smiles, original_patterns, names) == expected


def test_counts_cover_every_heavy_atom(original_patterns):
    # atom conservation: summed pattern sizes equal the heavy atom count
    sizes = {p.gid: len(p.pattern.replace("][", "] [").split()) for p in original_patterns}
    for smiles, _ in FRAGMENTATIONS:
        g = parse_smiles(smiles)
        raw = decompose(g, original_patterns)
        covered = sum(sizes[gid] * n for gid, n in raw.items())
        assert covered == g.heavy_atom_count()


def test_orphan_atom_reported():
    patterns = [GroupPattern(1, "CH3", "[CH3]", 30)]
    with pytest.raises(DecompositionFailed) as e:
        decompose(parse_smiles("CCO"), patterns)
    assert e.value.uncovered  # the oxygen at least


def test_failure_lists_smallest_stuck_set():
    # CH3 and OH alone cannot tile ethanol: the middle CH2 is an orphan
    patterns = [
        GroupPattern(1, "CH3", "[CH3]", 30),
        GroupPattern(14, "OH", "[OH1]", 50),
    ]
    with pytest.raises(DecompositionFailed) as e:
        decompose(parse_smiles("CCO"), patterns)
    assert 1 in e.value.uncovered  # index of the CH2 carbon


def test_priority_prefers_larger_group():
    # methanol must come out as the joined CH3OH group, not CH3 + OH,
    # because the joined pattern carries the higher priority
    patterns = [
        GroupPattern(1, "CH3", "[CH3]", 30),
        GroupPattern(14, "OH", "[OH1]", 50),
        GroupPattern(15, "CH3OH", "[CH3][OH1]", 90),
    ]
    raw = decompose(parse_smiles("CO"), patterns)
    assert raw == {15: 1}


def test_hydrogen_pin_respected():
    # [CH2] must not match a CH3 carbon
    patterns = [GroupPattern(2, "CH2", "[CH2]", 29)]
    with pytest.raises(DecompositionFailed):
        decompose(parse_smiles("C"), patterns)


def test_aromatic_flag_respected():
    # [CH1] is aliphatic and must not cover benzene carbons
    patterns = [GroupPattern(3, "CH", "[CH1]", 28)]
    with pytest.raises(DecompositionFailed):
        decompose(parse_smiles("c1ccccc1"), patterns)


def test_charged_atom_never_matches(original_patterns):
    with pytest.raises(DecompositionFailed):
        decompose(parse_smiles("[NH4+]"), original_patterns)


def test_modified_tables_fragment_identically(names):
    _, mod_patterns = load_unifac_tables(
        data_path("unifac_modified", "groups.csv"),
        data_path("unifac_modified", "interactions.csv"),
        MODIFIED,
    )
    for smiles, expected in FRAGMENTATIONS:
        assert counts_by_name(smiles, mod_patterns, names) == expected
