from pathlib import Path

import pytest

from bottsamelson.diagrams import render_wiring, render_young, wiring_chamber_labels
from bottsamelson.families import MultFamily, full_chamber_family, parse_mult_family
from bottsamelson.weyl import longest, reduced_words

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return (GOLDEN / name).read_text().rstrip("\n")


def test_wiring_golden():
    assert render_wiring((3, 1, 2, 1, 3, 2), 4, ascii=True) == golden("wiring_312132_ascii.txt")
    assert render_wiring((3, 1, 2, 1, 3, 2), 4) == golden("wiring_312132_unicode.txt")


def test_wiring_chamber_scan():
    last = render_wiring((3, 1, 2, 1, 3, 2), 4).splitlines()[-1]
    assert last == "chambers: 1, 12, 123, 1234, 124, 2, 24, 4, 234, 34"


def test_wiring_labels_match_chamber_family():
    # labels come from tracking curves, independently of the s_i products
    for n in (3, 4, 5):
        for word in reduced_words(longest(n)):
            assert wiring_chamber_labels(word, n) == list(full_chamber_family(word, n).members)


def test_wiring_shape():
    lines = render_wiring((1, 2, 1), 3, ascii=True).splitlines()
    assert len(lines) == 2 * 3 - 1 + 1
    assert sum(line.count("X") for line in lines) == 3
    assert [line[-1] for line in lines[0:5:2]] == ["3", "2", "1"]


def test_wiring_rejects_non_reduced():
    with pytest.raises(ValueError):
        render_wiring((1, 1), 2)


def test_young_golden():
    dm = parse_mult_family("234:2,34:0,4:3", 4)
    assert render_young(dm) == golden("young_234_34_4.txt")
    text = render_young(dm)
    assert text.count("[]") == 2 * 3 + 3


def test_young_unicode_and_empty():
    dm = parse_mult_family("12:1", 2)
    assert render_young(dm, ascii=False) == "1 □\n2 □"
    assert render_young(MultFamily.from_pairs(3, [])) == ""
