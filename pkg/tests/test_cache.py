"""Cache file round-trips, validation, and failure modes."""
import os

import pytest

from bernmod.cache import ConventionMismatch, CorruptCache, load, save
from bernmod.sequences import MINUS_HALF, PLUS_HALF, BernoulliTable


def fresh_table(top: int, convention: str = MINUS_HALF) -> BernoulliTable:
    table = BernoulliTable(convention)
    table.value(top)
    return table


def test_round_trip_is_exact(tmp_path):
    path = tmp_path / "bern.cache"
    table = fresh_table(40)
    save(table, path)
    back = load(path)
    assert back.convention == MINUS_HALF
    assert back.items() == table.items()


def test_round_trip_plus_half(tmp_path):
    path = tmp_path / "bern.cache"
    save(fresh_table(12, PLUS_HALF), path)
    back = load(path, convention=PLUS_HALF)
    assert back.value(1).numerator == 1


def test_header_records_convention(tmp_path):
    path = tmp_path / "bern.cache"
    save(fresh_table(8), path)
    first = path.read_text().splitlines()[0]
    assert first == "BERNCACHE 1 minus_half"


def test_convention_mismatch(tmp_path):
    path = tmp_path / "bern.cache"
    save(fresh_table(8, PLUS_HALF), path)
    with pytest.raises(ConventionMismatch):
        load(path, convention=MINUS_HALF)


def test_missing_file_is_oserror(tmp_path):
    with pytest.raises(OSError):
        load(tmp_path / "absent.cache")


def test_save_into_missing_directory_is_oserror(tmp_path):
    with pytest.raises(OSError):
        save(fresh_table(4), tmp_path / "no" / "such" / "dir" / "x.cache")


def corrupt(path, old: str, new: str) -> None:
    text = path.read_text()
    assert old in text, f"fixture drift: {old!r} not found"
    path.write_text(text.replace(old, new))


@pytest.mark.parametrize("old,new,reason", [
    ("BERNCACHE 1", "WRONGMAGIC 1", "bad magic"),
    ("BERNCACHE 1", "BERNCACHE 9", "bad version"),
    ("minus_half", "half_minus", "bad convention"),
    ("2 1 6", "2 one 6", "non-integer field"),
    ("2 1 6", "2 1", "short line"),
    ("2 1 6", "7 1 6", "gap in indices"),
    ("2 1 6", "0 1 6", "repeated index"),
    ("2 1 6", "2 2 12", "unreduced fraction"),
    ("2 1 6", "2 -1 -6", "negative denominator"),
    ("0 1 1", "0 2 1", "wrong B_0"),
    ("1 -1 2", "1 1 3", "wrong B_1"),
    ("3 0 1", "3 1 1", "odd entry nonzero"),
    ("4 -1 30", "4 -1 42", "wrong denominator"),
    ("4 -1 30", "4 1 30", "flipped numerator"),
])
def test_corruption_is_detected(tmp_path, old, new, reason):
    path = tmp_path / "bern.cache"
    save(fresh_table(12), path)
    corrupt(path, old, new)
    with pytest.raises(CorruptCache):
        load(path)


def test_empty_and_headerless_files(tmp_path):
    path = tmp_path / "bern.cache"
    path.write_text("")
    with pytest.raises(CorruptCache):
        load(path)
    path.write_text("BERNCACHE 1 minus_half\n")
    with pytest.raises(CorruptCache):
        load(path)


def test_save_is_atomic_replace(tmp_path):
    path = tmp_path / "bern.cache"
    save(fresh_table(6), path)
    before = path.read_text()
    save(fresh_table(20), path)
    after = path.read_text()
    assert before != after
    assert load(path).max_index == 20
    leftovers = [f for f in os.listdir(tmp_path) if f != "bern.cache"]
    assert leftovers == []  # no temp files left behind


def test_blank_lines_tolerated(tmp_path):
    path = tmp_path / "bern.cache"
    save(fresh_table(6), path)
    path.write_text(path.read_text() + "\n\n")
    assert load(path).max_index == 6
