import warnings

import pytest

import heckewb.cache as cache
import heckewb.kl as kl
from heckewb.errors import CacheWarning
from heckewb.rootdata import build_datum

A1 = build_datum("A1-sc")
A2 = build_datum("A2-sc")


def fresh_table(datum, cutoff):
    return kl.KLTable(datum).extend(cutoff)


def test_roundtrip_is_bit_exact(tmp_path):
    table = fresh_table(A1, 6)
    path = cache.save_kl_table(tmp_path, table)
    assert path is not None
    first = path.read_bytes()
    loaded = cache.load_kl_table(tmp_path, A1)
    assert loaded is not None
    assert loaded.cutoff == table.cutoff
    assert loaded.records() == table.records()
    # saving the loaded table reproduces the file byte for byte
    cache.save_kl_table(tmp_path, loaded)
    assert path.read_bytes() == first


def test_loaded_table_serves_lookups(tmp_path):
    table = fresh_table(A2, 4)
    cache.save_kl_table(tmp_path, table)
    loaded = cache.load_kl_table(tmp_path, A2)
    for w, cw in table.cp.items():
        assert loaded.basis_element(w) == cw


def test_version_bump_invalidates(tmp_path):
    table = fresh_table(A1, 4)
    path = cache.save_kl_table(tmp_path, table)
    text = path.read_text().replace("heckewb-kl-table v1",
                                    "heckewb-kl-table v0")
    path.write_text(text)
    with pytest.warns(CacheWarning):
        assert cache.load_kl_table(tmp_path, A1) is None


def test_fingerprint_mismatch_is_a_miss(tmp_path):
    table = fresh_table(A1, 4)
    path = cache.save_kl_table(tmp_path, table)
    # masquerade as the A2 cache file
    (tmp_path / "kl_A2-sc.txt").write_text(path.read_text())
    with pytest.warns(CacheWarning):
        assert cache.load_kl_table(tmp_path, A2) is None


def test_corrupted_records_are_ignored(tmp_path):
    table = fresh_table(A1, 4)
    path = cache.save_kl_table(tmp_path, table)
    path.write_text(path.read_text() + "garbage line without semicolons\n")
    with pytest.warns(CacheWarning):
        assert cache.load_kl_table(tmp_path, A1) is None


def test_missing_file_is_a_silent_miss(tmp_path):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert cache.load_kl_table(tmp_path, A1) is None


def test_unwritable_directory_falls_back(tmp_path):
    target = tmp_path / "papers.txt"
    target.write_text("not a directory")
    table = fresh_table(A1, 3)
    with pytest.warns(CacheWarning):
        assert cache.save_kl_table(target, table) is None


def test_get_table_uses_and_verifies_cache(tmp_path):
    table = fresh_table(A2, 5)
    cache.save_kl_table(tmp_path, table)
    got = kl.get_table(A2, 4, cache_dir=tmp_path, verify_cache=True)
    assert got.cutoff >= 4
    assert got.polynomial(
        next(iter(table.cp)), next(iter(table.cp))) is not None


def test_get_table_writes_cache(tmp_path):
    kl.get_table(A1, 5, cache_dir=tmp_path)
    assert cache.kl_cache_path(tmp_path, A1).exists()
    loaded = cache.load_kl_table(tmp_path, A1)
    assert loaded is not None and loaded.cutoff >= 5
