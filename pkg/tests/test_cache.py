import json

from groot import cli
from groot.cache import ExtremaCache
from groot.graded_root import graded_root_of, tau_extrema_of
from groot.seifert import BrieskornTriple

T = BrieskornTriple(3, 4, 13)


def test_put_then_get(cache_dir):
    cache = ExtremaCache(cache_dir)
    assert cache.get(T) is None
    ext = tau_extrema_of(T)
    cache.put(T, ext)
    assert cache.get(T) == ext
    assert (cache.hits, cache.misses) == (1, 1)
    assert not list(cache_dir.glob("*.tmp"))


def test_root_uses_cache(cache_dir):
    cache = ExtremaCache(cache_dir)
    cold = graded_root_of(T, cache=cache)
    warm = graded_root_of(T, cache=cache)
    assert cold == warm
    assert cache.hits == 1


def test_corrupt_entry_is_recomputed(cache_dir, caplog):
    cache = ExtremaCache(cache_dir)
    graded_root_of(T, cache=cache)
    cache.path_for(T).write_text("{not json", encoding="utf-8")
    assert graded_root_of(T, cache=cache).leaves == (-6, -2, 0, 0, -2, -6)
    assert json.loads(cache.path_for(T).read_text(encoding="utf-8"))["key"] == [3, 4, 13]


def test_foreign_entry_is_a_miss(cache_dir):
    cache = ExtremaCache(cache_dir)
    cache.put(T, tau_extrema_of(T))
    obj = json.loads(cache.path_for(T).read_text(encoding="utf-8"))
    obj["key"] = [2, 3, 5]
    cache.path_for(T).write_text(json.dumps(obj), encoding="utf-8")
    assert cache.get(T) is None


def test_cli_output_identical_warm_and_cold(cache_dir, capsys):
    args = ["--cache-dir", str(cache_dir), "root", "5,8,13"]
    assert cli.main(args) == 0
    cold = capsys.readouterr().out
    assert list(cache_dir.iterdir())
    assert cli.main(args) == 0
    warm = capsys.readouterr().out
    assert cold == warm
    assert cli.main(["--no-cache", "root", "5,8,13"]) == 0
    assert capsys.readouterr().out == cold
