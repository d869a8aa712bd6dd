import pytest

import mckaylab


def test_partitions_and_dimensions():
    assert mckaylab.partition_count(10) == 42
    assert len(mckaylab.partitions(6)) == 11
    assert mckaylab.dimension([3, 2, 1]) == 16
    assert mckaylab.conjugate([3, 1]) == [2, 1, 1]
    # staircase(20) has a dimension far beyond 64 bits
    assert mckaylab.dimension(list(range(20, 0, -1))) > 2**600


def test_character_values():
    assert mckaylab.sn_character([4, 1], [1, 1, 1, 1, 1]) == 4
    assert mckaylab.sn_character([4, 1], [3, 1, 1]) == 1
    assert mckaylab.sn_character([2, 2], [2, 2]) == 2


def test_support():
    # a transvection in dimension 3 over GF(2)
    assert mckaylab.support(2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert mckaylab.support(3, [[1, 0], [0, 1]]) == 0


def test_run_document():
    doc = mckaylab.run("st1", {"m_min": 3, "m_max": 40})
    assert doc["result"]["pass"] is True
    assert doc["manifest"]["command"] == "st1"
    assert doc["manifest"]["parameters"] == {"m_min": 3, "m_max": 40}
    assert len(doc["manifest"]["result_digest"]) == 64


def test_digest_ignores_workers():
    params = {"samples": 40}
    a = mckaylab.run("omega-identities", params, seed=5, workers=1)
    b = mckaylab.run("omega-identities", params, seed=5, workers=3)
    assert a["manifest"]["result_digest"] == b["manifest"]["result_digest"]
    assert a["result"]["pass"]


def test_honest_failure_is_reported():
    doc = mckaylab.run("sest-check", {"n_min": 4, "n_max": 5})
    assert doc["result"]["pass"] is False
    assert doc["result"]["counterexamples"][0]["a"] == 2


def test_cache_dir(tmp_path):
    doc = mckaylab.run("an-table", {"n": 6}, cache_dir=tmp_path)
    assert doc["result"]["sum_squared_degrees"] == "360"
    assert (tmp_path / "an_6.table.json").exists()
    again = mckaylab.run("an-table", {"n": 6}, cache_dir=tmp_path, paranoid=True)
    untimed = lambda r: {k: v for k, v in r.items() if k != "runtime_ms"}
    assert untimed(again["result"]) == untimed(doc["result"])
    assert again["manifest"]["result_digest"] == doc["manifest"]["result_digest"]


def test_validation_errors():
    with pytest.raises(mckaylab.ValidationError):
        mckaylab.run("st1", {"m_min": 0})
    with pytest.raises(ValueError):
        mckaylab.run("no-such-command")
    with pytest.raises(ValueError):
        mckaylab.dimension([1, 2])
    assert "sigma-bounds" in mckaylab.commands()
    assert mckaylab.default_parameters("st1") == {"m_min": 3, "m_max": 40}
