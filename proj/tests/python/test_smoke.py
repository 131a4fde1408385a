import json

import pytest

import sumrank


@pytest.fixture(scope="module")
def code():
    return sumrank.Code(sumrank.Field(p=3, m=4), [4, 4], 3)


def test_field_basics():
    f = sumrank.Field(p=3, m=2)
    assert f.order == 9 and f.q == 3 and f.class_count == 2
    for a in range(1, 9):
        assert f.mul(a, f.inv(a)) == 1
        assert f.frobenius(f.frobenius(a, 1), -1) == a
    with pytest.raises(ValueError):
        sumrank.Field(p=2, m=2, s=2)


def test_code_parameters(code):
    assert (code.n, code.k, code.d, code.blocks) == (8, 3, 6, [4, 4])
    g, h = code.generator(), code.parity_check()
    assert len(g) == 3 and len(h) == 5
    c = code.encode([1, 2, 3])
    assert code.contains(c)
    assert code.syndrome(c) == [0] * 5


def test_error_erasure_round_trip(code):
    c = code.encode([10, 20, 30])
    bad = sumrank.corrupt(code, c, full=[1, 0], row=[0, 1], col=[1, 0], seed=4)
    assert code.weight(bad["error"]) == 3
    for variant in ("esp", "elp"):
        res = sumrank.decode(code, bad["received"], bad["row_values"], bad["col_locations"], variant=variant)
        assert res["ok"], res
        assert res["codeword"] == c
        assert res["message"] == [10, 20, 30]
        assert res["error"] == bad["error"]


def test_decode_failure_is_reported(code):
    c = code.encode([0, 0, 0])
    bad = sumrank.corrupt(code, c, full=[2, 1], row=[0, 0], col=[0, 0], seed=1)
    res = sumrank.decode(code, bad["received"])
    assert res["ok"] is False or res["codeword"] != c


def test_lifting(code):
    c = code.encode([4, 5, 6])
    res = sumrank.lift_channel_decode(code, c, insertions=[1, 1], deletions=[2, 1], seed=3)
    assert res["ok"] and res["codeword"] == c


def test_cli_entry_point(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"p": 3, "m": 2, "n": [2, 2], "k": 2}))
    rc, out, _ = sumrank.run_cli(["params", "--config", str(cfg)])
    assert rc == 0 and "n=4 k=2 d=3" in out
    rc, _, err = sumrank.run_cli(["params", "--config", str(tmp_path / "missing.json")])
    assert rc == 2 and json.loads(err)["error"] == "config"
