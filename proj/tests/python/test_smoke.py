import json
import math

import pytest

import ulamfloat as uf


def test_disc_cut_height_oracle():
    disc = uf.Body.ball([0.0, 0.0], 1.0)
    assert uf.cut_height(disc, [0.0, 1.0], 0.1) == pytest.approx(0.8567581563109013, abs=1e-13)


def test_square_cap_cut():
    square = uf.Body.polytope([[0, 0], [1, 0], [1, 1], [0, 1]])
    cut = uf.cap_cut(square, [1.0, 0.0], 0.1)
    assert cut["d"] == pytest.approx(0.9, abs=1e-12)
    assert list(cut["barycenter"]) == pytest.approx([0.95, 0.5], abs=1e-12)


def test_ball_shrinkage_and_constant():
    assert uf.ball_shrinkage(2, 1.0, 0.1) == pytest.approx(0.0855781291211002, abs=1e-14)
    assert uf.c_n(2) == pytest.approx(0.3931112091313345, abs=1e-15)


def test_ulam_body_brackets():
    disc = uf.Body.ball([0.0, 0.0], 1.0)
    approx = uf.ulam_body(disc, 0.1, m=128)
    assert approx["inner_volume"] <= approx["outer_volume"]
    r = 1.0 - uf.ball_shrinkage(2, 1.0, 0.1)
    assert approx["inner_volume"] <= math.pi * r * r <= approx["outer_volume"]


def test_weights_and_json():
    body = uf.Body.from_json('{"type": "ball", "center": [0, 0], "radius": 1}')
    w = uf.Weight.from_json('{"type": "gaussian", "center": [0, 0], "sigma": 1}', body)
    assert w([1.0, 0.0]) == pytest.approx(math.exp(-0.5))
    with pytest.raises(uf.InvalidInput):
        uf.Body.ball([0.0, 0.0], -1.0)


def test_cli_roundtrip(tmp_path):
    path = tmp_path / "disc.json"
    path.write_text('{"type": "ball", "center": [0, 0], "radius": 1}')
    code, out, err = uf.run_cli(["asa", "--body", str(path), "--p", "1"])
    assert code == 0, err
    assert json.loads(out)["result"]["as_p"] == pytest.approx(2 * math.pi, rel=1e-8)
