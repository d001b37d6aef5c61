"""One test per acceptance criterion; the terminal summary prints a pass/fail line for each."""

import json
import math
import time
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from tornheim_lab.cli import main
from tornheim_lab.dirichlet import character, characters_mod, double_L, gauss_sum, totient, verify_char_inversion
from tornheim_lab.dsl import parse_expression, to_text
from tornheim_lab.honesty import run_honesty
from tornheim_lab.tornheim import T, stuffle_rhs
from tornheim_lab.verifier import (DEFAULT_GRIDS, REPORT_SCHEMA, BASE_ORIENTATIONS, GridSpec, run_suite,
                                   verify_limit_xy, verify_prop2, verify_recursion)
from tornheim_lab.zeta import periodic_zeta

ZETA3 = 1.2020569031595942
CORPUS = Path(__file__).parent / "data" / "expressions.txt"


def taper(t):
    """Smooth cutoff: 1 at t <= 0, 0 at t >= 1."""
    t = np.clip(t, 1e-300, 1 - 1e-16)
    return 1.0 / (1.0 + np.exp(np.minimum(1.0 / (1.0 - t) - 1.0 / t, 700.0)))


@pytest.mark.criterion(1, "theorem1 grid passes within max(1e-6, 10*budget) in < 120 s")
def test_theorem1_grid():
    start = time.perf_counter()
    res = run_suite(DEFAULT_GRIDS["theorem1"])
    elapsed = time.perf_counter() - start
    print(f"theorem1: {res.summary} in {elapsed:.1f} s")
    assert res.summary["total"] == 108
    assert res.summary["passed"] == 108
    assert elapsed < 120


@pytest.mark.criterion(2, "stuffle matches a brute-force 2000 x 2000 product sum within 1e-6")
def test_stuffle_brute_force():
    rng = np.random.default_rng(2024)
    L = 2000
    n = np.arange(1, L + 1, dtype=float)
    P, Q = n[:, None], n[None, :]
    weight = taper(P / L) * taper(Q / L)
    worst = 0.0
    for _ in range(10):
        s1, s2 = (int(v) for v in rng.integers(1, 4, size=2))
        X, Y = rng.uniform(0.05, 0.95, size=2)
        brute = (np.exp(2j * np.pi * (P * X + Q * Y)) * weight / (P ** s1 * Q ** s2)).sum()
        worst = max(worst, abs(brute - stuffle_rhs(s1, s2, X, Y).value))
    print(f"stuffle: worst |brute - decomposition| = {worst:.3e}")
    assert worst < 1e-6


@pytest.mark.criterion(3, "recursion residual <= 1e-6 on 10 random tuples")
def test_recursion_random():
    rng = np.random.default_rng(7)
    worst, done = 0.0, 0
    while done < 10:
        a, b = (int(v) for v in rng.integers(1, 4, size=2))
        s = int(rng.integers(1, 3))
        x, y = rng.uniform(0.05, 0.95, size=2)
        if abs(x - y) < 0.05:
            continue
        r = verify_recursion(a, b, s, x, y)
        worst = max(worst, r.residual)
        done += 1
    print(f"recursion: worst residual = {worst:.3e}")
    assert worst <= 1e-6


@pytest.mark.criterion(4, "prop1: one orientation passes at every a != b point, the same one throughout")
def test_prop1_orientation():
    grid = DEFAULT_GRIDS["prop1"]
    res = run_suite(GridSpec(grid.identity, grid.params, options={"orientations": BASE_ORIENTATIONS}))
    print(f"prop1 orientations: {json.dumps(res.summary, sort_keys=True)}")
    equal = [r for r in res.reports if r.params["a"] == r.params["b"]]
    assert all(r.passed for r in equal)
    assert res.summary["coherent"], f"passing orientation sets at a != b: {res.summary['passing_sets']}"


@pytest.mark.criterion(5, "prop2 residual <= 1e-5 for three primitive triples, < 5 min each")
@pytest.mark.parametrize("a,b,refs", [(1, 1, ("4:1", "3:1", "3:1")), (1, 2, ("4:1", "3:1", "5:2")),
                                      (2, 1, ("3:1", "3:1", "5:2"))])
def test_prop2(a, b, refs):
    start = time.perf_counter()
    r = verify_prop2(a, b, *refs)
    elapsed = time.perf_counter() - start
    print(r.line(), f"({elapsed:.1f} s)")
    assert r.residual <= 1e-5
    assert elapsed < 300


@pytest.mark.criterion(6, "classical values: 2 zeta(3), zeta(3) as a double L-value, pi^2/6")
def test_classical():
    assert abs(T(1, 1, 1, 0, 0).value - 2 * ZETA3) < 1e-6
    p = character(1, 0)
    assert abs(double_L(1, 2, p, p, p).value - ZETA3) < 1e-6
    assert abs(periodic_zeta(2, 0).value - math.pi ** 2 / 6) < 1e-9


@pytest.mark.criterion(7, "characters mod k <= 30: count, orthogonality, |tau|, inversion")
def test_character_suite():
    for k in range(1, 31):
        chars = characters_mod(k)
        assert len(chars) == totient(k)
        table = np.array([c.table() for c in chars])
        units = [n for n in range(k) if math.gcd(n, k) == 1]
        gram = table @ table.conj().T
        assert np.abs(gram - totient(k) * np.eye(len(chars))).max() < 1e-10
        cols = table[:, units].conj().T @ table[:, units]
        assert np.abs(cols - totient(k) * np.eye(len(units))).max() < 1e-10
        for c in chars:
            if c.is_primitive and k > 1:
                assert abs(abs(gauss_sum(c)) - math.sqrt(k)) < 1e-10
                for n in range(k):
                    assert verify_char_inversion(c, n) < 1e-10


@pytest.mark.criterion(8, "limit_xy: magnitudes strictly decrease as delta shrinks")
def test_limit():
    mags = verify_limit_xy(1, 1, 2, 0.4, [0.1, 0.01, 0.001])
    print("limit magnitudes:", mags)
    assert mags[0] > mags[1] > mags[2]


@pytest.mark.criterion(9, "engine honesty: true error <= 10 x reported in >= 19 of 20 series")
def test_honesty():
    results = run_honesty()
    honest = sum(r.honest for r in results)
    for r in results:
        if not r.honest:
            print(f"dishonest: {r.name} true={r.true_error:.3e} reported={r.reported:.3e}")
    assert len(results) == 20
    assert honest >= 19


@pytest.mark.criterion(10, "CLI: corpus round-trip, schema-valid JSON, exit codes")
def test_cli(tmp_path, capsys):
    lines = [l for l in CORPUS.read_text().splitlines() if l.strip()]
    assert len(lines) == 50
    for text in lines:
        ast = parse_expression(text)
        assert parse_expression(to_text(ast)) == ast

    ok, bad = tmp_path / "ok.json", tmp_path / "bad.json"
    assert main(["verify", "theorem1", "--a", "2", "--b", "3", "--s", "2", "--x", "0.3", "--y", "0.7",
                 "--json", str(ok)]) == 0
    assert main(["verify", "prop2", "--a", "1", "--b", "1", "--phi", "4:1", "--chi", "3:1", "--psi", "3:1"]) == 0
    assert main(["verify", "prop2", "--a", "1", "--b", "2", "--phi", "4:1", "--chi", "3:1", "--psi", "3:1",
                 "--json", str(bad)]) == 2
    for path in (ok, bad):
        for report in json.loads(path.read_text()):
            jsonschema.validate(report, REPORT_SCHEMA)
    assert "ParityViolation" in json.loads(bad.read_text())[0]["error"]
    with pytest.raises(SystemExit) as info:
        main(["verify", "theorem1", "--a", "1"])
    assert info.value.code == 1
    capsys.readouterr()
