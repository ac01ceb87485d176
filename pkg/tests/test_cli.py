"""CLI contract: envelopes, exit codes, round-trips, golden fixtures."""

import io
import json
import os
from contextlib import redirect_stdout

import pytest

from ffhyper.cli import GOLDEN_MANIFEST, golden_emit, main
from ffhyper.cyclo import CycloNum
from ffhyper.identities import REGISTRY


def _run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    out = buf.getvalue()
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_gauss_envelope():
    code, env = _run(["gauss", "--q", "3", "--char", "phi"])
    assert code == 0
    assert env["fields"][0] == {"p": 3, "e": 1, "q": 3, "modulus": [0, 1], "generator": 2}
    val = env["result"][0]["value"]
    assert val == {"m": 6, "coeffs": ["1/1", "-2/1"]}


def test_cyclonum_round_trip():
    code, env = _run(["hyp", "--q", "7", "--num", "phi,w^1", "--den", "e,w^2", "--lambda", "3"])
    assert code == 0
    for row in env["result"]:
        parsed = CycloNum.from_json(row["value"])
        assert parsed.to_json() == {k: row["value"][k] for k in ("m", "coeffs")}


def test_verify_pass_and_skip_exit_zero():
    code, env = _run(["verify", "--id", "EULER_GAUSS", "--q", "5"])
    assert code == 0
    assert env["result"][0]["cases_checked"] == 64
    assert env["result"][0]["failures"] == []
    code, env = _run(["verify", "--id", "QUARTIC_COR", "--q", "7"])
    assert code == 0
    assert env["result"][0]["skipped"] is True


def test_verify_failure_exit_one():
    from ffhyper.identities.base import register

    name = "X_TEST_CLI_BROKEN"
    if name not in REGISTRY:
        register(
            name,
            "deliberately falsified for CLI testing",
            slots={"a": "char"},
            hypothesis=lambda env, case: True,
            lhs=lambda env, case: env.rat(1),
            rhs=lambda env, case: env.rat(2),
        )
    try:
        code, env = _run(["verify", "--id", name, "--q", "5"])
        assert code == 1
        assert env["result"][0]["failures"]
    finally:
        REGISTRY.pop(name, None)


def test_usage_errors_exit_two():
    code, _ = _run(["gauss", "--q", "6", "--char", "phi"])   # 6 not a prime power
    assert code == 2
    code, _ = _run(["gauss", "--q", "7", "--char", "nope"])  # bad character name
    assert code == 2
    code, _ = _run(["verify", "--id", "NOT_AN_ID", "--q", "5"])
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["gauss", "--q", "7"])  # missing --char
    assert exc.value.code == 2


def test_lambda_grammar():
    code, env = _run(["hyp", "--q", "7", "--num", "phi", "--den", "e", "--lambda", "g^2"])
    assert code == 0
    assert env["result"][0]["lambda"] == 2  # 3^2 = 2 mod 7
    code, env = _run(["hyp", "--q", "5", "--num", "phi", "--den", "e", "--lambda", "all"])
    assert len(env["result"]) == 5


def test_list_covers_registry_sorted():
    code, env = _run(["list"])
    assert code == 0
    ids = [row["id"] for row in env["result"]]
    assert ids == sorted(REGISTRY)


def test_count_and_dwork_commands():
    code, env = _run(["count", "--family", "k3", "--q", "5", "--lambda", "all"])
    assert code == 0
    rows = env["result"]
    assert len(rows) == 3 and all(r["methods_agree"] for r in rows)
    code, env = _run(["dwork", "--q", "9", "--lambda", "all"])
    assert code == 0
    assert all(r["matched"] for r in env["result"])


def test_golden_fixtures_deterministic(tmp_path):
    out1 = tmp_path / "g1"
    out2 = tmp_path / "g2"
    files1 = golden_emit(str(out1))
    files2 = golden_emit(str(out2))
    assert files1 == files2
    assert len(files1) == len(GOLDEN_MANIFEST)
    manifest = json.loads((out1 / "manifest.json").read_text())
    assert manifest["count"] == len(GOLDEN_MANIFEST)
    for name in files1 + ["manifest.json"]:
        b1 = (out1 / name).read_bytes()
        b2 = (out2 / name).read_bytes()
        assert b1 == b2, f"fixture {name} not byte-identical"
        json.loads(b1)  # valid JSON


def test_json_output_to_file(tmp_path):
    path = tmp_path / "out.json"
    code, _ = _run(["gauss", "--q", "5", "--char", "phi", "--json", str(path)])
    assert code == 0
    env = json.loads(path.read_text())
    assert env["result"][0]["value"]["m"] == 20
