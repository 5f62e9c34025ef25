"""Smoke test for the compiled module.

Uses an installed ``mockq`` when available; otherwise builds the extension with
cargo and loads it from the target directory.
"""

import importlib.util
import pathlib
import shutil
import subprocess
import sys
from fractions import Fraction

import pytest

CRATE = pathlib.Path(__file__).resolve().parents[2]
ROOT = CRATE.parents[1]


def _load():
    try:
        import mockq

        return mockq
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "mockq-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libmockq_py.so"
    out = ROOT / "target" / "python"
    out.mkdir(exist_ok=True)
    dest = out / "mockq.so"
    shutil.copy(lib, dest)
    spec = importlib.util.spec_from_file_location("mockq", dest)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    sys.modules["mockq"] = mod
    return mod


mockq = _load()


def test_expand():
    terms = dict(mockq.expand("F0_star", 20))
    assert terms == {"0": "1", "1": "-1", "5": "-1", "10": "1", "11": "-1", "18": "1"}


def test_variants_agree():
    a = mockq.expand("chi0_star", 40)
    b = mockq.expand("chi0_star", 40, "false_theta")
    assert a == b
    assert all(Fraction(e) < 40 for e, _ in a)


def test_verify():
    r = mockq.verify("omega_sq_eq_nu", 60)
    assert r["status"] == "pass"


def test_wrt():
    r = mockq.wrt("2_3_5", 5)
    assert r["manifold"] == "2_3_5"
    assert len(r["numeric"]) == 2


def test_l_value():
    assert mockq.l_value("chi60_111", 1) == "-238"
    assert mockq.l_value("chi60_111", 1, "cos_generating") == "-238"


def test_errors():
    with pytest.raises(KeyError):
        mockq.expand("no_such_function", 5)
    with pytest.raises(KeyError):
        mockq.wrt("2_3_5", 5, "bogus")
    with pytest.raises(ValueError):
        mockq.wrt("2_3_5", 1)
