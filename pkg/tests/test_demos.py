"""Smoke-run every demo script; their inline assertions do the checking."""

import runpy
from pathlib import Path

import pytest

DEMO_DIR = Path(__file__).resolve().parent.parent / "demos"
DEMOS = sorted(DEMO_DIR.glob("*.py"))


def test_demo_scripts_exist():
    assert [p.name for p in DEMOS] == [
        "01_representations.py",
        "02_coupling.py",
        "03_tensor_operators.py",
        "04_wigner_eckart.py",
    ]


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.stem)
def test_demo_runs_clean(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    out = capsys.readouterr().out
    assert out.strip()
    assert "Traceback" not in out
