"""
The full pipeline through the command-line tool
===============================================

Everything the library does is reachable from the `featdist` command:
dumps go in, model archives and score files come out, and `eval` turns
two score files into detection metrics.  This script writes synthetic
dumps, then drives fit -> score -> classify -> eval exactly as a shell
user would.

Run:  python3 demos/04_cli_pipeline.py
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from featdist.fileio import write_feature_dump
from featdist.synth import GeneratorSpec, generate


def run(*args):
    cmd = [sys.executable, "-m", "featdist.cli", *args]
    print(f"\n$ featdist {' '.join(args)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    sys.stdout.write(proc.stdout)
    sys.stderr.write(proc.stderr)
    if proc.returncode != 0:
        raise SystemExit(f"command failed with exit code {proc.returncode}")


with tempfile.TemporaryDirectory() as td:
    td = Path(td)

    # Three dumps: labeled training data, a held-out labeled split, and a
    # displaced unlabeled cluster standing in for out-of-distribution data.
    common = dict(kind="gaussian_classes", dims=16, n_classes=3, separation=8.0)
    write_feature_dump(
        generate(GeneratorSpec(samples_per_class=1000, seed=5, **common)),
        td / "train.fdmp",
    )
    write_feature_dump(
        generate(GeneratorSpec(samples_per_class=300, seed=6, **common)),
        td / "held.fdmp",
    )
    write_feature_dump(
        generate(
            GeneratorSpec(
                kind="ood_shift", dims=16, samples_per_class=300,
                separation=40.0, seed=7,
            )
        ),
        td / "ood.fdmp",
    )
    print(f"wrote train.fdmp, held.fdmp, ood.fdmp under {td}")

    run(
        "fit", "--input", str(td / "train.fdmp"), "--model", str(td / "m.fmod"),
        "--kind", "sep", "--pool", "1", "--retain", "0.999",
    )
    run(
        "classify", "--input", str(td / "held.fdmp"),
        "--model", str(td / "m.fmod"), "--out", str(td / "held.scores"),
    )
    run(
        "score", "--input", str(td / "ood.fdmp"),
        "--model", str(td / "m.fmod"), "--out", str(td / "ood.scores"),
    )
    run(
        "eval", "--input", str(td / "held.scores"),
        "--input", str(td / "ood.scores"), "--positive", "ood",
    )
