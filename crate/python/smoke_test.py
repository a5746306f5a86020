#!/usr/bin/env python3
"""Smoke test for the dirac_landau_py extension module.

Build the extension first:

    cargo build -p dirac-landau-py --release

then run this script with any Python 3; it locates the cdylib in
target/, exposes it under the importable name, and exercises the API.
"""
import importlib
import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libdirac_landau_py.so", "dirac_landau_py.so", "libdirac_landau_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not built; run: cargo build -p dirac-landau-py --release")
    staging = Path(tempfile.mkdtemp(prefix="dirac_landau_py_"))
    shutil.copy2(built, staging / "dirac_landau_py.so")
    sys.path.insert(0, str(staging))
    return importlib.import_module("dirac_landau_py")


def main():
    mod = load_module()
    model = mod.Model(xi=0.25, cutoff=32)

    # ground level: sqrt(1 + 4 * 0.25) = sqrt(2)
    assert math.isclose(model.landau_energy(0), math.sqrt(2.0), rel_tol=1e-12)
    assert math.isclose(model.landau_energy(0, sign=-1), -math.sqrt(2.0), rel_tol=1e-12)

    boosted = mod.Model(xi=0.25, cutoff=32, pz=1.0)
    assert math.isclose(boosted.boosted_energy(0), math.sqrt(3.0), rel_tol=1e-12)
    assert boosted.rapidity(0) > 0.0

    spectrum = model.spectrum(5)
    assert len(spectrum) == 5 and all(b > a for a, b in zip(spectrum, spectrum[1:]))

    # vacuum Rabi peak: pop4 = 4 xi / (1 + 4 xi) = 1/2 at the quarter period
    omega0 = math.sqrt(1.0 + 4.0 * 0.25)
    pops = model.evolve_populations(0.0, [0.0, math.pi / (2.0 * omega0)])
    assert math.isclose(pops[0][0], 1.0, abs_tol=1e-12)
    assert math.isclose(pops[1][3], 0.5, abs_tol=1e-10)

    cat_model = mod.Model(xi=1.0, cutoff=96)
    summary = cat_model.cat_summary(5.0)
    assert summary["ultra_relativistic"]
    assert math.isclose(summary["spinor_overlap"], math.sqrt(100.0 / 101.0), rel_tol=1e-12)
    assert summary["component_overlap"] < 1e-10
    assert math.isclose(summary["weight_plus"] + summary["weight_minus"], 1.0, abs_tol=1e-12)
    assert summary["regime"] == "mesoscopic"

    (exact, asym) = cat_model.branch_position(5.0, 0.3)
    assert math.isclose(math.hypot(*exact), 5.0, rel_tol=0.05)
    assert math.isclose(exact[0], asym[0], abs_tol=0.15)

    xs, ys, rows = cat_model.husimi_cat(5.0)
    assert len(xs) == len(ys) == 201 and len(rows) == 201
    peak = max(max(row) for row in rows)
    assert abs(peak - 0.55 / math.pi) < 0.05  # dominant lobe carries ~|alpha_+|^2

    try:
        mod.Model(xi=-1.0, cutoff=8)
    except ValueError:
        pass
    else:
        raise AssertionError("negative xi should be rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
