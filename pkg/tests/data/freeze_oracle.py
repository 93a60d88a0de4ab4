"""Regenerate ``frozen_oracle.json`` from the brute-force oracle.

Run from the repository root: ``python3 tests/data/freeze_oracle.py``.
"""

import json
import sys
from pathlib import Path

import numpy as np

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent))
import oracle  # noqa: E402

TIMES = [0.0, 7.3, 31.4, 100.0, 187.5]
CASES = {
    "cat_a2": dict(theta=np.pi / 3, phi=np.pi / 4, field=("cat", 2.0, 0.0), N=40, omega_a=2.0, lam=0.1),
    "yurke_a1p5": dict(theta=np.pi / 5, phi=0.3, field=("cat", 1.5, np.pi / 2), N=36, omega_a=1.5, lam=0.13),
    "coherent_a1p5": dict(theta=2.2, phi=-1.0, field=("coherent", 1.5 * np.exp(0.4j), None), N=36, omega_a=0.5, lam=0.1),
    "fock_3": dict(theta=np.pi / 2, phi=0.0, field=("fock", 3, None), N=20, omega_a=1.0, lam=0.1),
    "fock_ground_2": dict(theta=0.0, phi=0.0, field=("fock", 2, None), N=20, omega_a=1.7, lam=0.2),
}


def build_field(spec, N):
    kind, x, y = spec
    if kind == "cat":
        return oracle.cat(x, y, N)
    if kind == "coherent":
        return oracle.coherent(x, N)
    return oracle.fock(x, N)


def main():
    out = {"times": TIMES, "cases": {}}
    for name, c in CASES.items():
        field = build_field(c["field"], c["N"])
        be, bg = np.exp(1j * c["phi"]) * np.sin(c["theta"]), np.cos(c["theta"])
        states = oracle.ajc_states(be, bg, field, c["omega_a"], c["lam"], TIMES)
        rows = []
        for psi in states:
            ex = oracle.expectations(psi, c["N"])
            rows.append({k: [float(np.real(v)), float(np.imag(v))] for k, v in ex.items()})
        field_json = [c["field"][0], c["field"][1], c["field"][2]]
        if isinstance(field_json[1], complex):
            field_json[1] = [field_json[1].real, field_json[1].imag]
        out["cases"][name] = {
            "theta": c["theta"], "phi": c["phi"], "field": field_json, "N": c["N"],
            "omega_a": c["omega_a"], "lam": c["lam"], "values": rows,
        }
    (HERE / "frozen_oracle.json").write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
