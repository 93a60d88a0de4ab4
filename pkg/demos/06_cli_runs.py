# %% [markdown]
# # Driving the experiment runner
#
# The same runs are available from the shell, for example
# ``jcsusy validate --config demos/configs/validate.ini --output out``.
# This script calls the entry point in-process on the sample configs.

# %%
from pathlib import Path

from jcsusy.cli import main

HERE = Path(__file__).resolve().parent
OUT = HERE / "output"

for command, config in [
    ("validate", "validate.ini"),
    ("evolve", "evolve_both.ini"),
    ("wigner", "wigner_coherent.ini"),
]:
    code = main([command, "--config", str(HERE / "configs" / config), "--output", str(OUT / command)])
    print(f"{command:>8}: exit {code}, files {sorted(p.name for p in (OUT / command).iterdir())}")

# %% The full landscape sweeps (about a minute) use landscape_*.ini:
# jcsusy sweep --config demos/configs/landscape_omega2.ini --output out --threads 4
