# %% [markdown]
# # Special cases and asymptotics
#
# Each approximate formula is compared with the general exponent through
# `compare_limit`. Comparisons are on log-rates only; prefactors are not
# part of the model.

# %%
import math

from sfirate import LaserField, Target
from sfirate.limits import LIMIT_NAMES, compare_limit
from sfirate.rate import DriftMomentum

hydrogen = Target.hydrogen()
mp, tun = (LaserField.from_lab(800.0, i) for i in (1e13, 6e14))

k_small = math.sqrt(0.01 * 2 * hydrogen.ip)
for field in (mp, tun):
    print(f"gamma = {field.gamma(0.5):.4f}")
    for name, k in (
        ("keldysh", DriftMomentum()),
        ("ppt", DriftMomentum(k_small, 0.0)),
        ("corkum", DriftMomentum(0.1, 0.0)),
        ("delone", DriftMomentum(0.0, 0.2)),
        ("ivanov", DriftMomentum(0.0, 0.2)),
    ):
        r = compare_limit(name, field, hydrogen, k)
        print(f"   {name:10s} rel_diff = {r.rel_diff:.2e}  in regime: {r.in_validity_regime}")

# %% [markdown]
# Far above the classical cutoff both large-momentum forms converge on the
# general result, in the multiphoton regime as well as the tunneling one.

# %%
for field in (mp, tun):
    for name in ("krainov_asymptotic", "perp_asymptotic"):
        rel = []
        for m in (10, 20, 40, 80):
            k = math.sqrt(2 * m * field.up)
            mom = DriftMomentum(k, 0.0) if name == "krainov_asymptotic" else DriftMomentum(0.0, k)
            rel.append(compare_limit(name, field, hydrogen, mom).rel_diff)
        print(f"gamma = {field.gamma(0.5):.3f} {name:19s}", " ".join(f"{r:.3e}" for r in rel))

# %%
print("available limits:", ", ".join(LIMIT_NAMES))
