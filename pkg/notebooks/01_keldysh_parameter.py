# %% [markdown]
# # Units and the Keldysh parameter
#
# Everything in `sfirate` runs in atomic units. Laboratory inputs
# (wavelength in nm, intensity in W/cm^2) are converted once, at the edge.

# %%
import numpy as np

from sfirate import LabLaser, LaserField, Target
from sfirate.rate import f_general
from sfirate.limits import keldysh_limit

hydrogen = Target.hydrogen()
for intensity in (1e13, 6e14):
    field = LabLaser(800.0, intensity).to_field()
    print(f"I = {intensity:.0e} W/cm^2: omega = {field.omega:.5f}, F = {field.f0:.5f}, "
          f"gamma = {field.gamma(hydrogen.ip):.4f}, Up = {field.up:.4f}")

# %% [markdown]
# The two intensities sit on either side of gamma = 1: 1e13 W/cm^2 is
# multiphoton (gamma ~ 3.4), 6e14 W/cm^2 is tunneling (gamma ~ 0.44).
#
# At zero drift momentum the exponent reduces to the Keldysh function. For
# small gamma it behaves like 2 gamma / 3, which is the static tunneling
# exponent once multiplied by 2 ip / omega.

# %%
gammas = np.logspace(-3, 2, 11)
for g, f in zip(gammas, f_general(gammas, 0.0, 0.0, hydrogen.ip)):
    print(f"gamma = {g:9.3g}   f = {f:.12e}   f / (2 gamma / 3) = {f / (2 * g / 3):.9f}")

# %% [markdown]
# `keldysh_limit` evaluates the same function along a separate code path;
# the two agree to rounding.

# %%
print(np.max(np.abs(keldysh_limit(gammas) / f_general(gammas, 0.0, 0.0, 0.5) - 1)))

# %%
from _plot import plt, save

if plt is not None:
    fig, ax = plt.subplots()
    g = np.logspace(-2, 2, 200)
    ax.loglog(g, f_general(g, 0.0, 0.0, 0.5), label="f(gamma, 0, 0)")
    ax.loglog(g, 2 * g / 3, "--", label="2 gamma / 3")
    ax.set_xlabel("gamma")
    ax.legend()
    save(fig, "01_keldysh.png")
