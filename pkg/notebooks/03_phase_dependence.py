# %% [markdown]
# # Instantaneous rate versus laser phase
#
# Shifting k_par by the vector potential gives the rate as a function of
# the phase phi = omega t at which the electron is released. The rate
# depends on phi only through sin(phi), so curves for -k are mirror images
# of those for +k, and phi and pi - phi are equivalent.

# %%
import numpy as np

from sfirate import LaserField, PhaseScanSpec, Target, phase_scan
from sfirate.scan import peak_phase

hydrogen = Target.hydrogen()
ks = tuple(s * hydrogen.kappa for s in (-0.5, -0.25, 0.0, 0.25, 0.5))
scans = {
    intensity: phase_scan(LaserField.from_lab(800.0, intensity), hydrogen, PhaseScanSpec(k_values=ks))
    for intensity in (1e13, 6e14)
}

# %%
for intensity, res in scans.items():
    v = res.values
    print(f"{intensity:.0e}: mirror gap {np.max(np.abs(v - v[::-1, ::-1])):.1e}, "
          f"k = 0 peak at phi = {peak_phase(res, row=2):+.3f}")
    for k, row in zip(res.axes["k"], range(len(ks))):
        print(f"   k = {k:+.3f}: peak phi = {peak_phase(res, row=row):+.4f}, max log rate = {v[row].max():.3f}")

# %% [markdown]
# A drift momentum k is produced most efficiently when the vector potential
# cancels it at release, that is at sin(phi) = -k omega / F, provided
# |k| < F / omega. Otherwise the peak sits at phi = -/+ pi / 2 (the 1e13
# rows with |k| = 0.5). In the tunneling case the optimal phase stays close
# to the field crest.

# %%
from _plot import plt, save

if plt is not None:
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for ax, (intensity, res) in zip(axes, scans.items()):
        for k, row in zip(res.axes["k"], res.values):
            ax.plot(res.axes["phi"], row, label=f"k = {k:+.2f}")
        ax.set_title(f"{intensity:.0e} W/cm^2")
        ax.set_xlabel("phi (rad)")
    axes[0].set_ylabel("log rate")
    axes[0].legend(fontsize=8)
    save(fig, "03_phase.png")
