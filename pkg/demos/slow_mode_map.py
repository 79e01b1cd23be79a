"""Slow modes of the generator closing in on the imaginary axis.

Above threshold the spectrum develops ladders of slowly decaying modes
at integer multiples of a basic frequency.  Tracking them across system
sizes and fitting inverse powers of N extrapolates their decay rates to
zero, which is the spectral fingerprint of the persistent oscillation:
in the thermodynamic limit the generator acquires purely imaginary
eigenvalues.

Uses a reduced size grid (N = 10..40, step 2) so it finishes in under a
minute.  Writes out/demos/slow_mode_map.svg and prints the fits.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ctclab import (ModelParams, scaling_fit, spectral_decompose,
                    track_modes)

OUT = Path(__file__).resolve().parent.parent / "out" / "demos"
OMEGA = 2.5


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    sizes = range(10, 41, 2)
    decs = {n: spectral_decompose(ModelParams(n_spins=n, omega=OMEGA,
                                              kappa=1.0), vectors=False)
            for n in sizes}
    tracks = track_modes(decs, kind="spiraling", n_modes=7)
    fits = [scaling_fit(t.ns, t.evals, mu=4) for t in tracks]

    base = np.sqrt(OMEGA ** 2 - 1.0)
    print(f"drive {OMEGA}: expected harmonic spacing "
          f"sqrt(drive^2 - 1) = {base:.5f}")
    print("track   Re a0        Im a0      Im a0 / base   rms residual")
    for j, fit in enumerate(fits):
        a0 = fit.a0
        print(f"  {j}   {a0.real:+.2e}  {a0.imag:8.5f}   "
              f"{a0.imag / base:10.4f}   {fit.residual:.2e}")

    fig, ax = plt.subplots(figsize=(4.6, 3.4))
    cmap = plt.get_cmap("viridis")
    ns = sorted(decs)
    for i, n in enumerate(ns):
        ev = decs[n].evals
        keep = (np.abs(ev.real) < 1.2) & (np.abs(ev.imag) < 10.0)
        ax.plot(ev[keep].real, ev[keep].imag, ".", ms=2.5,
                color=cmap(i / max(len(ns) - 1, 1)), alpha=0.6)
    for t in tracks:
        ax.plot(t.evals.real, t.evals.imag, "k-", lw=0.8)
    for k in (1, 2, 3):
        ax.axhline(k * base, color="0.85", lw=0.8, zorder=0)
    ax.set(xlabel=r"Re $\lambda / \kappa$", ylabel=r"Im $\lambda / \kappa$",
           xlim=(-1.2, 0.05), ylim=(-0.5, 8.0))
    fig.tight_layout()
    path = OUT / "slow_mode_map.svg"
    fig.savefig(path)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
