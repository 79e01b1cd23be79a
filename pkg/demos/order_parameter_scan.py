"""Order parameter across the transition, in a few seconds.

The long-time average of m_z distinguishes the stationary phase
(drive below the decay rate, the spin relaxes to a tilted fixed point)
from the oscillating phase above it, where the average washes out to
zero.  Mean field cannot see any of this from a cat state; order 2 can.

Writes out/demos/order_parameter_scan.svg and prints the averages.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ctclab import sweep_order_parameter

OUT = Path(__file__).resolve().parent.parent / "out" / "demos"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    ratios = np.round(np.arange(0.2, 2.01, 0.1), 10)
    sweep = sweep_order_parameter({"family": "cat"},
                                  ["meanfield", "cumulant2"], ratios,
                                  window=(50.0, 100.0), n_samples=1001)
    a_mf = sweep.averages["meanfield"]
    a_c2 = sweep.averages["cumulant2"]

    print("ratio   meanfield   order2")
    for r, mf, c2 in zip(ratios, a_mf, a_c2):
        print(f"{r:4.1f}   {mf:+.6f}   {c2:+.6f}")
    below = a_c2[ratios < 1.0]
    print(f"below threshold the order-2 average tracks -sqrt(1 - r^2); "
          f"max gap = {np.max(np.abs(below + np.sqrt(1 - ratios[ratios < 1.0] ** 2))):.3f}")

    fig, ax = plt.subplots(figsize=(4.2, 3.0))
    ax.plot(ratios, -np.sqrt(np.clip(1 - ratios ** 2, 0.0, None)), "k:",
            lw=1.0, label=r"$-\sqrt{1-r^2}$")
    ax.plot(ratios, a_c2, "o-", ms=3.5, lw=1.0, label="order 2")
    ax.plot(ratios, a_mf, "s--", ms=3.0, lw=1.0, label="mean field (cat)")
    ax.axvline(1.0, color="0.8", lw=0.8, zorder=0)
    ax.set(xlabel=r"$\Omega/\kappa$",
           ylabel=r"$\overline{\langle S_z \rangle / S}$")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    path = OUT / "order_parameter_scan.svg"
    fig.savefig(path)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
