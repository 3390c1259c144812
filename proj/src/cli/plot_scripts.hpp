#pragma once

// Sidecar matplotlib scripts written next to the CSV outputs.

namespace bfamily::cli {

inline constexpr const char* kPlotSimulate = R"PY(#!/usr/bin/env python3
"""Profiles of u and u_x at every recorded time (run from this directory)."""
import pandas as pd
import matplotlib.pyplot as plt

fields = pd.read_csv("fields.csv", comment="#")
fig, (top, bottom) = plt.subplots(2, 1, sharex=True, figsize=(7, 7))
for t, snap in fields.groupby("t"):
    top.plot(snap["x"], snap["u"], lw=0.8, label=f"t={t:g}")
    bottom.plot(snap["x"], snap["u_x"], lw=0.8)
top.set_ylabel("u")
bottom.set_ylabel("u_x")
bottom.set_xlabel("x")
top.legend(fontsize=6, ncol=2)
fig.tight_layout()
fig.savefig("simulate.png", dpi=150)
)PY";

inline constexpr const char* kPlotTrack = R"PY(#!/usr/bin/env python3
"""Spectrum decay, delta(t) and alpha(t) (run from this directory)."""
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt

spec = pd.read_csv("spectra_magnitude.csv", comment="#")
trace = pd.read_csv("trace.csv", comment="#")
fig, axes = plt.subplots(1, 3, figsize=(14, 4))
for t, snap in spec.groupby("t"):
    snap = snap[snap["k"] > 0]
    axes[0].semilogy(snap["k"], snap["abs"], lw=0.6)
axes[0].set_xlabel("k")
axes[0].set_ylabel("|u_k|")
axes[1].plot(trace["t"], trace["delta"], "o-", ms=3)
axes[1].axhline(0, color="k", lw=0.5)
axes[1].set_xlabel("t")
axes[1].set_ylabel("delta")
axes[2].plot(trace["t"], trace["alpha"], "o-", ms=3, label="alpha (extrapolated in k)")
axes[2].plot(trace["t"], trace["band_alpha"], "s-", ms=3, label="alpha (band fit)")
axes[2].set_xlabel("t")
axes[2].legend(fontsize=7)
fig.tight_layout()
fig.savefig("track.png", dpi=150)
)PY";

inline constexpr const char* kPlotSweep = R"PY(#!/usr/bin/env python3
"""Blow-up time and character against b (run from this directory)."""
import pandas as pd
import matplotlib.pyplot as plt

sweep = pd.read_csv("sweep.csv", comment="#")
sweep["t_s"] = pd.to_numeric(sweep["t_s"], errors="coerce")
sweep["alpha_at_ts"] = pd.to_numeric(sweep["alpha_at_ts"], errors="coerce")
fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
for initial, rows in sweep.groupby("initial"):
    left.plot(rows["b"], rows["t_s"], "o-", label=f"type {initial}")
    right.plot(rows["b"], rows["alpha_at_ts"], "o-", label=f"type {initial}")
left.set_xlabel("b")
left.set_ylabel("t_s")
right.set_xlabel("b")
right.set_ylabel("alpha(t_s)")
left.legend()
fig.tight_layout()
fig.savefig("sweep.png", dpi=150)
)PY";

}  // namespace bfamily::cli
