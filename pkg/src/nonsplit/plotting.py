"""Figure rendering for 4A(n, P_d) against n."""

import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .admissible import generate_extremal  # noqa: E402
from .exponent import DEFAULT_PRECISION, maximize_A  # noqa: E402

# 800 x 600 user units: matplotlib writes SVG sizes in points
FIGSIZE = (800 / 72, 600 / 72)
STYLES = {
    1: dict(color="red", marker="o", markerfacecolor="none"),
    100: dict(color="blue", marker="D", markerfacecolor="none"),
}


def figure_data(n_min=2, n_max=100, degrees=(1, 100), precision=DEFAULT_PRECISION):
    if not 2 <= n_min < n_max:
        raise ValueError(f"need 2 <= n_min < n_max, got {n_min}, {n_max}")
    ns = list(range(n_min, n_max + 1))
    series = {}
    for d in degrees:
        P = generate_extremal(d)
        series[d] = [float(maximize_A(n, P, precision).four_A) for n in ns]
    return ns, series


def write_csv(path, ns, series):
    degrees = sorted(series)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n"] + [f"four_A_d{d}" for d in degrees])
        for i, n in enumerate(ns):
            w.writerow([n] + [f"{series[d][i]:.10f}" for d in degrees])


def render_svg(path, ns, series):
    plt.rcParams["svg.hashsalt"] = "nonsplit"
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for d in sorted(series):
        style = STYLES.get(d, dict(marker="s"))
        ax.plot(ns, series[d], linestyle="none", markersize=4, label=f"d = {d}", **style)
    ax.set_xlabel("n")
    ax.set_ylabel(r"$4A(n, P_d)$")
    ax.set_xlim(ns[0] - 1, ns[-1] + 1)
    ax.legend(loc="lower right")
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
