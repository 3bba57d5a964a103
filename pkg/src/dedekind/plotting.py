"""Figure rendering for the CLI report paths.

Figures are written straight to files (Agg backend, no display); the CLI
offers them alongside its delimited output via --plot.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_bench_figure(rows: list[dict], path: str) -> None:
    """Log-log timing comparison of the two evaluators across moduli.

    rows are the bench result dicts; naive cells that were skipped by the
    size cap simply drop out of their series.
    """
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for key, label, marker in (
        ("naive_seconds", "definitional sum, O(n)", "o"),
        ("bhk_seconds", "continued-fraction form, O(log n)", "s"),
    ):
        pts = [(row["n"], row[key]) for row in rows if row[key] is not None]
        if pts:
            xs, ys = zip(*pts)
            ax.plot(xs, ys, marker=marker, label=label)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("modulus n")
    ax.set_ylabel("seconds per evaluation")
    ax.set_title("Dedekind sum evaluation time")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_classify_figure(n: int, classes: list[tuple[int, list[int]]], path: str) -> None:
    """Class size against fractional residue for the partition of units mod n."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    residues = [r for r, _ in classes]
    sizes = [len(ms) for _, ms in classes]
    if len(classes) > 400:
        ax.plot(residues, sizes, ".", markersize=3)
    else:
        ax.bar(residues, sizes, width=max(1, n // 200))
    ax.set_xlabel("fractional residue (m + m*) mod n")
    ax.set_ylabel("class size")
    ax.set_title(f"fractional-part classes of the units mod {n}")
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
