"""Figures for bound tables."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

METHOD_COLORS = {
    "Theorem1": "tab:blue",
    "Theorem2": "tab:orange",
    "Packing": "tab:gray",
}


def plot_bound_gaps(records, path, title=None):
    """Bar chart of upper - lower per instance, one panel per field size.

    ``records`` are the dicts produced by :func:`spreadbounds.cli.output_record`.
    Bars are coloured by the method giving the upper bound; a zero-height
    bar means the value is known exactly.
    """
    by_q = {}
    for rec in records:
        by_q.setdefault(int(rec["q"]), []).append(rec)
    if not by_q:
        raise ValueError("no records to plot")

    fig, axes = plt.subplots(len(by_q), 1, figsize=(8, 2.6 * len(by_q)), squeeze=False)
    for ax, (q, rows) in zip(axes[:, 0], sorted(by_q.items())):
        gaps = [int(r["upper"]) - int(r["lower"]) for r in rows]
        colors = [METHOD_COLORS.get(r["upper_method"], "black") for r in rows]
        labels = [f"{r['n']},{r['t']}" for r in rows]
        ax.bar(range(len(rows)), gaps, color=colors)
        ax.set_yscale("symlog", linthresh=1)
        ax.set_xticks(range(len(rows)))
        ax.set_xticklabels(labels, rotation=90, fontsize=7)
        ax.set_ylabel("upper - lower")
        ax.set_title(f"q = {q}", fontsize=9)
    axes[-1, 0].set_xlabel("n,t")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in METHOD_COLORS.values()]
    fig.legend(handles, list(METHOD_COLORS), loc="lower center", ncol=len(METHOD_COLORS), fontsize=7)
    if title:
        fig.suptitle(title)
    fig.tight_layout(rect=(0, 0.04, 1, 1))
    fig.savefig(path)
    plt.close(fig)
    return path
