"""Static figures written next to the textual reports."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from .recognition import to_networkx  # noqa: E402

ROLE_COLORS = {
    "degree_two": "#d62728",
    "hubs": "#1f77b4",
    "X": "#2ca02c",
    "Y": "#9467bd",
    "twins": "#ff7f0e",
}


def _layout(lg):
    g = lg.graph
    roles = lg.roles
    path = roles.get("path")
    if not path:
        return nx.kamada_kawai_layout(to_networkx(g))
    # base path on a line, hubs above it, everything else placed by spring
    # layout with those positions pinned
    pos = {g.index(v): (float(i), 0.0) for i, v in enumerate(path)}
    mid = (len(path) - 1) / 2
    for j, h in enumerate(roles.get("hubs", ())):
        pos[g.index(h)] = (mid + (j - 1) * 2.5, 3.0 + (j % 2))
    h = to_networkx(g)
    return nx.spring_layout(h, pos=pos, fixed=list(pos), seed=7, k=1.2)


def draw_labeled_graph(lg, path, title: str | None = None) -> None:
    """Draw a construction with heavy edges in bold."""
    g = lg.graph
    h = to_networkx(g)
    pos = _layout(lg)
    heavy = {frozenset((g.index(u), g.index(v))) for u, v in lg.heavy}
    colors = ["#7f7f7f"] * g.n
    for role, color in ROLE_COLORS.items():
        for name in lg.roles.get(role, ()):
            colors[g.index(name)] = color
    light = [e for e in h.edges() if frozenset(e) not in heavy]
    bold = [e for e in h.edges() if frozenset(e) in heavy]

    fig, ax = plt.subplots(figsize=(9, 6))
    nx.draw_networkx_edges(h, pos, edgelist=light, ax=ax, width=0.6, alpha=0.45)
    nx.draw_networkx_edges(h, pos, edgelist=bold, ax=ax, width=3.0)
    nx.draw_networkx_nodes(h, pos, ax=ax, node_color=colors, node_size=380)
    nx.draw_networkx_labels(h, pos, {i: g.names[i] for i in range(g.n)}, ax=ax, font_size=8,
                            font_color="white")
    params = " ".join(f"{k}={v}" for k, v in lg.params.items())
    ax.set_title(title or f"{lg.family} {params} (n={g.n}, m={g.num_edges()})".replace("  ", " "))
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_search_summary(findings, path) -> None:
    """Per-n counts of sampled, in-class and violating trials."""
    tried = Counter()
    sampled = Counter()
    bad = Counter()
    for f in findings:
        tried[f["n"]] += 1
        if f["status"] != "no-sample":
            sampled[f["n"]] += 1
        if f["status"] == "VIOLATION":
            bad[f["n"]] += 1
    ns = sorted(tried)
    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.28
    ax.bar([n - width for n in ns], [tried[n] for n in ns], width, label="trials")
    ax.bar(ns, [sampled[n] for n in ns], width, label="in class")
    ax.bar([n + width for n in ns], [bad[n] for n in ns], width, label="violations",
           color="#d62728")
    ax.set_xlabel("vertices")
    ax.set_ylabel("count")
    ax.set_xticks(ns)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
