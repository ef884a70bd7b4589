"""Build a coefficient table for your own edge-list networks.

Hands each file to the analyzer and prints one row per network, in the
column order of the CLI's summary.csv. Large networks (hundreds of
thousands of edges) are feasible but can take minutes in pure Python.

Run with: python demos/05_summary_table.py FILE [FILE ...]
          python demos/05_summary_table.py            (bundled demo data)
"""

import sys
import time
from importlib import resources

from gossipnet import parse_edge_list, summarize

COLUMNS = (
    ("N", 7), ("M", 8), ("k0", 5), ("k0_w", 5), ("k0w/k0", 7), ("CC", 6),
    ("sigma", 6), ("beta", 6), ("s/CC", 6), ("b/CC", 6), ("b/s", 6),
    ("b/(s CC)", 9), ("secs", 7),
)


def fmt(x):
    if x is None:
        return "NA"
    if isinstance(x, int):
        return str(x)
    return format(x, ".2f")


paths = sys.argv[1:]
if not paths:
    bundled = resources.files("gossipnet").joinpath("data/les_miserables.edges")
    with resources.as_file(bundled) as p:
        paths = [str(p)]
    print("no files given; analyzing the bundled Les Miserables network\n")

print("file".ljust(24) + "".join(name.rjust(width) for name, width in COLUMNS))
for path in paths:
    t0 = time.perf_counter()
    g = parse_edge_list(path)
    s = summarize(g)
    dt = time.perf_counter() - t0
    values = [
        s.n_nodes, s.n_edges, s.k0, s.k0_w, s.k0w_over_k0, s.cc, s.sigma,
        s.beta, s.sigma_over_cc, s.beta_over_cc, s.beta_over_sigma,
        s.beta_over_sigma_cc, round(dt, 1),
    ]
    name = path.rsplit("/", 1)[-1][:23]
    print(name.ljust(24) + "".join(
        fmt(v).rjust(width) for v, (_, width) in zip(values, COLUMNS)
    ))
