"""Search for sandwiches by exact linear feasibility over small candidate pools."""

from tourney_sandwich.graph_core import build_path
from tourney_sandwich.lp_search import search
from tourney_sandwich.sandwich_core import verify

for blocks, shapes in [((2,), "all"), ((3,), "all"), ((1, 1), "paths"), ((1, 2), "all")]:
    r = search(build_path(blocks), max_arcs=2, shape_filter=shapes)
    line = f"P{blocks} [{shapes}]: {r.summary()}"
    if r.certificate is not None:
        line += f"; extracted certificate verifies: {verify(r.certificate).passed}"
    print(line)
