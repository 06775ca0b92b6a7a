"""Build, verify and export a sandwich for an oriented 3-spider."""

import sys

from tourney_sandwich.atlas import spider_certificate
from tourney_sandwich.sandwich_core import build_covering_forest, dumps, to_dot, verify

legs = tuple(int(x) for x in sys.argv[1].split(",")) if len(sys.argv) > 1 else (2, 3, 4)
res = spider_certificate(*legs)
if res.certificate is None:
    print(f"legs {legs}: evidence {res.evidence}")
    raise SystemExit(0)

print("construction:", "; ".join(res.trace))
print(verify(res.certificate))
cf = build_covering_forest(res.certificate)
print(f"covering forest: q = {cf.q}, {cf.forest.vertex_count} vertices, {cf.forest.arc_count} arcs")

with open("spider.json", "w") as fh:
    fh.write(dumps(res.certificate))
with open("spider.dot", "w") as fh:
    fh.write(to_dot(res.certificate))
print("wrote spider.json and spider.dot")
