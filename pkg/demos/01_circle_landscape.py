"""From a point cloud to a persistence landscape, step by step.

Samples a noisy circle, computes its degree-1 Vietoris-Rips diagram, builds
the landscape, and writes a small SVG of the first few levels.  Run from the
repository root:

    python3 demos/01_circle_landscape.py
"""

import os

import numpy as np

from layerscape.geometry import PointCloud, center_unit_diameter, pairwise_distances
from layerscape.landscape import Grid, discretize, landscape_from_diagram, norm
from layerscape.persistence import drop_zero_persistence, vr_diagrams
from layerscape.svg import line_chart

OUT = os.path.join("out", "demos")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(2)
n = 60
theta = rng.uniform(0, 2 * np.pi, size=n)
points = np.column_stack([np.cos(theta), np.sin(theta)])
points += rng.normal(scale=0.08, size=points.shape)

cloud = center_unit_diameter(PointCloud(points))
print(f"sampled {n} points on a noisy circle, normalized to unit diameter")

diagrams = vr_diagrams(pairwise_distances(cloud), max_degree=1, r_max=1.0)
h1 = drop_zero_persistence(diagrams[1])
pers = h1.pairs[:, 1] - h1.pairs[:, 0]
order = np.argsort(pers)[::-1]
print(f"{len(h1)} degree-1 bars; the longest three:")
for b, d in h1.pairs[order[:3]]:
    print(f"  born {b:.4f}  died {d:.4f}  (persistence {d - b:.4f})")

landscape = landscape_from_diagram(h1)
print(f"landscape has {landscape.n_levels} levels, norm {norm(landscape):.5f}")

grid = Grid(0.0, 0.002, 501)
sampled = discretize(landscape, grid)
ts = grid.points()
series = [
    (f"level {k + 1}", ts, sampled.values[k])
    for k in range(min(4, sampled.values.shape[0]))
]
path = os.path.join(OUT, "circle_landscape.svg")
line_chart(series, "landscape of a noisy circle", "scale", "value", path=path)
print(f"wrote {path}")

# the dominant level-1 peak sits at the midpoint of the main bar
b, d = h1.pairs[order[0]]
peak = landscape.level_at(1, np.array([(b + d) / 2]))[0]
print(f"peak of level 1: {peak:.4f} (expected {(d - b) / 2:.4f})")
