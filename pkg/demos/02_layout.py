"""Force-directed layout: the two-node equilibrium, solved and simulated.

For a single connected pair with degrees 1, attraction k_a*d balances
repulsion k_r*(1+1)(1+1)/d at d* = 2*sqrt(k_r/k_a). The simulation should
land there to high accuracy.
"""

import math

import numpy as np

from coauthnet import Graph, LayoutParams, run_layout

pair = Graph.from_weighted_pairs([("a", "b", 1.0)])

for k_r in (1.0, 4.0):
    params = LayoutParams(repulsion=k_r)
    state = run_layout(pair, params)
    d = np.linalg.norm(state.coords[0] - state.coords[1])
    d_star = 2.0 * math.sqrt(k_r / params.attraction)
    print(f"k_r = {k_r}: analytic d* = {d_star:.6f}, simulated d = {d:.6f}, "
          f"residual force = {state.mean_net_force:.2e}")

# A slightly bigger graph: same seed, same coordinates, every time.
g = Graph.from_weighted_pairs(
    [("a", "b", 2.0), ("b", "c", 1.0), ("a", "c", 1.0), ("c", "d", 1.0), ("d", "e", 3.0)]
)
first = run_layout(g, LayoutParams(iterations=300))
second = run_layout(g, LayoutParams(iterations=300))
print("bit-identical reruns:", np.array_equal(first.coords, second.coords))
for node, (x, y) in first.positions.items():
    print(f"  {node}: ({x:8.4f}, {y:8.4f})")
