"""Pushing per-vertex triangle counts to the extremes never lowers the objective."""

import random

from cliquemax.smoothing import extreme_objective, random_state, smooth_to_extreme

rng = random.Random(0)
state = random_state(4, 3, 4, rng)
print("start:", [str(x) for x in state.xs])
result = smooth_to_extreme(state)
print("end:  ", [str(x) for x in result.final_xs])
print(f"{result.raise_steps} raise steps, {result.push_steps} push steps")
print("objective:", " -> ".join(f"{float(v):.3f}" for v in result.objective_trace))
print("final equals the extreme value", extreme_objective(4, 3, 4), ":",
      result.objective_trace[-1] == extreme_objective(4, 3, 4))
