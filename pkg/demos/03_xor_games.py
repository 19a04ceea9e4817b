# XOR games with a GHZ state: the quantum bias is a cosine sum over phases.
import math

from pfourier.core import make_family
from pfourier.nmqc import (
    OptimizerConfig,
    check_distributive_identity,
    classical_bias,
    game_from_function,
    optimize_bias,
    promise_mod_game,
    quantum_bias,
)

# CHSH (k = 2) and its three-player cousin: 1/sqrt(2) against 1/2 classically.
for k in (2, 3):
    g = game_from_function(make_family("cq", k))
    phases, bias = optimize_bias(g, OptimizerConfig(seed=0))
    print(f"CQ_{k}: quantum {bias:.6f} (1/sqrt2 = {1 / math.sqrt(2):.6f}), classical {classical_bias(g)}")
    print("   phases", [round(float(p), 4) for p in phases])

# Promise games: weight 0 or k mod 2k. The quantum strategy is always perfect.
# For odd k the two weight classes differ in parity, so the product of the
# inputs wins classically too; even k is where the gap lives.
print()
for k, n in [(2, 3), (2, 6), (4, 6), (4, 10), (5, 10)]:
    g, phases = promise_mod_game(k, n)
    print(f"P^{k}_{n}: {len(g.z)} promise inputs, quantum {quantum_bias(g, phases):.12f}, "
          f"classical {float(classical_bias(g)):.4f}")

# Functions of block parities decompose into CQ pieces.
print()
print("AND of two parities:", [check_distributive_identity("and2", n) for n in range(1, 5)])
print("Maj of three parities:", [check_distributive_identity("maj3", n) for n in range(1, 4)])
