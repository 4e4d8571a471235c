"""Coarser control can lose more work to mixing.

With full unitary control the mixing ergotropy of qubit gases is fixed by
the lengths of the Bloch vectors. If only population swaps in the energy
basis are available, only the z components count. For vectors whose z
components cancel in the mixture the restricted loss can be the larger one.
"""

import numpy as np

from gibbsmix import (
    BlochState,
    bloch_mixing_ergotropy,
    bloch_restricted_mixing_ergotropy,
    instrument_gap_lower_bound,
)
from gibbsmix.scenarios import search_instrument_gap

states = [BlochState([0.2, 0.2, 0.8]), BlochState([0.2, 0.2, -0.8])]
weights = [0.5, 0.5]

full = bloch_mixing_ergotropy(states, weights)
restricted = bloch_restricted_mixing_ergotropy(states, weights)
print(f"unitary control:   dW  = {full:.6f}")
print(f"population swaps:  dW' = {restricted:.6f}")
print(f"gap dW' - dW = {restricted - full:.6f}, lower bound {instrument_gap_lower_bound(0.4, 0.1, 2):.6f}")

report = search_instrument_gap(seed=1, trials=2000)
best = report["best"]
print(f"\nrandom search: {report['hits']} of {report['valid_trials']} balanced configurations have a positive gap")
print("largest gap", round(best["gap"], 6), "with weights", np.round(best["lambda"], 3))
