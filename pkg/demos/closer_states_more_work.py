"""Making two states more alike can increase the work lost by mixing.

Lengthening a short Bloch vector n1 towards a long one n2 raises their
fidelity-based distinguishability d (the states become closer) and, at the
same time, raises the mixing ergotropy. The Hilbert-Schmidt distance tells
the same story.
"""

import numpy as np

from gibbsmix import bloch_distinguishability, bloch_mixing_ergotropy, two_state_configuration
from gibbsmix.mixing import bloch_mixing_ergotropy_radial_derivative
from gibbsmix.states import bloch_distinguishability_radial_derivative, hilbert_schmidt_distance

r2, phi = 0.95, 0.3
print(f"{'|n1|':>6} {'d':>9} {'HS':>9} {'dW':>10}")
for r1 in np.linspace(0.0, 0.3, 7):
    a, b = two_state_configuration(r1, r2, phi)
    hs = hilbert_schmidt_distance(a.density_matrix(), b.density_matrix())
    dw = bloch_mixing_ergotropy([a, b], [0.5, 0.5])
    print(f"{r1:6.2f} {bloch_distinguishability(a, b):9.5f} {hs:9.5f} {dw:10.6f}")

r1 = 0.05
print("\nat |n1| = 0.05:")
print("  dd/d|n1|  =", bloch_distinguishability_radial_derivative(r1, r2, phi))
print("  ddW/d|n1| =", bloch_mixing_ergotropy_radial_derivative(r1, r2, phi))
