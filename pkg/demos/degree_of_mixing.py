"""Is a more evenly mixed ensemble always worth more work to unmix?

For gases in orthonormal pure states the answer is yes: if the weights lam
majorize mu, mixing at mu costs at least as much work as mixing at lam.
For non-orthogonal mixed qubit states the ordering can fail.
"""

import numpy as np

from gibbsmix import gadi_margin, quantum_monotonicity_violation, quasiclassical_mixing_monotone, two_state_configuration

h = np.diag([0.0, 1.0])
dw_mu, dw_lam = quasiclassical_mixing_monotone([199 / 200, 1 / 200], [0.5, 0.5], h)
print(f"orthogonal states: dW(mu) = {dw_mu:.4f} >= dW(lam) = {dw_lam:.4f}")

n1, n2 = two_state_configuration(0.05, 1.0, 0.2)
diag = quantum_monotonicity_violation([0.8, 0.2], [0.7, 0.3], n1, n2)
print(f"|n1| = 0.05, |n2| = 1, phi = 0.2: dW(mu) = {diag.delta_w_mu:.6f}, dW(lam) = {diag.delta_w_lambda:.6f}")
print("monotonicity holds:", diag.holds)
print("first-order margin:", round(gadi_margin(0.8, 0.7, 0.05), 6))

for phi in (0.01, 0.1, 0.5, 1.0, 2.0):
    n1, n2 = two_state_configuration(0.05, 1.0, phi)
    d = quantum_monotonicity_violation([0.8, 0.2], [0.7, 0.3], n1, n2)
    print(f"  phi = {phi:4.2f}: dW(mu) - dW(lam) = {d.delta_w_mu - d.delta_w_lambda:+.3e}")
