"""Mixing two pure qubit gases: work and entropy as the states approach.

Two equally populated gases of spin-1/2 particles are prepared in pure states
|a1> and |a2>. Their mixing entropy per pair of particles depends on the
overlap |<a1|a2>| through the binary entropy, and the work lost by mixing
falls linearly to zero. Nothing jumps when the states become identical.
"""

import numpy as np

from gibbsmix import MixtureSpec, mixing_ergotropy, pure_state, quantum_mixing_entropy, two_level_hamiltonian

epsilon = 1.0
h = two_level_hamiltonian(epsilon)
first = pure_state([1.0, 0.0])

print(f"{'overlap':>8} {'dW':>10} {'dS/2N':>10}")
for overlap in np.linspace(0.0, 1.0, 11):
    second = pure_state([overlap, np.sqrt(1.0 - overlap**2)])
    spec = MixtureSpec([first, second], [0.5, 0.5])
    work = mixing_ergotropy(spec, h).total
    entropy = quantum_mixing_entropy(spec)
    print(f"{overlap:8.2f} {work:10.6f} {entropy:10.6f}")

# orthogonal states reproduce the classical 2N ln 2 for distinct gases
print("ln 2 =", np.log(2))
