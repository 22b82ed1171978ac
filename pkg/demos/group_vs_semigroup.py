"""Contrast unitary group evolution with half-domain semigroup evolution.

exp(-i H t) on a finite Hermitian matrix composes for all signed times,
inverts exactly, and preserves the norm.  The resonance branches do none of
that: their factors are contractive on one temporal half-domain and refuse
the other half outright.
"""

import numpy as np

from gamowkit import (
    Arrow,
    DomainViolationError,
    Kind,
    ResonancePole,
    canonical_state,
    evolve,
    group_evolve,
)

rng = np.random.default_rng(42)
dim = 4
a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
hamiltonian = 0.5 * (a + a.conj().T)
vector = rng.normal(size=dim) + 1j * rng.normal(size=dim)

print("unitary group on a random 4x4 Hermitian matrix")
print(f"  ||v||                      = {np.linalg.norm(vector):.12f}")
evolved = group_evolve(hamiltonian, 3.7, vector)
print(f"  ||U(3.7) v||               = {np.linalg.norm(evolved):.12f}")
roundtrip = group_evolve(hamiltonian, -3.7, evolved)
print(f"  max |U(-3.7) U(3.7) v - v| = {np.max(np.abs(roundtrip - vector)):.3e}")
composed = group_evolve(hamiltonian, 1.5, group_evolve(hamiltonian, 2.2, vector))
direct = group_evolve(hamiltonian, 3.7, vector)
print(f"  max |U(1.5)U(2.2) - U(3.7)| v = {np.max(np.abs(composed - direct)):.3e}")
print()

pole = ResonancePole(1.0, 0.2)
state = canonical_state(Arrow.PREPARATION_REGISTRATION, Kind.DECAYING, 0, pole)
print("semigroup branch 4b on the same clock")
print(f"  |factor(3.7)| = {abs(evolve(state, 3.7)):.12f}   (modulus not preserved)")
print(f"  factor(1.5)*factor(2.2) = {evolve(state, 1.5) * evolve(state, 2.2):+.9f}")
print(f"  factor(3.7)             = {evolve(state, 3.7):+.9f}   (composition holds...)")
try:
    evolve(state, -3.7)
except DomainViolationError:
    print("  factor(-3.7)            -> DomainViolationError (...but only forward)")
