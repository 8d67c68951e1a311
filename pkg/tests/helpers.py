"""Random matrices, superoperators and CSV parsing shared by the tests."""
import numpy as np
from scipy.linalg import expm


def random_hermitian(rng, dim):
    """Random dense Hermitian matrix."""
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (m + m.conj().T)


def random_pure_state(rng, dim):
    """Random normalized complex vector."""
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def liouvillians(hamiltonian, jz):
    """Row-major superoperators of -i[H, .] and -[Jz, [Jz, .]] for diagonal Jz."""
    dim = hamiltonian.shape[0]
    identity = np.eye(dim)
    unitary = -1j * (np.kron(hamiltonian, identity) - np.kron(identity, hamiltonian.T))
    m = np.diag(jz).real
    dephasing = -np.diag(((m[:, None] - m[None, :]) ** 2).ravel()).astype(np.complex128)
    return unitary, dephasing


def exact_state(hamiltonian, jz, gamma, rho0, t):
    """exp(L t) rho0 for the dephasing master equation."""
    unitary, dephasing = liouvillians(hamiltonian, jz)
    dim = hamiltonian.shape[0]
    return (expm((unitary + gamma * dephasing) * t) @ rho0.ravel()).reshape(dim, dim)


def gamma_derivatives(hamiltonian, jz, rho0, t):
    """First and second Gamma-derivatives of the exact state at Gamma = 0.

    Uses the exponential of the block upper-bidiagonal matrix
    [[L0, L1, 0], [0, L0, L1], [0, 0, L0]], whose (0,1) block is d/dGamma and
    (0,2) block is half of d^2/dGamma^2 of exp((L0 + Gamma L1) t).
    """
    unitary, dephasing = liouvillians(hamiltonian, jz)
    size = unitary.shape[0]
    zero = np.zeros_like(unitary)
    block = np.block([
        [unitary, dephasing, zero],
        [zero, unitary, dephasing],
        [zero, zero, unitary],
    ])
    propagator = expm(block * t)
    vec = rho0.ravel()
    dim = hamiltonian.shape[0]
    first = (propagator[:size, size:2 * size] @ vec).reshape(dim, dim)
    second = 2.0 * (propagator[:size, 2 * size:] @ vec).reshape(dim, dim)
    return first, second


def parse_csv(text):
    """Split CLI CSV output into (header, provenance dict, float rows)."""
    lines = text.splitlines()
    header = lines[0].split(",")
    provenance = {}
    rows = []
    for line in lines[1:]:
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            provenance[key.strip()] = value.strip()
        elif line:
            rows.append([float(cell) for cell in line.split(",")])
    return header, provenance, np.array(rows)
