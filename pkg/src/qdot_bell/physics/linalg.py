"""Dense complex linear algebra and the spin/photon operators built on it.

Every operator is a read-only ``numpy`` complex array. Composite spaces follow
one convention throughout the package: the exciton index is slow and the photon
index is fast, so basis state |i, n> sits at row ``i * (n_max + 1) + n``.
"""
from fractions import Fraction
from typing import Tuple, Union

import numpy as np
import numpy.typing as npt
import scipy.linalg

from qdot_bell.utils.errors import ValidationError

ComplexMatrix = npt.NDArray[np.complex128]

HERMITIAN_RTOL = 1e-12
UNITARY_ATOL = 1e-10


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


def dagger(matrix: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose."""
    return np.conj(matrix).T


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """[a, b] = ab - ba."""
    return a @ b - b @ a


def max_abs(matrix: np.ndarray) -> float:
    """Largest entry magnitude, 0 for empty input."""
    return float(np.max(np.abs(matrix))) if np.size(matrix) else 0.0


def is_hermitian(matrix: ComplexMatrix, rtol: float = HERMITIAN_RTOL) -> bool:
    """Check max|M - M^dagger| <= rtol * max|M|."""
    return max_abs(matrix - dagger(matrix)) <= rtol * max_abs(matrix)


def is_unitary(matrix: ComplexMatrix, atol: float = UNITARY_ATOL) -> bool:
    """Check max|U^dagger U - I| <= atol."""
    identity = np.eye(matrix.shape[0])
    return max_abs(dagger(matrix) @ matrix - identity) <= atol


def _spin_dimension(j: Union[float, Fraction]) -> int:
    try:
        two_j = Fraction(j) * 2
    except (TypeError, ValueError):
        raise ValidationError("j must be a number", field="j", value=j)
    if two_j < 0 or two_j.denominator != 1:
        raise ValidationError(
            "j must be a non-negative integer or half-integer", field="j", value=j
        )
    return int(two_j) + 1


def angular_momentum_ops(j: Union[float, Fraction]) -> Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """Spin-j ladder and z operators in the basis M = -j, ..., +j (ascending).

    Args:
        j: Integer or half-integer spin quantum number

    Returns:
        Tuple of (J+, J-, Jz)

    Raises:
        ValidationError: If j is negative or not a multiple of 1/2
    """
    dim = _spin_dimension(j)
    j = float(j)
    m = np.arange(dim) - j

    jz = np.diag(m).astype(np.complex128)
    jp = np.zeros((dim, dim), dtype=np.complex128)
    # <M+1|J+|M> = sqrt(j(j+1) - M(M+1))
    lower = m[:-1]
    jp[np.arange(1, dim), np.arange(dim - 1)] = np.sqrt(j * (j + 1) - lower * (lower + 1))
    jm = dagger(jp).copy()

    return _frozen(jp), _frozen(jm), _frozen(jz)


def fock_ops(n_max: int) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Truncated photon annihilation and creation operators on |0>, ..., |n_max>.

    Args:
        n_max: Highest retained photon number

    Returns:
        Tuple of (a, a_dagger)
    """
    if n_max < 0:
        raise ValidationError("n_max must be non-negative", field="n_max", value=n_max)
    a = np.diag(np.sqrt(np.arange(1, n_max + 1, dtype=float)), k=1).astype(np.complex128)
    return _frozen(a), _frozen(dagger(a).copy())


def tensor_product(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product with (A x B)[i*dB + k, j*dB + l] = A[i, j] B[k, l]."""
    return _frozen(np.kron(a, b).astype(np.complex128))


def _first_significant(vector: np.ndarray, tol: float) -> int:
    return int(np.argmax(np.abs(vector) > tol))


def hermitian_eig(matrix: ComplexMatrix, rtol: float = 1e-10) -> Tuple[np.ndarray, ComplexMatrix]:
    """Eigen-decomposition of a Hermitian matrix with reproducible labeling.

    Eigenvalues ascend. Each eigenvector is phase-normalized so that its first
    significant component is real and positive; vectors sharing an eigenvalue
    are ordered by the position of that component.

    Args:
        matrix: Square Hermitian matrix
        rtol: Hermiticity tolerance relative to max|M|

    Returns:
        Tuple of (eigenvalues, eigenvector columns)

    Raises:
        ValidationError: If the input is not square or not Hermitian
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError("matrix must be square", field="matrix", value=m.shape)
    if not is_hermitian(m, rtol):
        raise ValidationError(
            "matrix is not Hermitian",
            field="matrix",
            value=max_abs(m - dagger(m)),
        )

    values, vectors = scipy.linalg.eigh(0.5 * (m + dagger(m)))

    tol = 1e-10
    for k in range(vectors.shape[1]):
        pivot = vectors[_first_significant(vectors[:, k], tol), k]
        vectors[:, k] *= np.conj(pivot) / abs(pivot)

    degeneracy_tol = 1e-12 * max(max_abs(m), 1.0)
    order = []
    start = 0
    while start < len(values):
        stop = start + 1
        while stop < len(values) and values[stop] - values[start] <= degeneracy_tol:
            stop += 1
        group = sorted(
            range(start, stop),
            key=lambda k: (
                _first_significant(vectors[:, k], tol),
                -abs(vectors[_first_significant(vectors[:, k], tol), k]),
            ),
        )
        order.extend(group)
        start = stop

    return _frozen(values[order].copy()), _frozen(vectors[:, order].copy())


def propagator(hamiltonian: ComplexMatrix, t: float) -> ComplexMatrix:
    """exp(-i H t) assembled from the spectral decomposition of H."""
    values, vectors = hermitian_eig(hamiltonian)
    return (vectors * np.exp(-1j * values * t)) @ dagger(vectors)


def basis_projector(dim: int, index: int) -> ComplexMatrix:
    """|index><index| on a dim-dimensional space."""
    projector = np.zeros((dim, dim), dtype=np.complex128)
    projector[index, index] = 1.0
    return _frozen(projector)
