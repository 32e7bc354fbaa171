"""Ground-truth verification tools: dense matrices, Fock-space rebuilds,
code-space projection, and the JW-vs-superfast spectral comparison.

Everything here is desk-scale (hard cap of 12 qubits) and deliberately
independent of the bit-level Pauli algebra where it serves as an oracle.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import jacobi
from .fermion import ClassifiedTerm, FermionHamiltonian, Kind, classify
from .jw import jw_transform_terms
from .pauli import PauliOperatorSum, PauliTerm
from .superfast import (
    InteractionGraph,
    StabilizerSet,
    add_parity_ancilla,
    build_interaction_graph,
    loop_stabilizers,
    ose_transform_terms,
)

DENSE_QUBIT_LIMIT = 12

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class SizeError(ValueError):
    """Raised when a dense computation would exceed the qubit cap."""


def _check_size(num_qubits: int) -> None:
    if num_qubits > DENSE_QUBIT_LIMIT:
        raise SizeError(f"{num_qubits} qubits exceeds dense limit {DENSE_QUBIT_LIMIT}")


def dense_term(t: PauliTerm) -> np.ndarray:
    """Dense matrix of one Pauli term; basis index bit q is qubit q."""
    _check_size(t.num_qubits)
    out = np.array([[t.coefficient]], dtype=complex)
    factors = t.factors
    for q in range(t.num_qubits):
        out = np.kron(_SINGLE[factors.get(q, "I")], out)
    return out


def dense_matrix(s: PauliOperatorSum) -> np.ndarray:
    _check_size(s.num_qubits)
    dim = 2**s.num_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for t in s.terms:
        out += dense_term(t)
    return out


def apply_term_to_vector(t: PauliTerm, vec: np.ndarray) -> np.ndarray:
    """Apply one Pauli term to a state vector without forming its matrix.

    Uses per-qubit 2x2 contractions; independent of the symplectic product.
    """
    q_total = t.num_qubits
    psi = np.asarray(vec, dtype=complex).reshape([2] * q_total)
    for q, letter in t.factors.items():
        axis = q_total - 1 - q  # axis 0 is the most significant qubit
        psi = np.moveaxis(
            np.tensordot(_SINGLE[letter], psi, axes=([1], [axis])), 0, axis
        )
    return t.coefficient * psi.reshape(-1)


def apply_sum_to_vector(s: PauliOperatorSum, vec: np.ndarray) -> np.ndarray:
    out = np.zeros(2**s.num_qubits, dtype=complex)
    for t in s.terms:
        out += apply_term_to_vector(t, vec)
    return out


# --- dense Fock-space fermionic operators -----------------------------------


def fock_ladder_operators(num_modes: int) -> List[np.ndarray]:
    """Dense annihilation operators a_0..a_{M-1} on the 2^M Fock space.

    Occupation-number basis with bit j of the index giving the occupancy of
    mode j; signs follow the ordering a_{M-1}^ ... a_0^ |vac> for basis states.
    """
    _check_size(num_modes)
    lower = np.array([[0, 1], [0, 0]], dtype=complex)  # a on one mode
    sign = np.array([[1, 0], [0, -1]], dtype=complex)
    ops = []
    for j in range(num_modes):
        out = np.array([[1.0]], dtype=complex)
        for q in range(num_modes):
            if q < j:
                f = sign
            elif q == j:
                f = lower
            else:
                f = np.eye(2, dtype=complex)
            out = np.kron(f, out)
        ops.append(out)
    return ops


def fermion_dense(h: FermionHamiltonian) -> np.ndarray:
    """Dense Fock-space matrix of a fermionic Hamiltonian (small M only)."""
    M = h.num_modes
    a = fock_ladder_operators(M)
    adag = [op.conj().T for op in a]
    dim = 2**M
    out = h.constant * np.eye(dim, dtype=complex)
    for p, q in np.argwhere(np.abs(h.one_body) > 0):
        out += h.one_body[p, q] * (adag[p] @ a[q])
    for p, q, r, s in np.argwhere(np.abs(h.two_body) > 0):
        out += h.two_body[p, q, r, s] * (adag[p] @ adag[q] @ a[r] @ a[s])
    return out


def classified_dense(
    terms: Sequence[ClassifiedTerm], num_modes: int, constant: float = 0.0
) -> np.ndarray:
    """Rebuild classified terms into a dense Fock-space matrix."""
    M = num_modes
    a = fock_ladder_operators(M)
    adag = [op.conj().T for op in a]
    n = [adag[j] @ a[j] for j in range(M)]
    dim = 2**M
    out = constant * np.eye(dim, dtype=complex)
    for t in terms:
        g = t.coefficient
        if t.kind is Kind.NUMBER:
            (i,) = t.indices
            out += g * n[i]
        elif t.kind is Kind.COULOMB_EXCHANGE:
            i, j = t.indices
            out += g * (n[i] @ n[j])
        elif t.kind is Kind.EXCITATION:
            i, j = t.indices
            half = adag[i] @ a[j]
            out += g * (half + half.conj().T)
        elif t.kind is Kind.NUMBER_EXCITATION:
            i, j, k = t.indices
            half = adag[i] @ a[k]
            out += g * (n[j] @ (half + half.conj().T))
        elif t.kind is Kind.DOUBLE_EXCITATION:
            i, j, k, l = t.indices
            half = adag[i] @ adag[j] @ a[k] @ a[l]
            out += g * (half + half.conj().T)
        elif t.kind is Kind.PAIR_CREATION:
            i, j = t.indices
            half = adag[i] @ adag[j]
            out += g * (half + half.conj().T)
        else:
            raise ValueError(f"unhandled kind {t.kind}")
    return out


# --- code space --------------------------------------------------------------


def codespace_projector(stabs: StabilizerSet, num_qubits: int) -> np.ndarray:
    """Projector onto the joint +1 eigenspace of all loop stabilizers."""
    _check_size(num_qubits)
    for i, s in enumerate(stabs.stabilizers):
        for t in stabs.stabilizers[i + 1 :]:
            if not s.commutes_with(t):
                raise RuntimeError("stabilizers do not commute; upstream bug")
    dim = 2**num_qubits
    out = np.eye(dim, dtype=complex)
    eye = np.eye(dim, dtype=complex)
    for s in stabs.stabilizers:
        out = out @ (eye + dense_term(s)) / 2.0
    return out


def code_basis(projector: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis (columns) of the range of an orthogonal projector,
    by pivoted Gram-Schmidt on the projector columns."""
    rank = int(round(projector.trace().real))
    cols = []
    remaining = projector.copy()
    for _ in range(rank):
        norms = np.linalg.norm(remaining, axis=0)
        j = int(np.argmax(norms))
        v = remaining[:, j] / norms[j]
        cols.append(v)
        remaining -= np.outer(v, v.conj() @ remaining)
    basis = np.array(cols).T
    if cols and np.abs(basis.conj().T @ basis - np.eye(rank)).max() > tol:
        raise RuntimeError("projector basis failed to orthonormalize")
    return basis


# --- spectral comparison -----------------------------------------------------


def _component_even_indices(components: List[List[int]], num_modes: int) -> np.ndarray:
    """Fock basis indices whose occupation has even parity within every
    graph component (bit j of the index = occupation of mode j)."""
    idx = np.arange(2**num_modes, dtype=np.int64)
    keep = np.ones(idx.shape, dtype=bool)
    for comp in components:
        mask = 0
        for v in comp:
            mask |= 1 << v
        masked = idx & mask
        parity = np.zeros(idx.shape, dtype=np.int64)
        while mask:
            parity ^= masked & 1
            masked >>= 1
            mask >>= 1
        keep &= parity == 0
    return idx[keep]


def sector_spectra_match(
    h: FermionHamiltonian,
    cutoff: float = 0.0,
    parity_ancilla_mode: Optional[int] = None,
    eps: float = 1e-12,
) -> float:
    """Max deviation between the JW spectrum on the physical parity sectors
    and the superfast-encoding spectrum on its code space.

    Both sides are computed independently: the JW matrix is restricted to the
    Fock states with even particle number inside every interaction-graph
    component; the encoded matrix is restricted to the joint +1 eigenspace of
    the loop stabilizers.
    """
    terms = classify(h, cutoff)
    with_ancilla = parity_ancilla_mode is not None
    g = build_interaction_graph(
        terms,
        h.num_modes,
        include_parity_ancilla=with_ancilla,
        ancilla_partner=parity_ancilla_mode or 0,
    )
    num_modes = g.num_vertices  # includes the ancilla when requested
    _check_size(num_modes)
    _check_size(g.num_qubits)

    ose = ose_transform_terms(terms, g, h.constant, eps)
    stabs = loop_stabilizers(g)
    proj = codespace_projector(stabs, g.num_qubits)
    basis = code_basis(proj)
    h_ose = dense_matrix(ose)
    h_code = basis.conj().T @ h_ose @ basis
    evals_ose = jacobi.eigvalsh(h_code)

    jw = jw_transform_terms(terms, num_modes, h.constant, eps)
    h_jw = dense_matrix(jw)
    sel = _component_even_indices(g.connected_components(), num_modes)
    h_sector = h_jw[np.ix_(sel, sel)]
    evals_jw = jacobi.eigvalsh(h_sector)

    if len(evals_jw) != len(evals_ose):
        raise RuntimeError(
            f"sector dimensions differ: JW {len(evals_jw)} vs encoded {len(evals_ose)}"
        )
    if len(evals_jw) == 0:
        return 0.0
    return float(np.max(np.abs(np.sort(evals_jw) - np.sort(evals_ose))))
