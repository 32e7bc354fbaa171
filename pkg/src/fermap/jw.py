"""Jordan-Wigner mapping of ladder operators and classified Hamiltonians.

Convention: ``a_j^ = (X_j - iY_j)/2 * Z_{j-1} ... Z_0`` (the Z string sits on
indices below j).
"""

from __future__ import annotations

from typing import Iterable

from .fermion import ClassifiedTerm, FermionHamiltonian, Kind, classify
from .pauli import PauliOperatorSum, PauliTerm, simplify


def jw_ladder(j: int, dagger: bool, num_modes: int) -> PauliOperatorSum:
    """Pauli image of a_j (or a_j^ when dagger) on num_modes qubits."""
    if not 0 <= j < num_modes:
        raise IndexError(f"mode {j} out of range for {num_modes} modes")
    string = (1 << j) - 1  # Z on qubits 0..j-1
    x_term = PauliTerm(0.5, 1 << j, string, num_modes)
    y_sign = -0.5j if dagger else 0.5j
    y_term = PauliTerm(y_sign, 1 << j, string | (1 << j), num_modes)
    return PauliOperatorSum((x_term, y_term), num_modes)


def _number_op(i: int, M: int) -> PauliOperatorSum:
    # n_i = (1 - Z_i)/2
    return PauliOperatorSum(
        (PauliTerm(0.5, 0, 0, M), PauliTerm(-0.5, 0, 1 << i, M)), M
    )


def jw_term(term: ClassifiedTerm, num_modes: int) -> PauliOperatorSum:
    """Pauli image of one classified self-adjoint term."""
    M = num_modes
    g = term.coefficient
    k = term.kind
    if k is Kind.NUMBER:
        (i,) = term.indices
        return _number_op(i, M).scaled(g)
    if k is Kind.COULOMB_EXCHANGE:
        i, j = term.indices
        return (_number_op(i, M) * _number_op(j, M)).scaled(g)
    if k is Kind.EXCITATION:
        i, j = term.indices
        half = jw_ladder(i, True, M) * jw_ladder(j, False, M)
        return (half + half.adjoint()).scaled(g)
    if k is Kind.NUMBER_EXCITATION:
        i, j, kk = term.indices
        half = jw_ladder(i, True, M) * jw_ladder(kk, False, M)
        return (_number_op(j, M) * (half + half.adjoint())).scaled(g)
    if k is Kind.DOUBLE_EXCITATION:
        i, j, kk, l = term.indices
        half = (
            jw_ladder(i, True, M)
            * jw_ladder(j, True, M)
            * jw_ladder(kk, False, M)
            * jw_ladder(l, False, M)
        )
        return (half + half.adjoint()).scaled(g)
    if k is Kind.PAIR_CREATION:
        i, j = term.indices
        half = jw_ladder(i, True, M) * jw_ladder(j, True, M)
        return (half + half.adjoint()).scaled(g)
    raise ValueError(f"unhandled kind {k}")


def jw_transform_terms(
    terms: Iterable[ClassifiedTerm],
    num_modes: int,
    constant: float = 0.0,
    eps: float = 1e-12,
) -> PauliOperatorSum:
    collected = []
    if constant:
        collected.append(PauliTerm.identity(num_modes, constant))
    for t in terms:
        collected.extend(jw_term(t, num_modes).terms)
    return simplify(PauliOperatorSum(tuple(collected), num_modes), eps)


def jw_transform(
    h: FermionHamiltonian, cutoff: float = 0.0, eps: float = 1e-12
) -> PauliOperatorSum:
    """Map a fermionic Hamiltonian to qubits; Q equals the mode count."""
    terms = classify(h, cutoff)
    return jw_transform_terms(terms, h.num_modes, h.constant, eps)
