"""Exact multi-qubit Pauli algebra on a symplectic bit representation.

A Pauli term is a complex coefficient times a tensor product of single-qubit
factors from {X, Y, Z} (identity factors are implicit).  Factors are stored as
two integer bit masks (x, z): bit q of ``x`` marks an X component on qubit q,
bit q of ``z`` a Z component, and both bits together mean Y.  Products are
computed exactly, with the +/-1, +/-i phase folded into the coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

_I_POW = (1, 1j, -1, -1j)

_LETTER_TO_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_LETTER = {(1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class DimensionMismatchError(ValueError):
    """Raised when operands act on different qubit counts."""


@dataclass(frozen=True)
class PauliTerm:
    """One coefficient times a product of single-qubit Pauli factors."""

    coefficient: complex
    x: int
    z: int
    num_qubits: int

    def __post_init__(self):
        if self.num_qubits < 0:
            raise ValueError("num_qubits must be non-negative")
        mask = (1 << self.num_qubits) - 1
        if (self.x | self.z) & ~mask:
            raise ValueError("factor index out of range")

    @classmethod
    def identity(cls, num_qubits: int, coefficient: complex = 1.0) -> "PauliTerm":
        return cls(complex(coefficient), 0, 0, num_qubits)

    @classmethod
    def from_factors(
        cls,
        coefficient: complex,
        factors: Mapping[int, str],
        num_qubits: int,
    ) -> "PauliTerm":
        x = z = 0
        for q, letter in factors.items():
            if not 0 <= q < num_qubits:
                raise ValueError(f"qubit index {q} out of range for {num_qubits} qubits")
            xb, zb = _LETTER_TO_BITS[letter]
            x |= xb << q
            z |= zb << q
        return cls(complex(coefficient), x, z, num_qubits)

    @property
    def factors(self) -> Dict[int, str]:
        """Map qubit index -> factor letter, identity factors absent."""
        out = {}
        support = self.x | self.z
        q = 0
        while support >> q:
            if (support >> q) & 1:
                out[q] = _BITS_TO_LETTER[((self.x >> q) & 1, (self.z >> q) & 1)]
            q += 1
        return out

    def weight(self) -> int:
        """Number of non-identity factors."""
        return (self.x | self.z).bit_count()

    def sort_key(self) -> Tuple:
        return tuple(sorted(self.factors.items()))

    def adjoint(self) -> "PauliTerm":
        return PauliTerm(self.coefficient.conjugate(), self.x, self.z, self.num_qubits)

    def scaled(self, factor: complex) -> "PauliTerm":
        return PauliTerm(self.coefficient * factor, self.x, self.z, self.num_qubits)

    def commutes_with(self, other: "PauliTerm") -> bool:
        """True when the underlying Pauli strings commute."""
        anti = ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2
        return anti == 0

    def __str__(self) -> str:
        body = " ".join(f"{letter}{q}" for q, letter in sorted(self.factors.items()))
        return f"({self.coefficient:+g}) {body or 'I'}"


def multiply(a: PauliTerm, b: PauliTerm) -> PauliTerm:
    """Operator product a*b with the phase folded into the coefficient.

    Internally each term is ``c * i**|x&z| * X^x Z^z``; commuting the Z part of
    ``a`` through the X part of ``b`` contributes ``(-1)**|z_a & x_b|`` and the
    Y bookkeeping contributes an exact power of i.
    """
    if a.num_qubits != b.num_qubits:
        raise DimensionMismatchError(
            f"cannot multiply terms on {a.num_qubits} and {b.num_qubits} qubits"
        )
    x = a.x ^ b.x
    z = a.z ^ b.z
    phase = (
        (a.x & a.z).bit_count()
        + (b.x & b.z).bit_count()
        - (x & z).bit_count()
        + 2 * (a.z & b.x).bit_count()
    ) % 4
    return PauliTerm(a.coefficient * b.coefficient * _I_POW[phase], x, z, a.num_qubits)


@dataclass(frozen=True)
class PauliOperatorSum:
    """A qubit operator as a collection of Pauli terms over a fixed register."""

    terms: Tuple[PauliTerm, ...]
    num_qubits: int

    def __post_init__(self):
        for t in self.terms:
            if t.num_qubits != self.num_qubits:
                raise DimensionMismatchError("all terms must share num_qubits")

    @classmethod
    def zero(cls, num_qubits: int) -> "PauliOperatorSum":
        return cls((), num_qubits)

    @classmethod
    def from_terms(cls, terms: Iterable[PauliTerm], num_qubits: int) -> "PauliOperatorSum":
        return cls(tuple(terms), num_qubits)

    def __add__(self, other: "PauliOperatorSum") -> "PauliOperatorSum":
        if self.num_qubits != other.num_qubits:
            raise DimensionMismatchError("cannot add sums on different registers")
        return PauliOperatorSum(self.terms + other.terms, self.num_qubits)

    def __mul__(self, other) -> "PauliOperatorSum":
        if isinstance(other, PauliOperatorSum):
            if self.num_qubits != other.num_qubits:
                raise DimensionMismatchError("cannot multiply sums on different registers")
            prods = [multiply(a, b) for a in self.terms for b in other.terms]
            return PauliOperatorSum(tuple(prods), self.num_qubits)
        return self.scaled(other)

    def scaled(self, factor: complex) -> "PauliOperatorSum":
        return PauliOperatorSum(tuple(t.scaled(factor) for t in self.terms), self.num_qubits)

    def adjoint(self) -> "PauliOperatorSum":
        return PauliOperatorSum(tuple(t.adjoint() for t in self.terms), self.num_qubits)

    def sorted_terms(self) -> Tuple[PauliTerm, ...]:
        """Deterministic ordering: lexicographic on (factor indices, letters)."""
        return tuple(sorted(self.terms, key=PauliTerm.sort_key))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.sorted_terms()) or "0"


def simplify(s: PauliOperatorSum, eps: float = 1e-12) -> PauliOperatorSum:
    """Merge like terms and drop coefficients with magnitude below eps."""
    if eps < 0:
        raise ValueError("eps must be non-negative")
    acc: Dict[Tuple[int, int], complex] = {}
    for t in s.terms:
        key = (t.x, t.z)
        acc[key] = acc.get(key, 0.0) + t.coefficient
    kept = [
        PauliTerm(c, x, z, s.num_qubits)
        for (x, z), c in acc.items()
        if abs(c) >= eps
    ]
    kept.sort(key=PauliTerm.sort_key)
    return PauliOperatorSum(tuple(kept), s.num_qubits)


def tensor_weight(t: PauliTerm) -> int:
    return t.weight()


def total_tensor_weight(s: PauliOperatorSum) -> int:
    return sum(t.weight() for t in s.terms)


def coefficient_l1_norm(s: PauliOperatorSum, include_identity: bool = True) -> float:
    total = 0.0
    for t in s.terms:
        if not include_identity and t.weight() == 0:
            continue
        total += abs(t.coefficient)
    return total
