"""Superfast encoding: interaction graph, edge/vertex operators, term mapping,
loop stabilizers, and the odd-parity ancilla construction.

Qubits are identified with graph edges.  A vertex operator B_i is a product of
Z on every edge incident to i; an edge operator A_pq (p < q) is X on edge
{p,q} dressed with Z factors on neighboring edges, and A_qp = -A_pq.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .fermion import ClassifiedTerm, Kind
from .pauli import PauliOperatorSum, PauliTerm, multiply, simplify


class MissingEdgeError(KeyError):
    """Raised when an edge operator is requested for a pair not in the graph."""


class AlgebraViolationError(RuntimeError):
    """Raised when a loop stabilizer fails its exactness checks."""


@dataclass(frozen=True)
class InteractionGraph:
    num_vertices: int
    edges: Tuple[Tuple[int, int], ...]  # canonical (p, q) with p < q, sorted
    edge_index: Dict[Tuple[int, int], int]
    neighbors: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls, num_vertices: int, edges: Iterable[Tuple[int, int]]
    ) -> "InteractionGraph":
        canon = set()
        for p, q in edges:
            if p == q:
                raise ValueError("self-loops are not allowed")
            if not (0 <= p < num_vertices and 0 <= q < num_vertices):
                raise ValueError("edge endpoint out of range")
            canon.add((min(p, q), max(p, q)))
        ordered = tuple(sorted(canon))
        index = {e: i for i, e in enumerate(ordered)}
        nbrs: List[List[int]] = [[] for _ in range(num_vertices)]
        for p, q in ordered:
            nbrs[p].append(q)
            nbrs[q].append(p)
        return cls(num_vertices, ordered, index, tuple(tuple(sorted(n)) for n in nbrs))

    @property
    def num_qubits(self) -> int:
        return len(self.edges)

    def qubit_of(self, p: int, q: int) -> int:
        try:
            return self.edge_index[(min(p, q), max(p, q))]
        except KeyError:
            raise MissingEdgeError(f"no edge between modes {p} and {q}") from None

    def connected_components(self) -> List[List[int]]:
        seen = [False] * self.num_vertices
        comps = []
        for start in range(self.num_vertices):
            if seen[start]:
                continue
            comp = []
            queue = deque([start])
            seen[start] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.neighbors[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


def interleaved_spin(p: int) -> int:
    return p % 2


def blocked_spin(num_modes: int) -> Callable[[int], int]:
    """Spin sector of a mode under blocked ordering (up modes first)."""
    half = num_modes // 2
    return lambda p: 0 if p < half else 1


def _graph_spin(g: "InteractionGraph") -> Callable[[int], int]:
    # Round down to an even mode count so a trailing ancilla vertex does not
    # shift the sector boundary.
    return blocked_spin(g.num_vertices - g.num_vertices % 2)


def pair_partition(
    indices: Tuple[int, int, int, int], spin: Callable[[int], int]
) -> Tuple[Tuple[int, int], Tuple[int, int], int]:
    """Partition a double-excitation index tuple into two edge pairs.

    Same-spin indices are paired together so that every edge stays inside one
    spin sector; when all four share a spin, each creation index is paired
    with an annihilation index, outermost with outermost.  Returns the two
    pairs in operator order plus the Majorana reordering sign of the pairing
    (-1 for the crossing pairing, +1 otherwise); signs verified against a
    dense Majorana-product oracle.
    """
    i, j, k, l = indices
    if spin(i) == spin(j):
        return (i, l), (j, k), +1
    if spin(i) == spin(k):
        return (i, k), (j, l), -1
    return (i, l), (j, k), +1


def required_edges(
    term: ClassifiedTerm, spin: Callable[[int], int]
) -> List[Tuple[int, int]]:
    k = term.kind
    if k is Kind.EXCITATION or k is Kind.PAIR_CREATION:
        i, j = term.indices
        return [(i, j)]
    if k is Kind.NUMBER_EXCITATION:
        i, _, kk = term.indices
        return [(i, kk)]
    if k is Kind.DOUBLE_EXCITATION:
        p1, p2, _ = pair_partition(term.indices, spin)
        return [p1, p2]
    return []  # number and Coulomb/exchange need only vertex operators


def build_interaction_graph(
    terms: Sequence[ClassifiedTerm],
    num_modes: int,
    include_parity_ancilla: bool = False,
    ancilla_partner: int = 0,
    spin: Optional[Callable[[int], int]] = None,
    extra_edges: Iterable[Tuple[int, int]] = (),
) -> InteractionGraph:
    """Edge set = union of the edges each term's encoded image requires.

    ``extra_edges`` allows callers to add state-preparation edges explicitly;
    they are never added automatically.  ``spin`` defaults to blocked mode
    ordering.
    """
    if spin is None:
        spin = blocked_spin(num_modes)
    edges = set()
    for t in terms:
        for p, q in required_edges(t, spin):
            edges.add((min(p, q), max(p, q)))
    for p, q in extra_edges:
        edges.add((min(p, q), max(p, q)))
    num_vertices = num_modes
    if include_parity_ancilla:
        edges.add((ancilla_partner, num_modes))
        num_vertices += 1
    return InteractionGraph.from_edges(num_vertices, edges)


def vertex_operator(i: int, g: InteractionGraph) -> PauliTerm:
    """B_i: Z on every edge qubit incident to vertex i."""
    if not 0 <= i < g.num_vertices:
        raise ValueError(f"vertex {i} out of range")
    z = 0
    for j in g.neighbors[i]:
        z |= 1 << g.qubit_of(i, j)
    return PauliTerm(1.0, 0, z, g.num_qubits)


def edge_operator(p: int, q: int, g: InteractionGraph) -> PauliTerm:
    """A_pq: X on edge {p,q} with Z dressing; A_qp = -A_pq."""
    if p == q:
        raise ValueError("edge operator needs two distinct modes")
    sign = 1.0
    if p > q:
        sign = -1.0
    e_pq = g.qubit_of(p, q)
    lo, hi = min(p, q), max(p, q)
    x = 1 << e_pq
    z = 0
    for l in g.neighbors[lo]:
        if l < hi and l != lo:
            z |= 1 << g.qubit_of(l, lo)
    for s in g.neighbors[hi]:
        if s < lo:
            z |= 1 << g.qubit_of(s, hi)
    z &= ~x
    return PauliTerm(sign, x, z, g.num_qubits)


def _one_minus_b(i: int, g: InteractionGraph) -> PauliOperatorSum:
    return PauliOperatorSum(
        (PauliTerm.identity(g.num_qubits, 0.5), vertex_operator(i, g).scaled(-0.5)),
        g.num_qubits,
    )


def hopping_image(i: int, j: int, g: InteractionGraph) -> PauliOperatorSum:
    """Image of a_i^ a_j + a_j^ a_i:  -i (A_ij B_j + B_i A_ij) / 2."""
    a = edge_operator(i, j, g)
    bi = vertex_operator(i, g)
    bj = vertex_operator(j, g)
    terms = (multiply(a, bj).scaled(-0.5j), multiply(bi, a).scaled(-0.5j))
    return PauliOperatorSum(terms, g.num_qubits)


def pair_creation_image(i: int, j: int, g: InteractionGraph) -> PauliOperatorSum:
    """Image of a_i^ a_j^ + a_j a_i:  i (A_ij B_i + A_ij B_j) / 2.

    Sign fixed against a dense Majorana-product oracle.
    """
    a = edge_operator(i, j, g)
    bi = vertex_operator(i, g)
    bj = vertex_operator(j, g)
    terms = (multiply(a, bi).scaled(0.5j), multiply(a, bj).scaled(0.5j))
    return PauliOperatorSum(terms, g.num_qubits)


# B-subset signs for the double-excitation expansion, keyed by the subset of
# operator positions (0,1 = creations, 2,3 = annihilations) carrying a vertex
# operator: -1 for the empty set, the creation pair, the annihilation pair and
# the full set; +1 for every mixed pair.
_DOUBLE_B_SUBSETS = (
    ((), -1.0),
    ((0, 1), -1.0),
    ((0, 2), +1.0),
    ((0, 3), +1.0),
    ((1, 2), +1.0),
    ((1, 3), +1.0),
    ((2, 3), -1.0),
    ((0, 1, 2, 3), -1.0),
)


def double_excitation_image(
    indices: Tuple[int, int, int, int],
    g: InteractionGraph,
    spin: Optional[Callable[[int], int]] = None,
) -> PauliOperatorSum:
    """Image of a_i^ a_j^ a_k a_l + h.c. using two same-spin edge operators."""
    if spin is None:
        spin = _graph_spin(g)
    (x1, x2), (x3, x4), pair_sign = pair_partition(indices, spin)
    aa = multiply(edge_operator(x1, x2, g), edge_operator(x3, x4, g))
    b = [vertex_operator(m, g) for m in indices]
    out = []
    for subset, sgn in _DOUBLE_B_SUBSETS:
        term = aa
        for pos in subset:
            term = multiply(term, b[pos])
        out.append(term.scaled(sgn * pair_sign / 8.0))
    return PauliOperatorSum(tuple(out), g.num_qubits)


def ose_term(
    term: ClassifiedTerm,
    g: InteractionGraph,
    spin: Optional[Callable[[int], int]] = None,
) -> PauliOperatorSum:
    gcoef = term.coefficient
    k = term.kind
    if k is Kind.NUMBER:
        (i,) = term.indices
        return _one_minus_b(i, g).scaled(gcoef)
    if k is Kind.COULOMB_EXCHANGE:
        i, j = term.indices
        return (_one_minus_b(i, g) * _one_minus_b(j, g)).scaled(gcoef)
    if k is Kind.EXCITATION:
        i, j = term.indices
        return hopping_image(i, j, g).scaled(gcoef)
    if k is Kind.NUMBER_EXCITATION:
        i, j, kk = term.indices
        return (hopping_image(i, kk, g) * _one_minus_b(j, g)).scaled(gcoef)
    if k is Kind.DOUBLE_EXCITATION:
        return double_excitation_image(term.indices, g, spin).scaled(gcoef)
    if k is Kind.PAIR_CREATION:
        i, j = term.indices
        return pair_creation_image(i, j, g).scaled(gcoef)
    raise ValueError(f"unhandled kind {k}")


def ose_transform_terms(
    terms: Sequence[ClassifiedTerm],
    g: InteractionGraph,
    constant: float = 0.0,
    eps: float = 1e-12,
    spin: Optional[Callable[[int], int]] = None,
) -> PauliOperatorSum:
    """Map classified terms onto the edge-qubit register; Q equals |E|."""
    if spin is None:
        spin = _graph_spin(g)
    collected: List[PauliTerm] = []
    if constant:
        collected.append(PauliTerm.identity(g.num_qubits, constant))
    for t in terms:
        collected.extend(ose_term(t, g, spin).terms)
    return simplify(PauliOperatorSum(tuple(collected), g.num_qubits), eps)


def _majorana_pair_image(
    va: int, ka: int, vb: int, kb: int, g: InteractionGraph
) -> PauliTerm:
    """Encoded image of the Majorana pair c_{2va+ka} c_{2vb+kb}.

    Uses c_2i c_2j = i A_ij, c_2i c_2i+1 = i B_i and the substitutions that
    follow from them; identical factors square to the identity.
    """
    if va == vb:
        if ka == kb:
            return PauliTerm.identity(g.num_qubits, 1.0)
        b = vertex_operator(va, g)
        return b.scaled(1j if ka == 0 else -1j)
    a = edge_operator(va, vb, g)
    if ka == 0 and kb == 0:
        return a.scaled(1j)
    if ka == 0 and kb == 1:
        return multiply(a, vertex_operator(vb, g)).scaled(-1.0)
    if ka == 1 and kb == 0:
        return multiply(a, vertex_operator(va, g)).scaled(-1.0)
    return multiply(
        multiply(a, vertex_operator(va, g)), vertex_operator(vb, g)
    ).scaled(-1j)


def one_body_entry_image(p: int, q: int, v: float, g: InteractionGraph) -> List[PauliTerm]:
    """Image of v a_p^ a_q for a single tensor entry."""
    if p == q:
        return [
            PauliTerm.identity(g.num_qubits, 0.5 * v),
            vertex_operator(p, g).scaled(-0.5 * v),
        ]
    out = []
    for alpha in (0, 1):
        for gamma in (0, 1):
            coef = 0.25 * v * (-1j) ** alpha * 1j**gamma
            out.append(_majorana_pair_image(p, alpha, q, gamma, g).scaled(coef))
    return out


def two_body_entry_image(
    p: int, q: int, r: int, s: int, v: float, g: InteractionGraph
) -> List[PauliTerm]:
    """Image of v a_p^ a_q^ a_r a_s for a single tensor entry.

    The four Majorana factors are paired as (p, s)(q, r), matching the spin
    structure of a two-body integral, so only those two mode pairs ever
    require an edge.
    """
    if p == q or r == s:
        return []
    out = []
    for alpha in (0, 1):
        for beta in (0, 1):
            for gamma in (0, 1):
                for delta in (0, 1):
                    coef = (
                        v / 16.0 * (-1j) ** alpha * (-1j) ** beta
                        * 1j**gamma * 1j**delta
                    )
                    # reorder c_P c_Q c_R c_S -> (c_P c_S)(c_Q c_R); the S
                    # factor passes R then Q, each swap of distinct Majoranas
                    # contributing a minus sign
                    if (s, delta) != (r, gamma):
                        coef = -coef
                    if (s, delta) != (q, beta):
                        coef = -coef
                    f1 = _majorana_pair_image(p, alpha, s, delta, g)
                    f2 = _majorana_pair_image(q, beta, r, gamma, g)
                    out.append(multiply(f1, f2).scaled(coef))
    return out


def entry_interaction_graph(
    entries_one: Iterable[Tuple[int, int]],
    entries_two: Iterable[Tuple[int, int, int, int]],
    num_modes: int,
    extra_edges: Iterable[Tuple[int, int]] = (),
) -> InteractionGraph:
    """Graph whose edges are the mode pairs used by entry-wise images:
    (p, q) per one-body entry and (p, s), (q, r) per two-body entry."""
    edges = set()
    for p, q in entries_one:
        if p != q:
            edges.add((min(p, q), max(p, q)))
    for p, q, r, s in entries_two:
        if p == q or r == s:
            continue
        if p != s:
            edges.add((min(p, s), max(p, s)))
        if q != r:
            edges.add((min(q, r), max(q, r)))
    for p, q in extra_edges:
        edges.add((min(p, q), max(p, q)))
    return InteractionGraph.from_edges(num_modes, edges)


def ose_entry_transform(
    entries_one: Sequence[Tuple[int, int, float]],
    entries_two: Sequence[Tuple[int, int, int, int, float]],
    g: InteractionGraph,
    constant: float = 0.0,
    eps: float = 1e-12,
) -> PauliOperatorSum:
    """Entry-wise encoding: every tensor entry is mapped independently through
    its Majorana expansion instead of being accumulated into canonical
    self-adjoint terms first.  The two routes agree on the code space but
    produce different Pauli decompositions."""
    collected: List[PauliTerm] = []
    if constant:
        collected.append(PauliTerm.identity(g.num_qubits, constant))
    for p, q, v in entries_one:
        collected.extend(one_body_entry_image(p, q, v, g))
    for p, q, r, s, v in entries_two:
        collected.extend(two_body_entry_image(p, q, r, s, v, g))
    return simplify(PauliOperatorSum(tuple(collected), g.num_qubits), eps)


@dataclass(frozen=True)
class StabilizerSet:
    stabilizers: Tuple[PauliTerm, ...]

    def __len__(self) -> int:
        return len(self.stabilizers)


def loop_stabilizers(g: InteractionGraph) -> StabilizerSet:
    """One stabilizer per independent cycle: i^p times the edge-operator
    product around each fundamental cycle of a breadth-first spanning forest.
    """
    parent: Dict[int, Optional[int]] = {}
    order: Dict[int, int] = {}
    tree_edges = set()
    for start in range(g.num_vertices):
        if start in parent:
            continue
        parent[start] = None
        order[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if w not in parent:
                    parent[w] = v
                    order[w] = order[v] + 1
                    tree_edges.add((min(v, w), max(v, w)))
                    queue.append(w)

    def path_to_root(v: int) -> List[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    stabs = []
    for u, v in g.edges:
        if (u, v) in tree_edges:
            continue
        pu, pv = path_to_root(u), path_to_root(v)
        anc = {x: i for i, x in enumerate(pu)}
        for j, x in enumerate(pv):
            if x in anc:
                cycle = pu[: anc[x] + 1] + pv[:j][::-1]
                break
        # cycle = [u, ..., common ancestor, ..., v]; close it with edge (v, u)
        p = len(cycle)
        term = PauliTerm.identity(g.num_qubits, 1j ** p)
        for t in range(p):
            term = multiply(term, edge_operator(cycle[t], cycle[(t + 1) % p], g))
        c = term.coefficient
        if abs(abs(c) - 1.0) > 1e-12 or abs(c.imag) > 1e-12:
            raise AlgebraViolationError(f"loop product has coefficient {c}")
        stabs.append(PauliTerm(c.real, term.x, term.z, g.num_qubits))
    return StabilizerSet(tuple(stabs))


def add_parity_ancilla(
    g: InteractionGraph, k: int
) -> Tuple[InteractionGraph, PauliOperatorSum]:
    """Append an ancilla vertex s with edge {k, s}; return the enlarged graph
    and the pair-creation image a_k^ a_s^ + a_s a_k on it."""
    if not 0 <= k < g.num_vertices:
        raise ValueError(f"vertex {k} out of range")
    s = g.num_vertices
    g2 = InteractionGraph.from_edges(s + 1, list(g.edges) + [(k, s)])
    return g2, pair_creation_image(k, s, g2)


def symplectic_rank(terms: Iterable[PauliTerm]) -> int:
    """GF(2) rank of the (x|z) vectors of the given Pauli terms."""
    basis: Dict[int, int] = {}  # leading-bit position -> reduced vector
    rank = 0
    for t in terms:
        row = (t.x << t.num_qubits) | t.z
        while row:
            lead = row.bit_length()
            if lead in basis:
                row ^= basis[lead]
            else:
                basis[lead] = row
                rank += 1
                break
    return rank
