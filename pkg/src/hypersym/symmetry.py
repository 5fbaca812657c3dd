"""Spectral symmetry of connected uniform hypergraphs.

A connected m-uniform hypergraph has rotation-symmetric spectrum of order
l (l dividing m) exactly when its vertices admit colors in Z_m summing to
m/l on every edge, i.e. when B x = (m/l) * 1 is solvable over Z_m for the
edge-vertex incidence matrix B. The cyclic index is the largest such l.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    DimensionMismatchError,
    DisconnectedError,
    InternalConsistencyError,
    ModulusMismatchError,
    ParameterError,
)
from .hypergraph import Hypergraph, incidence_matrix, is_connected
from .modular import ModMatrix, ModVector, solve_linear_mod


@dataclass(frozen=True)
class Coloring:
    """A vertex map into Z_m, one value per vertex in index order."""

    modulus: int
    values: tuple[int, ...]

    def __init__(self, modulus: int, values):
        if modulus < 2:
            raise ParameterError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "values", tuple(int(v) % modulus for v in values))


@dataclass(frozen=True)
class SymmetryReport:
    """Cyclic index plus per-divisor solvability evidence.

    `divisor_evidence` maps every divisor l of the uniformity to a witness
    coloring, or None when the corresponding system is unsolvable.
    """

    cyclic_index: int
    divisor_evidence: dict[int, Optional[Coloring]]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def verify_coloring(graph: Hypergraph, coloring: Coloring, symmetry_order: int) -> bool:
    """True iff every edge's color sum is m/l mod m."""
    m = graph.uniformity
    if coloring.modulus != m:
        raise ModulusMismatchError(
            f"coloring modulus {coloring.modulus} != uniformity {m}"
        )
    if len(coloring.values) != graph.vertex_count:
        raise DimensionMismatchError(
            f"coloring has {len(coloring.values)} values for "
            f"{graph.vertex_count} vertices"
        )
    if symmetry_order < 1 or m % symmetry_order:
        raise ParameterError(f"{symmetry_order} does not divide uniformity {m}")
    target = (m // symmetry_order) % m
    values = coloring.values
    return all(sum(values[v - 1] for v in edge) % m == target for edge in graph.edges)


def is_l_symmetric(graph: Hypergraph, symmetry_order: int) -> Optional[Coloring]:
    """Witness coloring if the spectrum is rotation-symmetric of order l.

    Decides solvability of B x = (m/l) * 1 over Z_m exactly; returns None
    only when no coloring exists.
    """
    m = graph.uniformity
    if symmetry_order < 1 or m % symmetry_order:
        raise ParameterError(f"{symmetry_order} does not divide uniformity {m}")
    if not is_connected(graph):
        raise DisconnectedError("spectral symmetry requires a connected hypergraph")
    incidence = incidence_matrix(graph)
    system = ModMatrix(m, incidence.entries)
    rhs = ModVector(m, [m // symmetry_order] * incidence.rows)
    solution = solve_linear_mod(system, rhs)
    if solution is None:
        return None
    witness = Coloring(m, solution.entries)
    if not verify_coloring(graph, witness, symmetry_order):
        raise InternalConsistencyError("solver witness fails edge-sum verification")
    return witness


def cyclic_index(graph: Hypergraph) -> SymmetryReport:
    """Largest l with rotation-symmetric spectrum, over all divisors of m.

    Every divisor of m is decided independently and recorded; the report
    is self-checked for divisor closure (a witness for l implies one for
    every divisor of l) before being returned.
    """
    if not is_connected(graph):
        raise DisconnectedError("cyclic index requires a connected hypergraph")
    m = graph.uniformity
    evidence: dict[int, Optional[Coloring]] = {}
    for ell in divisors(m):
        evidence[ell] = is_l_symmetric(graph, ell)
    solvable = [ell for ell, witness in evidence.items() if witness is not None]
    for ell in solvable:
        for d in divisors(ell):
            if evidence[d] is None:
                raise InternalConsistencyError(
                    f"divisor closure violated: order {ell} solvable but {d} is not"
                )
    if evidence[1] is None:
        raise InternalConsistencyError("order 1 must always be solvable")
    return SymmetryReport(max(solvable), evidence)
