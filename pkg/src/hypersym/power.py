"""Generalized power hypergraphs and the blow-up symmetry check.

The power of a t-uniform hypergraph blows each vertex into an s-set and
pads each edge with fresh vertices up to uniformity m (no padding when
m = s*t). The central question handled here: does the cyclic index of the
power equal s times the cyclic index of the base?
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    DimensionMismatchError,
    DisconnectedError,
    InternalConsistencyError,
    ModulusMismatchError,
    ParameterError,
)
from .hypergraph import Hypergraph, build_hypergraph, incidence_matrix, is_connected
from .modular import ModMatrix, ModVector, solve_linear_mod
from .symmetry import Coloring, cyclic_index, verify_coloring


@dataclass(frozen=True)
class PowerLayout:
    """Block structure of a power hypergraph.

    `vertex_blocks[v-1]` is the s-set replacing base vertex v (the base
    vertex corresponds to its first member); `edge_blocks[j]` is the
    (m - t*s)-set padding the j-th base edge, empty when m = t*s.
    """

    base_uniformity: int
    blowup: int
    uniformity: int
    vertex_blocks: tuple[tuple[int, ...], ...]
    edge_blocks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConjectureReport:
    """Both sides of the product law for one base hypergraph and one s.

    `equality` records whether the power's cyclic index equals
    s * c(base); `characterization_solvable` records solvability of
    B x = (t / c(base)) * 1 over Z_{st}, which is equivalent by theory
    and is asserted to agree.
    """

    base_cyclic_index: int
    power_cyclic_index: int
    product: int
    equality: bool
    characterization_solvable: bool
    guaranteed_symmetry: int


def generalized_power(
    graph: Hypergraph, uniformity: int, blowup: int
) -> tuple[Hypergraph, PowerLayout]:
    """Blow each vertex into a `blowup`-set and pad edges to `uniformity`.

    Blocks are laid out base-vertex blocks first (contiguous, in base
    vertex order), then edge blocks in canonical edge order, so the
    construction is deterministic and reproducible.
    """
    t = graph.uniformity
    s = blowup
    m = uniformity
    if s < 1:
        raise ParameterError(f"blowup must be >= 1, got {s}")
    if m < s * t:
        raise ParameterError(f"uniformity {m} is below blowup * base uniformity {s*t}")
    n, k = graph.vertex_count, graph.edge_count
    pad = m - s * t
    vertex_blocks = tuple(
        tuple(range((v - 1) * s + 1, v * s + 1)) for v in range(1, n + 1)
    )
    base = n * s
    edge_blocks = tuple(
        tuple(range(base + j * pad + 1, base + (j + 1) * pad + 1)) for j in range(k)
    )
    edges = []
    for j, edge in enumerate(graph.edges):
        members: list[int] = []
        for v in edge:
            members.extend(vertex_blocks[v - 1])
        members.extend(edge_blocks[j])
        edges.append(sorted(members))
    power = build_hypergraph(m, n * s + k * pad, edges)
    if power.edges != tuple(tuple(e) for e in edges):
        raise InternalConsistencyError("power edges left canonical order")
    layout = PowerLayout(t, s, m, vertex_blocks, edge_blocks)
    if pad == 0 and s > 1:
        # self-check: the single-member all-ones coloring always witnesses
        # order-s symmetry of a pure blow-up
        if not verify_coloring(power, blowup_symmetry_coloring(layout), s):
            raise InternalConsistencyError("blow-up lost its order-s witness")
    return power, layout


def power_cyclic_index_shortcut(
    graph: Hypergraph, uniformity: int, blowup: int
) -> int | None:
    """Cyclic index of the power without computation, when available.

    With uniformity strictly above blowup * t every power edge contains a
    degree-1 padding vertex, which forces the cyclic index to equal the
    uniformity. Returns None at the boundary m = s*t, where the caller
    must compute.
    """
    t = graph.uniformity
    if blowup < 1:
        raise ParameterError(f"blowup must be >= 1, got {blowup}")
    if uniformity < blowup * t:
        raise ParameterError(
            f"uniformity {uniformity} is below blowup * base uniformity {blowup * t}"
        )
    if uniformity > blowup * t:
        return uniformity
    return None


def lift_block_constant(layout: PowerLayout, base: Coloring) -> Coloring:
    """Extend a base coloring to the power, constant on each vertex block.

    Takes colors mod t and reads them mod m = layout.uniformity; padding
    vertices get 0. An edge-sum witness for order l on the base lifts to
    one for order l on the power this way.
    """
    if base.modulus != layout.base_uniformity:
        raise ModulusMismatchError(
            f"base coloring modulus {base.modulus} != base uniformity "
            f"{layout.base_uniformity}"
        )
    if len(base.values) != len(layout.vertex_blocks):
        raise DimensionMismatchError("coloring length != base vertex count")
    return Coloring(layout.uniformity, _spread(layout, base.values, constant=True))


def lift_single_member(layout: PowerLayout, base: Coloring) -> Coloring:
    """Extend a base coloring, placing each value on one block member only.

    Takes colors mod m; the first member of each vertex block carries the
    base value, every other new vertex gets 0. Edge sums of the power then
    equal the base edge sums.
    """
    if base.modulus != layout.uniformity:
        raise ModulusMismatchError(
            f"base coloring modulus {base.modulus} != power uniformity "
            f"{layout.uniformity}"
        )
    if len(base.values) != len(layout.vertex_blocks):
        raise DimensionMismatchError("coloring length != base vertex count")
    return Coloring(layout.uniformity, _spread(layout, base.values, constant=False))


def blowup_symmetry_coloring(layout: PowerLayout) -> Coloring:
    """The all-ones single-member coloring witnessing order-s symmetry."""
    ones = Coloring(layout.uniformity, (1,) * len(layout.vertex_blocks))
    return lift_single_member(layout, ones)


def _spread(layout: PowerLayout, values, constant: bool) -> list[int]:
    total = len(layout.vertex_blocks) * layout.blowup + sum(
        len(b) for b in layout.edge_blocks
    )
    out = [0] * total
    for block, value in zip(layout.vertex_blocks, values):
        if constant:
            for u in block:
                out[u - 1] = value
        else:
            out[block[0] - 1] = value
    return out


def conjecture_check(graph: Hypergraph, blowup: int) -> ConjectureReport:
    """Compare c(power) against s * c(base) at uniformity m = s*t.

    Both cyclic indices are computed from scratch; the report also decides
    the base-side system B x = (t / c(base)) * 1 over Z_m, whose
    solvability is equivalent to equality. Theory-mandated divisibility
    relations are asserted before the report is returned.
    """
    if blowup < 2:
        raise ParameterError(f"blowup must be >= 2, got {blowup}")
    if not is_connected(graph):
        raise DisconnectedError("conjecture check requires a connected hypergraph")
    t = graph.uniformity
    m = blowup * t
    base_c = cyclic_index(graph).cyclic_index
    power, _ = generalized_power(graph, m, blowup)
    power_c = cyclic_index(power).cyclic_index
    product = blowup * base_c
    if t % base_c:
        raise InternalConsistencyError(
            f"cyclic index {base_c} does not divide uniformity {t}"
        )
    incidence = incidence_matrix(graph)
    system = ModMatrix(m, incidence.entries)
    rhs = ModVector(m, [t // base_c] * incidence.rows)
    solvable = solve_linear_mod(system, rhs) is not None
    guaranteed = blowup * base_c // gcd(blowup, base_c)
    report = ConjectureReport(
        base_cyclic_index=base_c,
        power_cyclic_index=power_c,
        product=product,
        equality=power_c == product,
        characterization_solvable=solvable,
        guaranteed_symmetry=guaranteed,
    )
    _assert_report_invariants(report, blowup)
    return report


def _assert_report_invariants(report: ConjectureReport, blowup: int) -> None:
    checks = [
        (report.power_cyclic_index % blowup == 0, "s divides c(power)"),
        (
            report.power_cyclic_index % report.base_cyclic_index == 0,
            "c(base) divides c(power)",
        ),
        (report.product % report.power_cyclic_index == 0, "c(power) divides s*c(base)"),
        (
            report.power_cyclic_index % report.guaranteed_symmetry == 0,
            "lcm(s, c(base)) divides c(power)",
        ),
        (
            report.equality == report.characterization_solvable,
            "equality must match base-system solvability",
        ),
    ]
    for ok, name in checks:
        if not ok:
            raise InternalConsistencyError(f"report invariant failed: {name}")
