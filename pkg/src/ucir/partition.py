"""Decomposition certificates for independent sets of a categorical product.

Fix graphs G and H and an independent set U of G x H (product vertex (x, y)
encoded as ``x * n_H + y``).  Call a member (x, y) *G-tied* when some other
member (x', y) shares its H-coordinate with x' adjacent to x in G, and
*H-tied* when some (x, y') shares its G-coordinate with y' adjacent to y in H.
No member can be both: two such partners would be adjacent in the product,
contradicting independence.  This yields

- the coarse split of U into ``free_g`` (not G-tied) and ``tied_g``, and
- the refined split into ``tied_h_only``, ``tied_g_only`` and ``free_both``.

Sectionwise neighborhoods lift a product vertex set Z back into the product:
the G-lift of Z contains (x, y) whenever x is a G-neighbor of the section
``{x' : (x', y) in Z}``, and symmetrically for the H-lift.

The counting argument that bounds the product neighborhood splits the G-lift
of ``free_g`` into ``bound_g`` (inside N(U)) and ``spill`` (outside), takes
``bound_h`` as the H-lift of ``tied_g_only`` together with ``spill``, and
chains exact inequalities on the class sizes against the expansion constants
of the factors.  The two ``verify_*`` functions run every step of that
argument on a concrete (G, H, U) instance and report one named result per
step, so a failing property test pinpoints the violated step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, ProductVertexMap, VertexSet
from .ratios import HALF, expansion_from_ratio, local_independence_ratio

__all__ = [
    "ProductPartition",
    "CheckResult",
    "Certificate",
    "mate_partition",
    "section",
    "lifted_neighborhood",
    "refined_partition",
    "product_neighborhood",
    "verify_partition_laws",
    "verify_boundary_chain",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    """An ordered list of named check outcomes; ``ok`` iff nothing failed."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    def named(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class ProductPartition:
    """All pieces of the decomposition of one independent set of G x H."""

    members: VertexSet       # U itself
    free_g: VertexSet        # members with no G-adjacent partner in their column
    tied_g: VertexSet        # the rest of U
    tied_h_only: VertexSet   # free in G but H-tied
    tied_g_only: VertexSet   # G-tied but free in H
    free_both: VertexSet     # tied in neither factor
    lifted_g: VertexSet      # G-lift of free_g
    lifted_h: VertexSet      # H-lift of tied_g
    spill: VertexSet         # lifted_g minus the product neighborhood
    bound_g: VertexSet       # lifted_g inside the product neighborhood
    bound_h: VertexSet       # H-lift of tied_g_only together with spill
    neighborhood: VertexSet  # N(U) in the product graph


def _pmap(g: Graph, h: Graph, z: VertexSet) -> ProductVertexMap:
    pmap = ProductVertexMap(g.n, h.n)
    if z.count != pmap.size:
        raise ValueError(
            f"vertex set over {z.count} vertices does not match the "
            f"{g.n}x{h.n} product on {pmap.size} vertices"
        )
    return pmap


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _rows(pmap: ProductVertexMap, z: VertexSet) -> list[int]:
    # rows[x] = bitmask over V(H) of the section of z at G-vertex x
    rows = [0] * pmap.n_left
    for v in z.members:
        x, y = pmap.decode(v)
        rows[x] |= 1 << y
    return rows

def _cols(pmap: ProductVertexMap, z: VertexSet) -> list[int]:
    # cols[y] = bitmask over V(G) of the section of z at H-vertex y
    cols = [0] * pmap.n_right
    for v in z.members:
        x, y = pmap.decode(v)
        cols[y] |= 1 << x
    return cols


def _from_rows(pmap: ProductVertexMap, rows: list[int]) -> VertexSet:
    members = set()
    for x, mask in enumerate(rows):
        for y in _bits(mask):
            members.add(pmap.encode(x, y))
    return VertexSet(pmap.size, frozenset(members))


def product_neighborhood(g: Graph, h: Graph, z: VertexSet) -> VertexSet:
    """Neighborhood of ``z`` in the product graph, computed factorwise.

    (x, y) is a product neighbor of (x', y') iff x ~ x' in G and y ~ y' in H,
    so each member contributes the rectangle N_G(x') x N_H(y').
    """
    pmap = _pmap(g, h, z)
    gadj = g.adjacency_masks()
    hadj = h.adjacency_masks()
    rows = [0] * g.n
    for v in z.members:
        x, y = pmap.decode(v)
        hrow = hadj[y]
        for x2 in _bits(gadj[x]):
            rows[x2] |= hrow
    return _from_rows(pmap, rows)


def _require_independent(g: Graph, h: Graph, u: VertexSet) -> VertexSet:
    """Validate independence in the product; returns N(U) since it falls out."""
    nbhd = product_neighborhood(g, h, u)
    inside = u.members & nbhd.members
    if inside:
        raise ValueError(
            f"set is not independent in the product (member {min(inside)} has a neighbor in the set)"
        )
    return nbhd


def section(pmap: ProductVertexMap, z: VertexSet, axis: str, index: int) -> VertexSet:
    """Slice a product vertex set at one fixed coordinate.

    ``axis`` names the factor of the fixed coordinate: ``axis="H", index=y``
    returns ``{x : (x, y) in z}`` as a subset of the left factor, and
    ``axis="G", index=x`` returns ``{y : (x, y) in z}`` over the right factor.
    """
    if z.count != pmap.size:
        raise ValueError("vertex set does not match the product map")
    if axis == "H":
        if not 0 <= index < pmap.n_right:
            raise ValueError(f"H-index {index} out of range 0..{pmap.n_right - 1}")
        return VertexSet.from_mask(pmap.n_left, _cols(pmap, z)[index])
    if axis == "G":
        if not 0 <= index < pmap.n_left:
            raise ValueError(f"G-index {index} out of range 0..{pmap.n_left - 1}")
        return VertexSet.from_mask(pmap.n_right, _rows(pmap, z)[index])
    raise ValueError(f"axis must be 'G' or 'H', got {axis!r}")


def lifted_neighborhood(g: Graph, h: Graph, z: VertexSet, axis: str) -> VertexSet:
    """Sectionwise neighborhood of ``z`` in one factor, reassembled in the product.

    ``axis="G"``: (x, y) belongs to the result iff x is a G-neighbor of the
    section of z at H-vertex y.  ``axis="H"`` is the symmetric H-side lift.
    """
    pmap = _pmap(g, h, z)
    if axis == "G":
        gadj = g.adjacency_masks()
        cols = _cols(pmap, z)
        rows = [0] * g.n
        for y, colmask in enumerate(cols):
            nbr = 0
            for x in _bits(colmask):
                nbr |= gadj[x]
            for x2 in _bits(nbr):
                rows[x2] |= 1 << y
        return _from_rows(pmap, rows)
    if axis == "H":
        hadj = h.adjacency_masks()
        zrows = _rows(pmap, z)
        rows = [0] * g.n
        for x, rowmask in enumerate(zrows):
            nbr = 0
            for y in _bits(rowmask):
                nbr |= hadj[y]
            rows[x] = nbr
        return _from_rows(pmap, rows)
    raise ValueError(f"axis must be 'G' or 'H', got {axis!r}")


def _mate_flags(
    g: Graph, h: Graph, pmap: ProductVertexMap, u: VertexSet
) -> tuple[dict[int, bool], dict[int, bool]]:
    gadj = g.adjacency_masks()
    hadj = h.adjacency_masks()
    rows = _rows(pmap, u)
    cols = _cols(pmap, u)
    g_tied: dict[int, bool] = {}
    h_tied: dict[int, bool] = {}
    for v in u.members:
        x, y = pmap.decode(v)
        g_tied[v] = bool(gadj[x] & cols[y])
        h_tied[v] = bool(hadj[y] & rows[x])
    return g_tied, h_tied


def mate_partition(g: Graph, h: Graph, u: VertexSet) -> tuple[VertexSet, VertexSet]:
    """Coarse split of an independent set of G x H.

    Returns ``(free_g, tied_g)``: the members without and with a G-adjacent
    partner sharing their H-coordinate.  ``u`` must be independent in the
    product.
    """
    pmap = _pmap(g, h, u)
    _require_independent(g, h, u)
    g_tied, _ = _mate_flags(g, h, pmap, u)
    free = frozenset(v for v in u.members if not g_tied[v])
    tied = u.members - free
    return VertexSet(pmap.size, free), VertexSet(pmap.size, tied)


def refined_partition(g: Graph, h: Graph, u: VertexSet) -> ProductPartition:
    """Full decomposition of an independent set of G x H.

    ``u`` must be independent; a member tied in both factors would witness an
    edge inside ``u``, so after validation the three refined classes always
    partition ``u`` (this is asserted).
    """
    pmap = _pmap(g, h, u)
    nbhd = _require_independent(g, h, u)
    g_tied, h_tied = _mate_flags(g, h, pmap, u)
    doubly = frozenset(v for v in u.members if g_tied[v] and h_tied[v])
    if doubly:
        raise AssertionError(
            f"member tied in both factors despite independence: {min(doubly)}"
        )
    free_g = VertexSet(pmap.size, frozenset(v for v in u.members if not g_tied[v]))
    tied_g = VertexSet(pmap.size, u.members - free_g.members)
    tied_h_only = VertexSet(
        pmap.size, frozenset(v for v in u.members if h_tied[v] and not g_tied[v])
    )
    tied_g_only = VertexSet(
        pmap.size, frozenset(v for v in u.members if g_tied[v] and not h_tied[v])
    )
    free_both = VertexSet(
        pmap.size, frozenset(v for v in u.members if not g_tied[v] and not h_tied[v])
    )
    lifted_g = lifted_neighborhood(g, h, free_g, "G")
    lifted_h = lifted_neighborhood(g, h, tied_g, "H")
    spill = lifted_g - nbhd
    bound_g = lifted_g & nbhd
    bound_h = lifted_neighborhood(g, h, tied_g_only | spill, "H")
    return ProductPartition(
        members=u,
        free_g=free_g,
        tied_g=tied_g,
        tied_h_only=tied_h_only,
        tied_g_only=tied_g_only,
        free_both=free_both,
        lifted_g=lifted_g,
        lifted_h=lifted_h,
        spill=spill,
        bound_g=bound_g,
        bound_h=bound_h,
        neighborhood=nbhd,
    )


def _sections_independent(
    owner: Graph, sections: list[int]
) -> tuple[bool, str]:
    adj = owner.adjacency_masks()
    for idx, mask in enumerate(sections):
        for v in _bits(mask):
            if adj[v] & mask:
                return False, f"section {idx} contains an edge at vertex {v}"
    return True, ""


def _disjoint_check(name_a: str, a: VertexSet, name_b: str, b: VertexSet) -> CheckResult:
    common = a.members & b.members
    if common:
        return CheckResult(
            f"disjoint({name_a},{name_b})", "fail", f"shared product vertex {min(common)}"
        )
    return CheckResult(f"disjoint({name_a},{name_b})", "pass")


def verify_partition_laws(g: Graph, h: Graph, u: VertexSet) -> Certificate:
    """Certify the section-independence and disjointness laws of the coarse split.

    For independent ``u`` every check passes; a failure indicates an
    implementation bug and names the violating section or vertex.
    """
    pmap = _pmap(g, h, u)
    _require_independent(g, h, u)
    free_g, tied_g = mate_partition(g, h, u)
    lifted_g = lifted_neighborhood(g, h, free_g, "G")
    lifted_h = lifted_neighborhood(g, h, tied_g, "H")

    checks: list[CheckResult] = []
    ok, detail = _sections_independent(g, _cols(pmap, free_g))
    checks.append(CheckResult("free-g-sections-independent-in-G", "pass" if ok else "fail", detail))
    ok, detail = _sections_independent(h, _rows(pmap, tied_g))
    checks.append(CheckResult("tied-g-sections-independent-in-H", "pass" if ok else "fail", detail))
    named = [
        ("free_g", free_g),
        ("tied_g", tied_g),
        ("lifted_g", lifted_g),
        ("lifted_h", lifted_h),
    ]
    for i in range(len(named)):
        for j in range(i + 1, len(named)):
            checks.append(_disjoint_check(named[i][0], named[i][1], named[j][0], named[j][1]))
    return Certificate(tuple(checks))


def verify_boundary_chain(g: Graph, h: Graph, u: VertexSet) -> Certificate:
    """Certify every step of the neighborhood-counting chain on one instance.

    Checks the structural facts (three-way partition, section independence of
    the spill classes, containments and disjointness of the two boundary
    pieces) and the exact counting inequalities

        |bound_g| >= bG * (|tied_h_only| + |free_both|) - |spill|
        |bound_h| >= bH * (|tied_g_only| + |spill|)
        |N(U)|    >= |bound_g| + |bound_h|

    where bG, bH are the factor expansion constants (1 - r)/r.  When either
    factor has local ratio at most 1/2 the conclusion
    ``|N(U)| >= min(bG, bH) * |U|`` is also checked; otherwise that entry is
    reported as skipped.  ``u`` must be nonempty and independent.
    """
    if not u.members:
        raise ValueError("boundary chain needs a nonempty independent set")
    pmap = _pmap(g, h, u)
    parts = refined_partition(g, h, u)

    ratio_g, _ = local_independence_ratio(g)
    ratio_h, _ = local_independence_ratio(h)
    exp_g = expansion_from_ratio(ratio_g)
    exp_h = expansion_from_ratio(ratio_h)

    checks: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append(CheckResult(name, "pass" if passed else "fail", detail if not passed else ""))

    covered = parts.tied_h_only | parts.tied_g_only | parts.free_both
    add(
        "three-way-partition-covers-members",
        covered.members == u.members
        and len(parts.tied_h_only) + len(parts.tied_g_only) + len(parts.free_both) == len(u),
        "classes do not partition the set",
    )
    add(
        "refines-coarse-partition",
        parts.free_g.members == (parts.tied_h_only | parts.free_both).members
        and parts.tied_g.members == parts.tied_g_only.members,
        "coarse and refined classes disagree",
    )
    add(
        "spill-outside-neighborhood",
        parts.spill.isdisjoint(parts.neighborhood),
        "spill vertex inside N(U)",
    )
    add(
        "tied-g-and-spill-disjoint",
        parts.tied_g_only.isdisjoint(parts.spill),
        "spill meets the G-tied class",
    )
    ok, detail = _sections_independent(h, _rows(pmap, parts.tied_g_only | parts.spill))
    add("tied-g-plus-spill-sections-independent-in-H", ok, detail)
    add(
        "bound-h-inside-neighborhood",
        parts.bound_h <= parts.neighborhood,
        "H-side boundary leaves N(U)",
    )
    add(
        "bounds-disjoint",
        parts.bound_g.isdisjoint(parts.bound_h),
        "the two boundary pieces intersect",
    )
    # Empirical containment used in passing by the counting argument.
    lifted_row_tied = lifted_neighborhood(g, h, parts.tied_h_only, "G")
    add(
        "lifted-g-of-tied-h-only-inside-neighborhood",
        lifted_row_tied <= parts.neighborhood,
        "G-lift of the H-tied class leaves N(U)",
    )

    n_bound_g = Fraction(len(parts.bound_g))
    n_bound_h = Fraction(len(parts.bound_h))
    add(
        "bound-g-count",
        n_bound_g >= exp_g * (len(parts.tied_h_only) + len(parts.free_both)) - len(parts.spill),
        f"|bound_g|={n_bound_g} below the expansion estimate",
    )
    add(
        "bound-h-count",
        n_bound_h >= exp_h * (len(parts.tied_g_only) + len(parts.spill)),
        f"|bound_h|={n_bound_h} below the expansion estimate",
    )
    add(
        "neighborhood-additivity",
        len(parts.neighborhood) >= len(parts.bound_g) + len(parts.bound_h),
        "boundary pieces overcount N(U)",
    )
    if ratio_g <= HALF or ratio_h <= HALF:
        add(
            "expansion-conclusion",
            Fraction(len(parts.neighborhood)) >= min(exp_g, exp_h) * len(u),
            f"|N(U)|={len(parts.neighborhood)} below min-expansion bound",
        )
    else:
        checks.append(
            CheckResult("expansion-conclusion", "skipped", "both factors have local ratio above 1/2")
        )
    return Certificate(tuple(checks))
