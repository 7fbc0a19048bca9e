"""Graph manifolds as JSJ graphs, and exact additivity of volumes.

A graph manifold is recorded combinatorially: pieces with named torus
boundary slots, and edges carrying the gluing matrix in (section, fiber)
coordinates.  When a representation kills one slope on every gluing
torus, its volume is the sum of the closed pieces' volumes; this module
checks the bookkeeping of that statement and evaluates the sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping, Optional, Sequence, Union

from .ehn import volume_set
from .exact import ExactVolume, NumericVolume, VolumeValue, volume_sum
from .seifert import SeifertInvariants, dehn_fill

__all__ = [
    "Piece",
    "Edge",
    "GraphManifoldSpec",
    "FilledSeifert",
    "DirectVolume",
    "SmallImage",
    "PieceAssignment",
    "validate_spec",
    "additivity_sum",
    "RWResult",
    "rw_consistency",
    "MotegiResult",
    "motegi_case",
    "motegi_spec",
    "GraphDocument",
    "load_graph_document",
]

Slope = tuple[int, int]
GluingMatrix = tuple[tuple[int, int], tuple[int, int]]
Endpoint = tuple[str, str]


@dataclass(frozen=True)
class Piece:
    """One JSJ piece: a Seifert piece with invariants, or a labeled
    hyperbolic piece whose volume data is supplied externally."""

    id: str
    kind: str
    slots: tuple[str, ...]
    seifert: Optional[SeifertInvariants] = None
    label: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(self.slots))
        if self.kind not in ("seifert", "hyperbolic"):
            raise ValueError(f"piece {self.id}: unknown kind {self.kind!r}")
        if len(set(self.slots)) != len(self.slots):
            raise ValueError(f"piece {self.id}: duplicate slot names")


@dataclass(frozen=True)
class Edge:
    """A gluing torus between two slots.

    ``gluing`` maps side-a (section, fiber) coordinates to side-b ones
    and must have determinant -1 (orientation-reversing on the torus).
    ``killed_slope`` is a primitive pair in side-a coordinates; a slope
    declared independently on side b must match it through the gluing up
    to sign.
    """

    a: Endpoint
    b: Endpoint
    gluing: GluingMatrix
    killed_slope: Optional[Slope] = None
    killed_slope_b: Optional[Slope] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", (str(self.a[0]), str(self.a[1])))
        object.__setattr__(self, "b", (str(self.b[0]), str(self.b[1])))
        (m00, m01), (m10, m11) = self.gluing
        object.__setattr__(
            self, "gluing", ((int(m00), int(m01)), (int(m10), int(m11)))
        )
        for attr in ("killed_slope", "killed_slope_b"):
            value = getattr(self, attr)
            if value is not None:
                object.__setattr__(self, attr, (int(value[0]), int(value[1])))

    def push_to_b(self, slope: Slope) -> Slope:
        (m00, m01), (m10, m11) = self.gluing
        return (m00 * slope[0] + m01 * slope[1], m10 * slope[0] + m11 * slope[1])


@dataclass(frozen=True)
class GraphManifoldSpec:
    pieces: tuple[Piece, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "edges", tuple(self.edges))

    def piece(self, piece_id: str) -> Piece:
        for piece in self.pieces:
            if piece.id == piece_id:
                return piece
        raise ValueError(f"unknown piece {piece_id!r}")


def _det(m: GluingMatrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _is_primitive(slope: Slope) -> bool:
    return math.gcd(abs(slope[0]), abs(slope[1])) == 1


def validate_spec(spec: GraphManifoldSpec) -> list[str]:
    """All structural problems, as human-readable strings; empty means ok."""
    problems: list[str] = []
    seen_ids = set()
    for piece in spec.pieces:
        if piece.id in seen_ids:
            problems.append(f"duplicate piece id {piece.id!r}")
        seen_ids.add(piece.id)
        if piece.kind == "seifert":
            if piece.seifert is None:
                problems.append(f"piece {piece.id}: seifert piece without invariants")
            elif piece.seifert.boundary_count != len(piece.slots):
                problems.append(
                    f"piece {piece.id}: boundary count "
                    f"{piece.seifert.boundary_count} != {len(piece.slots)} slots"
                )
        else:
            if not piece.label:
                problems.append(f"piece {piece.id}: hyperbolic piece without label")
    used: set[Endpoint] = set()
    for n, edge in enumerate(spec.edges):
        where = f"edge {n}"
        for endpoint in (edge.a, edge.b):
            pid, slot = endpoint
            piece = next((p for p in spec.pieces if p.id == pid), None)
            if piece is None:
                problems.append(f"{where}: unknown piece {pid!r}")
                continue
            if slot not in piece.slots:
                problems.append(f"{where}: piece {pid} has no slot {slot!r}")
            if endpoint in used:
                problems.append(f"{where}: slot {pid}.{slot} used more than once")
            used.add(endpoint)
        if edge.a == edge.b:
            problems.append(f"{where}: glues a slot to itself")
        if _det(edge.gluing) != -1:
            problems.append(
                f"{where}: gluing determinant is {_det(edge.gluing)}, expected -1"
            )
        for attr in ("killed_slope", "killed_slope_b"):
            slope = getattr(edge, attr)
            if slope is not None and not _is_primitive(slope):
                problems.append(f"{where}: {attr} {slope} is not primitive")
        if edge.killed_slope is not None and edge.killed_slope_b is not None:
            pushed = edge.push_to_b(edge.killed_slope)
            ks_b = edge.killed_slope_b
            if pushed != ks_b and pushed != (-ks_b[0], -ks_b[1]):
                problems.append(
                    f"{where}: killed slope {edge.killed_slope} maps to {pushed}, "
                    f"but side b declares {ks_b}"
                )
    return problems


@dataclass(frozen=True)
class FilledSeifert:
    """The piece stays Seifert after killing the boundary slopes; its
    contribution is a chosen coefficient from the closed piece's spectrum."""

    piece_id: str
    fillings: tuple[tuple[str, Slope], ...]
    coeff: Fraction

    def __post_init__(self) -> None:
        if isinstance(self.fillings, Mapping):
            items = self.fillings.items()
        else:
            items = self.fillings
        object.__setattr__(
            self,
            "fillings",
            tuple(sorted((str(slot), (int(a), int(b))) for slot, (a, b) in items)),
        )
        object.__setattr__(self, "coeff", Fraction(self.coeff))


@dataclass(frozen=True)
class DirectVolume:
    """Externally supplied contribution (e.g. a hyperbolic piece)."""

    piece_id: str
    volume: VolumeValue


@dataclass(frozen=True)
class SmallImage:
    """Restriction has finite or infinite cyclic image, so it contributes 0."""

    piece_id: str


PieceAssignment = Union[FilledSeifert, DirectVolume, SmallImage]


def _normalize_slope(slope: Slope) -> Slope:
    """Flip sign so the section coordinate is positive (slopes are +/-)."""
    c_s, c_h = slope
    if c_s < 0 or (c_s == 0 and c_h < 0):
        return (-c_s, -c_h)
    return (c_s, c_h)


def _killed_slope_at(spec: GraphManifoldSpec, piece_id: str, slot: str) -> Slope:
    """The declared killed slope in the (section, fiber) basis of the
    given slot's side."""
    for edge in spec.edges:
        if edge.a == (piece_id, slot):
            if edge.killed_slope is None:
                raise ValueError(
                    f"edge at {piece_id}.{slot} declares no killed slope"
                )
            return edge.killed_slope
        if edge.b == (piece_id, slot):
            if edge.killed_slope_b is not None:
                return edge.killed_slope_b
            if edge.killed_slope is not None:
                return edge.push_to_b(edge.killed_slope)
            raise ValueError(f"edge at {piece_id}.{slot} declares no killed slope")
    raise ValueError(f"slot {piece_id}.{slot} is not glued by any edge")


def additivity_sum(
    spec: GraphManifoldSpec, assignments: Sequence[PieceAssignment]
) -> VolumeValue:
    """Sum of per-piece contributions for a representation that kills the
    declared slope on every gluing torus.

    Every piece must be assigned exactly once.  A ``FilledSeifert``
    assignment must fill exactly the killed slopes of its incident edges
    (up to sign), and its coefficient must lie in the volume spectrum of
    the filled closed piece.
    """
    problems = validate_spec(spec)
    if problems:
        raise ValueError("invalid spec: " + "; ".join(problems))
    glued = {endpoint for edge in spec.edges for endpoint in (edge.a, edge.b)}
    for piece in spec.pieces:
        for slot in piece.slots:
            if (piece.id, slot) not in glued:
                raise ValueError(
                    f"slot {piece.id}.{slot} is unglued; additivity needs a closed manifold"
                )
    assigned = [a.piece_id for a in assignments]
    expected = sorted(p.id for p in spec.pieces)
    if sorted(assigned) != expected:
        raise ValueError(
            f"assignments cover {sorted(assigned)}, expected exactly {expected}"
        )
    contributions: list[VolumeValue] = []
    for assignment in assignments:
        piece = spec.piece(assignment.piece_id)
        if isinstance(assignment, SmallImage):
            contributions.append(ExactVolume(Fraction(0)))
        elif isinstance(assignment, DirectVolume):
            contributions.append(assignment.volume)
        elif isinstance(assignment, FilledSeifert):
            if piece.kind != "seifert" or piece.seifert is None:
                raise ValueError(f"piece {piece.id} is not a Seifert piece")
            filled_slots = dict(assignment.fillings)
            if sorted(filled_slots) != sorted(piece.slots):
                raise ValueError(
                    f"piece {piece.id}: fillings must cover slots {sorted(piece.slots)}"
                )
            for slot in piece.slots:
                killed = _normalize_slope(_killed_slope_at(spec, piece.id, slot))
                filling = _normalize_slope(filled_slots[slot])
                if filling != killed:
                    raise ValueError(
                        f"piece {piece.id}.{slot}: filling {filled_slots[slot]} "
                        f"does not match the killed slope {killed}"
                    )
            inv = piece.seifert
            # slopes are unoriented; fill with the positive representative
            closed = dehn_fill(
                inv.genus,
                inv.boundary_count,
                [_normalize_slope(filled_slots[slot]) for slot in piece.slots],
                existing_pairs=inv.pairs,
            )
            spectrum = volume_set(closed)
            if assignment.coeff not in spectrum:
                raise ValueError(
                    f"piece {piece.id}: coefficient {assignment.coeff} is not in "
                    f"the spectrum of the filled piece {closed}"
                )
            contributions.append(ExactVolume(assignment.coeff))
        else:
            raise TypeError(f"unknown assignment {assignment!r}")
    return volume_sum(contributions)


@dataclass(frozen=True)
class RWResult:
    """Outcome of the edge-ratio consistency check."""

    consistent: bool
    witness_cycle: Optional[tuple[tuple[Hashable, Hashable, Fraction], ...]] = None
    product: Optional[Fraction] = None


def rw_consistency(
    vertices: Sequence[Hashable],
    edges: Sequence[tuple[Hashable, Hashable, Fraction]],
) -> RWResult:
    """Decide whether positive edge ratios extend to a vertex potential.

    Each directed edge (u, v, ratio) implicitly carries the reverse edge
    with the inverse ratio.  Ratios are multiplicative, so consistency
    means every cycle multiplies to exactly 1; the check builds a
    spanning forest of potentials and tests the remaining edges.  On
    failure the fundamental cycle of the offending edge is returned with
    its product, which is then necessarily != 1.
    """
    vertex_list = list(vertices)
    vertex_set = set(vertex_list)
    checked: list[tuple[Hashable, Hashable, Fraction]] = []
    for u, v, ratio in edges:
        ratio = Fraction(ratio)
        if u not in vertex_set or v not in vertex_set:
            raise ValueError(f"edge ({u!r}, {v!r}) uses unknown vertices")
        if ratio <= 0:
            raise ValueError(f"edge ratio must be positive, got {ratio}")
        checked.append((u, v, ratio))

    adjacency: dict[Hashable, list[tuple[Hashable, Fraction]]] = {
        v: [] for v in vertex_list
    }
    for u, v, ratio in checked:
        if u != v:
            adjacency[u].append((v, ratio))
            adjacency[v].append((u, 1 / ratio))

    potential: dict[Hashable, Fraction] = {}
    # parent[v] = (parent vertex, ratio of the tree step parent -> v)
    parent: dict[Hashable, Optional[tuple[Hashable, Fraction]]] = {}
    for root in vertex_list:
        if root in potential:
            continue
        potential[root] = Fraction(1)
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            for v, ratio in adjacency[u]:
                if v in potential:
                    continue
                potential[v] = potential[u] * ratio
                parent[v] = (u, ratio)
                stack.append(v)

    for u, v, ratio in checked:
        if potential[u] * ratio == potential[v]:
            continue
        cycle = [(u, v, ratio)] + _tree_path(parent, v, u)
        product = Fraction(1)
        for _, _, step in cycle:
            product *= step
        return RWResult(consistent=False, witness_cycle=tuple(cycle), product=product)
    return RWResult(consistent=True)


def _tree_path(
    parent: Mapping[Hashable, Optional[tuple[Hashable, Fraction]]],
    start: Hashable,
    end: Hashable,
) -> list[tuple[Hashable, Hashable, Fraction]]:
    """Traversal steps start -> end inside the spanning forest."""

    def path_to_root(x):
        out = [x]
        while parent[x] is not None:
            x = parent[x][0]
            out.append(x)
        return out

    up_start = path_to_root(start)
    up_end = path_to_root(end)
    common = None
    in_start = {v: i for i, v in enumerate(up_start)}
    for v in up_end:
        if v in in_start:
            common = v
            break
    if common is None:
        raise ValueError(f"{start!r} and {end!r} lie in different components")
    steps: list[tuple[Hashable, Hashable, Fraction]] = []
    x = start
    while x != common:
        p, ratio = parent[x]
        steps.append((x, p, 1 / ratio))
        x = p
    descend = []
    x = end
    while x != common:
        p, ratio = parent[x]
        descend.append((p, x, ratio))
        x = p
    steps.extend(reversed(descend))
    return steps


@dataclass(frozen=True)
class MotegiResult:
    h1_order: int
    nontrivial: bool
    sv_coeff: Fraction


def _torus_knot_pairs(p: int, q: int) -> tuple[Slope, Slope]:
    """Seifert data of the (p, q) torus-knot exterior: two exceptional
    fibers whose coefficients solve q*b1 + p*b2 = 1."""
    b1 = pow(q, -1, p) if p > 1 else 0
    b2 = (1 - q * b1) // p
    assert q * b1 + p * b2 == 1
    return ((p, b1), (q, b2))


def _validate_motegi_params(
    p1: int, q1: int, p2: int, q2: int, require_coprime: bool
) -> None:
    for name, value in (("p1", p1), ("q1", q1), ("p2", p2), ("q2", q2)):
        if value < 2:
            raise ValueError(f"{name} must be >= 2, got {value}")
    if not require_coprime:
        return
    if math.gcd(p1, q1) != 1:
        raise ValueError(f"gcd(p1, q1) must be 1, got gcd({p1}, {q1})")
    if math.gcd(p2, q2) != 1:
        raise ValueError(f"gcd(p2, q2) must be 1, got gcd({p2}, {q2})")


def motegi_case(p1: int, q1: int, p2: int, q2: int) -> MotegiResult:
    """Two torus-knot exteriors glued exchanging meridian and fiber.

    The first homology is cyclic of order p1*q1*p2*q2 - 1; the result is
    a nontrivial graph manifold exactly when that order exceeds 15, and
    its volume coefficient is always 0.  The order formula needs no
    coprimality, so only the >= 2 bound is enforced here.
    """
    _validate_motegi_params(p1, q1, p2, q2, require_coprime=False)
    order = p1 * q1 * p2 * q2 - 1
    return MotegiResult(h1_order=order, nontrivial=order > 15, sv_coeff=Fraction(0))


def motegi_spec(p1: int, q1: int, p2: int, q2: int) -> GraphManifoldSpec:
    """The JSJ graph of the glued torus-knot exteriors: the gluing swaps
    meridian and fiber, i.e. the matrix [[0, 1], [1, 0]]."""
    _validate_motegi_params(p1, q1, p2, q2, require_coprime=True)
    pieces = []
    for name, (p, q) in (("E1", (p1, q1)), ("E2", (p2, q2))):
        pieces.append(
            Piece(
                id=name,
                kind="seifert",
                slots=("T",),
                seifert=SeifertInvariants(
                    genus=0, pairs=_torus_knot_pairs(p, q), boundary_count=1
                ),
            )
        )
    edge = Edge(a=("E1", "T"), b=("E2", "T"), gluing=((0, 1), (1, 0)))
    return GraphManifoldSpec(pieces=tuple(pieces), edges=(edge,))


@dataclass(frozen=True)
class GraphDocument:
    """A graph spec plus one or more named assignment cases."""

    spec: GraphManifoldSpec
    cases: tuple[tuple[str, GraphManifoldSpec, tuple[PieceAssignment, ...]], ...]


def _volume_from_json(entry: Mapping) -> VolumeValue:
    if "exact" in entry:
        return ExactVolume(Fraction(str(entry["exact"])))
    if "numeric" in entry:
        return NumericVolume(float(entry["numeric"]))
    raise ValueError(f"direct assignment {entry!r} needs 'exact' or 'numeric'")


def _assignment_from_json(entry: Mapping) -> PieceAssignment:
    piece_id = str(entry["piece"])
    kind = entry.get("assign")
    if kind == "small_image":
        return SmallImage(piece_id)
    if kind == "direct":
        return DirectVolume(piece_id, _volume_from_json(entry))
    if kind == "filled":
        fillings = {
            str(slot): (int(pair[0]), int(pair[1]))
            for slot, pair in entry["fillings"].items()
        }
        return FilledSeifert(piece_id, tuple(fillings.items()), Fraction(str(entry["coeff"])))
    raise ValueError(f"assignment {entry!r} needs assign: small_image|direct|filled")


def load_graph_document(doc: Mapping) -> GraphDocument:
    """Parse the JSON graph-manifold format (see the README for the schema)."""
    pieces = []
    for entry in doc["pieces"]:
        kind = entry["kind"]
        seifert = None
        if kind == "seifert":
            seifert = SeifertInvariants(
                genus=int(entry["genus"]),
                pairs=tuple((int(a), int(b)) for a, b in entry.get("pairs", [])),
                boundary_count=len(entry["slots"]),
            )
        pieces.append(
            Piece(
                id=str(entry["id"]),
                kind=str(kind),
                slots=tuple(str(s) for s in entry["slots"]),
                seifert=seifert,
                label=entry.get("label"),
            )
        )
    edges = []
    for entry in doc.get("edges", []):
        killed = entry.get("killed_slope")
        killed_b = entry.get("killed_slope_b")
        edges.append(
            Edge(
                a=(str(entry["a"][0]), str(entry["a"][1])),
                b=(str(entry["b"][0]), str(entry["b"][1])),
                gluing=tuple(tuple(int(x) for x in row) for row in entry["gluing"]),
                killed_slope=tuple(int(x) for x in killed) if killed else None,
                killed_slope_b=tuple(int(x) for x in killed_b) if killed_b else None,
            )
        )
    spec = GraphManifoldSpec(pieces=tuple(pieces), edges=tuple(edges))
    cases = []
    if "cases" in doc:
        for case in doc["cases"]:
            name = str(case["name"])
            case_edges = list(spec.edges)
            slopes = case.get("killed_slopes")
            if slopes is not None:
                if len(slopes) != len(case_edges):
                    raise ValueError(
                        f"case {name}: {len(slopes)} killed slopes for "
                        f"{len(case_edges)} edges"
                    )
                case_edges = [
                    Edge(
                        a=edge.a,
                        b=edge.b,
                        gluing=edge.gluing,
                        killed_slope=tuple(int(x) for x in slope) if slope else None,
                        killed_slope_b=None,
                    )
                    for edge, slope in zip(case_edges, slopes)
                ]
            case_spec = GraphManifoldSpec(pieces=spec.pieces, edges=tuple(case_edges))
            assignments = tuple(
                _assignment_from_json(a) for a in case.get("assignments", [])
            )
            cases.append((name, case_spec, assignments))
    elif "assignments" in doc:
        assignments = tuple(_assignment_from_json(a) for a in doc["assignments"])
        cases.append(("default", spec, assignments))
    else:
        cases.append(("default", spec, ()))
    return GraphDocument(spec=spec, cases=tuple(cases))
