"""Ribbon codes: marked trees encoding disk-band presentations.

A ribbon code is a tree whose vertices stand for disks and whose edges stand
for bands; each edge carries an ordered list of signed integer markings, one
per ribbon intersection of the band with a disk.  The tuple notation
``([1,-3,2,-3,2],[2,1,3])`` lists each edge as ``[tail, m1, ..., mk, head]``.

Edge identity is orientation-free: ``[i, m1, ..., mk, j]`` denotes the same
edge as ``[j, mk, ..., m1, i]``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional


class Edge(NamedTuple):
    tail: int
    head: int
    marks: tuple[int, ...]

    def reversed(self) -> "Edge":
        return Edge(self.head, self.tail, tuple(reversed(self.marks)))

    def tuple_form(self) -> str:
        inner = ",".join(str(x) for x in (self.tail, *self.marks, self.head))
        return f"[{inner}]"


class CodeError(ValueError):
    """Raised for malformed or invalid ribbon codes."""


@dataclass(frozen=True)
class RibbonCode:
    """A validated ribbon code.

    vertex_count 1 with no edges is the trivial code (a bare disk); it is the
    end state of fully collapsing reductions and has Alexander polynomial 1.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        v = self.vertex_count
        if v < 1:
            raise CodeError("vertex count must be positive")
        if len(self.edges) != v - 1:
            raise CodeError(f"a tree on {v} vertices needs {v - 1} edges")
        seen_pairs = set()
        adj: dict[int, list[int]] = {i: [] for i in range(1, v + 1)}
        for e in self.edges:
            if not (1 <= e.tail <= v and 1 <= e.head <= v):
                raise CodeError(f"edge endpoint out of range in {e.tuple_form()}")
            if e.tail == e.head:
                raise CodeError(f"loop edge at vertex {e.tail}")
            pair = frozenset((e.tail, e.head))
            if pair in seen_pairs:
                raise CodeError(f"duplicate edge between {e.tail} and {e.head}")
            seen_pairs.add(pair)
            adj[e.tail].append(e.head)
            adj[e.head].append(e.tail)
            for m in e.marks:
                if m == 0 or not (1 <= abs(m) <= v):
                    raise CodeError(f"marking {m} out of range in {e.tuple_form()}")
        # Connectivity: v-1 loop-free distinct edges + connected <=> tree.
        if v > 1:
            seen = {1}
            stack = [1]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != v:
                raise CodeError("underlying graph is not connected")

    # -- basic measures ------------------------------------------------------

    def ribbon_number(self) -> int:
        """Total marking count over all edges."""
        return sum(len(e.marks) for e in self.edges)

    def fusion_number(self) -> int:
        """Number of edges (bands)."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((e.tail == v) + (e.head == v) for e in self.edges)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for e in self.edges:
            if e.tail == v:
                out.append(e.head)
            elif e.head == v:
                out.append(e.tail)
        return out

    def tuple_form(self) -> str:
        return "(" + ",".join(e.tuple_form() for e in self.edges) + ")"

    def __str__(self) -> str:
        return self.tuple_form() if self.edges else "(trivial)"


TRIVIAL_CODE = RibbonCode(1, ())

_EDGE_RE = re.compile(r"\[([^\[\]]*)\]")


def parse_code(text: str) -> RibbonCode:
    """Parse tuple notation like "([1,-3,2,-3,2],[2,1,3])"."""
    s = text.replace("−", "-").strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise CodeError(f"expected parenthesized tuple, got {text!r}")
    body = s[1:-1].strip().rstrip(",")
    if not body:
        raise CodeError("a code needs at least one edge; the trivial code has no text form")
    covered = _EDGE_RE.sub("", body).replace(",", "").strip()
    if covered:
        raise CodeError(f"unexpected text {covered!r} in {text!r}")
    edges = []
    vertices = set()
    for m in _EDGE_RE.finditer(body):
        try:
            entries = [int(x) for x in m.group(1).split(",")]
        except ValueError:
            raise CodeError(f"malformed edge {m.group(0)!r}") from None
        if len(entries) < 2:
            raise CodeError(f"edge {m.group(0)!r} needs two endpoints")
        tail, head = entries[0], entries[-1]
        if tail <= 0 or head <= 0:
            raise CodeError(f"endpoints must be positive in {m.group(0)!r}")
        edges.append(Edge(tail, head, tuple(entries[1:-1])))
        vertices.update((tail, head))
    v = max(vertices)
    if vertices != set(range(1, v + 1)):
        raise CodeError("endpoint vertices must be exactly 1..V")
    return RibbonCode(v, tuple(edges))


# -- tree geometry -------------------------------------------------------------

TAIL_SIDE = "tail"
HEAD_SIDE = "head"


def side_of(code: RibbonCode, edge: Edge, label: int) -> str:
    """Which side of ``edge`` the vertex |label| lies on.

    Removing the edge splits the tree in two; returns "tail" or "head" for
    the component holding v_|label|.  An endpoint is on its own side.
    """
    target = abs(label)
    if target == edge.tail:
        return TAIL_SIDE
    if target == edge.head:
        return HEAD_SIDE
    # Walk the head component without crossing back over `edge`.
    seen = {edge.tail, edge.head}
    stack = [edge.head]
    while stack:
        u = stack.pop()
        for e in code.edges:
            if e is edge:
                continue
            for a, b in ((e.tail, e.head), (e.head, e.tail)):
                if a == u and b not in seen:
                    if b == target:
                        return HEAD_SIDE
                    seen.add(b)
                    stack.append(b)
    return TAIL_SIDE


def component_of(code: RibbonCode, removed_vertex: int, start: int) -> frozenset[int]:
    """Vertices of the component of (tree - removed_vertex) containing start."""
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in code.neighbors(u):
            if w != removed_vertex and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


# -- reducibility --------------------------------------------------------------


class ReductionWitness(NamedTuple):
    """Which reducibility rule fires, and where.

    rule 1: edge_index has no markings.
    rule 2: markings at position, position+1 on edge_index cancel.
    rule 3: the marking at position on edge_index is adjacent to its own vertex.
    rule 4: vertex (valence <= 2) appears in no marking.
    """

    rule: int
    edge_index: Optional[int] = None
    position: Optional[int] = None
    vertex: Optional[int] = None


def is_reducible(code: RibbonCode) -> Optional[ReductionWitness]:
    """First reducibility rule violated, or None for irreducible codes."""
    for i, e in enumerate(code.edges):
        if not e.marks:
            return ReductionWitness(1, edge_index=i)
    for i, e in enumerate(code.edges):
        for j in range(len(e.marks) - 1):
            if e.marks[j] == -e.marks[j + 1]:
                return ReductionWitness(2, edge_index=i, position=j)
    for i, e in enumerate(code.edges):
        if abs(e.marks[0]) == e.tail:
            return ReductionWitness(3, edge_index=i, position=0, vertex=e.tail)
        if abs(e.marks[-1]) == e.head:
            return ReductionWitness(3, edge_index=i, position=len(e.marks) - 1, vertex=e.head)
    referenced = {abs(m) for e in code.edges for m in e.marks}
    for v in range(1, code.vertex_count + 1):
        if code.degree(v) <= 2 and v not in referenced:
            return ReductionWitness(4, vertex=v)
    return None


def contract_edge(code: RibbonCode, edge_index: int) -> RibbonCode:
    """Contract an unmarked edge, merging its endpoints.

    The merged vertex keeps the smaller endpoint index, every index above the
    removed one shifts down by one, and markings referencing either endpoint
    follow the merge.
    """
    e = code.edges[edge_index]
    if e.marks:
        raise CodeError("only unmarked edges can be contracted")
    keep, drop = min(e.tail, e.head), max(e.tail, e.head)

    def remap(v: int) -> int:
        if v == drop:
            v = keep
        return v - 1 if v > drop else v

    edges = []
    for i, f in enumerate(code.edges):
        if i == edge_index:
            continue
        marks = tuple((1 if m > 0 else -1) * remap(abs(m)) for m in f.marks)
        edges.append(Edge(remap(f.tail), remap(f.head), marks))
    return RibbonCode(code.vertex_count - 1, tuple(edges))


def _drop_mark(code: RibbonCode, edge_index: int, positions: tuple[int, ...]) -> RibbonCode:
    e = code.edges[edge_index]
    marks = tuple(m for j, m in enumerate(e.marks) if j not in positions)
    edges = list(code.edges)
    edges[edge_index] = Edge(e.tail, e.head, marks)
    return RibbonCode(code.vertex_count, tuple(edges))


def reduce(code: RibbonCode) -> RibbonCode:
    """Apply the rule (1)-(3) rewrites until none fires.

    Rule (1) contracts the unmarked edge, rule (2) deletes the canceling
    pair, rule (3) deletes the self-adjacent marking.  All three preserve the
    knot's Alexander polynomial.  Rule (4) is only ever *reported* by
    is_reducible; there is no rewrite for it here.
    """
    while True:
        w = is_reducible(code)
        if w is None or w.rule == 4:
            return code
        if w.rule == 1:
            code = contract_edge(code, w.edge_index)
        elif w.rule == 2:
            code = _drop_mark(code, w.edge_index, (w.position, w.position + 1))
        else:
            code = _drop_mark(code, w.edge_index, (w.position,))


# -- decomposability -----------------------------------------------------------


class DecompositionWitness(NamedTuple):
    vertex: int
    part_a: frozenset[int]
    part_b: frozenset[int]


def _branch_constraints(code: RibbonCode, v: int):
    """Branches of (tree - v) plus the pairs forced into the same part.

    Each branch is keyed by its root (the neighbor of v it contains).  A
    marking on an edge incident to v lives in the branch of the far endpoint;
    a marking elsewhere lives in the branch containing its whole edge.
    """
    branches = {}
    root_of = {}
    for w in code.neighbors(v):
        comp = component_of(code, v, w)
        branches[w] = comp
        for u in comp:
            root_of[u] = w
    merges = []
    for e in code.edges:
        if e.tail == v:
            host = root_of[e.head]
        elif e.head == v:
            host = root_of[e.tail]
        else:
            host = root_of[e.tail]
        for m in e.marks:
            if abs(m) == v:
                continue
            merges.append((host, root_of[abs(m)]))
    return branches, merges


def is_decomposable(code: RibbonCode) -> Optional[DecompositionWitness]:
    """Search every vertex of degree >= 2 for a splitting bipartition.

    The code decomposes at v when the branches of (tree - v) split into two
    nonempty parts so that every marking sits in the same part as the vertex
    it references.  Markings labeled +-v are unconstrained.
    """
    for v in range(1, code.vertex_count + 1):
        if code.degree(v) < 2:
            continue
        branches, merges = _branch_constraints(code, v)
        parent = {r: r for r in branches}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in merges:
            parent[find(a)] = find(b)
        groups: dict[int, set[int]] = {}
        for r in branches:
            groups.setdefault(find(r), set()).add(r)
        if len(groups) >= 2:
            roots = sorted(groups)
            part_a = frozenset().union(*(branches[r] for r in groups[roots[0]]))
            part_b = frozenset().union(
                *(branches[r] for g in roots[1:] for r in groups[g])
            )
            return DecompositionWitness(v, part_a, part_b)
    return None


def decompose(code: RibbonCode, witness: DecompositionWitness) -> tuple[RibbonCode, RibbonCode]:
    """Split the code at the witness vertex into its two summands.

    The split vertex appears in both halves; each half keeps the edges whose
    far side lies in its part, with vertices renumbered ascending.  The knot
    polynomial of the input is the product of the summands'.
    """
    v = witness.vertex

    def build(part: frozenset[int]) -> RibbonCode:
        verts = sorted(part | {v})
        index = {u: i + 1 for i, u in enumerate(verts)}
        edges = []
        for e in code.edges:
            far = e.head if e.tail == v else e.tail if e.head == v else None
            if far is not None:
                if far not in part:
                    continue
            elif e.tail not in part:
                continue
            marks = []
            for m in e.marks:
                u = abs(m)
                if u != v and u not in part:
                    raise CodeError("witness does not split this code")
                marks.append((1 if m > 0 else -1) * index[u])
            edges.append(Edge(index[e.tail], index[e.head], tuple(marks)))
        return RibbonCode(len(verts), tuple(edges))

    return build(witness.part_a), build(witness.part_b)


def join_at_vertex(a: RibbonCode, b: RibbonCode) -> RibbonCode:
    """Boundary connected sum: identify vertex 1 of b with vertex 1 of a.

    Inverse of decompose up to relabeling; the result's knot polynomial is
    the product of the summands' and its ribbon number is the sum.
    """
    offset = a.vertex_count - 1

    def remap(u: int) -> int:
        return 1 if u == 1 else u + offset

    edges = list(a.edges)
    for e in b.edges:
        marks = tuple((1 if m > 0 else -1) * remap(abs(m)) for m in e.marks)
        edges.append(Edge(remap(e.tail), remap(e.head), marks))
    return RibbonCode(a.vertex_count + b.vertex_count - 1, tuple(edges))


# -- moves ----------------------------------------------------------------------


def negate(code: RibbonCode) -> RibbonCode:
    """Flip the sign of every marking; preserves the knot polynomial."""
    edges = tuple(
        Edge(e.tail, e.head, tuple(-m for m in e.marks)) for e in code.edges
    )
    return RibbonCode(code.vertex_count, edges)


def leaf_isotopy(code: RibbonCode, leaf: int) -> Optional[RibbonCode]:
    """Slide the marking nearest a leaf next to the unique marking naming it.

    Requires: leaf has degree one; the marking mu nearest the leaf names some
    vertex j; vertex j has an adjacent marking mu' naming the leaf; and mu'
    is the only marking naming the leaf anywhere in the code.  Returns the
    rewritten code (mu reinserted just beyond mu', so mu' separates v_j from
    mu), or None when a condition fails.  The result may well be reducible.
    """
    if code.degree(leaf) != 1:
        return None
    (ei,) = [i for i, e in enumerate(code.edges) if leaf in (e.tail, e.head)]
    e = code.edges[ei]
    if not e.marks:
        return None
    from_tail = e.tail == leaf
    mu = e.marks[0] if from_tail else e.marks[-1]
    j = abs(mu)
    if j == leaf:
        return None
    # mu' must be the unique marking naming the leaf, adjacent to v_j.
    total = sum(1 for f in code.edges for m in f.marks if abs(m) == leaf)
    if total != 1:
        return None
    target = None
    for fi, f in enumerate(code.edges):
        if f.marks and f.tail == j and abs(f.marks[0]) == leaf:
            target = (fi, "tail")
        elif f.marks and f.head == j and abs(f.marks[-1]) == leaf:
            target = (fi, "head")
    if target is None:
        return None

    edges = list(code.edges)
    stripped = e.marks[1:] if from_tail else e.marks[:-1]
    edges[ei] = Edge(e.tail, e.head, stripped)
    fi, end = target
    f = edges[fi]
    if end == "tail":
        marks = (f.marks[0], mu) + f.marks[1:]
    else:
        marks = f.marks[:-1] + (mu, f.marks[-1])
    edges[fi] = Edge(f.tail, f.head, marks)
    return RibbonCode(code.vertex_count, tuple(edges))


# -- canonical forms -------------------------------------------------------------

CanonicalCode = tuple


@lru_cache(maxsize=None)
def _perms(v: int) -> tuple[tuple[int, ...], ...]:
    # perm[i] is the new index of vertex i+1
    return tuple(itertools.permutations(range(1, v + 1)))


def _serialize(code: RibbonCode, perm: tuple[int, ...]) -> tuple:
    edges = []
    for e in code.edges:
        t, h = perm[e.tail - 1], perm[e.head - 1]
        marks = tuple((1 if m > 0 else -1) * perm[abs(m) - 1] for m in e.marks)
        fwd = (t, h, marks)
        rev = (h, t, tuple(reversed(marks)))
        edges.append(min(fwd, rev))
    return tuple(sorted(edges))


def canonical_form(code: RibbonCode, modulo_negation: bool = False) -> CanonicalCode:
    """Minimal serialization over all vertex relabelings and edge reversals.

    Two codes are isomorphic iff their canonical forms agree; with
    modulo_negation set, globally negated codes also collapse together.
    Brute force over V! relabelings; V stays tiny everywhere we enumerate.
    """
    best = None
    for perm in _perms(code.vertex_count):
        s = _serialize(code, perm)
        if best is None or s < best:
            best = s
        if modulo_negation:
            neg = tuple(
                sorted(
                    min(
                        (t, h, tuple(-m for m in marks)),
                        (h, t, tuple(-m for m in reversed(marks))),
                    )
                    for t, h, marks in s
                )
            )
            if neg < best:
                best = neg
    return (code.vertex_count, best)


def from_canonical(canonical: CanonicalCode) -> RibbonCode:
    """Rebuild a code from a canonical serialization."""
    v, edges = canonical
    return RibbonCode(v, tuple(Edge(t, h, marks) for t, h, marks in edges))


def relabel(code: RibbonCode, perm: dict[int, int]) -> RibbonCode:
    """Apply a vertex relabeling (a bijection on 1..V) to the code."""
    edges = tuple(
        Edge(
            perm[e.tail],
            perm[e.head],
            tuple((1 if m > 0 else -1) * perm[abs(m)] for m in e.marks),
        )
        for e in code.edges
    )
    return RibbonCode(code.vertex_count, edges)
