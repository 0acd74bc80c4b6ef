"""S4 acting on the vertices and edges of the complete graph K4."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

VERTICES = (1, 2, 3, 4)
EDGES = tuple(frozenset(e) for e in combinations(VERTICES, 2))

Perm = tuple  # images of 1..4, so g[i - 1] = g(i)


def apply(g: Perm, v: int) -> int:
    return g[v - 1]


def apply_edge(g: Perm, e) -> frozenset:
    return frozenset(apply(g, v) for v in e)


def compose(g: Perm, h: Perm) -> Perm:
    """g after h."""
    return tuple(g[h[i] - 1] for i in range(4))


def inverse(g: Perm) -> Perm:
    out = [0] * 4
    for i, gi in enumerate(g):
        out[gi - 1] = i + 1
    return tuple(out)


IDENTITY = (1, 2, 3, 4)
S4 = frozenset(permutations(VERTICES))


def closure(gens) -> frozenset:
    group = {IDENTITY}
    frontier = [IDENTITY]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(group)


def all_subgroups() -> set[frozenset]:
    """Every subgroup of S4 (each is generated by at most two elements)."""
    return {closure((g, h)) for g in S4 for h in S4}


def commutator_subgroup(G) -> frozenset:
    comms = {compose(compose(g, h), compose(inverse(g), inverse(h))) for g in G for h in G}
    return closure(comms)


def is_normal(H, G=S4) -> bool:
    return all(frozenset(compose(compose(g, h), inverse(g)) for h in H) == H for g in G)


def vertex_stabilizer(v: int) -> frozenset:
    return frozenset(g for g in S4 if apply(g, v) == v)


def edge_stabilizer(e) -> frozenset:
    e = frozenset(e)
    return frozenset(g for g in S4 if apply_edge(g, e) == e)


def fixed_vertices(H) -> list[int]:
    return [v for v in VERTICES if all(apply(g, v) == v for g in H)]


def fixed_edges(H) -> list:
    return [e for e in EDGES if all(apply_edge(g, e) == e for g in H)]


def orbits(H) -> list[list[int]]:
    seen, out = set(), []
    for v in VERTICES:
        if v not in seen:
            orb = sorted({apply(g, v) for g in H})
            seen.update(orb)
            out.append(orb)
    return out


@dataclass
class K4Report:
    vertex_stabilizers: dict
    edge_stabilizers: dict
    abelian_quotient_subgroups: list
    commutator_order: int
    subgroup_count: int
    controls: dict
    assertions: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.assertions.values())

    def to_dict(self):
        return {
            "vertex_stabilizers": self.vertex_stabilizers,
            "edge_stabilizers": self.edge_stabilizers,
            "abelian_quotient_subgroups": self.abelian_quotient_subgroups,
            "commutator_order": self.commutator_order,
            "subgroup_count": self.subgroup_count,
            "controls": self.controls,
            "assertions": self.assertions,
            "ok": self.ok,
        }


def _edge_name(e) -> str:
    a, b = sorted(e)
    return f"{a}{b}"


def k4_s4_report() -> K4Report:
    """Exhaustive check that no subgroup with abelian quotient fixes a vertex or edge."""
    vstab = {}
    for v in VERTICES:
        H = vertex_stabilizer(v)
        conj = {frozenset(compose(compose(g, h), inverse(g)) for h in H) for g in S4}
        vstab[str(v)] = {"order": len(H), "normal": is_normal(H), "conjugates": len(conj)}
    estab = {}
    for e in EDGES:
        H = edge_stabilizer(e)
        estab[_edge_name(e)] = {"order": len(H), "normal": is_normal(H)}
    comm = commutator_subgroup(S4)
    subs = all_subgroups()
    above = sorted((H for H in subs if comm <= H), key=len)
    quot = [
        {
            "order": len(H),
            "fixed_vertices": fixed_vertices(H),
            "fixed_edges": [_edge_name(e) for e in fixed_edges(H)],
        }
        for H in above
    ]
    trivial = frozenset({IDENTITY})
    controls = {
        "commutator_orbits_on_vertices": orbits(comm),
        "identity_fixes_all_vertices": fixed_vertices(trivial) == list(VERTICES),
        "identity_fixes_all_edges": len(fixed_edges(trivial)) == len(EDGES),
    }
    assertions = {
        "vertex_stabilizers_order_6_non_normal": all(
            s["order"] == 6 and not s["normal"] for s in vstab.values()
        ),
        "edge_stabilizers_order_4_non_normal": all(
            s["order"] == 4 and not s["normal"] for s in estab.values()
        ),
        "only_A4_and_S4_have_abelian_quotient": sorted(len(H) for H in above) == [12, 24]
        and len(comm) == 12,
        "no_fixed_vertex_or_edge": all(not q["fixed_vertices"] and not q["fixed_edges"] for q in quot),
    }
    return K4Report(vstab, estab, quot, len(comm), len(subs), controls, assertions)
