"""Machine checks of the published claims, one per acceptance criterion.

Each check returns ``(passed, details)``; :func:`run_all` collects them into
a :class:`Report`.  Reference lists below are transcribed from the source
text; everything else is computed.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import catalog
from .automorphism import (
    automorphism_group,
    is_face_transitive,
    is_isomorphic,
    is_vertex_transitive,
    vertex_orbits,
)
from .classify import TypeString, canonical_type, classify, face_cycle_type
from .enumerator import (
    DegreeMultiset,
    admissible_types,
    all_arrangements,
    expand_arrangements,
    solutions_beyond,
    solve_vertex_equation,
    violates_restriction,
)
from .errors import DualNotPolyhedral, QuotientNotPolyhedral
from .polymap import dual, surface_info
from .proof_graphs import auxiliary_graph, cycles, transitivity_obstruction
from .tilings import torus_quotient

# ------------------------------------------------------------- reference data

CLAIMED_MULTISETS = (
    "(3^6)", "(3^4,6^1)", "(3^3,4^2)", "(4^4)", "(3^2,6^2)", "(3^2,4^1,12^1)", "(4^2,3^1,6^1)",
    "(6^3)", "(12^2,3^1)", "(8^2,4^1)", "(5^2,10^1)", "(3^1,7^1,42^1)", "(3^1,8^1,24^1)",
    "(3^1,9^1,18^1)", "(3^1,10^1,15^1)", "(4^1,5^1,20^1)", "(4^1,6^1,12^1)",
)

CLAIMED_TYPES = (
    "[3^6]", "[3^4,6^1]", "[3^3,4^2]", "[3^2,4^1,3^1,4^1]", "[4^4]", "[3^1,6^1,3^1,6^1]",
    "[3^2,6^2]", "[3^2,4^1,12^1]", "[3^1,4^1,3^1,12^1]", "[3^1,4^1,6^1,4^1]", "[3^1,4^2,6^1]",
    "[6^3]", "[3^1,12^2]", "[4^1,8^2]", "[5^2,10^1]", "[3^1,7^1,42^1]", "[3^1,8^1,24^1]",
    "[3^1,9^1,18^1]", "[3^1,10^1,15^1]", "[4^1,5^1,20^1]", "[4^1,6^1,12^1]",
)

TORUS_TYPES = (
    "[3^6]", "[4^4]", "[6^3]", "[3^4,6^1]", "[3^3,4^2]", "[3^2,4^1,3^1,4^1]", "[3^1,6^1,3^1,6^1]",
    "[3^1,4^1,6^1,4^1]", "[3^1,12^2]", "[4^1,8^2]", "[4^1,6^1,12^1]",
)

KLEIN_TYPES = tuple(t for t in TORUS_TYPES if t != "[3^4,6^1]")

RESTRICTED = {
    "[3^2,6^2]": "i", "[3^2,4^1,12^1]": "i", "[5^2,10^1]": "i",
    "[3^1,4^2,6^1]": "ii", "[3^1,7^1,42^1]": "ii", "[3^1,8^1,24^1]": "ii", "[3^1,9^1,18^1]": "ii",
    "[3^1,10^1,15^1]": "ii", "[4^1,5^1,20^1]": "ii",
    "[3^1,4^1,3^1,12^1]": "iii",
}

# Lattice bases for the generated quotients.
TRANSITIVE_BASES = {
    "[3^6]": [((3, 0), (0, 3)), ((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((6, 0), (3, 5)),
              ((7, 2), (1, 5)), ((4, -3), (3, 4)), ((10, 0), (0, 12)), ((9, 4), (-5, 11))],
    "[4^4]": [((3, 0), (0, 3)), ((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((6, 0), (3, 5)),
              ((7, 2), (1, 5)), ((4, -3), (3, 4)), ((10, 0), (0, 12)), ((9, 4), (-5, 11))],
    "[6^3]": [((3, 0), (0, 3)), ((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((6, 0), (3, 5)),
              ((7, 2), (1, 5)), ((4, -3), (3, 4)), ((8, 0), (2, 9))],
    "[3^3,4^2]": [((3, 0), (0, 3)), ((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((6, 0), (3, 5)),
                  ((7, 2), (1, 5)), ((4, -3), (3, 4)), ((8, 0), (2, 9))],
}

BOUNDED_BASES = {
    "[3^2,4^1,3^1,4^1]": ([((3, 0), (0, 3)), ((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((3, 1), (-1, 4)),
                           ((6, 0), (3, 5)), ((7, 2), (1, 5)), ((4, -3), (3, 4))], 2),
    "[3^1,6^1,3^1,6^1]": ([((3, 0), (0, 3)), ((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((3, 1), (-1, 4)),
                           ((6, 0), (3, 5)), ((7, 2), (1, 5)), ((4, -3), (3, 4)), ((6, 0), (0, 6))], 3),
}

MIN_VERTICES, MAX_VERTICES = 9, 200


def _ms(text: str) -> DegreeMultiset:
    sizes = []
    for part in text.strip("()").split(","):
        q, m = part.split("^")
        sizes += [int(q)] * int(m)
    return DegreeMultiset.from_sizes(sizes)


def _types(strings) -> set:
    return {TypeString.parse(s) for s in strings}


def _fmt(types) -> str:
    return " ".join(str(t) for t in sorted(types))


# ---------------------------------------------------------------- checks

def check_vertex_equation():
    sols = solve_vertex_equation()
    claimed = {_ms(s) for s in CLAIMED_MULTISETS}
    arr = set(all_arrangements())
    per = set()
    for ms in sols:
        per.update(expand_arrangements(ms))
    exact = all(ms.angle_sum() == 1 for ms in sols)
    beyond = solutions_beyond()
    ok = (len(sols) == 17 and set(sols) == claimed and exact and not beyond
          and len(arr) == 21 and arr == per == _types(CLAIMED_TYPES))
    return ok, f"{len(sols)} multisets (match claim: {set(sols) == claimed}), {len(arr)} arrangements " \
               f"(match list: {arr == _types(CLAIMED_TYPES)}), none with face size in (42,100]: {not beyond}"


def check_admissible():
    torus, klein = set(admissible_types("torus")), set(admissible_types("klein_bottle"))
    diff = torus - klein
    ok = (torus == _types(TORUS_TYPES) and klein == _types(KLEIN_TYPES) and len(torus) == 11
          and len(klein) == 10 and diff == _types(["[3^4,6^1]"]) and klein <= torus)
    return ok, f"torus {len(torus)}, klein bottle {len(klein)}, difference {_fmt(diff)}"


def check_restrictions():
    flagged = {}
    for t in all_arrangements():
        v = violates_restriction(t)
        if v is not None:
            flagged[str(t)] = v.rule
    ok = flagged == RESTRICTED
    bad = {k: v for k, v in flagged.items() if RESTRICTED.get(k) != v}
    missing = set(RESTRICTED) - set(flagged)
    return ok, f"{len(flagged)} flagged; unexpected {bad or 'none'}; missing {missing or 'none'}"


def check_catalog():
    problems = []
    for e in catalog.entries():
        si = surface_info(e.map)
        c = classify(e.map)
        want_orientable = e.surface == "torus"
        if si.euler_characteristic != 0 or si.orientable != want_orientable:
            problems.append(f"{e.name}: {si}")
        if not c.semi_equivelar or c.type != e.expected_type:
            problems.append(f"{e.name}: type {c.type} != {e.expected_type}")
    return not problems, f"18 maps checked; problems: {'; '.join(problems) or 'none'}"


def _obstruction_report(e):
    """Quoted cycles of ``e`` that are components of its auxiliary graph."""
    sel, quoted = e.obstruction
    m = e.map
    g = auxiliary_graph(m, sel)
    try:
        comps = cycles(g)
    except Exception:
        comps = None
    found, missing = [], []
    for cyc in quoted:
        vs = [m.vertex(x) for x in cyc]
        ok = all(g.adjacency[a] >= {b} for a, b in zip(vs, vs[1:] + vs[:1]))
        if comps is not None:
            ok = ok and any(set(c) == set(vs) for c in comps)
        (found if ok else missing).append(len(vs))
    return sel, comps, found, missing


COMPONENT_MAPS = ("T2", "T3", "T4", "T5", "T6", "T7", "T8", "K1", "K3", "K4", "K5", "K6", "K7")


def transitivity_failures() -> dict:
    """Catalog maps whose transitivity verdict or quoted obstruction is not reproduced."""
    out = {}
    for e in catalog.entries():
        vt = is_vertex_transitive(e.map)
        if vt != e.expected_transitive:
            out[e.name] = f"transitive={vt}"
    for name in COMPONENT_MAPS:
        sel, comps, found, missing = _obstruction_report(catalog.get(name))
        lengths = sorted(len(c) for c in comps) if comps is not None else "not 2-regular"
        if missing:
            out[name] = f"{sel} components {lengths}; quoted cycles of length {missing} not found"
    for name in ("K2", "K8", "K10"):
        e = catalog.get(name)
        w = transitivity_obstruction(e.map, e.obstruction[0])
        if w is None or _obstruction_report(e)[3]:
            out[name] = f"no {e.obstruction[0]} witness"
    return out


def check_catalog_transitivity():
    bad = transitivity_failures()
    details = "; ".join(f"{k}: {v}" for k, v in bad.items()) or "all quoted components reproduced"
    return not bad, "vertex-transitive is T1 only; " + details


def _quotients(table):
    for t, bases in table.items():
        for b in bases:
            try:
                m = torus_quotient(t, b)
            except QuotientNotPolyhedral:
                continue
            if MIN_VERTICES <= m.f0 <= MAX_VERTICES:
                yield t, b, m


def check_transitive_quotients():
    counts, bad = {}, []
    for t, b, m in _quotients(TRANSITIVE_BASES):
        counts[t] = counts.get(t, 0) + 1
        if len(vertex_orbits(m)) != 1:
            bad.append(f"{t} {b}")
    ok = not bad and all(counts.get(t, 0) >= 5 for t in TRANSITIVE_BASES)
    return ok, ", ".join(f"{t}: {n} quotients" for t, n in counts.items()) + \
        (f"; not transitive: {bad}" if bad else "; all vertex-transitive")


def check_bounded_quotients():
    counts, worst, bad = {}, {}, []
    for t, (bases, bound) in BOUNDED_BASES.items():
        for _, b, m in _quotients({t: bases}):
            k = len(vertex_orbits(m))
            counts[t] = counts.get(t, 0) + 1
            worst[t] = max(worst.get(t, 0), k)
            if k > bound:
                bad.append(f"{t} {b}: {k} orbits")
    ok = not bad and all(counts.get(t, 0) >= 5 for t in BOUNDED_BASES)
    return ok, ", ".join(f"{t}: {counts.get(t, 0)} quotients, max {worst.get(t)} orbits" for t in BOUNDED_BASES)


def check_triangular_duals():
    n, bad = 0, []
    for _, b, m in _quotients({"[3^6]": TRANSITIVE_BASES["[3^6]"]}):
        n += 1
        d = dual(m)
        if not is_face_transitive(m):
            bad.append(f"{b}: not face-transitive")
        if classify(d).type != TypeString.parse("[6^3]") or not is_vertex_transitive(d):
            bad.append(f"{b}: dual {classify(d).type}")
    return not bad and n >= 5, f"{n} quotients; " + ("; ".join(bad) or "face-transitive, duals [6^3] and vertex-transitive")


def _group_ok(m, group) -> bool:
    ids = [g for g in group if g.is_identity()]
    if len(ids) != 1:
        return False
    for g in group:
        if g.inverse() not in group or not g.preserves(m):
            return False
        for h in group:
            if g * h not in group:
                return False
    return True


def check_properties(random_sequences: int = 1000, seed: int = 20240501):
    issues = []
    generated = [m for _, _, m in _quotients({t: bs[:3] for t, bs in TRANSITIVE_BASES.items()})]
    generated += [m for _, _, m in _quotients({t: bs[:3] for t, (bs, _) in BOUNDED_BASES.items()})]
    for e in catalog.entries():
        m = e.map
        group = automorphism_group(m)
        if not _group_ok(m, group):
            issues.append(f"{e.name}: group axioms")
        try:
            d = dual(m)
        except DualNotPolyhedral:
            d = None
        if d is not None:
            if not is_isomorphic(dual(d), m):
                issues.append(f"{e.name}: dual not an involution")
            if len(automorphism_group(d)) != len(group):
                issues.append(f"{e.name}: |Aut(dual)| differs")
    for m in [e.map for e in catalog.entries()] + generated:
        for orb in vertex_orbits(m):
            if len({face_cycle_type(m, v) for v in orb}) != 1 or len({m.degree(v) for v in orb}) != 1:
                issues.append("orbit refinement")
    for name in COMPONENT_MAPS + ("K2", "K8", "K10"):
        e = catalog.get(name)
        g = auxiliary_graph(e.map, e.obstruction[0])
        for a in automorphism_group(e.map):
            if any(a.edge_image(x) not in g.edges for x in g.edges):
                issues.append(f"{name}: selector not invariant")
                break
    rng = random.Random(seed)
    for _ in range(random_sequences):
        s = [rng.randint(3, 13) for _ in range(rng.randint(3, 6))]
        t = canonical_type(s)
        k = rng.randrange(len(s))
        if canonical_type(s[k:] + s[:k]) != t or canonical_type(s[::-1]) != t \
                or TypeString.parse(str(t)) != t:
            issues.append(f"canonical_type {s}")
    return not issues, (f"catalog groups, duals, {len(generated)} generated maps, "
                        f"{random_sequences} random sequences; issues: {'; '.join(sorted(set(issues))) or 'none'}")


CHECKS = (
    ("1", "vertex equation solutions and arrangements", check_vertex_equation),
    ("2", "admissible types on torus and Klein bottle", check_admissible),
    ("3", "parity restrictions", check_restrictions),
    ("4", "catalog maps: surface and type", check_catalog),
    ("5", "catalog transitivity and auxiliary components", check_catalog_transitivity),
    ("6", "vertex-transitive torus quotients", check_transitive_quotients),
    ("7", "orbit bounds on torus quotients", check_bounded_quotients),
    ("8", "triangular quotients and their duals", check_triangular_duals),
    ("9", "property suites", check_properties),
)


@dataclass
class Report:
    sections: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if all(s[1] == "pass" for s in self.sections) else 1

    def render(self) -> str:
        return "\n".join(f"[{status}] {cid}. {title}: {details}" for cid, status, title, details in self.sections)

    def to_json(self) -> str:
        return json.dumps({
            "exit_code": self.exit_code,
            "claims": [{"id": c, "status": s, "title": t, "details": d} for c, s, t, d in self.sections],
        }, indent=2)


def run_check(claim_id: str):
    for cid, title, fn in CHECKS:
        if cid == claim_id:
            return fn()
    raise KeyError(claim_id)


def run_all() -> Report:
    rep = Report()
    for cid, title, fn in CHECKS:
        ok, details = fn()
        rep.sections.append((cid, "pass" if ok else "fail", title, details))
    return rep
