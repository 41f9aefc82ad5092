"""Verification suites for the reduction equivalences and the colouring routes.

A suite is a list of independent cases. Each case returns a :class:`CaseResult`;
failing cases have their inputs written to disk together with a replay
command. Cases are plain ``functools.partial`` objects over module-level
functions so they can be shipped to worker processes.
"""

from __future__ import annotations

import functools
import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

from . import dimacs
from .chromatic import chi_bruteforce, chi_exact, clique_cover_number
from .cliques import clique_number
from .cotree import chi_cotree, random_cograph, recognize_cograph
from .covers import enumerate_clique_covers, minimum_cover_size
from .criticality import CONTRACT, EDGE, VERTEX, _scan
from .graph import Graph, complement, grotzsch
from .hfree import GADGET_FAMILY, PATTERNS, TARGET_FAMILY, contains_induced, family, is_h_free, triangle
from .reductions import (
    Formula,
    base_formula,
    build_clique_proof_instance,
    build_edge_gadget,
    build_grotzsch_instance,
    build_vertex_gadget,
    oracle_1in3,
    parse_formula,
    permute_clause,
    random_formula,
    to_target_instance,
)
from . import p1p3

SCHEMA = 1
SUITES = ("prop1", "thm3", "thm4", "claim2", "claim3", "main-vertex", "main-edge", "gadgets", "poly-colorers")


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    artifacts: dict[str, str] = field(default_factory=dict)  # file name -> contents, kept on failure
    seconds: float = 0.0


@dataclass
class VerifyReport:
    suite: str
    run: int
    passed: int
    counterexamples: list[str]
    wall_time: float
    seed: int | None
    params: dict
    failures: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.passed == self.run and not self.failures

    def to_dict(self, deterministic: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "run": self.run,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "failures": self.failures,
        }
        if not deterministic:
            out["wall_time"] = round(self.wall_time, 3)
            out["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
            out["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
        return out


# random inputs ---------------------------------------------------------------


def random_graph(rng: random.Random, n_max: int = 10, n_min: int = 1) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.1, 0.95)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_triangle_free(rng: random.Random, n_max: int = 12, plant: float = 0.25) -> Graph:
    """Random triangle-free graph; with probability ``plant`` it contains a Grötzsch graph.

    Unplanted samples come from the random greedy triangle-free process
    stopped after a random number of insertions.
    """
    if rng.random() < plant and n_max >= 11:
        n = rng.randint(11, n_max)
        base = grotzsch().edge_list()
    else:
        n = rng.randint(1, n_max)
        base = []
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [0] * n
    for u, v in base:
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    budget = rng.randint(0, len(pairs))
    for i, j in pairs[:budget]:
        if not rows[i] & rows[j]:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def formulas_for(n: int, samples: int, seed: int) -> list[tuple[str, Formula]]:
    if n == 3:
        return [("n3-base", base_formula())]
    return [(f"n{n}-seed{s}", random_formula(n, s)) for s in range(seed, seed + samples)]


def fixture_formulas() -> list[tuple[str, Formula]]:
    """Stored non-1-satisfiable instances, smallest first."""
    out = []
    for name in ("unsat_n4.m1in3", "unsat_n6.m1in3"):
        text = resources.files("chromcrit").joinpath("data", name).read_text()
        out.append((name.removesuffix(".m1in3"), parse_formula(text)))
    return out


# case bodies -----------------------------------------------------------------


def _timed(fn: Callable[..., CaseResult]) -> Callable[..., CaseResult]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> CaseResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    return wrapper


@_timed
def case_edge_vs_contraction(name: str, g: Graph) -> CaseResult:
    chi_g = chi_exact(g).chi
    deleted = set(_scan(g, EDGE, chi_g, route="exact"))
    contracted = set(_scan(g, CONTRACT, chi_g, route="exact"))
    ok = deleted == contracted
    detail = {} if ok else {"critical": sorted(map(tuple, deleted)), "contraction_critical": sorted(map(tuple, contracted))}
    return CaseResult(name, ok, detail, {f"{name}.col": dimacs.dumps(g)})


def case_contraction_block(start: int, stop: int, n: int) -> list[CaseResult]:
    """All labelled graphs on ``n`` vertices whose edge bitmask lies in ``[start, stop)``."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(start, stop):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
        out.append(case_edge_vs_contraction(f"n{n}-mask{mask}", g))
    return out


@_timed
def case_clique_instance(name: str, g: Graph, ell: int) -> CaseResult:
    gp = build_clique_proof_instance(g, ell)
    chi_g = chi_exact(g).chi
    chi_gp = chi_exact(gp).chi
    contraction = bool(_scan(gp, CONTRACT, chi_gp, exists=True))
    vertex = bool(_scan(gp, VERTEX, chi_gp, exists=True))
    colourable = chi_g <= ell
    ok = colourable == contraction == vertex and chi_gp == max(chi_g, ell + 1)
    detail = {"chi_g": chi_g, "ell": ell, "chi_instance": chi_gp, "contraction_critical_edge": contraction, "critical_vertex": vertex}
    return CaseResult(name, ok, detail, {f"{name}.col": dimacs.dumps(g, f"ell={ell}")})


@_timed
def case_grotzsch_instance(name: str, g: Graph) -> CaseResult:
    gp = build_grotzsch_instance(g)
    chi_g = chi_exact(g).chi
    chi_gp = chi_exact(gp).chi
    vertex = bool(_scan(gp, VERTEX, chi_gp, exists=True))
    contraction = bool(_scan(gp, CONTRACT, chi_gp, exists=True))
    ok = (chi_g <= 3) == vertex == contraction and triangle(gp) is None and chi_gp == max(chi_g, 4)
    detail = {"n": g.n, "chi_g": chi_g, "chi_instance": chi_gp, "critical_vertex": vertex, "contraction_critical_edge": contraction}
    return CaseResult(name, ok, detail, {f"{name}.col": dimacs.dumps(g)})


@_timed
def case_cover_number(name: str, f: Formula) -> CaseResult:
    sat = oracle_1in3(f) is not None
    sigma, _ = clique_cover_number(build_vertex_gadget(f).graph)
    ok = sigma * 3 >= 10 * f.n and sat == (sigma * 3 == 10 * f.n)
    detail = {"n": f.n, "one_satisfiable": sat, "sigma": sigma, "target": f"10n/3={10 * f.n / 3:g}"}
    return CaseResult(name, ok, detail, {f"{name}.m1in3": f.to_text()})


@_timed
def case_main(name: str, f: Formula, variant: str) -> CaseResult:
    """1-satisfiable iff the complement of the gadget has no critical vertex (or edge)."""
    gg = build_vertex_gadget(f) if variant == VERTEX else build_edge_gadget(f)
    target = to_target_instance(gg)
    cap = max(64, target.n)
    sat = oracle_1in3(f) is not None
    chi_t = chi_exact(target, cap).chi
    op = VERTEX if variant == VERTEX else EDGE
    hits = _scan(target, op, chi_t, exists=True, route="exact", cap=cap)
    ok = sat == (not hits)
    detail = {"n": f.n, "one_satisfiable": sat, "chi_complement": chi_t, f"critical_{op}": [str(k) for k in hits]}
    return CaseResult(name, ok, detail, {f"{name}.m1in3": f.to_text()})


@_timed
def case_symmetry(name: str, f: Formula, clause: int, perm: tuple[int, int, int]) -> CaseResult:
    """Reordering a clause changes neither sigma nor the critical-vertex answer."""
    g = permute_clause(f, clause, perm)
    a, b = case_main(name + "-a", f, VERTEX), case_main(name + "-b", g, VERTEX)
    sa = clique_cover_number(build_vertex_gadget(f).graph)[0]
    sb = clique_cover_number(build_vertex_gadget(g).graph)[0]
    ok = a.ok and b.ok and sa == sb
    return CaseResult(name, ok, {"sigma": [sa, sb]}, {f"{name}.m1in3": f.to_text()})


def _paired_filler_shape(cover, gg) -> bool:
    """Every filler vertex lies in a 2-clique and each a1^c is paired with a2^c."""
    part_of = {v: p for p in cover for v in p}
    for v, role in enumerate(gg.roles):
        if role.kind != "filler":
            continue
        if len(part_of[v]) != 2:
            return False
        if role.index == 1:
            a2 = next(u for u, r in enumerate(gg.roles) if r.kind == "filler" and r.clause == role.clause and r.index == 2)
            if a2 not in part_of[v]:
                return False
    return True


@_timed
def case_cover_shapes(name: str, f: Formula) -> CaseResult:
    """All minimum clique covers of a 1-satisfiable gadget use only 2- and 3-cliques."""
    gg = build_vertex_gadget(f)
    sigma = minimum_cover_size(gg.graph)
    sizes: set[int] = set()
    count = 0
    paired = False
    for cover in enumerate_clique_covers(gg.graph, sigma):
        count += 1
        sizes.update(len(p) for p in cover)
        paired = paired or _paired_filler_shape(cover, gg)
    ok = 3 * sigma == 10 * f.n and sizes <= {2, 3} and paired
    detail = {"sigma": sigma, "minimum_covers": count, "clique_sizes": sorted(sizes), "paired_shape_found": paired}
    return CaseResult(name, ok, detail, {f"{name}.m1in3": f.to_text()})


@_timed
def case_singleton_cover(name: str, f: Formula) -> CaseResult:
    """A non-1-satisfiable gadget has a minimum clique cover containing a singleton."""
    gg = build_vertex_gadget(f)
    sigma = minimum_cover_size(gg.graph)
    hit = next((c for c in enumerate_clique_covers(gg.graph, sigma) if any(len(p) == 1 for p in c)), None)
    ok = 3 * sigma > 10 * f.n and hit is not None and oracle_1in3(f) is None
    detail = {"sigma": sigma, "cover_with_singleton": None if hit is None else [list(p) for p in hit]}
    return CaseResult(name, ok, detail, {f"{name}.m1in3": f.to_text()})


@_timed
def case_gadget(name: str, f: Formula, variant: str) -> CaseResult:
    gg = build_vertex_gadget(f) if variant == VERTEX else build_edge_gadget(f)
    g = gg.graph
    size = 7 if variant == VERTEX else 11
    problems = []
    if g.n != size * f.n:
        problems.append(f"|V|={g.n}, expected {size * f.n}")
    omega = clique_number(g)
    if omega != 3:
        problems.append(f"omega={omega}")
    gadget_report = is_h_free(g, family(GADGET_FAMILY))
    if not gadget_report.free:
        problems.append(f"gadget contains {[e.name for e in gadget_report.entries if e.present]}")
    target_report = is_h_free(complement(g), family(TARGET_FAMILY))
    if not target_report.free:
        problems.append(f"complement contains {[e.name for e in target_report.entries if e.present]}")
    for ci in range(f.n):
        block = gg.clause_block(ci)
        cyc = g.induced(block)
        if cyc.m != size or any(cyc.degree(v) != 2 for v in range(size)) or not cyc.is_connected():
            problems.append(f"clause {ci} is not an induced C{size}")
    for x in range(f.n):
        tri = [gg.clause_var_vertex(ci, x) for ci in f.occurrences(x)]
        if g.induced(tri).m != 3:
            problems.append(f"variable {x} gadget is not a triangle")
    return CaseResult(name, not problems, {"problems": problems, "omega": omega}, {f"{name}.m1in3": f.to_text()})


@_timed
def case_cotree(name: str, g: Graph) -> CaseResult:
    t = recognize_cograph(g)
    a = chi_cotree(t, g).chi if t is not None else None
    b = chi_exact(g).chi
    return CaseResult(name, a == b, {"cotree": a, "exact": b}, {f"{name}.col": dimacs.dumps(g)})


@_timed
def case_p1p3(name: str, g: Graph) -> CaseResult:
    before = p1p3.fallback_count
    a = p1p3.chi_p1p3_free(g, check=False).chi
    fell_back = p1p3.fallback_count - before
    b = chi_exact(g).chi
    ok = a == b and not fell_back
    return CaseResult(name, ok, {"structural": a, "exact": b, "fallbacks": fell_back}, {f"{name}.col": dimacs.dumps(g)})


@_timed
def case_bruteforce(name: str, g: Graph) -> CaseResult:
    a = chi_exact(g).chi
    b = chi_bruteforce(g)
    return CaseResult(name, a == b, {"exact": a, "bruteforce": b}, {f"{name}.col": dimacs.dumps(g)})


# suite builders ----------------------------------------------------------------


def small_graphs(max_n: int = 7) -> list[Graph]:
    """Every graph on at most ``max_n`` (<= 7) vertices up to isomorphism."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n:
            out.append(Graph.from_edges(h.number_of_nodes(), h.edges()))
    return out


def sample_p1p3_free(rng: random.Random, count: int, n_max: int = 12) -> list[Graph]:
    """Rejection-sample (P1+P3)-free graphs that are not cographs.

    Cographs are rejected too, since the cotree route already covers them.
    Samples are drawn either as G(n, p) or as complements of G(n, p) so that
    both dense and sparse members of the class show up.
    """
    out = []
    while len(out) < count:
        g = random_graph(rng, n_max, n_min=4)
        if rng.random() < 0.5:
            g = complement(g)
        if contains_induced(g, PATTERNS["P1+P3"]) or recognize_cograph(g) is not None:
            continue
        out.append(g)
    return out


def build_cases(suite: str, *, seed: int = 0, samples: int | None = None, n: int | None = None, max_n: int = 6) -> list[Callable]:
    rng = random.Random(seed)
    P = functools.partial
    if suite == "prop1":
        total = 1 << (max_n * (max_n - 1) // 2)
        step = 1024
        return [P(case_contraction_block, s, min(s + step, total), max_n) for s in range(0, total, step)]
    if suite == "thm3":
        cases = []
        for i in range(samples or 50):
            g = random_graph(rng)
            cases += [P(case_clique_instance, f"g{i}-ell{ell}", g, ell) for ell in (2, 3, 4)]
        return cases
    if suite == "thm4":
        return [P(case_grotzsch_instance, f"g{i}", random_triangle_free(rng)) for i in range(samples or 30)]
    if suite == "claim2":
        return [P(case_cover_number, name, f) for name, f in formulas_for(n or 3, samples or 20, seed)]
    if suite == "claim3":
        cases = [P(case_cover_shapes, name, f) for name, f in formulas_for(3, 1, seed)]
        return cases + [P(case_singleton_cover, name, f) for name, f in fixture_formulas()]
    if suite == "main-vertex":
        cases = [P(case_main, name, f, VERTEX) for name, f in formulas_for(n or 3, samples or 20, seed)]
        if (n or 3) == 3:
            f = base_formula()
            cases.append(P(case_symmetry, "n3-permuted", f, 0, (2, 0, 1)))
        return cases
    if suite == "main-edge":
        cases = [P(case_main, name, f, EDGE) for name, f in formulas_for(n or 3, samples or 1, seed)]
        return cases + [P(case_main, name, f, EDGE) for name, f in fixture_formulas() if f.n <= max(n or 3, 4)]
    if suite == "gadgets":
        cases = []
        for size in (n,) if n else (3, 6, 9):
            for name, f in formulas_for(size, samples or 5, seed):
                cases += [P(case_gadget, f"{name}-{v}", f, v) for v in (VERTEX, EDGE)]
        return cases
    if suite == "poly-colorers":
        cases = [P(case_cotree, f"cograph{i}", random_cograph(rng.randint(1, 40), rng)) for i in range(samples or 200)]
        cases += [P(case_p1p3, f"p1p3-{i}", g) for i, g in enumerate(sample_p1p3_free(rng, 500 if samples is None else samples))]
        cases += [P(case_bruteforce, f"atlas{i}", g) for i, g in enumerate(small_graphs(7))]
        return cases
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def _run_case(case: Callable) -> list[CaseResult]:
    res = case()
    return res if isinstance(res, list) else [res]


def run_suite(
    suite: str,
    *,
    seed: int = 0,
    samples: int | None = None,
    n: int | None = None,
    max_n: int = 6,
    jobs: int = 1,
    out_dir: str | Path | None = None,
    replay: str | None = None,
) -> VerifyReport:
    """Run every case of ``suite``; failing inputs go to ``out_dir`` with a replay command."""
    t0 = time.perf_counter()
    cases = build_cases(suite, seed=seed, samples=samples, n=n, max_n=max_n)
    results: list[CaseResult] = []
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_case, cases):
                results.extend(chunk)
    else:
        for case in cases:
            results.extend(_run_case(case))
    passed = sum(r.ok for r in results)
    counterexamples: list[str] = []
    failures = []
    if passed < len(results):
        target = Path(out_dir or "counterexamples") / suite
        target.mkdir(parents=True, exist_ok=True)
        for r in results:
            if r.ok:
                continue
            failures.append({"case": r.name, **r.detail})
            for fname, content in r.artifacts.items():
                path = target / fname
                path.write_text(content)
                counterexamples.append(str(path))
        (target / "REPLAY").write_text((replay or f"chromcrit verify {suite} --seed {seed}") + "\n")
    timings = {r.name: r.seconds for r in results} if len(results) <= 200 else {}
    params = {"samples": samples, "n": n, "max_n": max_n if suite == "prop1" else None}
    return VerifyReport(suite, len(results), passed, counterexamples, time.perf_counter() - t0, seed, params, failures, timings)
