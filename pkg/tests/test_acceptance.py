"""One test per acceptance criterion; each records a PASS/FAIL line with its measurements."""

import time

import pytest

from chromcrit import p1p3
from chromcrit.chromatic import chi_exact, clique_cover_number
from chromcrit.criticality import EDGE, VERTEX, _scan
from chromcrit.graph import grotzsch
from chromcrit.hfree import PATTERNS, Rule, Verdict, classify_h, contains_induced
from chromcrit.reductions import (
    base_formula,
    build_edge_gadget,
    build_vertex_gadget,
    oracle_1in3,
    random_formula,
    to_target_instance,
)
from chromcrit.verify import fixture_formulas, run_suite

from conftest import ACCEPTANCE_LINES


@pytest.fixture
def record(request):
    def emit(number, ok, text):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return emit


def _failures(rep):
    return "; ".join(str(f) for f in rep.failures[:3])


def test_criterion_01_edge_and_contraction_criticality_agree(record, tmp_path):
    t0 = time.perf_counter()
    rep = run_suite("prop1", max_n=6, out_dir=tmp_path)
    dt = time.perf_counter() - t0
    ok = rep.run == 32768 and rep.ok and dt < 300
    record(1, ok, f"{rep.passed}/{rep.run} six-vertex labelled graphs agree, {len(rep.failures)} exceptions, {dt:.1f}s single job")


def test_criterion_02_grotzsch_facts(record):
    t0 = time.perf_counter()
    grotzsch.cache_clear()
    g = grotzsch()
    res = chi_exact(g)
    dt = time.perf_counter() - t0
    no_c3 = not contains_induced(g, PATTERNS["C3"])
    ok = (g.n, g.m) == (11, 20) and no_c3 and res.chi == 4 and dt < 1
    record(2, ok, f"n={g.n} m={g.m} triangle-free={no_c3} chi={res.chi} in {dt * 1000:.0f}ms")


def test_criterion_03_clique_proof_equivalence(record, tmp_path):
    t0 = time.perf_counter()
    rep = run_suite("thm3", seed=7, samples=50, out_dir=tmp_path)
    dt = time.perf_counter() - t0
    ok = rep.run == 150 and rep.ok and dt < 120
    record(3, ok, f"{rep.passed}/{rep.run} (50 graphs x ell in 2,3,4) in {dt:.1f}s {_failures(rep)}".rstrip())


def test_criterion_04_grotzsch_equivalence(record, tmp_path):
    rep = run_suite("thm4", seed=7, samples=30, out_dir=tmp_path)
    ok = rep.run == 30 and rep.ok
    record(4, ok, f"{rep.passed}/{rep.run} triangle-free graphs in {rep.wall_time:.1f}s {_failures(rep)}".rstrip())


def test_criterion_05_cover_number_and_critical_vertices(record):
    lines = []
    problems = []

    def one(name, f):
        t0 = time.perf_counter()
        sat = oracle_1in3(f) is not None
        sigma, _ = clique_cover_number(build_vertex_gadget(f).graph)
        t_sigma = time.perf_counter() - t0
        target = to_target_instance(build_vertex_gadget(f))
        chi_t = chi_exact(target).chi
        hit = bool(_scan(target, VERTEX, chi_t, exists=True, route="exact"))
        dt = time.perf_counter() - t0
        target_sigma = 10 * f.n // 3
        if not (sat == (sigma == target_sigma) == (not hit)) or sigma < target_sigma or chi_t != sigma:
            problems.append(f"{name}: sat={sat} sigma={sigma} critical_vertex={hit}")
        if t_sigma > 600:
            problems.append(f"{name}: sigma took {t_sigma:.0f}s")
        lines.append((name, sat, sigma, hit, t_sigma, dt))

    one("n3-base", base_formula())
    for seed in range(30, 50):
        one(f"n6-seed{seed}", random_formula(6, seed))
    base = lines[0]
    base_ok = base[2] == 10 and not base[3]
    n6 = lines[1:]
    unsat = [n for n, sat, *_ in n6 if not sat]
    slowest = max(t for *_, t in lines)
    summary = (
        f"n=3 sigma={base[2]} critical_vertex={base[3]}; {len(n6)} formulas at n=6 "
        f"({len(n6) - len(unsat)} 1-satisfiable, unsatisfiable: {', '.join(unsat) or 'none'}); "
        f"sigma time max {max(r[4] for r in lines):.2f}s, full instance max {slowest:.1f}s"
    )
    record(5, base_ok and len(n6) >= 20 and not problems, summary + ("; " + "; ".join(problems) if problems else ""))


def test_criterion_06_edge_variant(record):
    t0 = time.perf_counter()
    target = to_target_instance(build_edge_gadget(base_formula()))
    base_hit = _scan(target, EDGE, chi_exact(target).chi, exists=True, route="exact")
    name, f = fixture_formulas()[0]
    unsat_target = to_target_instance(build_edge_gadget(f))
    hit = _scan(unsat_target, EDGE, chi_exact(unsat_target).chi, exists=True, route="exact")
    dt = time.perf_counter() - t0
    ok = not base_hit and bool(hit) and oracle_1in3(f) is None
    edge = next(iter(hit), None)
    record(
        6,
        ok,
        f"n=3 C11 complement critical edges: {len(base_hit)}; fixture {name} (n={f.n}) critical edge "
        f"{edge and (unsat_target.label(edge.u), unsat_target.label(edge.v))} in {dt:.1f}s",
    )


def test_criterion_07_gadget_structure(record, tmp_path):
    rep = run_suite("gadgets", seed=0, samples=5, out_dir=tmp_path)
    ok = rep.ok and rep.run == 22
    record(7, ok, f"{rep.passed}/{rep.run} gadgets (n in 3,6,9, both variants) with zero violations {_failures(rep)}".rstrip())


def test_criterion_08_minimum_cover_shapes(record, tmp_path):
    rep = run_suite("claim3", out_dir=tmp_path)
    ok = rep.ok and rep.run == 3
    record(8, ok, f"{rep.passed}/{rep.run} (n=3 all minimum covers use 2- and 3-cliques; fixtures give a singleton) {_failures(rep)}".rstrip())


def test_criterion_09_polynomial_colourers(record, tmp_path):
    before = p1p3.fallback_count
    rep = run_suite("poly-colorers", seed=0, out_dir=tmp_path)
    fallbacks = p1p3.fallback_count - before
    ok = rep.ok and rep.run == 200 + 500 + 1252 and fallbacks == 0
    record(9, ok, f"{rep.passed}/{rep.run} (200 cographs, 500 (P1+P3)-free, 1252 atlas graphs), {fallbacks} fallbacks {_failures(rep)}".rstrip())


EXPECTED = {
    "P1": Rule.SUB_P4,
    "P2": Rule.SUB_P4,
    "P3": Rule.SUB_P4,
    "P4": Rule.SUB_P4,
    "P1+P3": Rule.SUB_P1P3,
    "3P1": Rule.SUB_P1P3,
    "2P2": Rule.LINEAR_FOREST_HARD,
    "2P1+P2": Rule.LINEAR_FOREST_HARD,
    "4P1": Rule.LINEAR_FOREST_HARD,
    "P5": Rule.LINEAR_FOREST_HARD,
    "K1,3": Rule.CLAW_OR_CYCLE,
    "C3": Rule.CLAW_OR_CYCLE,
    "C4": Rule.CLAW_OR_CYCLE,
    "C5": Rule.CLAW_OR_CYCLE,
    "paw": Rule.CLAW_OR_CYCLE,
    "K4": Rule.CLAW_OR_CYCLE,
}


def test_criterion_10_classifier_table(record):
    wrong = []
    for name, rule in EXPECTED.items():
        res = classify_h(PATTERNS[name])
        poly = rule in (Rule.SUB_P4, Rule.SUB_P1P3)
        if res.rule is not rule or (res.verdict is Verdict.POLY) != poly:
            wrong.append(f"{name} -> {res}")
    record(10, not wrong, f"{len(EXPECTED) - len(wrong)}/{len(EXPECTED)} patterns classified as expected {'; '.join(wrong)}".rstrip())
