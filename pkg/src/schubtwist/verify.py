"""Named verification suites.  Each suite is a list of independent cases so a
cached sweep can resume after an interruption."""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

from .cache import cached
from .charring import FormalCharacter, demazure_char, weyl_character, weyl_dim
from .cohomology import h_flag_modules, h_full_flag, h_line_bundle, h_module_coefficients
from .rootsys import build
from .tangent import bsdh_tangent, g_mod_b_weights, lemma46_check, p_J_weights
from .twisted import (
    ExactlyG,
    NotDetermined,
    expected_nonsingular,
    nonsingular_shifted_roots,
    twisted_bsdh_report,
)
from .weyl import all_reduced_words, enumerate_parabolic, longest_element

RANK3_TYPES = ("A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3")


@dataclass
class Case:
    cid: str
    cartan_type: str
    request: dict
    compute: object


@dataclass
class SuiteResult:
    name: str
    results: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r["ok"] for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r["ok"]]

    def to_json(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "cases": len(self.results),
            "failures": self.failures,
        }


def _all_words(rs, max_len=None):
    for w in enumerate_parabolic(rs):
        if max_len is not None and w.length() > max_len:
            continue
        yield w, all_reduced_words(w, cap=10**6)


def _grid(rank, lo, hi):
    return itertools.product(range(lo, hi + 1), repeat=rank)


# ---------------------------------------------------------------------------


def _example_412():
    rs = build("B2")
    a1 = rs.simple_root(0)
    h1_expected = FormalCharacter([rs.from_root_coords((1, 1)), rs.from_root_coords((0, 1))])
    v_omega1 = weyl_character(rs, rs.fundamental_weight(0))
    checks = {}
    line = h_line_bundle(rs, (0, 1, 0), a1)
    checks["line_bundle_h1"] = line.exact and line.degree(1) == h1_expected
    checks["line_bundle_euler"] = line.euler() == demazure_char(rs, (0, 1, 0), a1)
    tang = bsdh_tangent(rs, (0, 1, 0))
    checks["tangent_h1"] = tang.exact and tang.degree(1) == h1_expected
    for w0 in sorted({longest_element(rs).word, (0, 1, 0, 1), (1, 0, 1, 0)}):
        g = h_module_coefficients(rs, w0, h1_expected)
        checks[f"gb_h1_word_{''.join(str(i + 1) for i in w0)}"] = (
            g.exact and g.degree(0) == v_omega1 and g.vanishes_from(1) and v_omega1.dimension() == 5
        )
    rep = twisted_bsdh_report(rs, (0, 1, 0))
    checks["report_h0_gb_of_h1"] = rep.h0_gb_of_h1 is not None and rep.h0_gb_of_h1.degree(0) == v_omega1
    return {"ok": all(checks.values()), "detail": checks}


def suite_example_412():
    return [Case("example-4-12", "B2", {}, _example_412)]


def _euler_case(t, word):
    rs = build(t)
    bad = []
    for lam in _grid(rs.rank, -2, 2):
        if h_line_bundle(rs, word, lam).euler() != demazure_char(rs, word, lam):
            bad.append(list(lam))
    return {"ok": not bad, "detail": {"mismatches": bad}}


def suite_euler(types=("A2", "B2", "G2")):
    cases = []
    for t in types:
        rs = build(t)
        for _, words in _all_words(rs):
            for word in words:
                cases.append(Case(f"euler/{t}/{word}", t, {"word": list(word)},
                                  lambda t=t, word=word: _euler_case(t, word)))
    return cases


def _bwb_case(t):
    rs = build(t)
    w0 = longest_element(rs).word
    wrong, shape, bounds = [], [], 0
    for lam in _grid(rs.rank, -3, 3):
        closed = h_full_flag(rs, lam)
        rec = h_line_bundle(rs, w0, lam)
        shifted = tuple(x + 1 for x in lam)
        if rs.is_singular(shifted):
            if not closed.is_zero():
                shape.append(list(lam))
        elif list(closed.by_degree) != [rs.index(shifted)]:
            shape.append(list(lam))
        if rec.exact:
            if not rec.same_cohomology(closed):
                wrong.append(list(lam))
        else:
            bounds += 1
    return {"ok": not wrong and not shape, "detail": {"wrong": wrong, "bad_shape": shape, "bounds": bounds}}


def suite_bwb(types=RANK3_TYPES):
    return [Case(f"bwb/{t}", t, {}, lambda t=t: _bwb_case(t)) for t in types]


def _demazure_weyl_case(t):
    rs = build(t)
    w0 = longest_element(rs).word
    bad = []
    for lam in _grid(rs.rank, 0, 3):
        g = h_line_bundle(rs, w0, lam)
        ch = weyl_character(rs, lam)
        if not (g.exact and g.vanishes_from(1) and g.degree(0) == ch and ch.dimension() == weyl_dim(rs, lam)):
            bad.append(list(lam))
    return {"ok": not bad, "detail": {"failures": bad}}


def suite_demazure_weyl(types=RANK3_TYPES):
    return [Case(f"demazure-weyl/{t}", t, {}, lambda t=t: _demazure_weyl_case(t)) for t in types]


def _facts_case(t):
    rs = build(t)
    got = nonsingular_shifted_roots(rs)
    want = expected_nonsingular(rs)
    return {
        "ok": got == want,
        "detail": {"found": [[list(k), v] for k, v in sorted(got.items())]},
    }


def suite_facts(types=("A2", "A3", "D4")):
    return [Case(f"facts/{t}", t, {}, lambda t=t: _facts_case(t)) for t in types]


def _sl_word_case(t, word):
    rs = build(t)
    tang = bsdh_tangent(rs, word)
    rep = twisted_bsdh_report(rs, word)
    lem = lemma46_check(rs, word)
    checks = {
        "tangent_exact": tang.exact,
        "tangent_higher_vanish": tang.vanishes_from(1),
        "aut0_is_G": isinstance(rep.aut0, ExactlyG),
        "h1_twisted_zero": not isinstance(rep.h1_twisted, NotDetermined) and rep.h1_twisted.is_zero(),
        "h_gb_h0_exact_zero": rep.h_gb_of_h0 is not None and rep.h_gb_of_h0.exact and rep.h_gb_of_h0.is_zero(),
        "h0_inside_p_J": lem.passed,
    }
    return {"ok": all(checks.values()), "detail": checks}


def _pj_case(t, max_degree=3):
    rs = build(t)
    bad = []
    for k in range(rs.rank):
        for J in itertools.combinations(range(rs.rank), k):
            g = h_flag_modules(rs, p_J_weights(rs, J).char)
            if not (g.exact and all(not g.degree(j) for j in range(max_degree + 1))):
                bad.append([j + 1 for j in J])
    return {"ok": not bad, "detail": {"nonvanishing_J": bad}}


def suite_simply_laced(types=(("A2", None), ("A3", 6))):
    cases = []
    for t, max_len in types:
        rs = build(t)
        for _, words in _all_words(rs, max_len):
            for word in words:
                cases.append(Case(f"simply-laced/{t}/{word}", t, {"word": list(word)},
                                  lambda t=t, word=word: _sl_word_case(t, word)))
        cases.append(Case(f"simply-laced/{t}/p_J", t, {"p_J": True}, lambda t=t: _pj_case(t)))
    return cases


def _witness_case():
    rs = build("B2")
    a1 = rs.simple_root(0)
    line = h_line_bundle(rs, (0, 1, 0), a1)
    tang = bsdh_tangent(rs, (0, 1, 0))
    checks = {
        "line_bundle_h1_nonzero": bool(line.degree(1)),
        "tangent_h1_nonzero": bool(tang.degree(1)),
        "exact": line.exact and tang.exact,
    }
    return {"ok": all(checks.values()), "detail": checks}


def suite_witness():
    return [Case("non-simply-laced-witness/B2", "B2", {"word": [1, 2, 1]}, _witness_case)]


def _independence_case(t, words):
    rs = build(t)
    bad = []
    compared = 0
    for lam in _grid(rs.rank, -2, 2):
        exact = [h for h in (h_line_bundle(rs, wd, lam) for wd in words) if h.exact]
        compared += len(exact) > 1
        if any(not h.same_cohomology(exact[0]) for h in exact[1:]):
            bad.append(list(lam))
    # B-modules: g/b and the minimal parabolics
    for m in [g_mod_b_weights(rs)] + [p_J_weights(rs, [i]) for i in range(rs.rank)]:
        exact = [h for h in (h_module_coefficients(rs, wd, m.char) for wd in words) if h.exact]
        compared += len(exact) > 1
        if any(not h.same_cohomology(exact[0]) for h in exact[1:]):
            bad.append(m.label)
    return {"ok": not bad, "detail": {"disagree": bad, "compared": compared}}


def suite_word_independence(types=("A2", "B2", "G2")):
    cases = []
    for t in types:
        rs = build(t)
        for w, words in _all_words(rs):
            if len(words) >= 2:
                cases.append(Case(f"word-independence/{t}/{w.word}", t, {"words": [list(x) for x in words]},
                                  lambda t=t, words=words: _independence_case(t, words)))
    return cases


SUITES = {
    "example-4-12": suite_example_412,
    "euler": suite_euler,
    "bwb": suite_bwb,
    "demazure-weyl": suite_demazure_weyl,
    "facts": suite_facts,
    "simply-laced-vanishing": suite_simply_laced,
    "non-simply-laced-witness": suite_witness,
    "word-independence": suite_word_independence,
}


def run_suite(name, cache=None, progress=None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    t0 = time.perf_counter()
    out = SuiteResult(name)
    for case in SUITES[name]():
        text = cached(cache, case.cartan_type, f"verify/{case.cid}", case.request, case.compute)
        res = json.loads(text)
        res["case"] = case.cid
        out.results.append(res)
        if progress:
            progress(case.cid, res["ok"])
    out.elapsed = time.perf_counter() - t0
    return out


def run_all(cache=None) -> list:
    return [run_suite(n, cache) for n in SUITES]
