"""Property sweep over seeded random highest weights.

Each check returns a boolean; failures carry a CLI command line that
reproduces the failing computation on its own.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import _exact, config
from .character import character_support, kostant_table, verma_character, wcf_character
from .geometry import canonical, contains, h_to_v, v_to_h
from .hwmodule import (HWModuleDescriptor, ParabolicVerma, Simple, Verma, antidominant,
                       formulas_agree, integrability_set, orbit_safe_stability,
                       simply_regular, weight_set)
from .oracle import FormEvaluator, oracle_weight_support, verma_multiplicity, words_for_offset
from .polyhedron import (canonical_hull, extremal_rays_at_vertex, faces,
                         geometric_face_count, hull_h_rep, hull_of, minmax_equivalences,
                         weyl_stabilizer_is)
from .rootsys import RootSystem, Weight
from .sampling import sample_weights
from .weyl import (ParabolicSubgroup, dot_action, element_from_word, full_group, group_order,
                   inversion_count, j_lambda, orbit, wcf_condition_holds)

__all__ = ["Failure", "SweepReport", "descriptors_for", "run_sweep", "lambda_arg"]


def lambda_arg(lam: Weight) -> str:
    return ",".join(_exact.fmt(x) for x in lam.coords)


def descriptors_for(lam: Weight) -> list[HWModuleDescriptor]:
    """Simple, Verma and every parabolic Verma module ``M(lam, J')``."""
    JL = sorted(j_lambda(lam))
    out = [Simple(lam), Verma(lam)]
    for mask in range(1, 1 << len(JL)):
        out.append(ParabolicVerma(lam, [j for b, j in enumerate(JL) if mask >> b & 1]))
    return out


@dataclass
class Failure:
    prop: str
    reproducer: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"property": self.prop, "reproducer": self.reproducer, "detail": self.detail}


@dataclass
class SweepReport:
    system: str
    samples: int
    seed: int
    depth: int
    lambdas: list[tuple[str, Weight]]
    passed: Counter = field(default_factory=Counter)
    checked: Counter = field(default_factory=Counter)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, prop: str, ok: bool, reproducer: str, detail: str = "") -> None:
        self.checked[prop] += 1
        if ok:
            self.passed[prop] += 1
        else:
            self.failures.append(Failure(prop, reproducer, detail))

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "samples": self.samples,
            "seed": self.seed,
            "depth": self.depth,
            "lambdas": [{"stratum": s, "lambda": lam.to_json()} for s, lam in self.lambdas],
            "properties": {p: {"passed": self.passed[p], "checked": self.checked[p]}
                           for p in sorted(self.checked)},
            "failures": [f.to_json() for f in self.failures],
            "ok": self.ok,
        }


def _guard(report: SweepReport, prop: str, repro: str, fn: Callable[[], bool | tuple]) -> None:
    try:
        res = fn()
    except Exception as exc:  # a crash is a failed property, not an aborted sweep
        report.record(prop, False, repro, f"{type(exc).__name__}: {exc}")
        return
    if isinstance(res, tuple):
        report.record(prop, res[0], repro, res[1])
    else:
        report.record(prop, bool(res), repro)


def _system_checks(R: RootSystem, rep: SweepReport) -> None:
    name = R.name
    repro = f"roots {name}"

    def rho_is_half_sum():
        half = [Fraction(sum(b[i] for b in R.positive_roots), 2) for i in range(R.rank)]
        return tuple(half) == R.rho().root_coords()

    def lengths_are_inversions():
        return all(w.length == inversion_count(R, w.root_matrix) == len(w.word)
                   for w in full_group(R))

    def words_match_matrices():
        return all(element_from_word(R, w.word) == w for w in full_group(R))

    _guard(rep, "rootsys.rho_half_sum", repro, rho_is_half_sum)
    _guard(rep, "weyl.order", repro, lambda: len(full_group(R)) == group_order(R))
    _guard(rep, "weyl.length_is_inversions", repro, lengths_are_inversions)
    _guard(rep, "weyl.word_matches_matrix", repro, words_match_matrices)


def _weight_checks(lam: Weight, depth: int, rep: SweepReport) -> None:
    R = lam.system
    name, la = R.name, lambda_arg(lam)
    W = full_group(R)

    def dot_is_action():
        for u in W[: min(len(W), 6)]:
            for v in W[: min(len(W), 6)]:
                uv = u.compose(v)
                if dot_action(uv, lam) != dot_action(u, dot_action(v, lam)):
                    return False
        return True

    _guard(rep, "weyl.dot_is_action", f"character {name} --lambda={la} --depth 0",
           dot_is_action)

    # character and oracle
    odepth = min(depth + 1, config.oracle_depth(R.rank))
    if R.rank >= 3:
        odepth = min(odepth, 4)
    crepro = f"character {name} --lambda={la} --depth {odepth} --check-oracle"
    oracle = None
    try:
        oracle = oracle_weight_support(lam, odepth)
    except Exception as exc:
        rep.record("oracle.runs", False, crepro, f"{type(exc).__name__}: {exc}")
    if oracle is not None:
        kt = kostant_table(R, odepth)
        _guard(rep, "oracle.below_kostant", crepro,
               lambda: all(v <= kt[k] for k, v in oracle.entries.items()))
        _guard(rep, "oracle.kostant_recount", crepro,
               lambda: all(verma_multiplicity(R, k) == v for k, v in kt.items()))
        _guard(rep, "oracle.matches_formula_B", crepro,
               lambda: oracle.offsets == weight_set(Simple(lam), odepth, "B").offsets)
        if antidominant(lam):
            _guard(rep, "oracle.antidominant_is_verma", crepro,
                   lambda: oracle.entries == dict(kt))
        if wcf_condition_holds(lam):
            def wcf_vs_oracle():
                ch = wcf_character(lam, odepth)
                return (ch.coefficients == oracle.entries,
                        "" if ch.coefficients == oracle.entries else "coefficients differ")
            _guard(rep, "character.wcf_matches_oracle", crepro, wcf_vs_oracle)
            if antidominant(lam):
                _guard(rep, "character.antidominant_is_verma", crepro,
                       lambda: wcf_character(lam, odepth) == verma_character(lam, odepth))
            _guard(rep, "character.support_is_formula_B", crepro,
                   lambda: character_support(wcf_character(lam, odepth)).offsets
                   == weight_set(Simple(lam), odepth, "B").offsets)
        form = FormEvaluator(lam)
        _guard(rep, "oracle.gram_symmetric", crepro,
               lambda: all(form(u, v) == form(v, u)
                           for k in list(kt)[:12] for u in words_for_offset(k)
                           for v in words_for_offset(k)))

    # modules
    for d in descriptors_for(lam):
        cls = d.label()
        wrepro = f"weights {name} --lambda={la} --class {cls} --depth {depth}"
        hrepro = f"hull {name} --lambda={la} --class {cls}"
        frepro = f"faces {name} --lambda={la} --class {cls}"
        JV = integrability_set(d)

        def agree(d=d):
            r = formulas_agree(d, depth)
            return r.agree, "" if r.agree else str(r.differences())
        _guard(rep, "hwmodule.formulas_agree", wrepro, agree)

        def inside(d=d):
            h = hull_h_rep(d)
            return all(contains(h, w.root_coords())
                       for w in weight_set(d, depth, "B").weights())
        _guard(rep, "polyhedron.weights_inside_hull", wrepro, inside)

        def stable(d=d):
            bad = orbit_safe_stability(weight_set(d, depth, "B"), JV)
            return not bad, str(bad[:5])
        _guard(rep, "hwmodule.orbit_stable", wrepro, stable)

        def vertices(d=d):
            want = {w.root_coords() for w in orbit(ParabolicSubgroup(R, JV), lam)}
            return set(canonical_hull(d).vertices) == want
        _guard(rep, "polyhedron.vertices_are_orbit", hrepro, vertices)

        def stabilizer(d=d):
            st = weyl_stabilizer_is(d)
            return st.is_parabolic and st.J == JV, f"got J={sorted(st.J)} parabolic={st.is_parabolic}"
        _guard(rep, "polyhedron.stabilizer", hrepro, stabilizer)

        def round_trip(d=d):
            p = canonical_hull(d)
            return h_to_v(v_to_h(p)) == p and canonical(hull_of(d)) == p
        _guard(rep, "polyhedron.round_trip", hrepro, round_trip)

        def face_count(d=d):
            a, b = len(faces(d)), geometric_face_count(d)
            return a == b, f"(w,J) faces {a}, geometric {b}"
        _guard(rep, "polyhedron.face_count", frepro, face_count)

        if simply_regular(lam):
            def rays(d=d):
                got = sorted(extremal_rays_at_vertex(d, lam))
                want = sorted(tuple(-int(i == j) for j in range(1, R.rank + 1))
                              for i in range(1, R.rank + 1) if i not in JV)
                return got == want, f"got {got}, want {want}"
            _guard(rep, "polyhedron.extremal_rays", frepro, rays)

    def minmax():
        rows = minmax_equivalences(lam)
        bad = [r.to_json() for r in rows if not r.equivalent]
        return not bad, str(bad[:2])
    _guard(rep, "minmax.equivalences", f"minmax {name} --lambda={la}", minmax)


def run_sweep(R: RootSystem, samples: int, seed: int, depth: int) -> SweepReport:
    lambdas = sample_weights(R, samples, seed)
    rep = SweepReport(R.name, samples, seed, depth, lambdas)
    _system_checks(R, rep)
    for _, lam in lambdas:
        _weight_checks(lam, depth, rep)
    return rep
