"""Recompute every table, appendix formula and theorem check from first
principles and compare the results against the embedded reference data and
the shipped fixture files.

Each runner returns a Report whose rows are fully deterministic, so two
runs produce byte-identical output; a report is ok only if every computed
value agrees exactly with its reference.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import expected
from .fixtureio import load_fixture, parse_scalar
from .groupring import TABLEAU_TPRIME, catalog, young_symmetrizer
from .ideals import (
    all_pair_psets,
    commutation_scan,
    delta,
    derivative_relations,
    left_ideal_basis,
    linear_identities,
    pset_label,
    sigma_rho_report,
)
from .scalars import Eisenstein, eisenstein_str, roots_up_to_quadratic
from .tensorpoly import (
    TensorPolynomial,
    curvature_checks,
    numeric_evaluate,
    numerator_root_scan,
    orientation_relation,
    random_conforming_u,
    random_w,
    reduce_polynomial,
    substitute_nu,
    symmetrize_product,
)

RNG_SEED = 20260808

TABLE_NAMES = ("1", "2", "3", "4", "summary")
APPENDIX_NAMES = ("A", "B", "C12", "C16", "D")
CHECK_NAMES = ("sigma-rho", "thm65", "sec7", "curvature-oracle", "gammahat")

FIXTURES_ENV = "CURVALG_FIXTURES"


@dataclass
class Report:
    name: str
    columns: list[str]
    rows: list[list[str]] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def add(self, *cells):
        self.rows.append([str(c) for c in cells])

    def problem(self, text: str):
        self.problems.append(text)


def default_fixture_dir():
    return resources.files("curvalg") / "fixtures"


def resolve_fixture_dir(override=None):
    if override is not None:
        from pathlib import Path

        return Path(override)
    env = os.environ.get(FIXTURES_ENV)
    if env:
        from pathlib import Path

        return Path(env)
    return default_fixture_dir()


def epsilon_values(mode: str) -> tuple[int, ...]:
    if mode in ("both", None):
        return (1, -1)
    if mode in ("+1", "1"):
        return (1,)
    if mode == "-1":
        return (-1,)
    raise ValueError(f"bad epsilon mode {mode!r}")


# ---------------------------------------------------------------------------
# Cached pipeline pieces.
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def base_polynomial(orientation: str, eps: int) -> TensorPolynomial:
    op = young_symmetrizer(TABLEAU_TPRIME).star().scale(Fraction(1, 24))
    return symmetrize_product(op, orientation, eps)


@functools.lru_cache(maxsize=None)
def family_basis(family: str):
    return left_ideal_basis(catalog(family))


@functools.lru_cache(maxsize=None)
def family_identities(family: str, pset: tuple[int, ...]):
    return linear_identities(family_basis(family), pset)


@functools.lru_cache(maxsize=None)
def reduced_polynomial(family: str, pset: tuple[int, ...], eps: int) -> TensorPolynomial:
    return reduce_polynomial(base_polynomial("uw", eps), family_identities(family, pset))


def _root_sort_key(z: Eisenstein):
    return (z.re, z.om)


def _roots_str(roots) -> str:
    return "{" + ", ".join(eisenstein_str(z) for z in sorted(roots, key=_root_sort_key)) + "}"


@functools.lru_cache(maxsize=None)
def delta_roots(family: str, pset: tuple[int, ...]) -> frozenset[Eisenstein]:
    d = delta(family_basis(family), pset)
    if not d:
        return frozenset()
    return roots_up_to_quadratic(d.num).root_set()


@functools.lru_cache(maxsize=None)
def allowed_roots(pset: tuple[int, ...], eps: int) -> frozenset[Eisenstein]:
    exclude = set(delta_roots("xi", pset)) | {Eisenstein(Fraction(1, 2))}
    return numerator_root_scan(reduced_polynomial("xi", pset, eps), exclude)


def _expected_root_set(exprs) -> frozenset[Eisenstein]:
    return frozenset(parse_scalar(e).as_eisenstein() for e in exprs)


# ---------------------------------------------------------------------------
# Tables.
# ---------------------------------------------------------------------------


def table1_report(eps_mode: str = "both") -> Report:
    eps_list = epsilon_values(eps_mode)
    rep = Report("table 1", ["P", "delta", *[f"len eps={e:+d}" for e in eps_list]])
    basis = family_basis("eta")
    for pset in all_pair_psets():
        label = pset_label(pset)
        exp_nonzero, exp_plus, exp_minus = expected.TABLE1[label]
        exp_len = {1: exp_plus, -1: exp_minus}
        nonzero = bool(delta(basis, pset))
        if nonzero != exp_nonzero:
            rep.problem(f"P={label}: delta nonzero={nonzero}, reference {exp_nonzero}")
        if not nonzero:
            rep.add(label, "0", *["" for _ in eps_list])
            continue
        lengths = {e: reduced_polynomial("eta", pset, e).length() for e in eps_list}
        for e in eps_list:
            if lengths[e] != exp_len[e]:
                rep.problem(
                    f"P={label} eps={e:+d}: length {lengths[e]}, reference {exp_len[e]}"
                )
        rep.add(label, "!=0", *[lengths[e] for e in eps_list])
    return rep


def table2_report(eps_mode: str = "both") -> Report:
    eps_list = epsilon_values(eps_mode)
    rep = Report(
        "table 2", ["P", "delta roots", *[f"len eps={e:+d}" for e in eps_list]]
    )
    for pset in all_pair_psets():
        label = pset_label(pset)
        exp_roots, exp_plus, exp_minus = expected.TABLE2[label]
        exp_len = {1: exp_plus, -1: exp_minus}
        roots = delta_roots("xi", pset)
        if roots != _expected_root_set(exp_roots):
            rep.problem(
                f"P={label}: delta roots {_roots_str(roots)}, reference "
                f"{{{', '.join(exp_roots)}}}"
            )
        lengths = {e: reduced_polynomial("xi", pset, e).length() for e in eps_list}
        for e in eps_list:
            if lengths[e] != exp_len[e]:
                rep.problem(
                    f"P={label} eps={e:+d}: length {lengths[e]}, reference {exp_len[e]}"
                )
        rep.add(label, _roots_str(roots), *[lengths[e] for e in eps_list])
    return rep


def _nongeneric_rows(rep: Report, table, eps_list):
    for label, per_eps in table.items():
        pset = (int(label[0]), int(label[1]))
        for e in eps_list:
            exp_cells = {
                parse_scalar(k).as_eisenstein(): v for k, v in per_eps[e].items()
            }
            roots = allowed_roots(pset, e)
            if roots != frozenset(exp_cells):
                rep.problem(
                    f"P={label} eps={e:+d}: allowed roots {_roots_str(roots)}, "
                    f"reference {_roots_str(frozenset(exp_cells))}"
                )
            for root in sorted(roots, key=_root_sort_key):
                length = substitute_nu(
                    reduced_polynomial("xi", pset, e), root
                ).length()
                ref = exp_cells.get(root)
                if ref is not None and length != ref:
                    rep.problem(
                        f"P={label} eps={e:+d} nu={eisenstein_str(root)}: "
                        f"length {length}, reference {ref}"
                    )
                rep.add(label, f"{e:+d}", eisenstein_str(root), length)


def table3_report(eps_mode: str = "both") -> Report:
    rep = Report("table 3", ["P", "eps", "nu", "length"])
    _nongeneric_rows(rep, expected.TABLE3, epsilon_values(eps_mode))
    return rep


def table4_report(eps_mode: str = "both") -> Report:
    rep = Report("table 4", ["P", "eps", "nu", "length"])
    _nongeneric_rows(rep, expected.TABLE4, epsilon_values(eps_mode))
    return rep


def summary_report(eps_mode: str = "both") -> Report:
    eps_list = epsilon_values(eps_mode)
    rep = Report("summary", ["eps", "min length", "N"])
    for e in eps_list:
        lengths = []
        union: set[Eisenstein] = set()
        for pset in all_pair_psets():
            roots = allowed_roots(pset, e)
            union.update(roots)
            for root in roots:
                lengths.append(
                    substitute_nu(reduced_polynomial("xi", pset, e), root).length()
                )
        minimum = min(lengths)
        if minimum != expected.SUMMARY_MIN_LENGTH[e]:
            rep.problem(
                f"eps={e:+d}: min length {minimum}, reference "
                f"{expected.SUMMARY_MIN_LENGTH[e]}"
            )
        exp_union = _expected_root_set(expected.SUMMARY_ROOT_UNION[e])
        if union != exp_union:
            rep.problem(
                f"eps={e:+d}: N {_roots_str(union)}, reference {_roots_str(exp_union)}"
            )
        rep.add(f"{e:+d}", minimum, _roots_str(union))
    return rep


def table_report(which: str, eps_mode: str = "both") -> Report:
    runner = {
        "1": table1_report,
        "2": table2_report,
        "3": table3_report,
        "4": table4_report,
        "summary": summary_report,
    }.get(which)
    if runner is None:
        raise ValueError(f"unknown table {which!r}")
    return runner(eps_mode)


# ---------------------------------------------------------------------------
# Appendix fixtures.
# ---------------------------------------------------------------------------


def _compare_fixture(rep, name, computed, fixture_dir, filename, eps):
    try:
        fixture = load_fixture(fixture_dir / filename, eps)
    except FileNotFoundError:
        rep.problem(f"{name}: fixture {filename} not found")
        rep.add(name, f"{eps:+d}", computed.length(), "missing")
        return
    match = computed == fixture
    rep.add(name, f"{eps:+d}", computed.length(), "match" if match else "MISMATCH")
    if match:
        return
    rep.problem(f"{name} eps={eps:+d}: differs from fixture {filename}")
    ckeys, fkeys = set(computed.terms), set(fixture.terms)
    for key in sorted(ckeys | fkeys, key=lambda k: (k[1], k[0])):
        u_word, w_pair = key
        label = f"U[{''.join(u_word)}]*W[{''.join(w_pair)}]"
        got = computed.terms.get(key)
        want = fixture.terms.get(key)
        if got != want:
            rep.problem(f"  first divergence at {label}: computed {got}, fixture {want}")
            break


def appendix_report(which: str, eps_mode: str = "both", fixture_dir=None) -> Report:
    fixture_dir = resolve_fixture_dir(fixture_dir)
    eps_list = epsilon_values(eps_mode)
    rep = Report(f"appendix {which}", ["display", "eps", "terms", "fixture"])
    if which == "A":
        for eps in eps_list:
            for orientation, fname in (("uw", "appendix_a_uw.txt"), ("wu", "appendix_a_wu.txt")):
                _compare_fixture(
                    rep,
                    f"A {orientation}",
                    base_polynomial(orientation, eps),
                    fixture_dir,
                    fname,
                    eps,
                )
            lemma = orientation_relation(eps)
            rep.add("A orientation lemma", f"{eps:+d}", "", "holds" if lemma else "FAILS")
            if not lemma:
                rep.problem(f"orientation lemma fails for eps={eps:+d}")
    elif which == "B":
        files = {1: "appendix_b_plus.txt", -1: "appendix_b_minus.txt"}
        for eps in eps_list:
            _compare_fixture(
                rep, "B", reduced_polynomial("eta", (1, 2), eps), fixture_dir, files[eps], eps
            )
    elif which == "C12":
        files = {1: "appendix_c12_plus.txt", -1: "appendix_c12_minus.txt"}
        for eps in eps_list:
            poly = reduced_polynomial("xi", (1, 2), eps)
            _compare_fixture(rep, "C12", poly, fixture_dir, files[eps], eps)
            vanishes = substitute_nu(poly, Fraction(1, 2)).is_zero()
            rep.add("C12 at nu=1/2", f"{eps:+d}", 0, "zero" if vanishes else "NONZERO")
            if not vanishes:
                rep.problem(f"C12 eps={eps:+d} does not vanish at nu=1/2")
    elif which == "C16":
        files = {1: "appendix_c16_plus.txt", -1: "appendix_c16_minus.txt"}
        for eps in eps_list:
            _compare_fixture(
                rep, "C16", reduced_polynomial("xi", (1, 6), eps), fixture_dir, files[eps], eps
            )
    elif which == "D":
        files = {
            (-1, 1): "appendix_d_nu_m1_plus.txt",
            (-1, -1): "appendix_d_nu_m1_minus.txt",
            (2, 1): "appendix_d_nu_2_plus.txt",
            (2, -1): "appendix_d_nu_2_minus.txt",
        }
        for nu0 in (-1, 2):
            for eps in eps_list:
                poly = substitute_nu(reduced_polynomial("xi", (1, 6), eps), nu0)
                _compare_fixture(
                    rep, f"D nu={nu0}", poly, fixture_dir, files[(nu0, eps)], eps
                )
    else:
        raise ValueError(f"unknown appendix {which!r}")
    return rep


# ---------------------------------------------------------------------------
# Theorem checks.
# ---------------------------------------------------------------------------


def sigma_rho_check() -> Report:
    rep = Report("check sigma-rho", ["variant", "eps", "claim", "result"])
    for variant in ("12", "45"):
        data = sigma_rho_report(variant)
        for eps in (1, -1):
            claims = [
                ("rho != 0", data[f"rho_nonzero_eps_{eps}"]),
                ("sigma != 0 symbolically", data[f"sigma_nonzero_eps_{eps}"]),
                ("(2nu-1) divides sigma", data[f"sigma_divisible_eps_{eps}"]),
                ("sigma(1/2) = 0", data[f"sigma_zero_at_half_eps_{eps}"]),
            ]
            for nu_str, okv in data[f"sigma_nonzero_at_eps_{eps}"].items():
                claims.append((f"sigma({nu_str}) != 0", okv))
            for claim, okv in claims:
                rep.add(variant, f"{eps:+d}", claim, "pass" if okv else "FAIL")
                if not okv:
                    rep.problem(f"variant {variant} eps={eps:+d}: {claim} fails")
    return rep


def thm65_check() -> Report:
    rep = Report("check thm65", ["symmetrizer", "fixes eta", "fixing nu"])
    scan = commutation_scan()
    for name, res in scan.items():
        eta_ok = res["eta"]
        cond = res["xi"]
        roots = cond.roots if not cond.always else None
        rep.add(name, "yes" if eta_ok else "no", _roots_str(roots or frozenset()))
        exp = expected.COMMUTATION_PAIRS.get(name)
        if cond.always:
            rep.problem(f"{name}: fixes the whole family, reference says at most one")
            continue
        if exp == "eta":
            if not eta_ok or roots:
                rep.problem(f"{name}: reference pair is eta only")
        elif exp is not None:
            want = _expected_root_set((exp,))
            if eta_ok or roots != want:
                rep.problem(
                    f"{name}: fixing set {_roots_str(roots)}, reference nu={exp}"
                )
        else:
            if eta_ok or roots:
                rep.problem(f"{name}: fixes something, reference says nothing")
    missing = set(expected.COMMUTATION_PAIRS) - set(scan)
    if missing:
        rep.problem(f"scan missing symmetrizers: {sorted(missing)}")
    return rep


def sec7_check() -> Report:
    rep = Report("check sec7", ["relation", "result"])
    rel = derivative_relations()
    claims = [
        ("eta . h_s != h_s", not rel["eta_fixes_h_s"]),
        ("eta . h_a != h_a", not rel["eta_fixes_h_a"]),
        ("xi_0 . h_s = h_s", rel["xi0_fixes_h_s"]),
        ("xi_2 . h_a = h_a", rel["xi2_fixes_h_a"]),
        (
            "xi_nu . h_s = h_s only at nu=0",
            not rel["nu_fixing_h_s"].always
            and rel["nu_fixing_h_s"].roots == frozenset({Eisenstein(0)}),
        ),
        (
            "xi_nu . h_a = h_a only at nu=2",
            not rel["nu_fixing_h_a"].always
            and rel["nu_fixing_h_a"].roots == frozenset({Eisenstein(2)}),
        ),
    ]
    for claim, okv in claims:
        rep.add(claim, "pass" if okv else "FAIL")
        if not okv:
            rep.problem(f"{claim} fails")
    return rep


def _oracle_configs():
    yield "eta", (1, 2), None
    yield "xi", (1, 2), 3
    yield "xi", (1, 6), 2
    yield "xi", (1, 6), -1


def curvature_oracle_check(pairs: int = 20) -> Report:
    rep = Report(
        "check curvature-oracle",
        ["family", "P", "nu", "eps", "pairs", "equivalent", "tensor checks"],
    )
    rng = random.Random(RNG_SEED)
    for family, pset, nu0 in _oracle_configs():
        e_elem = catalog(family) if nu0 is None else catalog("xi", nu=nu0)
        for eps in (1, -1):
            unreduced = base_polynomial("uw", eps)
            reduced = reduced_polynomial(family, pset, eps)
            if nu0 is not None:
                reduced = substitute_nu(reduced, nu0)
            equal = 0
            tensor_ok = True
            for k in range(pairs):
                u = random_conforming_u(e_elem, rng)
                w = random_w(eps, rng)
                t_full = numeric_evaluate(unreduced, u, w)
                t_red = numeric_evaluate(reduced, u, w)
                if t_full == t_red:
                    equal += 1
                if k < 2:
                    checks = curvature_checks(t_red)
                    tensor_ok = tensor_ok and all(checks.values())
            okv = equal == pairs and tensor_ok
            rep.add(
                family,
                pset_label(pset),
                "" if nu0 is None else nu0,
                f"{eps:+d}",
                pairs,
                f"{equal}/{pairs}",
                "pass" if tensor_ok else "FAIL",
            )
            if not okv:
                rep.problem(
                    f"{family} P={pset_label(pset)} nu={nu0} eps={eps:+d}: "
                    f"equivalent {equal}/{pairs}, tensor checks "
                    f"{'pass' if tensor_ok else 'fail'}"
                )
    return rep


def gammahat_check() -> Report:
    rep = Report("check gammahat", ["claim", "result"])
    basis = left_ideal_basis(catalog("f_s"))
    ids = linear_identities(basis, (1,))
    reduced = reduce_polynomial(base_polynomial("uw", 1), ids)
    reference = TensorPolynomial(
        1,
        {
            (tuple(u), tuple(w)): parse_scalar(c)
            for u, w, c in expected.GAMMAHAT_TERMS
        },
    )
    term_match = reduced == reference
    rep.add("reduced formula equals 4-term reference", "pass" if term_match else "FAIL")
    if not term_match:
        rep.problem("fully symmetric reduction differs from the 4-term reference")
    rng = random.Random(RNG_SEED)
    pointwise = True
    for _ in range(5):
        u = random_conforming_u(catalog("f_s"), rng)
        w = random_w(1, rng)
        pointwise = pointwise and (
            numeric_evaluate(reduced, u, w) == numeric_evaluate(reference, u, w)
        )
    rep.add("pointwise agreement on random data", "pass" if pointwise else "FAIL")
    if not pointwise:
        rep.problem("pointwise comparison against the 4-term reference fails")
    return rep


def check_report(which: str) -> Report:
    runner = {
        "sigma-rho": sigma_rho_check,
        "thm65": thm65_check,
        "sec7": sec7_check,
        "curvature-oracle": curvature_oracle_check,
        "gammahat": gammahat_check,
    }.get(which)
    if runner is None:
        raise ValueError(f"unknown check {which!r}")
    return runner()


def all_reports(eps_mode: str = "both", fixture_dir=None) -> list[Report]:
    out = [table_report(t, eps_mode) for t in TABLE_NAMES]
    out += [appendix_report(a, eps_mode, fixture_dir) for a in APPENDIX_NAMES]
    out += [check_report(c) for c in CHECK_NAMES]
    return out


# ---------------------------------------------------------------------------
# Rendering.
# ---------------------------------------------------------------------------


def render_text(report: Report) -> str:
    lines = [f"== {report.name} =="]
    widths = [len(c) for c in report.columns]
    for row in report.rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    header = "  ".join(c.ljust(widths[i]) for i, c in enumerate(report.columns))
    lines.append(header)
    for row in report.rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    if report.ok:
        lines.append(f"PASS ({len(report.rows)} rows)")
    else:
        lines.append(f"FAIL ({len(report.problems)} problems)")
        lines.extend(f"  ! {p}" for p in report.problems)
    return "\n".join(lines)


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["report", *report.columns])
    for row in report.rows:
        writer.writerow([report.name, *row])
    writer.writerow([report.name, "STATUS", "ok" if report.ok else "fail"])
    for p in report.problems:
        writer.writerow([report.name, "PROBLEM", p])
    return buf.getvalue().rstrip("\n")


def render_json(report: Report) -> str:
    return json.dumps(
        {
            "name": report.name,
            "ok": report.ok,
            "columns": report.columns,
            "rows": report.rows,
            "problems": report.problems,
        },
        indent=2,
        sort_keys=True,
    )


def render(report: Report, fmt: str) -> str:
    if fmt == "text":
        return render_text(report)
    if fmt == "csv":
        return render_csv(report)
    if fmt == "json":
        return render_json(report)
    raise ValueError(f"unknown format {fmt!r}")
