"""Check orchestration and report emission.

run_all executes the fixed plan of checks for one configuration and returns
a VerificationReport.  The JSON rendering is canonical: sorted keys, floats
rounded to 12 significant digits, so identical configs and version produce
identical bytes apart from the wall-time fields (which golden comparisons
normalize away).  A check's status reflects the mathematical outcome (a
failing Morita property is a 'fail' even when that is the expected result);
--expect manifests map outcomes to exit codes.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import __version__ as _version
from . import catalog, layout, linalg, morita, star_algebra, subspaces, triple

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

#: Expected commutant dimensions per algebra: (algebra commutant, opposite
#: commutant, center of the complexified opposite algebra).
EXPECTED_COMMUTANT_DIMS = {
    "A_F": (112, 112, 4),
    "B_F": (112, 112, 4),
    "A_ev": (48, 48, 3),
}

RUN_PLAN = (
    "commutant_dimensions",
    "zeroth_order",
    "first_order",
    "sign_table",
    "grading_axioms",
    "dirac_decomposition",
    "one_forms",
    "clifford_odd",
    "clifford_even",
    "gamma_in_clifford_odd",
    "property_m",
    "property_m_with_grading",
    "zero_chain_grading",
    "zero_chain_obstruction",
    "irreducibility",
    "gauge_z6_kernel",
    "gauge_hypercharges",
    "gauge_adjoint_rep",
    "unitalization",
)


@dataclass
class CheckRecord:
    name: str
    status: str
    residuals: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)
    details: str = ""
    wall_time_s: float = 0.0


@dataclass
class VerificationReport:
    config: dict
    tolerance: float
    version: str
    checks: list

    def check(self, name):
        for record in self.checks:
            if record.name == name:
                return record
        raise KeyError(name)


def _config_echo(cfg):
    def cpl(z):
        return [float(np.real(z)), float(np.imag(z))]

    echo = {
        "algebra": cfg.algebra,
        "grading": cfg.grading,
        "dirac": cfg.dirac,
        "tol": cfg.tol,
    }
    if cfg.dirac in ("CC", "CC_plus_Gamma"):
        p = cfg.params
        echo["params"] = {
            "ups_nu": cpl(p.ups_nu), "ups_e": cpl(p.ups_e),
            "ups_u": cpl(p.ups_u), "ups_d": cpl(p.ups_d),
            "ups_R": cpl(p.ups_r), "omega": cpl(p.omega),
            "delta": float(p.delta),
        }
        if cfg.dirac == "CC_plus_Gamma":
            echo["params"]["gamma"] = float(p.gamma)
    return echo


def _seed_from_config(echo):
    digest = hashlib.sha256(
        json.dumps(echo, sort_keys=True).encode() + _version.encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _describe_operator(op, limit=6):
    """Deterministic short description: the largest entries by modulus."""
    op = np.asarray(op)
    flat = np.abs(op).ravel()
    order = np.argsort(flat, kind="stable")[::-1][:limit]
    parts = []
    for idx in order:
        if flat[idx] <= 1e-12:
            break
        r, c = divmod(int(idx), op.shape[1])
        v = op[r, c]
        parts.append(f"[{r},{c}]={v.real:.6g}{v.imag:+.6g}j")
    return "; ".join(parts)


class _Runner:
    def __init__(self, cfg):
        self.cfg = cfg
        self.tol = cfg.tol
        self.records = []
        self.cache = {}

    def run(self, name, fn):
        start = time.perf_counter()
        record = CheckRecord(name=name, status=FAIL)
        try:
            fn(record)
        except Exception as exc:  # keep the report complete on any failure
            record.status = FAIL
            record.details = f"error: {exc}"
        record.wall_time_s = time.perf_counter() - start
        self.records.append(record)

    def skip(self, name, reason):
        self.records.append(CheckRecord(name=name, status=SKIPPED, details=reason))


def run_all(cfg):
    """Execute every check of the fixed plan and assemble the report."""
    echo = _config_echo(cfg)
    rng = np.random.default_rng(_seed_from_config(echo))
    runner = _Runner(cfg)
    tol = cfg.tol
    t = catalog.build_triple(cfg)
    cache = runner.cache

    def commutant_dimensions(rec):
        alg_comm = subspaces.commutant(t.algebra_gens, tol=tol)
        opp_comm = subspaces.commutant(t.opposite_gens, tol=tol)
        opp_span = morita.opposite_span(t, tol=tol, unitalized=True)
        center = star_algebra.center(
            star_algebra.StarAlgebra(space=opp_span, unital=True), tol=tol)
        cache["algebra_commutant"] = alg_comm
        cache["opposite_commutant"] = opp_comm
        cache["opposite_span"] = opp_span
        expected = EXPECTED_COMMUTANT_DIMS[cfg.algebra]
        got = (alg_comm.dim, opp_comm.dim, center.dim)
        rec.dims = {"algebra_commutant": got[0], "opposite_commutant": got[1],
                    "opposite_center": got[2]}
        rec.details = f"expected {expected}"
        rec.status = PASS if got == expected else FAIL

    runner.run("commutant_dimensions", commutant_dimensions)

    def zeroth_order(rec):
        v = triple.zeroth_order_violation(t)
        rec.residuals["violation"] = v
        rec.status = PASS if v <= tol else FAIL

    runner.run("zeroth_order", zeroth_order)

    def first_order(rec):
        v = triple.first_order_violation(t)
        rec.residuals["violation"] = v
        cache["first_order_ok"] = v <= tol
        rec.status = PASS if v <= tol else FAIL

    runner.run("first_order", first_order)

    def sign_table_check(rec):
        st = triple.sign_table(t, tol=max(1e-10, tol))
        rec.residuals.update({f"{k}_residual": v for k, v in st.residuals.items()})
        rec.dims["eps"] = st.eps
        rec.dims["eps_prime"] = st.eps_prime
        if st.eps_dblprime is not None:
            rec.dims["eps_dblprime"] = st.eps_dblprime
        if st.ko_dimension is not None:
            rec.dims["ko_dimension"] = st.ko_dimension
        rec.details = ("vacuous: " + ", ".join(st.vacuous)) if st.vacuous else ""
        rec.status = PASS if st.ko_dimension is not None else FAIL

    runner.run("sign_table", sign_table_check)

    if t.grading is None:
        runner.skip("grading_axioms", "odd triple")
    else:
        def grading_axioms(rec):
            res = triple.axiom_residuals(t)
            keys = ("grading_involution", "grading_hermitian",
                    "grading_commutes_algebra", "grading_anticommutes_dirac")
            rec.residuals = {k: res[k] for k in keys}
            rec.status = PASS if all(res[k] <= tol for k in keys) else FAIL

        runner.run("grading_axioms", grading_axioms)

    first_ok = cache.get("first_order_ok", False)
    if not first_ok:
        runner.skip("dirac_decomposition", "first-order condition fails")
    else:
        def dirac_decomposition(rec):
            dec = triple.decompose_dirac(
                t, tol=tol,
                algebra_commutant=cache["algebra_commutant"],
                opposite_commutant=cache["opposite_commutant"])
            rec.residuals["residual"] = dec.residual
            if dec.j_residual is not None:
                rec.residuals["j_symmetric_residual"] = dec.j_residual
            rec.dims["ambiguity"] = dec.ambiguity_dim
            ok = dec.residual <= tol
            ok = ok and cache["opposite_commutant"].contains(dec.free_part)
            ok = ok and cache["algebra_commutant"].contains(dec.commuting_part)
            if dec.j_residual is not None:
                ok = ok and dec.j_residual <= tol * max(linalg.hs_norm(t.dirac), 1.0)
            rec.status = PASS if ok else FAIL

        runner.run("dirac_decomposition", dirac_decomposition)

    def one_forms_check(rec):
        om = morita.one_forms(t, tol=tol)
        cache["one_forms"] = om
        rec.dims["one_forms"] = om.dim
        alg_basis = morita.algebra_span(t, tol=tol).basis_matrices()
        worst = 0.0
        for _ in range(8):
            a = alg_basis[rng.integers(len(alg_basis))]
            b = alg_basis[rng.integers(len(alg_basis))]
            w = om.basis_matrices()[rng.integers(max(om.dim, 1))] if om.dim else None
            if w is not None:
                worst = max(worst, om.residual(a @ w @ b))
        rec.residuals["bimodule_closure"] = worst
        ok = worst <= tol * 10
        p = cfg.params
        couplings = [p.ups_nu, p.ups_e, p.ups_u, p.ups_d, p.omega, p.delta]
        if cfg.dirac == "CC_plus_Gamma":
            couplings.append(p.gamma)
        named_applicable = (cfg.algebra == "A_F"
                            and cfg.dirac in ("CC", "CC_plus_Gamma")
                            and all(abs(c) > 1e-12 for c in couplings))
        if named_applicable:
            gens = catalog.one_form_generators(
                p, include_gamma=(cfg.dirac == "CC_plus_Gamma"))
            mats = []
            for g in gens + [g.conj().T for g in gens]:
                for a in alg_basis:
                    for b in alg_basis:
                        mats.append(a @ g @ b)
            named = subspaces.span_of(mats, tol=tol)
            rec.dims["named_generator_bimodule"] = named.dim
            ok = ok and subspaces.equals(om, named)
            rec.details = "named-generator bimodule compared"
        else:
            rec.details = "named-generator comparison not applicable"
        rec.status = PASS if ok else FAIL

    runner.run("one_forms", one_forms_check)

    zeroth_ok = next(r for r in runner.records if r.name == "zeroth_order").status == PASS
    orders_ok = first_ok and zeroth_ok
    if not orders_ok:
        for name in ("clifford_odd", "clifford_even", "gamma_in_clifford_odd",
                     "property_m", "property_m_with_grading"):
            runner.skip(name, "order conditions fail")
    else:
        def clifford_odd(rec):
            cl = morita.clifford(t, even=False, tol=tol,
                                 one_form_space=cache.get("one_forms"))
            cache["clifford_odd"] = cl
            rec.dims["clifford_odd"] = cl.dim
            defect = star_algebra.closure_defect(cl.space)
            rec.residuals["closure_defect"] = defect
            rec.status = PASS if defect <= tol else FAIL

        runner.run("clifford_odd", clifford_odd)

        if t.grading is None:
            runner.skip("clifford_even", "odd triple")
        else:
            def clifford_even(rec):
                cl = morita.clifford(t, even=True, tol=tol,
                                     one_form_space=cache.get("one_forms"))
                cache["clifford_even"] = cl
                rec.dims["clifford_even"] = cl.dim
                odd = cache.get("clifford_odd")
                contained = all(cl.contains(b) for b in odd.basis_matrices())
                rec.details = f"odd contained in even: {contained}"
                rec.status = PASS if contained else FAIL

            runner.run("clifford_even", clifford_even)

        def gamma_membership(rec):
            cl = cache.get("clifford_odd")
            if cl is None:
                raise RuntimeError("clifford_odd unavailable")
            if t.grading is not None:
                member = cl.contains(t.grading)
                rec.details = "triple grading"
                rec.status = PASS if member else FAIL
            else:
                member_std = cl.contains(catalog.grading("standard"))
                member_non = cl.contains(catalog.grading("nonstandard"))
                rec.details = f"standard: {member_std}, nonstandard: {member_non}"
                rec.status = PASS if (member_std and member_non) else FAIL

        runner.run("gamma_in_clifford_odd", gamma_membership)

        def property_m_check(rec):
            verdict = morita.property_m(t, with_grading=False, tol=tol,
                                        clifford_odd=cache.get("clifford_odd"))
            cache["morita_odd"] = verdict
            rec.dims["clifford_odd"] = verdict.clifford_odd_dim
            rec.dims["commutant_odd"] = verdict.commutant_odd_dim
            rec.dims["opposite"] = verdict.opposite_dim
            if verdict.witness is not None:
                rec.details = "witness: " + _describe_operator(verdict.witness)
            rec.status = PASS if verdict.property_m else FAIL

        runner.run("property_m", property_m_check)

        if t.grading is None:
            runner.skip("property_m_with_grading", "odd triple")
        else:
            def property_m_grading(rec):
                verdict = morita.property_m(t, with_grading=True, tol=tol,
                                            clifford_odd=cache.get("clifford_odd"))
                rec.dims["clifford_even"] = verdict.clifford_even_dim
                rec.dims["commutant_even"] = verdict.commutant_even_dim
                rec.dims["opposite"] = verdict.opposite_dim
                if not verdict.property_m_with_grading and verdict.witness is not None:
                    rec.details = "witness: " + _describe_operator(verdict.witness)
                rec.status = PASS if verdict.property_m_with_grading else FAIL

            runner.run("property_m_with_grading", property_m_grading)

    def zero_chain_grading(rec):
        g = t.grading if t.grading is not None else catalog.grading("standard")
        member = morita.zero_chain_membership(g, t.algebra_gens, t.opposite_gens,
                                              tol=tol)
        rec.details = "triple grading" if t.grading is not None else "standard grading"
        rec.status = PASS if member else FAIL

    runner.run("zero_chain_grading", zero_chain_grading)

    if cfg.algebra == "A_ev":
        runner.skip("zero_chain_obstruction", "witness specific to the default algebra")
    else:
        def zero_chain_obstruction(rec):
            x = catalog.witness_catalog()["e15_e11"]
            probe = t if t.grading is not None else catalog.build_triple(
                catalog.TripleConfig(algebra=cfg.algebra, grading="standard",
                                     dirac=cfg.dirac, params=cfg.params,
                                     custom_matrix=cfg.custom_matrix, tol=tol))
            ok = morita.obstruction_check(x, probe, "zero_chain", tol=max(tol, 1e-10))
            rec.details = "commuting witness anticommutes with the grading"
            rec.status = PASS if ok else FAIL

        runner.run("zero_chain_obstruction", zero_chain_obstruction)

    def irreducibility(rec):
        verdict = morita.irreducible(t, tol=tol)
        rec.dims["real_commutant"] = verdict.commutant_dim_real
        rec.dims["selfadjoint_part"] = verdict.selfadjoint_dim
        if verdict.witness is not None:
            rec.details = "reducing projection: " + _describe_operator(verdict.witness)
        rec.status = PASS if verdict.irreducible else FAIL

    runner.run("irreducibility", irreducibility)

    def gauge_z6(rec):
        eye = np.eye(layout.HILBERT_DIM)
        scale = np.sqrt(layout.HILBERT_DIM)
        worst = max(linalg.hs_norm(catalog.pi_sm(el) - eye) / scale
                    for el in catalog.z6_elements())
        rec.residuals["kernel"] = worst
        rec.status = PASS if worst <= 1e-12 else FAIL

    runner.run("gauge_z6_kernel", gauge_z6)

    def gauge_hypercharges(rec):
        ok = True
        worst = 0.0
        for _ in range(10):
            theta = 0.05 + 0.4 * rng.random()
            lam = np.exp(1j * theta)
            op = catalog.pi_sm(catalog.GroupElement(
                lam, np.eye(2, dtype=complex), np.eye(3, dtype=complex)))
            for r in range(1, 9):
                for c in range(1, 5):
                    idx = layout.slot_index(r, c)
                    expected = int(layout.HYPERCHARGE_EXPONENTS[r - 1][c - 1])
                    recovered = int(round(float(np.angle(op[idx, idx])) / theta))
                    worst = max(worst, abs(op[idx, idx] - lam ** expected))
                    if recovered != expected:
                        ok = False
        rec.residuals["eigenvalue"] = worst
        rec.status = PASS if ok and worst <= 1e-12 else FAIL

    runner.run("gauge_hypercharges", gauge_hypercharges)

    def gauge_adjoint(rec):
        eye = np.eye(layout.HILBERT_DIM)
        scale = np.sqrt(layout.HILBERT_DIM)
        ident = catalog.GroupElement(1.0, np.eye(2, dtype=complex),
                                     np.eye(3, dtype=complex))
        worst = linalg.hs_norm(catalog.rho_degenerate(ident) - eye) / scale
        for _ in range(20):
            u = catalog.random_group_element(rng)
            v = catalog.random_group_element(rng)
            ru = catalog.rho_degenerate(u)
            rv = catalog.rho_degenerate(v)
            uv = catalog.GroupElement(u.phase * v.phase, u.weak @ v.weak,
                                      u.color @ v.color)
            worst = max(worst, linalg.hs_norm(ru @ rv - catalog.rho_degenerate(uv)) / scale)
            worst = max(worst, linalg.hs_norm(ru @ ru.conj().T - eye) / scale)
        for el in catalog.z6_elements():
            worst = max(worst, linalg.hs_norm(
                catalog.rho_degenerate(catalog.cover_map(el)) - eye) / scale)
        rec.residuals["defect"] = worst
        rec.status = PASS if worst <= 1e-12 else FAIL

    runner.run("gauge_adjoint_rep", gauge_adjoint)

    if cfg.algebra != "B_F":
        runner.skip("unitalization", "only meaningful for the degenerate representation")
    else:
        def unitalization(rec):
            alg = star_algebra.star_closure(t.algebra_gens, tol=tol)
            grown = star_algebra.unitalize(alg)
            target = subspaces.span_of(catalog.algebra_af_generators(), tol=tol)
            rec.dims["span"] = alg.dim
            rec.dims["unitalized"] = grown.dim
            ok = (alg.dim == 14 and grown.dim == 15
                  and subspaces.equals(grown.space, target))
            rec.status = PASS if ok else FAIL

        runner.run("unitalization", unitalization)

    order = {name: i for i, name in enumerate(RUN_PLAN)}
    records = sorted(runner.records, key=lambda r: order[r.name])
    return VerificationReport(config=echo, tolerance=cfg.tol,
                              version=_version, checks=records)


# ---------------------------------------------------------------------------
# Rendering


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in sorted(obj.items())}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def report_to_dict(report, normalize_timing=False):
    checks = []
    for rec in report.checks:
        checks.append({
            "name": rec.name,
            "status": rec.status,
            "residuals": rec.residuals,
            "dims": rec.dims,
            "details": rec.details,
            "wall_time_s": 0.0 if normalize_timing else rec.wall_time_s,
        })
    return {
        "config": report.config,
        "tolerance": report.tolerance,
        "version": report.version,
        "checks": checks,
    }


def render_json(report, normalize_timing=False):
    """Canonical JSON: sorted keys, 12-significant-digit floats."""
    payload = _round_floats(report_to_dict(report, normalize_timing=normalize_timing))
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render_text(report):
    lines = [
        f"fintriple {report.version}  tolerance {report.tolerance:g}",
        "config: " + ", ".join(f"{k}={report.config[k]}"
                               for k in ("algebra", "grading", "dirac")),
        "-" * 72,
    ]
    for rec in report.checks:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "skip"}[rec.status]
        extras = []
        for k, v in rec.dims.items():
            extras.append(f"{k}={v}")
        for k, v in rec.residuals.items():
            extras.append(f"{k}={v:.3e}")
        tail = ("  [" + ", ".join(extras) + "]") if extras else ""
        lines.append(f"{mark:>4}  {rec.name:<26}{tail}")
        if rec.details:
            lines.append(f"      {rec.details}")
    counts = {s: sum(1 for r in report.checks if r.status == s)
              for s in (PASS, FAIL, SKIPPED)}
    lines.append("-" * 72)
    lines.append(f"{counts[PASS]} pass, {counts[FAIL]} fail, {counts[SKIPPED]} skipped")
    return "\n".join(lines) + "\n"


def compare_with_expectations(report, expectations):
    """Mismatches between non-skipped checks and an expectations mapping."""
    mismatches = []
    for rec in report.checks:
        if rec.status == SKIPPED:
            continue
        expected = expectations.get(rec.name)
        if expected != rec.status:
            mismatches.append((rec.name, expected, rec.status))
    return mismatches
