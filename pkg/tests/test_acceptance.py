"""Acceptance criteria, one test per criterion.

Every identity here is exact: a criterion passes only when residuals are
identically zero polynomials (or exact rational zeros for the pointwise
checks).  Each test prints a single PASS/FAIL line; run with `pytest -s`
to see them as they complete.
"""

import io
import json
import time

from hirotaverify import closedform
from hirotaverify import verifier as V
from hirotaverify.cli import RunConfig, cmd_verify
from hirotaverify.laurent import ZERO, monomial
from hirotaverify.operators import FOperator, apply_F, hirota, hirota_dst
from hirotaverify.wronskian import (
    TauFamily,
    build_psi,
    det_cofactor,
    det_fraction_free,
    jacobi_residual,
    leading_minor,
    wronskian_matrix,
)

_FAMILIES: dict[int, TauFamily] = {}


def family(depth: int) -> TauFamily:
    for have in sorted(_FAMILIES):
        if have >= depth:
            return _FAMILIES[have]
    _FAMILIES[depth] = TauFamily.build(depth)
    return _FAMILIES[depth]


def conclude(number: int, description: str, ok: bool, started: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number:>2} {status}  {description} "
          f"({time.perf_counter() - started:.1f}s)")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_01_toda_suite():
    started = time.perf_counter()
    fam = family(5)
    ok = all(
        V.check_toda(fam, n, which).passed
        for which in ("tau", "g", "f")
        for n in range(1, 5)
    )
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < 120.0
    conclude(1, "bilinear lattice residuals zero for tau,g,f at n=1..4 under 2min",
             ok, started)


def test_criterion_02_jacobi_identity():
    started = time.perf_counter()
    ok = all(jacobi_residual(n).is_zero for n in (1, 2, 3))
    conclude(2, "Sylvester minor identity residual zero for n=1..3", ok, started)


def test_criterion_03_conjecture_suite():
    started = time.perf_counter()
    fam = family(5)
    ok = all(
        report.passed
        for n in range(1, 5)
        for report in V.check_conjecture(fam, n)
    )
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < 600.0
    conclude(3, "all four decomposition residuals zero for n=1..4 under 10min",
             ok, started)


def test_criterion_04_mixed_identity():
    started = time.perf_counter()
    fam = family(5)
    ok = fam.f[0].is_zero and fam.g[0] == monomial(1)
    ok = ok and all(V.check_mixed(fam, n).passed for n in range(1, 5))
    conclude(4, "mixed bilinear identity zero for n=1..4 with f0=0, g0=1",
             ok, started)


def test_criterion_05_closed_forms():
    started = time.perf_counter()
    fam = family(5)
    ok = all(
        closedform.w_formula(n) == closedform.w_recursive(n) for n in range(2, 13)
    )
    ok = ok and all(
        closedform.g_q0_closed(n) == closedform.g_q0_wronskian(n)
        and closedform.f_q0_closed(n) == closedform.f_q0_wronskian(n)
        for n in range(1, 7)
    )
    ok = ok and all(
        closedform.g_high(n) == fam.g[n].coeff_of_t(n)
        and closedform.g_low(n) == fam.g[n].coeff_of_t(-n)
        and closedform.f_high(n) == fam.f[n].coeff_of_t(n - 1)
        and closedform.f_low(n) == fam.f[n].coeff_of_t(-n + 1)
        for n in range(1, 6)
    )
    from hirotaverify.laurent import from_uv, parse

    ok = ok and closedform.g_high(2) == from_uv(monomial(4, ex=1, ey=3))
    ok = ok and closedform.f_high(2) == parse("x^3 + y^3 - x - y")
    conclude(5, "closed forms match determinants and extracted coefficients",
             ok, started)


def test_criterion_06_a_coefficients():
    started = time.perf_counter()
    a = closedform.a_coeff
    ok = [a(n) for n in (1, 2, 3, 4)] == [1, 1, 4, 144]
    corrected = all(a(n - 1) * a(n + 1) == n * n * a(n) ** 2 for n in range(2, 6))
    printed_fails_at_3 = a(2) * a(4) != 9 * a(3)
    report = V._check_a_facts()
    stated = report.note or ""
    ok = (ok and corrected and printed_fails_at_3 and report.passed
          and "holds" in stated and "fails" in stated)
    conclude(6, "A values exact; squared recursion holds, unsquared fails at n=3, "
                "both outcomes reported", ok, started)


def test_criterion_07_symmetries():
    started = time.perf_counter()
    fam = family(5)
    ok = True
    for n in range(1, 6):
        for report in V.check_symmetries(fam, n):
            if report.equation_id.startswith("prop4") and n > 4:
                continue  # beyond the required range, still expected to hold
            ok = ok and report.passed
    conclude(7, "t-inversion, reflection, sign and quarter-turn rules for n=1..5, "
                "corrected quarter-turn for n=1..4", ok, started)


def test_criterion_08_orderwise_systems():
    started = time.perf_counter()
    fam = family(4)
    ok = True
    for n in range(1, 4):
        for fam_name, (top, _) in V._toda_spans(n).items():
            for I in range(top + 1):
                ok = ok and V.check_orderwise_toda(fam, n, I, fam_name).passed
        for which in ("B1", "B2", "B3", "B4"):
            for I in range(V._nak_span(n, which) + 1):
                ok = ok and V.check_orderwise_nakamura(fam, n, I, which).passed

    # t-weighted sums rebuild the parent polynomials on both sides.
    for n in range(1, 4):
        for fam_name in ("g", "f", "mixed"):
            top, _ = V._toda_spans(n)[fam_name]
            shift = {"g": 2 * n, "f": 2 * n - 2, "mixed": 2 * n - 1}[fam_name]
            lhs_sum, rhs_sum = ZERO, ZERO
            for I in range(top + 1):
                lhs, rhs = V.orderwise_toda_sides(fam, n, I, fam_name)
                weight = monomial(1, et=shift - 2 * I)
                lhs_sum, rhs_sum = lhs_sum + lhs * weight, rhs_sum + rhs * weight
            if fam_name == "g":
                parent_l = hirota_dst(fam.g[n], fam.g[n])
                parent_r = 2 * (fam.g[n + 1] * fam.g[n - 1])
            elif fam_name == "f":
                parent_l = hirota_dst(fam.f[n], fam.f[n])
                parent_r = 2 * (fam.f[n + 1] * fam.f[n - 1])
            else:
                parent_l = hirota_dst(fam.f[n], fam.g[n])
                parent_r = fam.f[n + 1] * fam.g[n - 1] + fam.f[n - 1] * fam.g[n + 1]
            ok = ok and lhs_sum == parent_l and rhs_sum == parent_r
        for which in ("B1", "B2", "B3", "B4"):
            g, f = fam.g[n], fam.f[n]
            gs, fs = V.star(g), V.star(f)
            fop = FOperator(n)
            parent = {
                "B1": hirota("x", g, f, 1) - hirota("x", gs, fs, 1),
                "B2": hirota("y", g, f, 1) + hirota("y", gs, fs, 1),
                "B3": apply_F(fop, gs, f),
                "B4": apply_F(fop, gs, g) + apply_F(fop, fs, f),
            }[which]
            shift = 2 * n if which == "B4" else 2 * n - 1
            total = ZERO
            for I in range(V._nak_span(n, which) + 1):
                lhs, _ = V.orderwise_nakamura_sides(fam, n, I, which)
                total = total + lhs * monomial(1, et=shift - 2 * I)
            ok = ok and total == parent
    conclude(8, "order-by-order systems pass for n=1..3 and weighted sums "
                "rebuild the parent identities", ok, started)


def test_criterion_09_su11_invariance():
    started = time.perf_counter()
    fam = family(4)
    ok = True
    for index, params in enumerate(V.random_su11_params(5)):
        for n in range(1, 4):
            reports = V.check_su11(fam, n, params, pair_index=index)
            ok = ok and all(r.passed for r in reports)
    conclude(9, "5 random admissible transforms keep lattice, decomposition "
                "and mixed identities for n=1..3", ok, started)


def test_criterion_10_operator_convention_lock():
    started = time.perf_counter()
    report = V._check_weyl_lock(50, seed=421)
    conclude(10, "full and single-variable deformation operators agree on 50 "
                 "random x-only inputs", report.passed, started)


def test_criterion_11_determinism_and_oracle():
    started = time.perf_counter()
    ok = True
    psi = build_psi()
    big = wronskian_matrix(psi, 4)
    for dim in range(1, 5):
        sub = leading_minor(big, dim)
        ok = ok and det_fraction_free(sub) == det_cofactor(sub)
    from hirotaverify.operators import l_minus, l_plus
    from hirotaverify.wronskian import SymMatrix

    shifted = wronskian_matrix(l_plus(l_minus(psi)), 4)
    for dim in range(1, 5):
        sub = leading_minor(shifted, dim)
        ok = ok and det_fraction_free(sub) == det_cofactor(sub)
    ws = [closedform.w_recursive(k) for k in range(1, 8)]
    for dim in range(2, 5):
        hankel = SymMatrix(tuple(tuple(ws[i + j] for j in range(dim)) for i in range(dim)))
        ok = ok and det_fraction_free(hankel) == det_cofactor(hankel)

    def run_once() -> str:
        stream = io.StringIO()
        config = RunConfig(n_max=2, suites=["toda", "conjecture"],
                           report_format="json")
        assert cmd_verify(config, stream=stream) == 0
        payload = json.loads(stream.getvalue())
        for check in payload["checks"]:
            check["elapsed"] = None
        payload["summary"]["elapsed_total"] = None
        return json.dumps(payload, sort_keys=True)

    ok = ok and run_once() == run_once()
    conclude(11, "determinant algorithms agree through dim 4; reports are "
                 "byte-identical modulo timing", ok, started)


def test_criterion_12_ernst_numeric():
    started = time.perf_counter()
    fam = family(4)
    ok = True
    for n in (1, 2):
        reports = V.ernst_residual_numeric(fam, n)
        ok = ok and len(reports) >= 3 and all(r.passed for r in reports)
    conclude(12, "complex-potential residual exactly zero at 3 rational points "
                 "for n=1,2", ok, started)
