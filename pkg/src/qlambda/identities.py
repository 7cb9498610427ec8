"""Executable identity checks and the verification suite runner.

Each ``check_*`` operation instantiates one identity at concrete indices
and reports equality coefficient-by-coefficient in Q[l] (so a pass
certifies the identity for every value of the degeneracy parameter).
``run_suite`` drives bounded parameter grids over the registered checks,
plus seeded random instances for the two-series identity, and aggregates
deterministic, machine-readable reports.

Check ids: thm1 thm2 thm3 thm4 thm5 thm6 cor7 thm8.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from . import stirling
from .factorials import degen_falling, gen_binomial
from .fubini_bell import RFUBINI_DEGENERATE, PolyFamily, poly_by_sum, rfubini_numbers
from .gfun import classical_exp, degen_log_one_minus, inv_one_minus
from .harmonic import degen_harmonic, degen_hyperharmonic
from .kernel import QL, LambdaPoly, TruncSeries, XPoly
from .operators import theorem1_check, theorem2_check
from .report import CheckReport, Counterexample, first_mismatch, make_report

CHECK_IDS = ("thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "cor7", "thm8")


@lru_cache(maxsize=None)
def _x_over_one_minus_powers(order: int, kmax: int) -> tuple[TruncSeries, ...]:
    """(x/(1-x))^k for k = 0..kmax, all tracked to ``order``."""
    u = inv_one_minus(order - 1).shift(1) if order else TruncSeries.zero(QL, 0)
    powers = [TruncSeries.one(QL, order)]
    for _ in range(kmax):
        powers.append(powers[-1] * u)
    return tuple(powers)


def check_thm3(m: int, r: int, order: int) -> CheckReport:
    """Rational generating function of the r-Fubini polynomial at x/(1-x)."""
    if order < max(m, 1):
        raise ValueError("order must cover m (and be >= 1)")
    params = {"m": m, "r": r, "order": order}
    fpoly = poly_by_sum(PolyFamily(RFUBINI_DEGENERATE, r), m)
    powers = _x_over_one_minus_powers(order, fpoly.degree if fpoly.degree > 0 else 0)
    lhs = TruncSeries.zero(QL, order)
    for k in range(fpoly.degree + 1):
        c = fpoly.coeff(k)
        if not c.is_zero():
            lhs = lhs + powers[k].scale(c)
    lhs = lhs * inv_one_minus(order)
    rhs = TruncSeries(QL, (degen_falling(n + r, m) for n in range(order + 1)))
    return make_report("thm3", params, first_mismatch(lhs, rhs, "series"))


def check_thm3_numeric(m: int, r: int, lam: Fraction, tol_exponent: int) -> CheckReport:
    """Geometric-weighted sum against the polynomial value at x = 1."""
    params = {"kind": "numeric", "m": m, "r": r, "lambda": str(Fraction(lam)),
              "tol_exponent": tol_exponent}
    total = rfubini_numbers(m, r, lam, tol_exponent)
    exact = poly_by_sum(PolyFamily(RFUBINI_DEGENERATE, r), m).eval_x(1).subs(lam)
    if abs(total - exact) <= Fraction(1, 10 ** tol_exponent):
        return make_report("thm3", params, None)
    bad = Counterexample("partial sum vs polynomial value", str(total), str(exact))
    return make_report("thm3", params, bad)


def check_thm4(n: int) -> CheckReport:
    """First-order differential recurrence of the weighted polynomials."""
    if n < 0:
        raise ValueError("n must be >= 0")
    params = {"n": n}
    fam = PolyFamily("fubini-degenerate")
    fn = poly_by_sum(fam, n)
    x = XPoly.x()
    lhs = x * fn.derivative() + x * (x * fn).derivative() - fn * (LambdaPoly.param() * n)
    rhs = poly_by_sum(fam, n + 1)
    return make_report("thm4", params, first_mismatch(lhs, rhs, "polynomials"))


def check_thm5(n: int, r: int) -> CheckReport:
    """Hyperharmonic values as first-column unsigned r-Stirling entries."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be >= 1")
    params = {"n": n, "r": r}
    fam_r = stirling.StirlingFamily(stirling.S1R_UNSIGNED_DEGENERATE, r)
    lhs = degen_hyperharmonic(n, r) * math.factorial(n)
    rhs = stirling.stirling_value(fam_r, n, 1)
    bad = first_mismatch(lhs, rhs, "column identity")
    if bad is not None:
        return make_report("thm5", params, bad)

    fam_1 = stirling.StirlingFamily(stirling.S1R_UNSIGNED_DEGENERATE, 1)
    two_lam = LambdaPoly.param() * 2
    lhs2 = degen_harmonic(n) * math.factorial(n)
    rhs2 = two_lam * stirling.stirling_value(fam_1, n, 2) + stirling.unsigned_first_kind(n + 1, 2)
    bad = first_mismatch(lhs2, rhs2, "harmonic split")
    if bad is not None:
        return make_report("thm5", params, bad)

    lhs3 = stirling.stirling_value(fam_1, n, 1)
    bad = first_mismatch(lhs3, rhs2, "column two-term split")
    return make_report("thm5", params, bad)


def check_thm6(k: int, order: int) -> CheckReport:
    """Closed form of the k-th derivative of the harmonic generating series."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if order < k:
        raise ValueError("order must be >= k")
    params = {"k": k, "order": order}
    g = (-degen_log_one_minus(order + k)) * inv_one_minus(order + k)
    derived = g
    for _ in range(k):
        derived = derived.derive()
    binom = gen_binomial(LambdaPoly([k, -1]), k)
    hk = degen_harmonic(k)
    bracket = TruncSeries.const(QL, hk, order) - degen_log_one_minus(order).scale(binom)
    closed = inv_one_minus(order, k + 1) * bracket.scale(math.factorial(k))
    bad = first_mismatch(derived, closed, "derivative series")
    if bad is not None:
        return make_report("thm6", params, bad)
    constant = hk * math.factorial(k)
    bad = first_mismatch(derived.coeff(0), constant, "value at 0")
    return make_report("thm6", params, bad)


def check_cor7(n: int, k: int) -> CheckReport:
    """Hyperharmonic/harmonic relation through the shifted binomial."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    params = {"n": n, "k": k}
    binom = gen_binomial(LambdaPoly([k, -1]), k)
    lhs = binom * degen_hyperharmonic(n, k + 1)
    rhs = (degen_harmonic(n + k) - degen_harmonic(k)) * math.comb(n + k, k)
    return make_report("cor7", params, first_mismatch(lhs, rhs, "values"))


def check_thm8(m: int, r: int, order: int) -> CheckReport:
    """Harmonic-weighted power series against its Stirling expansion."""
    if order < max(m, 1):
        raise ValueError("order must cover m (and be >= 1)")
    params = {"m": m, "r": r, "order": order}
    lhs = TruncSeries(QL, (degen_harmonic(n) * degen_falling(n + r, m)
                           for n in range(order + 1)))
    fam = stirling.StirlingFamily(stirling.S2R_DEGENERATE, r)
    log_series = degen_log_one_minus(order)
    powers = _x_over_one_minus_powers(order, m)
    acc = TruncSeries.zero(QL, order)
    for k in range(m + 1):
        w = stirling.stirling_value(fam, m, k) * math.factorial(k)
        if w.is_zero():
            continue
        binom = gen_binomial(LambdaPoly([k, -1]), k)
        bracket = TruncSeries.const(QL, degen_harmonic(k), order) - log_series.scale(binom)
        acc = acc + (powers[k] * bracket).scale(w)
    rhs = acc * inv_one_minus(order)
    return make_report("thm8", params, first_mismatch(lhs, rhs, "series"))


@dataclass(frozen=True)
class SuiteBounds:
    """Parameter grids for run_suite; defaults match the acceptance gate."""

    thm1_jmax: int = 10
    thm1_mmax: int = 8
    thm1_rmax: int = 4
    thm2_trials: int = 100
    thm2_degmax: int = 6
    thm2_rmax: int = 3
    thm2_order: int = 16
    thm3_mmax: int = 8
    thm3_rmax: int = 3
    thm3_order: int = 20
    thm3_numeric_mmax: int = 4
    thm3_numeric_rmax: int = 2
    thm3_tol_exponent: int = 12
    thm4_nmax: int = 15
    thm5_nmax: int = 12
    thm5_rmax: int = 4
    thm6_kmax: int = 8
    thm6_order: int = 16
    cor7_nmax: int = 10
    cor7_kmax: int = 10
    thm8_mmax: int = 6
    thm8_rmax: int = 3
    thm8_order: int = 16

    def with_cli_overrides(self, nmax=None, rmax=None, order=None) -> "SuiteBounds":
        """Map the generic CLI limits onto each check's own bounds."""
        out = self
        if nmax is not None:
            out = replace(out, thm1_mmax=nmax, thm3_mmax=nmax, thm4_nmax=nmax,
                          thm5_nmax=nmax, thm6_kmax=nmax, cor7_nmax=nmax,
                          cor7_kmax=nmax, thm8_mmax=nmax)
        if rmax is not None:
            out = replace(out, thm1_rmax=rmax, thm2_rmax=rmax, thm3_rmax=rmax,
                          thm5_rmax=max(rmax, 1), thm8_rmax=rmax)
        if order is not None:
            out = replace(out, thm2_order=order, thm3_order=order,
                          thm6_order=order, thm8_order=order)
        return out


def _run_thm1(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    out = []
    for m in range(bounds.thm1_mmax + 1):
        for r in range(min(m, bounds.thm1_rmax) + 1):
            for mode in ("plain", "shifted"):
                out.append(theorem1_check(m, r, mode, bounds.thm1_jmax))
    return out


def _random_poly(rng: random.Random, degmax: int) -> XPoly:
    degree = rng.randint(0, degmax)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)]
    return XPoly([LambdaPoly.const(c) for c in coeffs])


def _named_g(name: str, order: int) -> TruncSeries:
    if name == "geometric":
        return inv_one_minus(order)
    if name == "exp":
        return classical_exp(order, QL)
    if name == "harmonic":
        return (-degen_log_one_minus(order)) * inv_one_minus(order)
    raise ValueError(f"unknown series name {name!r}")


def _run_thm2(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    polys = [_random_poly(rng, bounds.thm2_degmax) for _ in range(bounds.thm2_trials)]
    g_order = bounds.thm2_order + bounds.thm2_degmax
    out = []
    for name in ("exp", "geometric", "harmonic"):
        g = _named_g(name, g_order)
        for r in range(bounds.thm2_rmax + 1):
            params = {"g": name, "r": r, "order": bounds.thm2_order,
                      "trials": bounds.thm2_trials, "seed": seed}
            failure = None
            for i, f in enumerate(polys):
                rep = theorem2_check(f, g, r, bounds.thm2_order)
                if not rep.passed:
                    failure = Counterexample(f"trial {i}: {rep.counterexample.location}",
                                             rep.counterexample.lhs, rep.counterexample.rhs)
                    break
            out.append(make_report("thm2", params, failure))
    return out


def _run_thm3(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    out = []
    for m in range(bounds.thm3_mmax + 1):
        for r in range(bounds.thm3_rmax + 1):
            out.append(check_thm3(m, r, bounds.thm3_order))
    for lam in (Fraction(1, 3), Fraction(1, 2)):
        for m in range(bounds.thm3_numeric_mmax + 1):
            for r in range(bounds.thm3_numeric_rmax + 1):
                out.append(check_thm3_numeric(m, r, lam, bounds.thm3_tol_exponent))
    return out


def _run_thm4(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    return [check_thm4(n) for n in range(bounds.thm4_nmax + 1)]


def _run_thm5(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    return [check_thm5(n, r)
            for n in range(1, bounds.thm5_nmax + 1)
            for r in range(1, bounds.thm5_rmax + 1)]


def _run_thm6(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    return [check_thm6(k, bounds.thm6_order) for k in range(1, bounds.thm6_kmax + 1)]


def _run_cor7(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    return [check_cor7(n, k)
            for n in range(1, bounds.cor7_nmax + 1)
            for k in range(1, bounds.cor7_kmax + 1)]


def _run_thm8(bounds: SuiteBounds, seed: int) -> list[CheckReport]:
    return [check_thm8(m, r, bounds.thm8_order)
            for m in range(bounds.thm8_mmax + 1)
            for r in range(bounds.thm8_rmax + 1)]


_RUNNERS = {
    "thm1": _run_thm1,
    "thm2": _run_thm2,
    "thm3": _run_thm3,
    "thm4": _run_thm4,
    "thm5": _run_thm5,
    "thm6": _run_thm6,
    "cor7": _run_cor7,
    "thm8": _run_thm8,
}


def run_suite(selection, bounds: SuiteBounds | None = None, seed: int = 0) -> list[CheckReport]:
    """Run the selected checks over their bounded grids; deterministic output.

    Reports come back sorted by check id and then by parameters regardless
    of execution order.  Unknown ids raise with the list of valid ones.
    """
    ids = sorted(set(selection))
    for check_id in ids:
        if check_id not in _RUNNERS:
            raise ValueError(f"unknown check id {check_id!r}; valid ids: {', '.join(CHECK_IDS)}")
    if bounds is None:
        bounds = SuiteBounds()
    reports: list[CheckReport] = []
    for check_id in ids:
        reports.extend(_RUNNERS[check_id](bounds, seed))
    reports.sort(key=lambda rep: (rep.check_id,
                                  json.dumps(dict(rep.params), sort_keys=True, default=str)))
    return reports


def suite_json(reports) -> str:
    """Canonical JSON array for a report list (byte-stable for fixed inputs)."""
    return json.dumps([rep.to_json() for rep in reports], sort_keys=True, indent=2)


def _clear_identity_caches() -> None:
    _x_over_one_minus_powers.cache_clear()


stirling.register_cache_clearer(_clear_identity_caches)
