"""Identity catalog: every relation the library audits numerically.

Each entry carries a stable dotted catalog id (e.g. "2.30"), the suite it
belongs to, a default tolerance, and a generator that walks the audit grid
emitting one IdentityRecord per point.  Entries whose commonly printed
reading disagrees with the definition-consistent one fill the rhs_printed
and rhs_corrected channels separately; for the rest the two coincide.

Tolerances follow two bands: closed-form identities audit at 1e-10 or
tighter, while limit/product/series/derivative routes audit at the band the
route can actually sustain (1e-6 for the slow routes, 1e-9 for quadrature).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .core import (
    PkParams,
    best_central_diff,
    central_diff,
    ln_gamma_classical,
    richardson_diff,
)
from .records import IdentityRecord, make_record
from . import betapsi, gamma, hyper, pochhammer
from .pochhammer import PochSpec

__all__ = ["AuditGrid", "IdentityCheck", "CATALOG", "SUITES", "catalog_for_suite"]

SUITES = ("pochhammer", "gamma", "beta", "psi", "hyper")


@dataclass(frozen=True)
class AuditGrid:
    """Parameter axes for the audits; the default covers p<k, p=k, p>k."""

    ps: tuple[float, ...] = (0.5, 1.0, 2.0, 3.5)
    ks: tuple[float, ...] = (0.5, 1.0, 2.0, 3.0)
    xs: tuple[float, ...] = (0.3, 0.7, 1.1, 2.5, 4.9, 7.3)
    ys: tuple[float, ...] = (0.3, 1.1, 2.5, 7.3)
    ns: tuple[int, ...] = (0, 1, 2, 5, 11)
    ms: tuple[int, ...] = (2, 3, 4)
    product_terms: int = 100_000
    limit_index: int = 100_000
    series_terms: int = 100_000
    draws: int = 50

    @classmethod
    def default(cls) -> "AuditGrid":
        return cls()

    @classmethod
    def small(cls) -> "AuditGrid":
        return cls(
            ps=(1.0, 2.0),
            ks=(0.5, 2.0),
            xs=(0.7, 2.5),
            ys=(0.3, 1.1),
            ns=(0, 1, 5),
            ms=(2, 3),
            product_terms=20_000,
            limit_index=20_000,
            series_terms=20_000,
            draws=10,
        )

    def as_dict(self) -> dict:
        return {
            "p": list(self.ps),
            "k": list(self.ks),
            "x": list(self.xs),
            "y": list(self.ys),
            "n": list(self.ns),
            "m": list(self.ms),
            "product_terms": self.product_terms,
            "limit_index": self.limit_index,
            "series_terms": self.series_terms,
            "draws": self.draws,
        }


@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    suite: str
    tol: float
    run: Callable[[AuditGrid, float], Iterator[IdentityRecord]]
    note: str = ""


def _pkx_points(grid: AuditGrid) -> Iterator[dict]:
    for p in grid.ps:
        for k in grid.ks:
            for x in grid.xs:
                yield {"p": p, "k": k, "x": x}


def _pkxn_points(grid: AuditGrid, ns: tuple[int, ...]) -> Iterator[dict]:
    for base in _pkx_points(grid):
        for n in ns:
            yield {**base, "n": float(n)}


def _positive_ns(grid: AuditGrid, cap: int = 99) -> tuple[int, ...]:
    return tuple(n for n in grid.ns if 1 <= n <= cap)


def _spec(point: dict) -> PochSpec:
    return PochSpec(point["x"], int(point["n"]), PkParams(point["p"], point["k"]))


# ---------------------------------------------------------------------------
# pochhammer suite


def _run_symmetric(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkxn_points(grid, _positive_ns(grid)):
        spec = _spec(point)
        lhs = pochhammer.poch_direct(spec)
        rhs = pochhammer.poch_symmetric(spec)
        yield make_record("2.2", point, lhs, rhs, rhs, tol)


def _run_poch_dk(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkxn_points(grid, _positive_ns(grid, cap=8)):
        p, k, x, n = point["p"], point["k"], point["x"], int(point["n"])

        def as_k(kk: float, p=p, x=x, n=n) -> float:
            return pochhammer.poch_direct(PochSpec(x, n, PkParams(p, kk)))

        lhs = best_central_diff(as_k, k)
        spec = _spec(point)
        yield make_record(
            "2.4", point, lhs, pochhammer.poch_dk_printed(spec), pochhammer.poch_dk(spec), tol
        )


def _run_poch_dp(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkxn_points(grid, grid.ns[: min(len(grid.ns), 4)]):
        p, k, x, n = point["p"], point["k"], point["x"], int(point["n"])

        def as_p(pp: float, k=k, x=x, n=n) -> float:
            return pochhammer.poch_direct(PochSpec(x, n, PkParams(pp, k)))

        lhs = best_central_diff(as_p, p)
        rhs = pochhammer.poch_dp(_spec(point))
        yield make_record("2.5", point, lhs, rhs, rhs, tol)


def _make_rescale_runner(identity_id: str) -> Callable:
    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        for point in _pkxn_points(grid, _positive_ns(grid, cap=5)):
            for s_new in grid.ks:
                pt = {**point, "s": s_new}
                spec = _spec(point)
                p, k = point["p"], point["k"]
                if identity_id in ("2.8", "2.9"):
                    lhs = pochhammer.poch_direct(PochSpec(point["x"], spec.n, PkParams(p, s_new)))
                else:
                    lhs = pochhammer.poch_direct(spec)
                rhs = pochhammer.poch_rescale(spec, s_new, identity_id)
                yield make_record(identity_id, pt, lhs, rhs, rhs, tol)

    return run


def _run_reduce(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkxn_points(grid, grid.ns):
        spec = _spec(point)
        lhs = pochhammer.poch_direct(spec)
        rhs = pochhammer.poch_reduce(spec)
        yield make_record("2.20", point, lhs, rhs, rhs, tol)


def _run_generalized(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkxn_points(grid, _positive_ns(grid, cap=5)):
        for q in (1, 2, 3):
            pt = {**point, "q": float(q)}
            spec = _spec(point)
            lhs = pochhammer.poch_direct(PochSpec(spec.x, spec.n * q, spec.params))
            rhs = pochhammer.poch_generalized(spec, q)
            yield make_record("2.21", pt, lhs, rhs, rhs, tol)


def _run_poch_recurrence_233(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkxn_points(grid, _positive_ns(grid)):
        yield pochhammer.check_poch_recurrence("2.33", _spec(point), tol=tol)


def _run_poch_recurrence_234(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    js = tuple(n for n in grid.ns if n <= 5)
    for point in _pkxn_points(grid, grid.ns[: min(len(grid.ns), 4)]):
        for j in js:
            yield pochhammer.check_poch_recurrence("2.34", _spec(point), j=j, tol=tol)


# ---------------------------------------------------------------------------
# gamma suite


def _make_limit_runner(variant: str) -> Callable:
    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        for point in _pkx_points(grid):
            params = PkParams(point["p"], point["k"])
            lhs = gamma.gamma_closed(params, point["x"]).value
            rhs = gamma.gamma_limit(
                params, point["x"], grid.limit_index, accelerate=True, variant=variant
            ).value
            yield make_record(variant, point, lhs, rhs, rhs, tol)

    return run


def _make_integral_runner(identity_id: str, a_scale: float) -> Callable:
    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        for point in _pkx_points(grid):
            params = PkParams(point["p"], point["k"])
            lhs = gamma.gamma_closed(params, point["x"]).value
            rhs = gamma.gamma_integral(params, point["x"], a_scale=a_scale).value
            yield make_record(identity_id, {**point, "a": a_scale}, lhs, rhs, rhs, tol)

    return run


def _run_euler_product(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkx_points(grid):
        params = PkParams(point["p"], point["k"])
        lhs = gamma.gamma_closed(params, point["x"]).value
        corrected = gamma.gamma_euler_product(params, point["x"], grid.product_terms).value
        # the uncorrected prefactor is p^(x/k)/k instead of p^(x/k)/x
        printed = corrected * (point["x"] / point["k"])
        yield make_record("2.15", point, lhs, printed, corrected, tol)


def _make_recip_runner(identity_id: str) -> Callable:
    evaluator = (
        gamma.gamma_limit_product_recip if identity_id == "2.16" else gamma.gamma_weierstrass_recip
    )

    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        for point in _pkx_points(grid):
            params = PkParams(point["p"], point["k"])
            lhs = gamma.gamma_closed(params, point["x"]).value
            recip = evaluator(params, point["x"], grid.product_terms).value
            corrected = 1.0 / recip
            # the uncorrected prefactor divides the reciprocal by k on top
            printed = point["k"] * corrected
            yield make_record(identity_id, point, lhs, printed, corrected, tol)

    return run


def _run_k_reduction(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkx_points(grid):
        params = PkParams(point["p"], point["k"])
        p, k, x = point["p"], point["k"], point["x"]
        z = x / k
        lhs = gamma.gamma_closed(params, x).value
        # route through the one-parameter reduction (p/k)^(x/k) * k^(x/k-1) Gamma(x/k)
        lg = ln_gamma_classical(z)
        rhs = lg.sign * math.exp(z * math.log(p / k) + (z - 1.0) * math.log(k) + lg.value)
        yield make_record("2.19", point, lhs, rhs, rhs, tol)


def _make_fundamental_runner(identity_id: str) -> Callable:
    needs_n = identity_id in ("2.22", "2.24", "2.25", "2.26")
    needs_m = identity_id == "2.32"
    cap = 5 if identity_id in ("2.25", "2.26") else 99

    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        if needs_n:
            points = _pkxn_points(grid, tuple(n for n in grid.ns if n <= cap))
        elif needs_m:
            points = ({**base, "m": float(m)} for base in _pkx_points(grid) for m in grid.ms)
        else:
            points = _pkx_points(grid)
        for point in points:
            yield gamma.check_gamma_identity(identity_id, point, tol=tol)

    return run


# ---------------------------------------------------------------------------
# beta suite


def _beta_points(grid: AuditGrid) -> Iterator[dict]:
    for k in grid.ks:
        for x in grid.ys:
            for y in grid.ys:
                yield {"p": 1.0, "k": k, "x": x, "y": y}


def _run_beta_definition(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for k in grid.ks:
        for p in grid.ps:
            for x in grid.ys:
                for y in grid.ys:
                    point = {"p": p, "k": k, "x": x, "y": y}
                    params = PkParams(p, k)
                    gx = gamma.gamma_closed(params, x)
                    gy = gamma.gamma_closed(params, y)
                    gxy = gamma.gamma_closed(params, x + y)
                    lhs = math.exp(gx.ln_value + gy.ln_value - gxy.ln_value)
                    rhs = betapsi.beta_closed(betapsi.BetaArgs(x, y, params)).value
                    yield make_record("3.1", point, lhs, rhs, rhs, tol)


def _make_beta_integral_runner(identity_id: str, form: str) -> Callable:
    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        for point in _beta_points(grid):
            args = betapsi.BetaArgs(point["x"], point["y"], PkParams(point["p"], point["k"]))
            lhs = betapsi.beta_closed(args).value
            rhs = betapsi.beta_integral(args, form).value
            yield make_record(identity_id, point, lhs, rhs, rhs, tol)

    return run


# ---------------------------------------------------------------------------
# psi suite


def _ln_gamma_fn(params: PkParams):
    def f(t: float) -> float:
        return gamma.gamma_closed(params, t).ln_value

    return f


def _run_psi_definition(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkx_points(grid):
        params = PkParams(point["p"], point["k"])
        lhs = richardson_diff(_ln_gamma_fn(params), point["x"], h=1e-3 * min(1.0, point["x"]))
        rhs = betapsi.psi(params, point["x"]).value
        yield make_record("3.6", point, lhs, rhs, rhs, tol)


def _run_psi_closed_forms(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkx_points(grid):
        params = PkParams(point["p"], point["k"])
        lhs = richardson_diff(_ln_gamma_fn(params), point["x"], h=1e-3 * min(1.0, point["x"]))
        corrected = betapsi.psi(params, point["x"]).value
        printed = betapsi.psi_printed(params, point["x"])
        yield make_record("3.8", point, lhs, printed, corrected, tol)


def _run_ln_gamma_via_psi(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkx_points(grid):
        params = PkParams(point["p"], point["k"])
        lhs = gamma.gamma_closed(params, point["x"]).ln_value
        rhs = betapsi.ln_gamma_via_psi(params, point["x"]).value
        yield make_record("3.7", point, lhs, rhs, rhs, tol)


def _make_psi_series_runner(form: str) -> Callable:
    def run(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
        for point in _pkx_points(grid):
            params = PkParams(point["p"], point["k"])
            lhs = betapsi.psi(params, point["x"]).value
            corrected = betapsi.psi_series(params, point["x"], form, grid.series_terms).value
            lnp_k = math.log(point["p"]) / point["k"]
            # the un-normalized family scales the digamma part by k
            printed = lnp_k + point["k"] * (corrected - lnp_k)
            yield make_record(form, point, lhs, printed, corrected, tol)

    return run


def _run_polygamma(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for point in _pkx_points(grid):
        params = PkParams(point["p"], point["k"])
        for r in (2, 3):
            pt = {**point, "r": float(r)}

            def psi_at(t: float, params=params) -> float:
                return betapsi.psi(params, t).value

            h = 1e-3 * min(1.0, point["x"])
            if r == 2:
                lhs = richardson_diff(psi_at, point["x"], h=h)
            else:
                lhs = central_diff(psi_at, point["x"], h=max(h, 1e-4 * point["x"]), order=2)
            corrected = betapsi.polygamma(params, point["x"], r).value
            printed = betapsi.polygamma_printed(params, point["x"], r)
            yield make_record("3.11", pt, lhs, printed, corrected, tol)


# ---------------------------------------------------------------------------
# hyper suite


def _draw_params(rng: np.random.Generator):
    # Ratios a/k stay below ~4.5 and the argument below, in effect, half the
    # unit disk after scaling: round-trip agreement at 1e-12 is then a fair
    # ask of double precision even for alternating terms.
    shapes = ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2))
    r, q = shapes[int(rng.integers(0, len(shapes)))]
    upper = tuple(
        (float(rng.uniform(0.2, 3.0)), float(rng.uniform(0.7, 2.0)), float(rng.uniform(0.7, 2.0)))
        for _ in range(r)
    )
    lower = tuple(
        (float(rng.uniform(0.6, 3.0)), float(rng.uniform(0.7, 2.0)), float(rng.uniform(0.7, 2.0)))
        for _ in range(q)
    )
    return hyper.HyperParams(upper=upper, lower=lower)


def _run_reduction_draws(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    rng = np.random.default_rng(20240211)
    for i in range(grid.draws):
        hp = _draw_params(rng)
        cls = hyper.classify(hp)
        span = cls.radius / 2.0 if cls.radius is not None else 0.5 / max(1.0, hp.scale)
        x = float(rng.uniform(-span, span))
        point = {"draw": float(i), "x": x}
        lhs = hyper.hyper_series(hp, x).value
        reduced = hyper.reduce_classical(hp)
        classical = hyper.HyperParams(
            upper=tuple((a, 1.0, 1.0) for a in reduced.classical_upper),
            lower=tuple((b, 1.0, 1.0) for b in reduced.classical_lower),
        )
        rhs = hyper.hyper_series(classical, reduced.scale * x).value
        yield make_record("4.2", point, lhs, rhs, rhs, tol)


def _run_ode_coefficients(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    rng = np.random.default_rng(20240212)
    for i in range(grid.draws):
        hp = _draw_params(rng)
        residual = hyper.ode_coefficient_residual(hp, n_terms=50)
        yield IdentityRecord(
            identity_id="4.3",
            grid_point={"draw": float(i)},
            lhs=residual,
            rhs_printed=0.0,
            rhs_corrected=0.0,
            rel_err_printed=residual,
            rel_err_corrected=residual,
            printed_pass=bool(residual <= tol),
            corrected_pass=bool(residual <= tol),
        )


def _run_binomial(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    for p in grid.ps:
        for k in grid.ks:
            for a in (0.3, 1.1, 2.5, k):
                for frac in (0.25, 0.5, 0.9):
                    x = frac / p
                    point = {"p": p, "k": k, "a": a, "x": x}
                    params = PkParams(p, k)
                    series = hyper.pk_binomial(a, params, x).value
                    closed = math.exp(-(a / k) * math.log1p(-x * p))
                    yield make_record("4.4", point, series, closed, closed, tol)


def _run_confluent(grid: AuditGrid, tol: float) -> Iterator[IdentityRecord]:
    cases = [
        (1.0, 1.0, 2.0, 1.0, 1.0),
        (1.0, 1.0, 3.0, 1.0, 0.5),
        (0.5, 1.0, 2.0, 1.0, 1.0),
        (2.0, 2.0, 4.0, 2.0, 1.0),
        (1.5, 1.0, 4.5, 1.0, -1.0),
        (0.7, 2.0, 3.0, 2.0, 2.0),
        (2.5, 1.0, 6.0, 1.0, 0.3),
        (1.0, 0.5, 1.5, 0.5, 0.8),
        (3.0, 2.0, 5.0, 1.0, -0.4),
        (0.9, 1.0, 2.2, 1.0, 1.7),
    ]
    for i, (a, k, b, s, x) in enumerate(cases):
        hp = hyper.HyperParams(upper=((a, 1.0, k),), lower=((b, 1.0, s),))
        point = {"case": float(i), "a": a, "k": k, "b": b, "s": s, "x": x}
        lhs = hyper.hyper_series(hp, x).value
        rhs = hyper.confluent_integral(hp, x).value
        yield make_record("4.5", point, lhs, rhs, rhs, tol)


# ---------------------------------------------------------------------------
# catalog

CATALOG: tuple[IdentityCheck, ...] = (
    # pochhammer
    IdentityCheck("2.2", "pochhammer", 5e-14, _run_symmetric, "elementary-symmetric expansion"),
    IdentityCheck("2.4", "pochhammer", 1e-6, _run_poch_dk, "d/dk vs central differences"),
    IdentityCheck("2.5", "pochhammer", 1e-6, _run_poch_dp, "d/dp vs central differences"),
    IdentityCheck("2.8", "pochhammer", 1e-13, _make_rescale_runner("2.8"), "step rescale"),
    IdentityCheck("2.9", "pochhammer", 1e-13, _make_rescale_runner("2.9"), "step+weight rescale"),
    IdentityCheck("2.10", "pochhammer", 1e-13, _make_rescale_runner("2.10"), "weight rescale"),
    IdentityCheck("2.20", "pochhammer", 1e-13, _run_reduce, "classical reduction"),
    IdentityCheck("2.21", "pochhammer", 1e-12, _run_generalized, "block multiplication"),
    IdentityCheck("2.33", "pochhammer", 1e-12, _run_poch_recurrence_233, "difference recurrence"),
    IdentityCheck("2.34", "pochhammer", 1e-13, _run_poch_recurrence_234, "index splitting"),
    # gamma
    IdentityCheck("2.6", "gamma", 1e-6, _make_limit_runner("2.6"), "defining limit, n+1 factors"),
    IdentityCheck("2.7", "gamma", 1e-6, _make_limit_runner("2.7"), "defining limit"),
    IdentityCheck("2.14", "gamma", 1e-9, _make_integral_runner("2.14", 1.0), "integral form"),
    IdentityCheck("2.15", "gamma", 1e-6, _run_euler_product, "Euler product"),
    IdentityCheck("2.16", "gamma", 1e-6, _make_recip_runner("2.16"), "limit-product reciprocal"),
    IdentityCheck("2.17", "gamma", 1e-9, _make_integral_runner("2.17", 5.0), "scaled integral"),
    IdentityCheck("2.18", "gamma", 1e-6, _make_recip_runner("2.18"), "Weierstrass reciprocal"),
    IdentityCheck("2.19", "gamma", 1e-13, _run_k_reduction, "one-parameter reduction"),
    IdentityCheck("2.22", "gamma", 1e-10, _make_fundamental_runner("2.22"), "Gamma ratio"),
    IdentityCheck("2.23", "gamma", 1e-10, _make_fundamental_runner("2.23"), "functional equation"),
    IdentityCheck("2.24", "gamma", 1e-10, _make_fundamental_runner("2.24"), "n-step recurrence"),
    IdentityCheck("2.25", "gamma", 1e-10, _make_fundamental_runner("2.25"), "downward product"),
    IdentityCheck("2.26", "gamma", 1e-10, _make_fundamental_runner("2.26"), "alternating ratio"),
    IdentityCheck("2.27", "gamma", 1e-10, _make_fundamental_runner("2.27"), "value at 1"),
    IdentityCheck("2.28", "gamma", 1e-10, _make_fundamental_runner("2.28"), "value at k"),
    IdentityCheck("2.29", "gamma", 1e-10, _make_fundamental_runner("2.29"), "value at p"),
    IdentityCheck("2.30", "gamma", 1e-10, _make_fundamental_runner("2.30"), "negated reflection"),
    IdentityCheck("2.31", "gamma", 1e-10, _make_fundamental_runner("2.31"), "reflection"),
    IdentityCheck("2.32", "gamma", 1e-10, _make_fundamental_runner("2.32"), "multiplication"),
    # beta
    IdentityCheck("3.1", "beta", 1e-12, _run_beta_definition, "Gamma-ratio definition"),
    IdentityCheck("3.2", "beta", 1e-9, _make_beta_integral_runner("3.2", "unit"), "unit integral"),
    IdentityCheck(
        "3.3", "beta", 1e-9, _make_beta_integral_runner("3.3", "symmetric"), "symmetric integral"
    ),
    IdentityCheck(
        "3.4", "beta", 1e-9, _make_beta_integral_runner("3.4", "semiaxis"), "semiaxis integral"
    ),
    # psi
    IdentityCheck("3.6", "psi", 1e-7, _run_psi_definition, "log-derivative definition"),
    IdentityCheck("3.7", "psi", 1e-8, _run_ln_gamma_via_psi, "antiderivative recovery"),
    IdentityCheck("3.8", "psi", 1e-7, _run_psi_closed_forms, "closed form vs derivative"),
    IdentityCheck("3.9", "psi", 1e-6, _make_psi_series_runner("3.9"), "harmonic-lattice series"),
    IdentityCheck("3.10", "psi", 1e-6, _make_psi_series_runner("3.10"), "shifted-lattice series"),
    IdentityCheck("3.11", "psi", 1e-4, _run_polygamma, "polygamma vs differences"),
    # hyper
    IdentityCheck("4.2", "hyper", 1e-12, _run_reduction_draws, "classical reduction round-trip"),
    IdentityCheck("4.3", "hyper", 1e-13, _run_ode_coefficients, "ODE coefficient recurrence"),
    IdentityCheck("4.4", "hyper", 1e-12, _run_binomial, "binomial identity"),
    IdentityCheck("4.5", "hyper", 1e-8, _run_confluent, "confluent integral"),
)


def catalog_for_suite(suite: str) -> tuple[IdentityCheck, ...]:
    if suite == "all":
        return CATALOG
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    return tuple(c for c in CATALOG if c.suite == suite)
