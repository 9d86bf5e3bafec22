"""
Inequality checks for L_p affine surface areas

Each check evaluates both sides of one inequality on a body and returns
an InequalityReport. Margins are ratio - 1 in the claimed direction
(larger side over smaller side), so a positive margin means the inequality
holds strictly. The verdict compares the margin with a tolerance built
from the quadrature error estimates of every value involved:

    tolerance = max(floor, factor * (sum_i |w_i| rel_err_i + fit_term))

where w_i is the exponent a value enters the inequality with and
fit_term = fit_residual * (1 + harmonics^2) for Fourier-fitted polars.
"""
import math
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..asa import AsaCalculator, AsaValue, check_exponent
from ..bodies.convex import (
    ConvexBody,
    PlanarPolar,
    PlanarSupport,
    make_rounded_intersection,
    polar_body,
    volume,
)
from ..exceptions import ParameterError, PreconditionError, UnsupportedKindError
from ..quadrature import SphereGrid, ball_volume, grid_arcs

DEFAULT_POLICY = {"factor": 10.0, "floor": 1e-7}
DEFAULT_SANTALO_C = 0.25

VERDICTS = ("holds", "violated", "equality-case", "divergent-skip")

REPORT_COLUMNS = [
    "name",
    "body_descriptor",
    "parameters",
    "lhs",
    "rhs",
    "margin",
    "tolerance_used",
    "verdict",
    "grid",
    "note",
]

HOLDER_CASES = (
    "-n<s<r<t",
    "s<-n<t<r",
    "r<t<-n<s",
    "t<r<s<-n",
    "s<r<t<-n",
    "r<s<-n<t",
    "t<-n<s<r",
    "-n<t<r<s",
)


@dataclass
class InequalityReport:
    """
    Outcome of one inequality check on one body.

    ``lhs`` and ``rhs`` are the two sides as written in the inequality
    named by ``name``; ``margin`` is measured in the claimed direction.
    """
    name: str
    body_descriptor: str
    lhs: float
    rhs: float
    margin: float
    tolerance_used: float
    verdict: str
    parameters: str = ""
    grid: str = ""
    note: str = ""

    @property
    def violated(self) -> bool:
        return self.verdict == "violated"

    def to_dict(self) -> Dict[str, object]:
        row = asdict(self)
        return {key: row[key] for key in REPORT_COLUMNS}


class CheckContext:
    """
    Shared values for all checks on one (body, grid) pair.

    Holds the as_p caches for K and, once requested, for the polar body,
    so that a suite of checks evaluates each exponent once.
    """

    def __init__(self, body: ConvexBody, grid: SphereGrid, policy: Optional[Dict[str, float]] = None,
                 polar: Optional[ConvexBody] = None):
        self.body = body
        self.grid = grid
        self.policy = dict(DEFAULT_POLICY if policy is None else policy)
        self.calc = AsaCalculator(body, grid)
        self._polar = polar
        self._polar_calc = None
        self._volume = None

    @property
    def n(self) -> int:
        return self.body.dimension

    @property
    def descriptor(self) -> str:
        return f"{self.body.describe()} [{self.body.provenance}]"

    @property
    def volume(self) -> float:
        if self._volume is None:
            self._volume = volume(self.body, self.grid)
        return self._volume

    @property
    def polar_volume(self) -> float:
        """|K°| = as_inf(K) / n, from the body's own support function."""
        return self.asa(math.inf).value / self.n

    @property
    def polar(self) -> ConvexBody:
        if self._polar is None:
            self._polar = polar_body(self.body)
        return self._polar

    @property
    def polar_grid(self) -> SphereGrid:
        """Grid for the polar: arc grids move to the polar's own breakpoints."""
        if self.grid.scheme == "arc-gauss" and isinstance(self.polar, PlanarPolar):
            return grid_arcs(self.polar.breakpoints, self.grid.resolution)
        return self.grid

    @property
    def polar_calc(self) -> AsaCalculator:
        if self._polar_calc is None:
            self._polar_calc = AsaCalculator(self.polar, self.polar_grid)
        return self._polar_calc

    def asa(self, p: float) -> AsaValue:
        return self.calc.get(p)

    def polar_asa(self, p: float) -> AsaValue:
        return self.polar_calc.get(p)

    def fit_term(self, polar: bool = False) -> float:
        bodies = [self.body] + ([self.polar] if polar else [])
        term = 0.0
        for body in bodies:
            harmonics = body.harmonics if isinstance(body, PlanarSupport) else 0
            term += body.fit_residual * (1.0 + harmonics ** 2)
        return term

    def tolerance(self, weighted_error: float, polar: bool = False) -> float:
        combined = weighted_error + self.fit_term(polar)
        return max(self.policy["floor"], self.policy["factor"] * combined)


def _as_context(body: Union[ConvexBody, CheckContext], grid: Optional[SphereGrid],
                policy: Optional[Dict[str, float]]) -> CheckContext:
    if isinstance(body, CheckContext):
        return body
    if grid is None:
        raise PreconditionError("A quadrature grid is required")
    return CheckContext(body, grid, policy)


def _power(x: float, e: float) -> float:
    if x == 0.0:
        return 0.0 if e > 0 else (1.0 if e == 0 else math.inf)
    return x ** e


def _weighted_error(*terms: Tuple[AsaValue, float]) -> float:
    return float(sum(abs(w) * value.relative_error for value, w in terms))


def verdict_for(margin: float, tolerance: float) -> str:
    """equality-case within tolerance, holds above it, violated below it."""
    if abs(margin) <= tolerance:
        return "equality-case"
    return "holds" if margin > tolerance else "violated"


def _skip(name: str, ctx: CheckContext, parameters: str, note: str) -> InequalityReport:
    return InequalityReport(name, ctx.descriptor, math.nan, math.nan, math.nan,
                            ctx.policy["floor"], "divergent-skip", parameters, ctx.grid.label, note)


def _compare(name: str, ctx: CheckContext, lhs: float, rhs: float, relation: str,
             tolerance: float, parameters: str, note: str = "") -> InequalityReport:
    """Report for lhs <= rhs (relation '<=') or lhs >= rhs (relation '>=')."""
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        return _skip(name, ctx, parameters, note or "non-finite side")
    small, large = (lhs, rhs) if relation == "<=" else (rhs, lhs)
    margin = large / small - 1.0 if small > 0.0 else large - small
    return InequalityReport(name, ctx.descriptor, lhs, rhs, margin, tolerance,
                            verdict_for(margin, tolerance), parameters, ctx.grid.label, note)


def _divergent(*values: AsaValue) -> Optional[str]:
    bad = [v for v in values if v.divergent]
    if bad:
        return "divergent as_p at p = " + ", ".join(f"{v.p:g}" for v in bad)
    return None


def _caveats(*values: AsaValue) -> str:
    return "; ".join(sorted({v.caveat for v in values if v.caveat}))


def _finite(name: str, *exponents: float):
    for p in exponents:
        if not math.isfinite(float(p)):
            raise ParameterError(f"{name} needs finite exponents (got {p})")


# ---------------------------------------------------------------------------
# Hoelder interpolation and monotonicity
# ---------------------------------------------------------------------------

def holder_case(n: int, r: float, s: float, t: float) -> Optional[str]:
    """
    Ordering of (r, s, t, -n) among the eight admissible Hoelder patterns.

    Examples
    --------
    >>> holder_case(2, 1.0, 0.0, 2.0)
    '-n<s<r<t'
    >>> holder_case(2, 1.0, 2.0, 3.0) is None
    True
    """
    points = sorted([(float(r), "r"), (float(s), "s"), (float(t), "t"), (-float(n), "-n")])
    if len({value for value, _ in points}) < 4:
        return None
    pattern = "<".join(label for _, label in points)
    return pattern if pattern in HOLDER_CASES else None


def holder_condition(n: int, r: float, s: float, t: float) -> float:
    """(n+r)(t-s) / ((n+t)(r-s)); the interpolation needs a value above 1."""
    if r == s or t == -n:
        return math.nan
    return (n + r) * (t - s) / ((n + t) * (r - s))


def holder_triple_check(body: Union[ConvexBody, CheckContext], r: float, s: float, t: float,
                        grid: Optional[SphereGrid] = None,
                        policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    as_r(K) <= as_t(K)^{(r-s)(n+t)/((t-s)(n+r))} as_s(K)^{(t-r)(n+s)/((t-s)(n+r))}.

    Parameters
    ----------
    body : ConvexBody or CheckContext
        Body, or a context carrying cached values
    r, s, t : float
        Finite exponents, none equal to -n, with
        (n+r)(t-s)/((n+t)(r-s)) > 1
    grid : SphereGrid
        Quadrature grid (ignored when a context is passed)

    Raises
    ------
    ParameterError
        If the exponents violate the admissibility condition
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    _finite("holder_triple_check", r, s, t)
    for p in (r, s, t):
        check_exponent(p, n)
    condition = holder_condition(n, r, s, t)
    if not condition > 1.0:
        raise ParameterError(
            f"(r, s, t) = ({r:g}, {s:g}, {t:g}) fails (n+r)(t-s)/((n+t)(r-s)) > 1 "
            f"(value {condition:.6g})"
        )
    e_t = (r - s) * (n + t) / ((t - s) * (n + r))
    e_s = (t - r) * (n + s) / ((t - s) * (n + r))
    params = f"r={r:g},s={s:g},t={t:g},case={holder_case(n, r, s, t)}"

    a_r, a_s, a_t = ctx.asa(r), ctx.asa(s), ctx.asa(t)
    note = _divergent(a_r, a_s, a_t)
    if note:
        return _skip("holder-triple", ctx, params, note)
    rhs = _power(a_t.value, e_t) * _power(a_s.value, e_s)
    tol = ctx.tolerance(_weighted_error((a_r, 1.0), (a_t, e_t), (a_s, e_s)))
    return _compare("holder-triple", ctx, a_r.value, rhs, "<=", tol, params, _caveats(a_r, a_s, a_t))


def _in_monotone_range(n: int, r: float, t: float) -> bool:
    return (0.0 < r < t) or (r < t < -n) or (-n < r < t < 0.0)


def monotonicity_check(body: Union[ConvexBody, CheckContext], r: float, t: float,
                       grid: Optional[SphereGrid] = None,
                       policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    as_r(K)/(n|K|) <= (as_t(K)/(n|K|))^{r(n+t)/(t(n+r))}.

    Admitted when (n+r)t/((n+t)r) > 1. Pairs in one of the monotone ranges
    0 < r < t, r < t < -n, -n < r < t < 0 are checked in the form
    (as_r/(n|K|))^{(n+r)/r} <= (as_t/(n|K|))^{(n+t)/t}.
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    _finite("monotonicity_check", r, t)
    for p in (r, t):
        check_exponent(p, n)
    if r == 0.0 or t == 0.0:
        raise ParameterError("monotonicity_check needs r, t != 0")
    raw = (n + r) * t / ((n + t) * r) > 1.0
    monotone = _in_monotone_range(n, r, t)
    if not (raw or monotone):
        raise ParameterError(
            f"(r, t) = ({r:g}, {t:g}) fails (n+r)t/((n+t)r) > 1 and lies in no monotone range"
        )

    a_r, a_t = ctx.asa(r), ctx.asa(t)
    form = "ratio" if raw else "monotone"
    params = f"r={r:g},t={t:g},form={form}"
    note = _divergent(a_r, a_t)
    if note:
        return _skip("monotonicity", ctx, params, note)
    scale = n * ctx.volume
    if raw:
        e = r * (n + t) / (t * (n + r))
        lhs = a_r.value / scale
        rhs = _power(a_t.value / scale, e)
        error = _weighted_error((a_r, 1.0), (a_t, e))
    else:
        e_r, e_t = (n + r) / r, (n + t) / t
        lhs = _power(a_r.value / scale, e_r)
        rhs = _power(a_t.value / scale, e_t)
        error = _weighted_error((a_r, e_r), (a_t, e_t))
    return _compare("monotonicity", ctx, lhs, rhs, "<=", ctx.tolerance(error), params,
                    _caveats(a_r, a_t))


def polar_volume_product_bounds(body: Union[ConvexBody, CheckContext], t: float,
                                grid: Optional[SphereGrid] = None,
                                policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    Endpoint bounds of the interpolation with as_0 = n|K| and as_inf = n|K°|:

    - t > 0:       as_t <= (n|K|)^{n/(n+t)} (n|K°|)^{t/(n+t)}
    - -n < t < 0:  n|K| (n|K°|)^{t/n} <= as_t^{(n+t)/n}
    - t < -n:      n|K°| (n|K|)^{n/t} <= as_t^{(n+t)/t}
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    _finite("polar_volume_product_bounds", t)
    check_exponent(t, n)
    if t == 0.0:
        raise ParameterError("t = 0 is the trivial identity as_0 = n|K|")
    _reject_polytope_below_pole(ctx, t, "polar_volume_product_bounds")
    a_t, a_inf = ctx.asa(t), ctx.asa(math.inf)
    params = f"t={t:g}"
    note = _divergent(a_t, a_inf)
    if note:
        return _skip("polar-volume-bound", ctx, params, note)
    nK, nKo = n * ctx.volume, a_inf.value
    if t > 0.0:
        lhs = a_t.value
        rhs = nK ** (n / (n + t)) * nKo ** (t / (n + t))
        error = _weighted_error((a_t, 1.0), (a_inf, t / (n + t)))
        relation = "<="
    elif t > -n:
        lhs = nK * nKo ** (t / n)
        rhs = _power(a_t.value, (n + t) / n)
        error = _weighted_error((a_t, (n + t) / n), (a_inf, t / n))
        relation = "<="
    else:
        lhs = nKo * nK ** (n / t)
        rhs = _power(a_t.value, (n + t) / t)
        error = _weighted_error((a_t, (n + t) / t), (a_inf, 1.0))
        relation = "<="
    return _compare("polar-volume-bound", ctx, lhs, rhs, relation, ctx.tolerance(error), params,
                    _caveats(a_t))


# ---------------------------------------------------------------------------
# Isoperimetric and Santalo type inequalities
# ---------------------------------------------------------------------------

def _reject_polytope_below_pole(ctx: CheckContext, p: float, name: str):
    if ctx.body.polytope and p < -ctx.n:
        raise PreconditionError(f"{name} for p < -n needs a C^2_+ body, got {ctx.body.describe()}")


def isoperimetric_check(body: Union[ConvexBody, CheckContext], p: float,
                        grid: Optional[SphereGrid] = None, santalo_c: float = DEFAULT_SANTALO_C,
                        policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    L_p affine isoperimetric inequality in ratio form.

    With as_p(B) = n|B| and v = |K|/|B|:

    - p >= 0:      as_p(K)/as_p(B) <= v^{(n-p)/(n+p)}
    - -n < p < 0:  as_p(K)/as_p(B) >= v^{(n-p)/(n+p)}
    - p < -n:      as_p(K)/as_p(B) >= c^{np/(n+p)} v^{(n-p)/(n+p)}

    Parameters
    ----------
    santalo_c : float
        Inverse Santalo constant c in (0, 1] for p < -n
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    _finite("isoperimetric_check", p)
    check_exponent(p, n)
    if not 0.0 < santalo_c <= 1.0:
        raise ParameterError(f"Santalo constant must lie in (0, 1] (got {santalo_c})")
    _reject_polytope_below_pole(ctx, p, "isoperimetric_check")

    a_p = ctx.asa(p)
    params = f"p={p:g}" + (f",c={santalo_c:g}" if p < -n else "")
    if a_p.divergent:
        return _skip("isoperimetric", ctx, params, _divergent(a_p))
    ball = n * ball_volume(n)
    e = (n - p) / (n + p)
    lhs = a_p.value / ball
    rhs = (ctx.volume / ball_volume(n)) ** e
    if p >= 0.0:
        relation = "<="
    else:
        relation = ">="
        if p < -n:
            rhs *= santalo_c ** (n * p / (n + p))
    return _compare("isoperimetric", ctx, lhs, rhs, relation,
                    ctx.tolerance(_weighted_error((a_p, 1.0))), params, _caveats(a_p))


def santalo_product_check(body: Union[ConvexBody, CheckContext], p: float,
                          grid: Optional[SphereGrid] = None,
                          policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    as_p(K) as_p(K°) against n^2 |K| |K°|.

    p >= 0 gives an upper bound, -n < p < 0 (and p < -n on C^2_+ bodies) a
    lower bound. At p = -n the product as_{-n}(K) as_{-n}(K°) is compared
    with as_{-n}(B)^2 = 1 instead.
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    p = float(p)
    if math.isnan(p):
        raise ParameterError("p is NaN")
    _reject_polytope_below_pole(ctx, p, "santalo_product_check")

    if math.isfinite(p) and abs(p + n) < 1e-6:
        a_k, a_polar = ctx.asa(-n), ctx.polar_asa(-n)
        params = f"p={-n:g}"
        note = _divergent(a_k, a_polar)
        if note:
            return _skip("minus-n-product", ctx, params, note)
        tol = ctx.tolerance(_weighted_error((a_k, 1.0), (a_polar, 1.0)), polar=True)
        return _compare("minus-n-product", ctx, a_k.value * a_polar.value, 1.0, ">=", tol, params)

    a_k, a_polar, a_inf = ctx.asa(p), ctx.polar_asa(p), ctx.asa(math.inf)
    params = f"p={p:g}"
    note = _divergent(a_k, a_polar, a_inf)
    if note:
        return _skip("santalo-product", ctx, params, note)
    lhs = a_k.value * a_polar.value
    rhs = n * n * ctx.volume * ctx.polar_volume
    relation = "<=" if p >= 0.0 else ">="
    tol = ctx.tolerance(_weighted_error((a_k, 1.0), (a_polar, 1.0), (a_inf, 1.0)), polar=True)
    return _compare("santalo-product", ctx, lhs, rhs, relation, tol, params, _caveats(a_k, a_polar))


def santalo_sanity_check(body: Union[ConvexBody, CheckContext], grid: Optional[SphereGrid] = None,
                         santalo_c: float = DEFAULT_SANTALO_C,
                         policy: Optional[Dict[str, float]] = None) -> List[InequalityReport]:
    """
    Volume product bounds c^n |B|^2 <= |K||K°| <= |B|^2.

    The upper (Blaschke-Santalo) bound is only reported for bodies that
    are origin-symmetric on the grid; the lower bound is the p -> -inf
    limit of the p < -n isoperimetric check.
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    a_inf = ctx.asa(math.inf)
    product = ctx.volume * ctx.polar_volume
    ball_sq = ball_volume(n) ** 2
    tol = ctx.tolerance(_weighted_error((a_inf, 1.0)))
    reports = []
    nodes = ctx.grid.nodes
    if np.allclose(ctx.body.support_values(nodes), ctx.body.support_values(-nodes),
                   rtol=1e-9, atol=1e-12):
        reports.append(_compare("santalo-upper", ctx, product, ball_sq, "<=", tol, ""))
    reports.append(_compare("santalo-lower", ctx, product, santalo_c ** n * ball_sq, ">=", tol,
                            f"c={santalo_c:g}"))
    return reports


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

def dual_exponent(p: float, n: int) -> float:
    """n^2 / p, pairing 0 with +inf."""
    if p == 0.0:
        return math.inf
    if math.isinf(p):
        return 0.0
    return n * n / p


def duality_check(body: Union[ConvexBody, CheckContext], p: float, grid: Optional[SphereGrid] = None,
                  policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    as_p(K) = as_{n^2/p}(K°), reported as |as_p(K) - as_{n^2/p}(K°)| / as_p(K).

    p = 0 compares as_0(K) = n|K| with as_inf(K°). The verdict is
    equality-case within tolerance and violated otherwise; the polar's fit
    residual widens the tolerance and is recorded in the note.
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    p = check_exponent(p, n)
    if not ctx.body.smooth:
        raise UnsupportedKindError(f"duality_check needs a C^2_+ body, got {ctx.body.describe()}")
    q = dual_exponent(p, n)
    a_k, a_polar = ctx.asa(p), ctx.polar_asa(q)
    params = f"p={p:g},q={q:g}"
    note = _divergent(a_k, a_polar)
    if note:
        return _skip("duality", ctx, params, note)
    tol = ctx.tolerance(_weighted_error((a_k, 1.0), (a_polar, 1.0)), polar=True)
    margin = abs(a_k.value - a_polar.value) / abs(a_k.value)
    verdict = "equality-case" if margin <= tol else "violated"
    note = f"polar={ctx.polar.provenance},fit_residual={ctx.polar.fit_residual:.3e}"
    return InequalityReport("duality", ctx.descriptor, a_k.value, a_polar.value, margin, tol,
                            verdict, params, ctx.grid.label, note)


# ---------------------------------------------------------------------------
# Inequalities through the L_{-n} functional
# ---------------------------------------------------------------------------

def minus_n_checks(body: Union[ConvexBody, CheckContext], s: float, p: float,
                   grid: Optional[SphereGrid] = None,
                   policy: Optional[Dict[str, float]] = None) -> List[InequalityReport]:
    """
    Inequalities through as_{-n}(K) = max f_K^{1/2} h_K^{(n+1)/2}.

    Returns three reports:

    - minus-n-interpolation: as_p <= as_{-n}^e as_s when
      n(s-p)/((n+p)(n+s)) >= 0, and >= otherwise, e = 2n(s-p)/((n+p)(n+s))
    - minus-n-volume-ratio: as_{-n}(K) >= sqrt(|K|/|K°|)
    - minus-n-isoperimetric: as_{-n}(K)/as_{-n}(B) >= |K|/|B|
    """
    ctx = _as_context(body, grid, policy)
    n = ctx.n
    _finite("minus_n_checks", s, p)
    check_exponent(s, n)
    check_exponent(p, n)
    if ctx.body.polytope:
        raise PreconditionError(f"minus_n_checks needs a C^2_+ body, got {ctx.body.describe()}")

    a_mn, a_p, a_s, a_inf = ctx.asa(-n), ctx.asa(p), ctx.asa(s), ctx.asa(math.inf)
    sign = n * (s - p) / ((n + p) * (n + s))
    e = 2.0 * sign
    params = f"p={p:g},s={s:g}"
    reports = []

    note = _divergent(a_mn, a_p, a_s)
    if note:
        reports.append(_skip("minus-n-interpolation", ctx, params, note))
    else:
        rhs = _power(a_mn.value, e) * a_s.value
        tol = ctx.tolerance(_weighted_error((a_p, 1.0), (a_mn, e), (a_s, 1.0)))
        reports.append(_compare("minus-n-interpolation", ctx, a_p.value, rhs,
                                "<=" if sign >= 0.0 else ">=", tol, params))

    if a_mn.divergent:
        reports.append(_skip("minus-n-volume-ratio", ctx, "", _divergent(a_mn)))
        reports.append(_skip("minus-n-isoperimetric", ctx, "", _divergent(a_mn)))
        return reports
    ratio = math.sqrt(ctx.volume / ctx.polar_volume)
    tol = ctx.tolerance(_weighted_error((a_mn, 1.0), (a_inf, 0.5)))
    reports.append(_compare("minus-n-volume-ratio", ctx, a_mn.value, ratio, ">=", tol, ""))
    tol = ctx.tolerance(_weighted_error((a_mn, 1.0)))
    reports.append(_compare("minus-n-isoperimetric", ctx, a_mn.value, ctx.volume / ball_volume(n),
                            ">=", tol, ""))
    return reports


# ---------------------------------------------------------------------------
# Rounded four-disc example
# ---------------------------------------------------------------------------

def rounded_bound(R: float, eps: float, p: float) -> Tuple[float, str]:
    """
    Bound and relation for as_p of the rounded body K(R, eps), n = 2.

    Examples
    --------
    >>> round(rounded_bound(100.0, 0.01, 1.0)[0], 2)
    4.03
    >>> rounded_bound(100.0, 0.01, -1.0)
    (100.0, '>=')
    """
    if p >= 0.0:
        return 16.0 / R ** (p / (2.0 + p)) + 4.0 * math.pi * eps ** (2.0 / (2.0 + p)), "<="
    if p > -2.0:
        return 2.0 ** (3.0 * (p + 1.0) / (2.0 + p)) * R ** (-p / (2.0 + p)), ">="
    return R ** (-2.0 / (p + 2.0)) * 2.0 ** ((12.0 + 3.0 * p) / (4.0 + 2.0 * p)), ">="


def rounded_body_bounds(R: float, eps: float, p: float, grid: Optional[SphereGrid] = None,
                        nodes_per_arc: int = 64,
                        policy: Optional[Dict[str, float]] = None) -> InequalityReport:
    """
    Check the upper (p >= 0) and lower (p < 0) bounds on K(R, eps).

    For p < -2 the polar relation as_p(K°) = as_{4/p}(K) is used, so the
    value comes from K itself. The curvature function of K jumps between
    arcs, so any grid that is not an arc grid of K is replaced by
    grid_arcs(K.breakpoints, nodes_per_arc).

    Raises
    ------
    PreconditionError
        Unless R >= 10 and 0 < eps <= 0.1
    GeometryError
        If the corner arcs cannot be made tangent
    """
    if not (R >= 10.0 and 0.0 < eps <= 0.1):
        raise PreconditionError(f"Rounded example needs R >= 10 and 0 < eps <= 0.1 (got {R}, {eps})")
    _finite("rounded_body_bounds", p)
    check_exponent(p, 2)
    body = make_rounded_intersection(R, eps)
    if grid is None or grid.scheme != "arc-gauss":
        grid = grid_arcs(body.breakpoints, nodes_per_arc)
    ctx = CheckContext(body, grid, policy)

    bound, relation = rounded_bound(R, eps, p)
    if p < -2.0:
        value = ctx.asa(4.0 / p)
        name, params = "rounded-polar", f"R={R:g},eps={eps:g},p={p:g},q={4.0 / p:g}"
    else:
        value = ctx.asa(p)
        name, params = "rounded-bound", f"R={R:g},eps={eps:g},p={p:g}"
    if value.divergent:
        return _skip(name, ctx, params, _divergent(value))
    return _compare(name, ctx, value.value, bound, relation,
                    ctx.tolerance(_weighted_error((value, 1.0))), params)


def reports_to_rows(reports: Sequence[InequalityReport]) -> List[Dict[str, object]]:
    return [report.to_dict() for report in reports]
