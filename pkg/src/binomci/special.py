"""Beta special functions: log-beta, the regularized incomplete beta, and its inverse.

The scalar routines operate on plain floats and are the public surface.  The
``*_array`` variants evaluate whole batches with numpy in lockstep; the mean
coverage evaluator uses them because a single solve needs thousands of
incomplete-beta values.  Both paths share the same continued fraction
(modified Lentz) with a symmetry switch at x > (a + 1) / (a + b + 2), the
boundary of the fraction's fast-converging region, so it is always evaluated
on its good side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["ShapePair", "log_beta", "reg_inc_beta", "beta_quantile"]

_CF_MAX_ITER = 600
_CF_EPS = 1e-15
_CF_TINY = 1e-300
_NEWTON_MAX_ITER = 100


@dataclass(frozen=True)
class ShapePair:
    """Parameters (a, b) of a Beta distribution, both strictly positive."""

    a: float
    b: float

    def __post_init__(self) -> None:
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)) or a <= 0.0 or b <= 0.0:
            raise ValueError(f"Beta shapes must be finite and positive, got ({self.a}, {self.b})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


def _check_shapes(a: float, b: float) -> None:
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0.0 or b <= 0.0:
        raise ValueError(f"shape parameters must be finite and positive, got a={a}, b={b}")


# Stirling series tail: lgamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + phi(z),
# phi(z) = sum B_2k / (2k (2k-1) z^(2k-1)).  Truncated after the z^-11 term the
# remainder is below 1e-17 for z >= 16.
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
)

_STIRLING_MIN = 16.0


def _stirling_tail(z: float) -> float:
    u = 1.0 / z
    u2 = u * u
    c = _STIRLING_COEF
    return u * (c[0] + u2 * (c[1] + u2 * (c[2] + u2 * (c[3] + u2 * (c[4] + u2 * c[5])))))


def log_beta(a: float, b: float) -> float:
    """Natural log of the Beta function, ln B(a, b).

    For small shapes this is lgamma(a) + lgamma(b) - lgamma(a + b) directly.
    When the larger shape exceeds 16, lgamma(b) - lgamma(a + b) is replaced by
    its Stirling-expanded difference: subtracting two lgamma values of order
    b*ln(b) head-on loses up to eight digits when the result is of order one
    (e.g. a tiny, b huge), and this form never forms that difference.
    """
    _check_shapes(a, b)
    if a > b:
        a, b = b, a
    if b < _STIRLING_MIN:
        return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
    diff = (-a * math.log(a + b)
            - (b - 0.5) * math.log1p(a / b)
            + a
            + _stirling_tail(b) - _stirling_tail(a + b))
    return math.lgamma(a) + diff


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta, by the modified Lentz method.

    Valid for x on the small side of the symmetry switch; the caller is
    responsible for flipping (a, b, x) -> (b, a, 1 - x) beyond it.
    """
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise RuntimeError(f"incomplete beta continued fraction failed to converge for a={a}, b={b}, x={x}")


def reg_inc_beta(x: float, a: float, b: float) -> float:
    """Regularized incomplete beta function I_x(a, b).

    Equals the CDF of a Beta(a, b) distribution at x.  Accurate to about
    1e-14 absolute over the whole domain.
    """
    _check_shapes(a, b)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(ln_front) * _beta_cf(a, b, x) / a
    return 1.0 - math.exp(ln_front) * _beta_cf(b, a, 1.0 - x) / b


def _quantile_start(q: float, a: float, b: float) -> float:
    """Initial guess for the beta quantile (normal approximation for a, b >= 1,
    tail power laws otherwise)."""
    if a >= 1.0 and b >= 1.0:
        pp = q if q < 0.5 else 1.0 - q
        t = math.sqrt(-2.0 * math.log(pp))
        x = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t
        if q < 0.5:
            x = -x
        al = (x * x - 3.0) / 6.0
        h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0))
        w = (x * math.sqrt(al + h) / h
             - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h)))
        guess = a / (a + b * math.exp(2.0 * w))
    else:
        lna = math.log(a / (a + b))
        lnb = math.log(b / (a + b))
        t = math.exp(a * lna) / a
        u = math.exp(b * lnb) / b
        w = t + u
        if q < t / w:
            guess = (a * w * q) ** (1.0 / a)
        else:
            guess = 1.0 - (b * w * (1.0 - q)) ** (1.0 / b)
    return min(max(guess, 1e-300), 1.0 - 1e-16)


def beta_quantile(q: float, a: float, b: float) -> float:
    """Inverse of ``reg_inc_beta`` in x: returns x with I_x(a, b) = q.

    Safeguarded Newton iteration: every step is confined to a shrinking
    bracket, and a bisection step substitutes whenever Newton would leave it.
    q = 0 and q = 1 map to 0 and 1 exactly.
    """
    _check_shapes(a, b)
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    if q == 0.0:
        return 0.0
    if q == 1.0:
        return 1.0
    ln_beta_ab = log_beta(a, b)
    lo, hi = 0.0, 1.0
    x = _quantile_start(q, a, b)
    for _ in range(_NEWTON_MAX_ITER):
        f = reg_inc_beta(x, a, b) - q
        if f == 0.0:
            break
        if f > 0.0:
            hi = x
        else:
            lo = x
        ln_pdf = (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x) - ln_beta_ab
        if ln_pdf < -700.0:
            xn = _tail_step(x, f + q, q, a, b, lo, hi)
        else:
            xn = x - f * math.exp(-ln_pdf)
            if abs(xn - x) <= max(1e-15 * x, 1e-320) and abs(f) <= 4e-12:
                # Newton proposes no visible movement and the residual is at
                # its roundoff plateau, so x already is the root to full
                # precision.  Checked before the bracket safeguard: a converged
                # x sits exactly on lo or hi, and bouncing it to the bracket
                # midpoint would restart the search.  The residual condition
                # keeps a steep-density cliff (step underflows while f is still
                # large) from being mistaken for convergence; such a lane falls
                # through to the bisection fallback below.
                break
            if not lo < xn < hi:
                xn = _tail_step(x, f + q, q, a, b, lo, hi)
        if abs(xn - x) <= max(1e-15 * x, 1e-320):
            x = xn
            break
        x = xn
    return x


def _tail_step(x: float, cur: float, q: float, a: float, b: float,
               lo: float, hi: float) -> float:
    """Fallback step when Newton leaves the bracket: a multiplicative update in
    the tail, bisection elsewhere.

    Near 0 the CDF behaves as C * x**a, so matching logarithms solves that
    power-law model exactly; one such step typically lands within a few percent
    of the root even when it is hundreds of orders of magnitude away, which is
    far out of bisection's reach.  Near 1 the reflected form applies.  ``cur``
    is the CDF value already computed at x.
    """
    if x < 0.01 and 0.0 < cur <= 0.25 and q > 0.0:
        ln_xn = math.log(x) + (math.log(q) - math.log(cur)) / a
        if ln_xn < -1e-10:
            xn = math.exp(ln_xn)
            if lo < xn < hi:
                return xn
    elif x > 0.99 and 0.0 < 1.0 - cur <= 0.25 and q < 1.0:
        ln_omx = math.log1p(-x) + (math.log1p(-q) - math.log(1.0 - cur)) / b
        if ln_omx < -1e-10:
            xn = 1.0 - math.exp(ln_omx)
            if lo < xn < hi:
                return xn
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Batched variants.  Same algorithms, evaluated lane-parallel with numpy.
# ---------------------------------------------------------------------------

_lgamma_vec = np.vectorize(math.lgamma, otypes=[float])


def _stirling_tail_array(z: np.ndarray) -> np.ndarray:
    u = 1.0 / z
    u2 = u * u
    c = _STIRLING_COEF
    return u * (c[0] + u2 * (c[1] + u2 * (c[2] + u2 * (c[3] + u2 * (c[4] + u2 * c[5])))))


def _log_beta_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched ln B(a, b), same branch structure as the scalar ``log_beta``."""
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    out = np.empty(lo.shape)
    small = hi < _STIRLING_MIN
    if np.any(small):
        ls, hs = lo[small], hi[small]
        out[small] = _lgamma_vec(ls) + _lgamma_vec(hs) - _lgamma_vec(ls + hs)
    big = ~small
    if np.any(big):
        lb, hb = lo[big], hi[big]
        diff = (-lb * np.log(lb + hb)
                - (hb - 0.5) * np.log1p(lb / hb)
                + lb
                + _stirling_tail_array(hb) - _stirling_tail_array(lb + hb))
        out[big] = _lgamma_vec(lb) + diff
    return out


def _beta_cf_array(a: np.ndarray, b: np.ndarray, x: np.ndarray) -> np.ndarray:
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = np.ones_like(x)
    d = 1.0 - qab * x / qap
    np.copyto(d, _CF_TINY, where=np.abs(d) < _CF_TINY)
    d = 1.0 / d
    h = d.copy()
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        np.copyto(d, _CF_TINY, where=np.abs(d) < _CF_TINY)
        c = 1.0 + aa / c
        np.copyto(c, _CF_TINY, where=np.abs(c) < _CF_TINY)
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        np.copyto(d, _CF_TINY, where=np.abs(d) < _CF_TINY)
        c = 1.0 + aa / c
        np.copyto(c, _CF_TINY, where=np.abs(c) < _CF_TINY)
        d = 1.0 / d
        delta = d * c
        h *= delta
        if np.max(np.abs(delta - 1.0)) < _CF_EPS:
            return h
    raise RuntimeError("incomplete beta continued fraction failed to converge (batched)")


def _betainc_array(x, a, b, ln_beta_ab=None) -> np.ndarray:
    """Batched I_x(a, b).  ``ln_beta_ab`` may be supplied to skip the lgamma calls."""
    x, a, b = np.broadcast_arrays(np.asarray(x, float), np.asarray(a, float), np.asarray(b, float))
    x = x.copy()
    if ln_beta_ab is None:
        ln_beta_ab = _log_beta_array(a, b)
    at_zero = x <= 0.0
    at_one = x >= 1.0
    interior = ~(at_zero | at_one)
    # Feed a harmless midpoint into the non-interior lanes so the log calls stay finite.
    x[~interior] = 0.5
    swap = x >= (a + 1.0) / (a + b + 2.0)
    xs = np.where(swap, 1.0 - x, x)
    as_ = np.where(swap, b, a)
    bs = np.where(swap, a, b)
    ln_front = as_ * np.log(xs) + bs * np.log1p(-xs) - ln_beta_ab
    cf = _beta_cf_array(as_, bs, xs)
    val = np.exp(ln_front) * cf / as_
    out = np.where(swap, 1.0 - val, val)
    out[at_zero] = 0.0
    out[at_one] = 1.0
    return out


def _quantile_start_array(q: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty_like(q)
    central = (a >= 1.0) & (b >= 1.0)
    if np.any(central):
        qc, ac, bc = q[central], a[central], b[central]
        pp = np.where(qc < 0.5, qc, 1.0 - qc)
        t = np.sqrt(-2.0 * np.log(pp))
        x = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t
        x = np.where(qc < 0.5, -x, x)
        al = (x * x - 3.0) / 6.0
        h = 2.0 / (1.0 / (2.0 * ac - 1.0) + 1.0 / (2.0 * bc - 1.0))
        w = (x * np.sqrt(al + h) / h
             - (1.0 / (2.0 * bc - 1.0) - 1.0 / (2.0 * ac - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h)))
        out[central] = ac / (ac + bc * np.exp(2.0 * w))
    tail = ~central
    if np.any(tail):
        qt, at, bt = q[tail], a[tail], b[tail]
        lna = np.log(at / (at + bt))
        lnb = np.log(bt / (at + bt))
        t = np.exp(at * lna) / at
        u = np.exp(bt * lnb) / bt
        w = t + u
        low = qt < t / w
        guess = np.where(low,
                         np.power(np.maximum(at * w * qt, 1e-300), 1.0 / at),
                         1.0 - np.power(np.maximum(bt * w * (1.0 - qt), 1e-300), 1.0 / bt))
        out[tail] = guess
    return np.clip(out, 1e-300, 1.0 - 1e-16)


def _beta_quantile_array(q, a, b, x0=None, ln_beta_ab=None) -> np.ndarray:
    """Batched beta quantile via lockstep safeguarded Newton.

    ``x0`` is an optional warm start (e.g. the solution at a nearby q), which
    typically cuts the iteration count to two or three.
    """
    q, a, b = np.broadcast_arrays(np.asarray(q, float), np.asarray(a, float), np.asarray(b, float))
    shape = q.shape
    q = q.ravel()
    a = a.ravel()
    b = b.ravel()
    if ln_beta_ab is None:
        ln_beta_ab = _log_beta_array(a, b)
    else:
        ln_beta_ab = np.broadcast_to(np.asarray(ln_beta_ab, float), shape).ravel()
    lo = np.zeros(q.shape)
    hi = np.ones(q.shape)
    if x0 is not None:
        x = np.clip(np.broadcast_to(np.asarray(x0, float), shape).ravel(), 1e-300, 1.0 - 1e-16).copy()
    else:
        x = _quantile_start_array(q, a, b)
    # Lanes leave the active set as soon as they converge; the remaining work
    # shrinks to the stragglers instead of re-sweeping every lane each round.
    active = np.arange(q.size)
    for _ in range(_NEWTON_MAX_ITER):
        if active.size == 0:
            break
        xa = x[active]
        la = lo[active]
        ha = hi[active]
        aa = a[active]
        ba = b[active]
        qa = q[active]
        lba = ln_beta_ab[active]
        fa = _betainc_array(xa, aa, ba, ln_beta_ab=lba) - qa
        np.copyto(ha, xa, where=fa > 0.0)
        np.copyto(la, xa, where=fa < 0.0)
        lo[active] = la
        hi[active] = ha
        ln_pdf = (aa - 1.0) * np.log(xa) + (ba - 1.0) * np.log1p(-xa) - lba
        with np.errstate(over="ignore", invalid="ignore"):
            raw = xa - fa * np.exp(-ln_pdf)
        tol = np.maximum(1e-15 * xa, 1e-320)
        # A raw Newton step below float resolution with the residual at its
        # roundoff plateau means the lane is done, even if the proposal grazes
        # the bracket edge (a converged lane sits exactly on lo or hi, so the
        # out-of-bracket test must not bounce it away).  The residual condition
        # keeps a steep-density cliff, where the step underflows while f is
        # still large, falling through to bisection instead of freezing.
        done = np.isfinite(raw) & (np.abs(raw - xa) <= tol) & (np.abs(fa) <= 4e-12)
        inside = np.isfinite(raw) & (raw > la) & (raw < ha)
        xn = np.where(inside, raw, 0.5 * (la + ha))
        out = np.flatnonzero(~(inside | done))
        if out.size:
            # Same tail fallback as the scalar path: multiplicative steps reach
            # roots that sit hundreds of orders of magnitude below the bracket
            # midpoint, where bisection alone would exhaust the iteration cap.
            for j in out:
                xn[j] = _tail_step(xa[j], fa[j] + qa[j], qa[j],
                                   aa[j], ba[j], la[j], ha[j])
        xn = np.where(done, xa, xn)
        done |= np.abs(xn - xa) <= tol
        x[active] = xn
        active = active[~done]
    return x.reshape(shape)
