"""Numerics of the growth-rate recursion.

The pattern bound gives g(eta) = 30^eta * eta^-eta * (1-eta)^(eta-1); each
step replaces lambda by the value at the unique crossing of lambda^(1-eta)
with g(eta).  g is strictly increasing up to 30/31 (its log-derivative is
log(30(1-eta)/eta)) while lambda^(1-eta) strictly decreases, so bisection on
that window finds the single root; past 30/31 we have g >= 31, out of reach
for every lambda this artifact produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ETA_LO = 1e-12
ETA_HI = 30.0 / 31.0
LAMBDA_CAP = 31.0
DEFAULT_TOL = 1e-12
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class EtaStep:
    """One step of the recursion: the crossing for lambda_n."""

    n: int
    lambda_n: float
    eta_n: float
    lambda_next: float
    residual: float


def log_g_eta(eta: float) -> float:
    if not 0.0 < eta < 1.0:
        raise ValueError("eta must lie in (0, 1)")
    return (
        eta * math.log(30.0)
        - eta * math.log(eta)
        - (1.0 - eta) * math.log(1.0 - eta)
    )


def g_eta(eta: float) -> float:
    """30^eta / (eta^eta (1-eta)^(1-eta)), computed in log space."""
    return math.exp(log_g_eta(eta))


def solve_crossing(lam: float, tol: float = DEFAULT_TOL, n: int = 0) -> EtaStep:
    """The unique eta in (0, 1) with lam^(1-eta) = g(eta), by bisection."""
    if lam <= 1.0 + tol:
        raise ValueError(f"lambda must exceed 1 + tol, got {lam}")
    if lam > LAMBDA_CAP:
        raise ValueError(f"lambda above supported cap {LAMBDA_CAP}")
    log_lam = math.log(lam)

    def h(eta: float) -> float:
        return log_g_eta(eta) - (1.0 - eta) * log_lam

    lo, hi = ETA_LO, ETA_HI
    if h(lo) >= 0.0 or h(hi) <= 0.0:
        raise RuntimeError("bisection bracket invalid")  # guarded by the cap
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if h(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    eta = 0.5 * (lo + hi)
    lambda_next = lam ** (1.0 - eta)
    residual = abs(lambda_next - g_eta(eta))
    if residual > tol:
        raise RuntimeError(f"crossing residual {residual} exceeds {tol}")
    return EtaStep(n, lam, eta, lambda_next, residual)


def lambda_sequence(steps: int, tol: float = DEFAULT_TOL) -> list[EtaStep]:
    """The decreasing sequence starting at lambda_1 = 2."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    out = []
    lam = 2.0
    for n in range(1, steps + 1):
        step = solve_crossing(lam, tol, n=n)
        out.append(step)
        lam = step.lambda_next
    return out


def eval_growth_bound(lam: float, tol: float = DEFAULT_TOL) -> float:
    """inf over eta of max(lam^(1-eta), g(eta)): 1 for lam near 1, otherwise
    the crossing value (one branch decreases, the other increases)."""
    if lam < 1.0:
        raise ValueError("lambda must be >= 1")
    if lam <= 1.0 + tol:
        return 1.0
    return solve_crossing(lam, tol).lambda_next


def curve_rows(lam: float = 2.0, lo: float = 0.01, hi: float = 0.99,
               step: float = 0.01) -> list[tuple[float, float, float]]:
    """(eta, lam^(1-eta), g(eta)) samples for plotting the two branches."""
    rows = []
    k = 0
    eta = lo
    while eta <= hi + 1e-12:
        rows.append((round(eta, 10), lam ** (1.0 - eta), g_eta(eta)))
        k += 1
        eta = lo + k * step
    return rows
