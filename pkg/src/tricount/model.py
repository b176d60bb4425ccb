"""Power-law execution-time models: T = alpha * N_e**beta.

The normalized form T = (N_e / N_1)**beta, with N_1 = alpha**(-1/beta)
the number of edges processed in one second, makes models directly
comparable.  :func:`reference_table` carries the published fit
coefficients of the 2017 Graph Challenge triangle-counting submissions
together with the synthesized state-of-the-art frontier,
T = (N_e / 10^8)^(4/3).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Exponents that published fits cluster on; used by the snap option.
SNAP_EXPONENTS = (1.0, 4.0 / 3.0, 5.0 / 3.0)


@dataclass(frozen=True)
class PowerLawFit:
    """Fitted coefficients plus diagnostics.

    ``n1 = alpha**(-1/beta)`` always holds; ``residual_rms`` is the RMS of
    the log10 residuals of the fit.
    """

    alpha: float
    beta: float
    n1: float
    residual_rms: float
    num_points: int
    snapped: bool = False

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError("alpha and beta must be positive")


@dataclass(frozen=True)
class ReferenceModel:
    """A published model: label, N_1, beta, and the largest N_e it was
    fit on."""

    label: str
    n1: float
    beta: float
    max_ne: float


SOA_MODEL = ReferenceModel("State-of-the-art", n1=1e8, beta=4.0 / 3.0,
                           max_ne=2.7e11)

# Published model coefficients (label, max N_e, N_1, beta) for the 2017
# Graph Challenge triangle-counting submissions.
_REFERENCE_ROWS = (
    ("Bisson-Nvidia-2017", 1.5e9, 3e7, 4.0 / 3.0),
    ("Pearce-LLNL-2017", 2.7e11, 2e8, 4.0 / 3.0),
    ("Voegele-UTAustin-2017", 1.8e9, 3e7, 4.0 / 3.0),
    ("Wolf-Sandia-2017", 1.8e9, 3e7, 4.0 / 3.0),
    ("Hu-GWU-2017", 3.4e10, 5e7, 4.0 / 3.0),
    ("Smith-UMN-2017", 1.2e9, 1e6, 1.0),
    ("Tom-UMN-2017", 1.8e9, 5e7, 1.0),
    ("Date-UIUC-2017", 2.6e8, 3e6, 4.0 / 3.0),
    ("Hutchison-UWash-2017", 1.6e7, 3e4, 5.0 / 3.0),
    ("Low-CMU-2017", 1.8e9, 1e8, 1.0),
    ("Mowlaei-UPitt-2017", 1.8e9, 5e7, 1.0),
)


def reference_table() -> list[ReferenceModel]:
    """The published submission models plus the state-of-the-art row."""
    refs = [ReferenceModel(label, n1=n1, beta=beta, max_ne=max_ne)
            for label, max_ne, n1, beta in _REFERENCE_ROWS]
    refs.append(SOA_MODEL)
    return refs


def normalize(alpha: float, beta: float) -> float:
    """N_1 = alpha**(-1/beta), the edge count processed in one second."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if beta == 0:
        raise ValueError("beta must be nonzero")
    return alpha ** (-1.0 / beta)


def fit_power_law(points, snap: bool = False) -> PowerLawFit:
    """Ordinary least squares on log10(t) vs log10(n_e).

    ``points`` is a sequence of (n_e, t_tri) pairs, all positive, with at
    least two distinct n_e.  With ``snap`` the slope is replaced by the
    nearest exponent in :data:`SNAP_EXPONENTS` and the intercept refit
    with the slope held fixed.
    """
    pts = np.asarray(list(points), dtype=np.float64)
    if pts.size == 0:
        raise ValueError("need at least two points with distinct n_e")
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be (n_e, t_tri) pairs")
    if np.any(pts <= 0):
        raise ValueError("all n_e and t_tri must be positive")
    if len(np.unique(pts[:, 0])) < 2:
        raise ValueError("need at least two points with distinct n_e")

    x = np.log10(pts[:, 0])
    y = np.log10(pts[:, 1])
    dx = x - x.mean()
    beta = float(np.dot(dx, y - y.mean()) / np.dot(dx, dx))
    if snap:
        beta = min(SNAP_EXPONENTS, key=lambda g: abs(beta - g))
        intercept = float(np.mean(y - beta * x))
    else:
        intercept = float(y.mean() - beta * x.mean())
    residuals = y - (intercept + beta * x)
    alpha = 10.0 ** intercept
    return PowerLawFit(alpha=alpha, beta=beta,
                       n1=normalize(alpha, beta),
                       residual_rms=float(np.sqrt(np.mean(residuals ** 2))),
                       num_points=len(pts), snapped=snap)


def evaluate_time(model, n_e):
    """Predicted counting time (seconds) at ``n_e`` edges.

    ``model`` is anything with ``n1`` and ``beta`` attributes; ``n_e``
    may be a scalar or an array.
    """
    n_e = np.asarray(n_e, dtype=np.float64)
    if np.any(n_e <= 0):
        raise ValueError("n_e must be positive")
    result = (n_e / model.n1) ** model.beta
    return float(result) if result.ndim == 0 else result


def evaluate_rate(model, n_e):
    """Predicted processing rate (edges/second) at ``n_e`` edges:
    n_e / evaluate_time(model, n_e)."""
    n_e = np.asarray(n_e, dtype=np.float64)
    result = n_e / evaluate_time(model, n_e)
    return float(result) if result.ndim == 0 else result


@dataclass(frozen=True)
class ModelCurve:
    """One model evaluated on a shared n_e grid."""

    label: str
    n_e: np.ndarray
    time_s: np.ndarray
    rate_eps: np.ndarray
    time_vs_soa: np.ndarray  # ratio of time_s to the state-of-the-art line


def compare(fit: PowerLawFit | None, refs, n_e_grid) -> list[ModelCurve]:
    """Evaluate a fit (optional) and reference models on a common grid.

    Each curve carries its time, rate, and time ratio to the
    state-of-the-art line at every grid point.
    """
    grid = np.atleast_1d(np.asarray(n_e_grid, dtype=np.float64))
    if grid.size == 0:
        raise ValueError("n_e grid must be nonempty")
    soa_time = np.atleast_1d(evaluate_time(SOA_MODEL, grid))

    def curve(label, model):
        t = np.atleast_1d(evaluate_time(model, grid))
        r = np.atleast_1d(evaluate_rate(model, grid))
        return ModelCurve(label, grid, t, r, t / soa_time)

    curves = []
    if fit is not None:
        curves.append(curve("fit", fit))
    curves.extend(curve(ref.label, ref) for ref in refs)
    return curves
