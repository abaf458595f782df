"""Regression quality metrics for the distilled scorer."""

from __future__ import annotations

import numpy as np


def regression_metrics(y_true, y_pred) -> dict[str, float]:
    """RMSE, R-squared, MAE, and median absolute error.

    R-squared is 1 - SS_res / SS_tot; with a constant truth vector it is
    defined as 1.0 for a perfect fit and 0.0 otherwise.
    """
    y_true = np.asarray(y_true, dtype=float)
    y_pred = np.asarray(y_pred, dtype=float)
    if y_true.shape != y_pred.shape or y_true.ndim != 1:
        raise ValueError("y_true and y_pred must be 1-d arrays of equal length")
    if y_true.size == 0:
        raise ValueError("cannot compute metrics on empty arrays")
    err = y_true - y_pred
    ss_res = float(np.sum(err**2))
    ss_tot = float(np.sum((y_true - y_true.mean()) ** 2))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return {
        "rmse": float(np.sqrt(np.mean(err**2))),
        "r2": r2,
        "mae": float(np.mean(np.abs(err))),
        "medae": float(np.median(np.abs(err))),
    }
