"""Input checking shared by the public constructors and estimators."""

import numpy as np

from .errors import InvalidArgument

VALIDATION_TOL = 1e-12
EQUALITY_TOL = 1e-9


def check_bit(value, name="value"):
    if value not in (0, 1) or isinstance(value, float):
        raise InvalidArgument(f"{name} must be 0 or 1, got {value!r}")
    return int(value)


def check_probability_table(p, tol=VALIDATION_TOL):
    """Coerce ``p`` to a float 4x4 array and check it is a conditional probability table.

    Rows are input pairs (x, y) and columns outcome pairs (a, b), both in the
    order (0,0), (0,1), (1,0), (1,1). A flat length-16 vector is accepted and
    reshaped row-major.
    """
    arr = np.array(p, dtype=float)
    if arr.shape == (16,):
        arr = arr.reshape(4, 4)
    if arr.shape != (4, 4):
        raise InvalidArgument(f"box table must be 4x4, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgument("box table contains non-finite entries")
    if arr.min() < -tol or arr.max() > 1 + tol:
        raise InvalidArgument("box entries must lie in [0, 1]")
    row_err = np.abs(arr.sum(axis=1) - 1.0)
    if row_err.max() > tol:
        raise InvalidArgument(
            f"each input row must sum to 1 (max deviation {row_err.max():.3g})")
    return arr


def check_box_array(X, tol=VALIDATION_TOL):
    """Validate a batch of boxes shaped (n_boxes, 16) or (n_boxes, 4, 4).

    Returns a float array of shape (n_boxes, 4, 4). A single box is promoted
    to a batch of one.
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1 or arr.shape == (4, 4):
        arr = arr.reshape(1, -1)
    if arr.ndim == 2:
        if arr.shape[1] != 16:
            raise InvalidArgument(f"expected 16 features per box, got {arr.shape[1]}")
        arr = arr.reshape(-1, 4, 4)
    if arr.ndim != 3 or arr.shape[1:] != (4, 4):
        raise InvalidArgument(f"cannot interpret array of shape {np.shape(X)} as boxes")
    return np.stack([check_probability_table(row, tol) for row in arr])


def check_unit_interval(value, name):
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise InvalidArgument(f"{name} must lie in [0, 1], got {value}")
    return value
