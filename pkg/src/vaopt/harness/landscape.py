"""Plot-ready ``(x, y, f)`` grids of two-dimensional test functions."""

import numpy as np

from .._validation import ConfigurationError, check_positive_int
from ..functions import lookup

__all__ = ["emit_landscape_grid", "write_landscape_grid"]


def emit_landscape_grid(function, resolution, bounds=None):
    """Evaluate ``function`` on a ``resolution x resolution`` grid.

    Parameters
    ----------
    function : str or TestFunction
    resolution : int
        Points per axis. One point samples the centre of the box.
    bounds : ((x_lo, x_hi), (y_lo, y_hi)), optional
        Defaults to the function's own search box.

    Returns
    -------
    ndarray of shape (resolution**2, 3)
        Rows ``(x, y, f)`` with ``x`` varying slowest.
    """
    func = lookup(function) if isinstance(function, str) else function
    resolution = check_positive_int(resolution, "resolution")
    if func.min_dim > 2 or (func.arity is not None and func.arity != 2):
        raise ConfigurationError(f"{func.name} cannot be evaluated in two dimensions")
    if bounds is None:
        space = func.space(2)
        bounds = list(zip(space.lower, space.upper))
    axes = []
    for lo, hi in bounds:
        axes.append(np.array([(lo + hi) / 2.0]) if resolution == 1 else np.linspace(lo, hi, resolution))
    xs, ys = np.meshgrid(axes[0], axes[1], indexing="ij")
    points = np.column_stack([xs.ravel(), ys.ravel()])
    values = np.array([func(p) for p in points])
    return np.column_stack([points, values])


def write_landscape_grid(function, resolution, path, bounds=None):
    grid = emit_landscape_grid(function, resolution, bounds)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,y,f\n")
        for x, y, f in grid:
            fh.write(f"{float(x)!r},{float(y)!r},{float(f)!r}\n")
    return grid
