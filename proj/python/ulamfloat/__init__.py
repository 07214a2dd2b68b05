"""Ulam floating bodies, weighted floating bodies and related convex-geometry tools."""

from ._core import (
    Body,
    InvalidInput,
    NumericalError,
    Weight,
    __version__,
    asa_p,
    asa_p_ball,
    ball_shrinkage,
    c_n,
    c_n_theorem,
    cap_cut,
    cut_height,
    equilibrium_directions,
    floating_body,
    limit_experiment,
    run_cli,
    ulam_body,
    zp_support,
)

__all__ = [
    "Body",
    "InvalidInput",
    "NumericalError",
    "Weight",
    "__version__",
    "asa_p",
    "asa_p_ball",
    "ball_shrinkage",
    "c_n",
    "c_n_theorem",
    "cap_cut",
    "cut_height",
    "equilibrium_directions",
    "floating_body",
    "limit_experiment",
    "run_cli",
    "ulam_body",
    "zp_support",
]
