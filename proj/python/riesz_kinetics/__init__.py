"""Python access to the Vlasov-Riesz simulator core."""

from ._core import (
    CheckItem,
    FlowAborted,
    IoError,
    RateFit,
    RieszParams,
    RunConfig,
    field_direct,
    grad,
    hessian,
    interpolation_ratio,
    laplacian,
    potential,
    rate_fit,
    rates,
    run_checks,
    scatter,
    simulate,
)

__all__ = [
    "CheckItem",
    "FlowAborted",
    "IoError",
    "RateFit",
    "RieszParams",
    "RunConfig",
    "field_direct",
    "grad",
    "hessian",
    "interpolation_ratio",
    "laplacian",
    "potential",
    "rate_fit",
    "rates",
    "run_checks",
    "scatter",
    "simulate",
]
