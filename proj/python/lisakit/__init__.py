"""Global and local spatial autocorrelation statistics.

Distances are given as a square list of lists with a zero diagonal; values
as a list with one entry per unit. Kernels: "inverse", "power:B",
"threshold:R".
"""

from ._core import (
    LisaKitError,
    compute,
    demo_dataset,
    plot_data,
    random_dataset,
    verify,
)

__all__ = [
    "LisaKitError",
    "compute",
    "demo",
    "demo_dataset",
    "plot_data",
    "random_dataset",
    "verify",
]


def demo(year=2000, **kwargs):
    """Run ``compute`` on the embedded 13-city census data."""
    labels, distances, values = demo_dataset(year)
    return compute(distances, values, labels=labels, **kwargs)
