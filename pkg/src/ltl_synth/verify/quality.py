"""Competition quality points of a circuit size against a reference size."""

import math

from ..core.models import QualityScore


def quality(size: int, reference: int) -> QualityScore:
    """``max(0, 2 - log10((size + 1) / (reference + 1)))``.

    Only the lower clamp applies: a solution smaller than the reference scores above 2.

    Raises:
        ValueError: If a size is negative.
    """
    if size < 0 or reference < 0:
        raise ValueError("Sizes must be non-negative")
    points = max(0.0, 2.0 - math.log10((size + 1) / (reference + 1)))
    return QualityScore(points=points, size=size, reference=reference)
