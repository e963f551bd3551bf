"""
Noise realization model
"""

from typing import Any, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


class NoiseRealization(BaseModel):
    """Per-view integer noise images drawn from one seed.

    images[v][i] is in {-1, 0, 1} where the clean pixel is nonzero and in
    {0, 1} where it is zero.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    seed: int
    images: Tuple[np.ndarray, ...]

    @field_validator("images", mode="before")
    @classmethod
    def _as_int_vectors(cls, value: Any) -> Tuple[np.ndarray, ...]:
        out = []
        for image in value:
            arr = np.asarray(image, dtype=np.int64).ravel()
            arr.setflags(write=False)
            out.append(arr)
        return tuple(out)

    @property
    def views(self) -> int:
        return len(self.images)
