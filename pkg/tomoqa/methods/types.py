"""
Reconstruction method types
"""

from typing import Any, Dict, Literal, Optional, Protocol

from pydantic import BaseModel, ConfigDict, Field

from ..baselines.types import FloatImage
from ..forward.types import Sinogram, SystemMatrix
from ..imaging.types import Image

MethodName = Literal["qa", "hybrid", "fbp", "sart", "pinv"]
METHOD_NAMES = ("qa", "hybrid", "fbp", "sart", "pinv")


class ReconstructionProblem(BaseModel):
    """What every method sees: M, y, the target bit depth and a seed."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: SystemMatrix
    sinogram: Sinogram
    bits: int = Field(ge=1)
    seed: Optional[int] = None


class Reconstruction(BaseModel):
    """Integer reconstruction; raw holds the real-valued image of classical methods."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    image: Image
    raw: Optional[FloatImage] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class MethodSettings(BaseModel):
    """Solver budgets shared by the sampler-based methods."""
    model_config = ConfigDict(frozen=True)

    reads: int = Field(default=100, ge=1)
    sweeps: int = Field(default=1000, ge=1)
    time_limit: float = Field(default=5.0, gt=0)
    iterations: Optional[int] = Field(default=None, ge=1)
    subproblem_size: int = Field(default=12, ge=1)
    debug_dir: Optional[str] = None


class MethodCaller(Protocol):
    """Protocol for reconstruction method callers"""

    def __call__(self, execution_id: str, problem: ReconstructionProblem) -> Reconstruction:
        ...
