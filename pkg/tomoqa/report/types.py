"""
Result table models
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

RESULT_KEY_COLUMNS = ("experiment", "phantom", "size", "views", "method", "seed", "noisy")


class ResultRow(BaseModel):
    """Metrics of one completed run"""
    model_config = ConfigDict(frozen=True)

    experiment: str
    phantom: str
    size: int
    views: int
    method: str
    seed: int
    noisy: bool = False
    bits: int
    rmse: float
    ssim: float
    residual: float
    wall_time: float = 0.0


class ErrorRow(BaseModel):
    """A run that failed, with the reason"""
    model_config = ConfigDict(frozen=True)

    experiment: str
    phantom: str
    size: int
    views: int
    method: str
    seed: int
    noisy: bool = False
    error: str


class StabilityRow(BaseModel):
    """Stability ratio of two noisy realizations, pseudoinverse reconstructions"""
    model_config = ConfigDict(frozen=True)

    experiment: str
    phantom: str
    size: int
    views: int
    seed: int
    ratio: float


class ResultTable(BaseModel):
    """All rows of one experiment in deterministic run order"""
    model_config = ConfigDict(frozen=True)

    experiment: str
    kind: str
    rows: List[ResultRow] = Field(default_factory=list)
    errors: List[ErrorRow] = Field(default_factory=list)
    stability: List[StabilityRow] = Field(default_factory=list)
    deterministic: bool = False
    execution_id: Optional[str] = None

    @property
    def failed(self) -> bool:
        return bool(self.errors)


class SummaryRow(BaseModel):
    """Mean and sample variance of the metrics over seeds and pooled phantoms"""
    model_config = ConfigDict(frozen=True)

    experiment: str
    group: str
    axis: str
    value: str
    method: str
    count: int
    rmse_mean: float
    rmse_var_sample: Optional[float] = None
    ssim_mean: float
    ssim_var_sample: Optional[float] = None
