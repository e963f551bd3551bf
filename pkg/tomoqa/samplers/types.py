"""
Sampler inputs and outputs, and their exceptions
"""

from pathlib import Path
from typing import Any, Iterator, List, Literal, NamedTuple, Optional, Tuple, Union

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..qubo.energy import qubo_energies
from ..qubo.types import QuboModel
from ..types import DimensionMismatchError, TomoqaError


class SizeGuardError(TomoqaError):
    """Raised when a model is too large for exhaustive enumeration"""
    pass


class ScheduleError(TomoqaError):
    """Raised when an annealing schedule or read count is invalid"""
    pass


class Sample(NamedTuple):
    assignment: np.ndarray
    energy: float
    occurrences: int


class SampleSet(BaseModel):
    """Distinct assignments with energies and occurrence counts.

    Records are sorted by ascending energy; equal energies keep
    lexicographic assignment order.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    assignments: np.ndarray
    energies: np.ndarray
    occurrences: np.ndarray
    seed: Optional[int] = None
    reads: int = 0
    wall_time: float = 0.0

    @classmethod
    def from_samples(cls, q: QuboModel, samples: Any, **metadata: Any) -> "SampleSet":
        """Deduplicate raw (reads, n) samples and score them against q."""
        samples = np.atleast_2d(np.asarray(samples, dtype=np.int8))
        unique, counts = np.unique(samples, axis=0, return_counts=True)
        energies = qubo_energies(q, unique)
        order = np.argsort(energies, kind="stable")
        metadata.setdefault("reads", int(samples.shape[0]))
        return cls(
            assignments=unique[order],
            energies=energies[order],
            occurrences=counts[order].astype(np.int64),
            **metadata,
        )

    @model_validator(mode="after")
    def _check(self) -> "SampleSet":
        k = self.assignments.shape[0]
        if self.energies.shape != (k,) or self.occurrences.shape != (k,):
            raise DimensionMismatchError("sample set columns differ in length")
        return self

    @property
    def first(self) -> Sample:
        """Lowest-energy record."""
        return self[0]

    @property
    def total_occurrences(self) -> int:
        return int(self.occurrences.sum())

    def __len__(self) -> int:
        return self.assignments.shape[0]

    def __getitem__(self, index: int) -> Sample:
        return Sample(
            self.assignments[index].copy(),
            float(self.energies[index]),
            int(self.occurrences[index]),
        )

    def __iter__(self) -> Iterator[Sample]:  # type: ignore[override]
        for index in range(len(self)):
            yield self[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SampleSet):
            return NotImplemented
        return (
            np.array_equal(self.assignments, other.assignments)
            and np.array_equal(self.energies, other.energies)
            and np.array_equal(self.occurrences, other.occurrences)
        )

    __hash__ = None  # type: ignore[assignment]


class AnnealSchedule(BaseModel):
    """Inverse-temperature schedule, one beta per sweep, increasing."""
    model_config = ConfigDict(frozen=True)

    sweeps: int = 1000
    beta_start: float = 0.1
    beta_end: float = 10.0
    interpolation: Literal["geometric", "linear"] = "geometric"

    @model_validator(mode="after")
    def _check(self) -> "AnnealSchedule":
        if self.sweeps < 1:
            raise ScheduleError(f"sweeps must be >= 1, got {self.sweeps}")
        if not (0 < self.beta_start < self.beta_end) or not np.isfinite(self.beta_end):
            raise ScheduleError(
                f"need 0 < beta_start < beta_end, got {self.beta_start}, {self.beta_end}"
            )
        return self

    @classmethod
    def for_model(cls, q: QuboModel, sweeps: int = 1000) -> "AnnealSchedule":
        """Schedule scaled to the model's energy deltas (see default_beta_range)."""
        from .annealing import default_beta_range

        beta_start, beta_end = default_beta_range(q)
        return cls(sweeps=sweeps, beta_start=beta_start, beta_end=beta_end)

    def betas(self) -> np.ndarray:
        if self.interpolation == "linear":
            return np.linspace(self.beta_start, self.beta_end, self.sweeps)
        return np.geomspace(self.beta_start, self.beta_end, self.sweeps)


class ConstrainedQuadraticModel(BaseModel):
    """Integer least squares: minimize ||Mx - y||^2 subject to lower <= x <= upper."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: sp.csc_matrix
    y: np.ndarray
    lower: int = 0
    upper: int

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_csc(cls, value: Any) -> sp.csc_matrix:
        return sp.csc_matrix(value, dtype=np.float64)

    @field_validator("y", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=np.float64).ravel()
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check(self) -> "ConstrainedQuadraticModel":
        if self.y.size != self.matrix.shape[0]:
            raise DimensionMismatchError(
                f"measurement vector has {self.y.size} values, matrix has "
                f"{self.matrix.shape[0]} rows"
            )
        if self.lower > self.upper:
            raise DimensionMismatchError(f"empty bounds [{self.lower}, {self.upper}]")
        return self

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    def objective(self, x: Any) -> float:
        r = self.matrix @ np.asarray(x, dtype=np.float64) - self.y
        return float(r @ r)

    def is_feasible(self, x: Any) -> bool:
        arr = np.asarray(x)
        return bool(
            arr.shape == (self.n,)
            and np.array_equal(arr, np.round(arr))
            and (arr.size == 0 or (arr.min() >= self.lower and arr.max() <= self.upper))
        )


class HybridSettings(BaseModel):
    """Tuning of the hybrid integer solver."""
    model_config = ConfigDict(frozen=True)

    subproblem_size: int = Field(default=12, ge=1)
    sub_reads: int = Field(default=20, ge=1)
    sub_sweeps: int = Field(default=200, ge=1)
    perturb_fraction: float = Field(default=0.1, gt=0.0, le=1.0)
    max_descent_sweeps: int = Field(default=100, ge=1)
    tolerance: float = Field(default=1e-10, ge=0.0)
    debug_dir: Optional[Union[str, Path]] = None


class HybridResult(BaseModel):
    """Best-ever solution of a hybrid run.

    energy_trace holds the best energy after each outer iteration and is
    non-increasing.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x: np.ndarray
    energy: float
    energy_trace: Tuple[float, ...]
    iterations: int
    converged: bool
    wall_time: float = 0.0

    def trace(self) -> List[float]:
        return list(self.energy_trace)
