from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from src.utils import ConfigError

from ._constants import ALGORITHM_NAMES
from ._results import PivotRule


class Model(Enum):
    """Random tournament ensemble used by an experiment"""

    UNIFORM = "uniform"
    TRANSITIVE = "transitive"
    NOISY = "noisy"


def _integer(value: Any, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"Configuration key '{key}' must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ExperimentConfig:
    """Declarative description of a Monte Carlo campaign. The transitive model is the
    noisy-transitive model with p = 0; only the noisy model takes a flip probability."""

    algorithms: tuple[str, ...]
    n: int
    model: Model = Model.UNIFORM
    p: float = 0.0
    trials: int = 1
    seed: int = 0
    pivot_rule: PivotRule = PivotRule.RANDOM
    workers: int = 1

    def __post_init__(self) -> None:
        if len(self.algorithms) == 0:
            raise ConfigError("At least one algorithm must be selected")
        unknown = [name for name in self.algorithms if name not in ALGORITHM_NAMES]
        if unknown:
            raise ConfigError(
                f"Unknown algorithms {unknown}, expected some of {list(ALGORITHM_NAMES)}"
            )
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ConfigError(f"Algorithms {list(self.algorithms)} contain duplicates")
        if self.n < 2:
            raise ConfigError(f"Experiments need n >= 2, got {self.n}")
        if self.trials < 1:
            raise ConfigError(f"Experiments need at least one trial, got {self.trials}")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigError(f"Flip probability must lie in [0, 1], got {self.p}")
        if self.workers < 1:
            raise ConfigError(f"Worker count must be positive, got {self.workers}")
        if self.model is not Model.NOISY and self.p != 0.0:
            raise ConfigError(f"The {self.model.value} model does not take a flip probability")

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        try:
            algorithms = data["algorithms"]
            if isinstance(algorithms, str):
                algorithms = [algorithms]
            return cls(
                algorithms=tuple(str(name) for name in algorithms),
                n=_integer(data["n"], "n"),
                model=Model(data.get("model", Model.UNIFORM.value)),
                p=float(data.get("p", 0.0)),
                trials=_integer(data.get("trials", 1), "trials"),
                seed=_integer(data.get("seed", 0), "seed"),
                pivot_rule=PivotRule(data.get("pivot_rule", PivotRule.RANDOM.value)),
                workers=_integer(data.get("workers", 1), "workers"),
            )
        except KeyError as e:
            raise ConfigError(f"Missing configuration key {e}") from None
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid configuration value: {e}") from None

    def to_json(self) -> dict[str, Any]:
        return {
            "algorithms": list(self.algorithms),
            "n": self.n,
            "model": self.model.value,
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "pivot_rule": self.pivot_rule.value,
            "workers": self.workers,
        }


@dataclass(frozen=True)
class AlgorithmStats:
    """Aggregated costs of one algorithm over all trials of an experiment. The ratio
    fields are only filled by the approximation report."""

    algorithm: str
    trials: int
    mean_cost: float
    stderr: float
    min_cost: int
    max_cost: int
    mean_ratio: float | None = None
    max_ratio: float | None = None
    mean_excess: float | None = None


@dataclass(frozen=True)
class SummaryStats:
    config: ExperimentConfig
    per_algorithm: tuple[AlgorithmStats, ...] = field(default_factory=tuple)

    def __getitem__(self, algorithm: str) -> AlgorithmStats:
        for stats in self.per_algorithm:
            if stats.algorithm == algorithm:
                return stats
        raise KeyError(algorithm)

    def __iter__(self) -> Iterator[AlgorithmStats]:
        return iter(self.per_algorithm)
