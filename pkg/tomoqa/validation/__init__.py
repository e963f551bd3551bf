from .config import ExperimentConfig, validate_config

__all__ = ["ExperimentConfig", "validate_config"]
