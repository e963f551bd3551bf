"""
Tests for setup_experiment and create_all_methods.

These test the high-level setup API that external users call.
Ensures config text, files, dicts and validated configs all work.
"""

import pytest

from tomoqa import create_all_methods, run_experiment, setup_experiment
from tomoqa.init import method_settings, run
from tomoqa.local_backends import create_in_memory_backends
from tomoqa.methods.types import MethodSettings
from tomoqa.types import ConfigValidationError
from tomoqa.validation.config import validate_config
from tests.test_cases.configs.experiments import sweep_all_methods, sweep_classical


class TestCreateAllMethods:

    def test_every_method_is_registered(self):
        methods = create_all_methods(create_in_memory_backends())
        assert sorted(methods) == ["fbp", "hybrid", "pinv", "qa", "sart"]
        assert all(callable(m) for m in methods.values())

    def test_settings_from_config(self):
        config = validate_config(sweep_all_methods)
        settings = method_settings(config, debug_dir="/tmp/subqubos")
        assert settings == MethodSettings(
            reads=10, sweeps=100, time_limit=5.0, iterations=5,
            subproblem_size=12, debug_dir="/tmp/subqubos",
        )


class TestSetupExperiment:

    def test_yaml_text(self):
        config, backends, methods = setup_experiment(sweep_classical)
        assert config.experiment_name == "sweep_classical"
        assert backends.telemetry is not None
        assert set(config.methods) <= set(methods)

    def test_validated_config_is_kept(self):
        validated = validate_config(sweep_classical)
        config, _, _ = setup_experiment(validated)
        assert config is validated

    def test_overrides(self):
        config, _, _ = setup_experiment(sweep_classical, overrides={"seeds": [5], "iterations": 2})
        assert config.seeds == [5]
        assert config.deterministic

    def test_invalid_config(self):
        with pytest.raises(ConfigValidationError):
            setup_experiment({"kind": "size_sweep"})

    def test_local_storage(self, tmp_path):
        config, backends, methods = setup_experiment(
            sweep_classical, use_local_storage=True, storage_dir=str(tmp_path)
        )
        table = run_experiment(config, backends, methods)

        assert (tmp_path / "operational" / f"{table.execution_id}.json").is_file()
        assert (tmp_path / "telemetry" / f"{table.execution_id}.jsonl").is_file()
        assert backends.operational.get_state(table.execution_id)["completed"] == 24
        backends.cleanup_all()

    def test_run_helper(self):
        table = run(sweep_classical, overrides={"phantoms": ["tree"], "sizes": [4]})
        assert len(table.rows) == 3 * 2
        assert not table.failed
