

from config import load_check_config  # type: ignore  # noqa: E402

def test_load_check_config_returns_defaults() -> None:
    result = load_check_config({})
    config = result.config

    assert config.seed == 42
    assert config.diagram_samples == 500
    assert config.vanish_samples == 1000
    assert config.braid_samples == 200
    assert config.pm7_samples == 100
    assert config.phi_samples == 200
    assert config.series_order == 8
    assert config.weight_engine == "reduced"
    assert result.warnings == []

def test_load_check_config_reads_overrides() -> None:
    result = load_check_config(
        {
            "CONWAY_SEED": "7",
            "CONWAY_BRAID_SAMPLES": "10",
            "CONWAY_WEIGHT_ENGINE": " Oracle ",
        }
    )

    assert result.config.seed == 7
    assert result.config.braid_samples == 10
    assert result.config.weight_engine == "oracle"
    assert not result.warnings

def test_load_check_config_emits_warning_on_invalid_seed() -> None:
    result = load_check_config({"CONWAY_SEED": "abc"})

    assert result.config.seed == 42
    assert any("CONWAY_SEED" in warning for warning in result.warnings)

def test_load_check_config_rejects_negative_samples() -> None:
    result = load_check_config({"CONWAY_VANISH_SAMPLES": "-5"})

    assert result.config.vanish_samples == 1000
    assert any("CONWAY_VANISH_SAMPLES" in warning for warning in result.warnings)

def test_load_check_config_handles_unknown_engine() -> None:
    result = load_check_config({"CONWAY_WEIGHT_ENGINE": "fast"})

    assert result.config.weight_engine == "reduced"
    assert any("CONWAY_WEIGHT_ENGINE" in warning for warning in result.warnings)

def test_load_check_config_treats_blank_as_default() -> None:
    result = load_check_config({"CONWAY_SERIES_ORDER": "   "})

    assert result.config.series_order == 8
    assert result.warnings == []
