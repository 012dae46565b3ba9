"""
Tests for settings, configuration validation and structured logging
"""

import json
import logging
import sys
from fractions import Fraction

import pytest

from teichcount.config import (
    ConfigError,
    Settings,
    StructuredLogger,
    get_config_summary,
    get_settings,
    get_structured_logger,
    setup_logging,
    setup_structured_logging,
    validate_configuration,
)
from teichcount.config.logging_config import _PACKAGE_LOGGERS
from teichcount.main import main
from teichcount.models import Stratum


@pytest.fixture
def restore_package_loggers():
    yield
    for name in _PACKAGE_LOGGERS:
        logger = logging.getLogger(name)
        logger.handlers.clear()
        logger.propagate = True
        logger.setLevel(logging.NOTSET)


class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.threads == 1
        assert settings.oracle_bound_h2 == 7
        assert settings.oracle_bound_h11 == 6
        assert settings.step_budget(4) == 640

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("TEICHCOUNT_ORACLE_BOUND_H2", "5")
        monkeypatch.setenv("TEICHCOUNT_STEP_BUDGET_FACTOR", "20")
        get_settings.cache_clear()
        settings = get_settings()
        assert settings.oracle_bound_h2 == 5
        assert settings.step_budget(3) == 540

    def test_settings_are_cached(self):
        assert get_settings() is get_settings()

    @pytest.mark.parametrize("threads", [0, -4])
    def test_nonpositive_threads_mean_single_threaded(self, threads):
        assert Settings(threads=threads).threads == 1


class TestValidation:
    def test_valid_configuration(self):
        result = validate_configuration()
        assert result["valid"] is True
        assert result["errors"] == []

    @pytest.mark.parametrize(
        "overrides",
        [
            {"oracle_bound_h2": 9},
            {"oracle_bound_h11": 1},
            {"mzv_precision": 8},
            {"log_level": "LOUD"},
            {"environment": "staging"},
        ],
    )
    def test_out_of_range_values_rejected(self, overrides):
        with pytest.raises(ConfigError):
            validate_configuration(Settings(**overrides))

    def test_low_step_budget_only_warns(self):
        result = validate_configuration(Settings(step_budget_factor=5))
        assert result["valid"] is True
        assert len(result["warnings"]) == 1

    def test_summary(self):
        summary = get_config_summary()
        assert summary["threads"] == "1"
        assert summary["oracle_bounds"] == "H2<=7, H11<=6"


class TestStructuredLogger:
    def test_json_entry_keeps_exact_values(self):
        events = StructuredLogger("sweeps.test", enable_json=True)
        entry = json.loads(
            events._format_log_entry("INFO", "done", {"T": Fraction(5, 2), "stratum": Stratum.H2, "pair": (1, Fraction(1, 3))})
        )
        assert entry["T"] == "5/2"
        assert entry["stratum"] == "H2"
        assert entry["pair"] == [1, "1/3"]
        assert entry["service"] == "sweeps.test"

    def test_plain_entry(self):
        events = StructuredLogger("sweeps.test")
        line = events._format_log_entry("WARNING", "slow chunk", {"d": 7})
        assert line.endswith("[WARNING] sweeps.test: slow chunk | d=7")

    def test_error_context_is_logged(self, caplog):
        from teichcount.errors import OutOfRange

        events = StructuredLogger("sweeps.test")
        with caplog.at_level(logging.ERROR, logger="sweeps.test"):
            events.log_error_with_context(OutOfRange("d too large", {"d": 99}), {"command": "counts"})
        (record,) = caplog.records
        assert "error_type=OutOfRange" in record.getMessage()
        assert "d=99" in record.getMessage()
        assert "command=counts" in record.getMessage()

    def test_log_sweep(self, caplog):
        events = StructuredLogger("sweeps.test")
        with caplog.at_level(logging.INFO, logger="sweeps.test"):
            events.log_sweep("oracle", tasks=4, failed=1, duration_ms=12.34567)
        assert "oracle: 3/4 chunks" in caplog.text
        assert "duration_ms=12.346" in caplog.text


def test_setup_logging_levels(restore_package_loggers):
    setup_logging("debug")
    assert logging.getLogger("teichcount.flatsurf").level == logging.DEBUG
    assert logging.getLogger("teichcount.flatsurf").propagate is False


def test_setup_structured_logging(restore_package_loggers):
    events = setup_structured_logging()
    assert events.service_name == "teichcount"
    assert events.enable_json is get_settings().log_json
    assert logging.getLogger("teichcount.moves").propagate is False
    assert get_structured_logger("teichcount") is events


def test_main_routes_logging_through_structured_setup(monkeypatch, capsys, restore_package_loggers):
    monkeypatch.setattr(sys, "argv", ["teichcount", "constants", "--q-max", "3"])
    assert main() == 0
    assert logging.getLogger("teichcount.cli").propagate is False
    assert capsys.readouterr().out.splitlines()[0] == "q,c,s1,s2,thm_c,thm_s1,thm_s2,ok_c,ok_s1,ok_s2"


def test_main_reports_unknown_log_level(monkeypatch, restore_package_loggers):
    monkeypatch.setenv("TEICHCOUNT_LOG_LEVEL", "LOUD")
    monkeypatch.setattr(sys, "argv", ["teichcount", "constants", "--q-max", "3"])
    get_settings.cache_clear()
    assert main() == 1
