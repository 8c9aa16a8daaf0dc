import os

import pytest

from mixvol.config import Settings, settings
from mixvol.errors import (
    CapacityError,
    DimensionMismatchError,
    MixvolError,
    ParameterError,
    UndefinedValueError,
)


class TestSettings:
    """Tests for the Settings class"""

    def test_default_settings(self):
        """Test default parameters"""
        test_settings = Settings()

        assert test_settings.ARTIFACT_NAME == "mixvol"
        assert test_settings.ARTIFACT_VERSION == "1.0.0"
        assert test_settings.PRNG_NAME == "PCG64"
        assert test_settings.DEFAULT_SEED == 7
        assert test_settings.DEFAULT_TRIALS == 100
        assert test_settings.DEFAULT_QUADRATURE == "icosa4"
        assert test_settings.WORKERS == 1
        assert test_settings.MD_PERM_MAX_N == 8
        assert test_settings.MD_INCL_EXCL_MAX_N == 20
        assert test_settings.HARMONICS_LMAX == 16

    def test_environment_variables(self):
        """Test environment variables reading"""
        test_env = {
            "MIXVOL_SEED": "42",
            "MIXVOL_TRIALS": "25",
            "MIXVOL_QUAD": "gl20",
            "MIXVOL_WORKERS": "3",
        }
        os.environ.update(test_env)

        test_settings = Settings()

        assert test_settings.DEFAULT_SEED == 42
        assert test_settings.DEFAULT_TRIALS == 25
        assert test_settings.DEFAULT_QUADRATURE == "gl20"
        assert test_settings.WORKERS == 3

    def test_workers_floor(self):
        """Test that a non-positive worker count falls back to one"""
        os.environ["MIXVOL_WORKERS"] = "0"

        assert Settings().WORKERS == 1

    @pytest.mark.parametrize(
        "key, value, prop",
        [
            ("MIXVOL_SEED", "seven", "DEFAULT_SEED"),
            ("MIXVOL_TRIALS", "0", "DEFAULT_TRIALS"),
            ("MIXVOL_TRIALS", "many", "DEFAULT_TRIALS"),
            ("MIXVOL_QUAD", "lebedev", "DEFAULT_QUADRATURE"),
            ("MIXVOL_WORKERS", "two", "WORKERS"),
        ],
    )
    def test_invalid_environment_values(self, key, value, prop):
        """Test invalid environment values"""
        os.environ[key] = value

        with pytest.raises(ValueError, match=key):
            getattr(Settings(), prop)

    def test_tolerances(self):
        """Test the tolerance table embedded in reports"""
        tolerances = settings.tolerances()

        assert set(tolerances) == {
            "psd_rank",
            "psd_abs_floor",
            "thm1",
            "thm1_gap",
            "thm1_identity",
            "md_agreement",
            "exact",
            "quadrature",
            "containment",
        }
        assert tolerances["thm1"] == 1e-8
        assert tolerances["thm1_gap"] == 1e-9
        assert tolerances["md_agreement"] == 1e-9
        assert tolerances["quadrature"] == 2e-3

    def test_global_settings_instance(self):
        """Test the global settings instance"""
        assert isinstance(settings, Settings)


class TestErrors:
    """Tests for the error hierarchy"""

    def test_parameter_errors_are_value_errors(self):
        assert issubclass(ParameterError, ValueError)
        assert issubclass(DimensionMismatchError, ParameterError)

    def test_undefined_value_is_arithmetic(self):
        assert issubclass(UndefinedValueError, ArithmeticError)

    @pytest.mark.parametrize(
        "error",
        [ParameterError, DimensionMismatchError, CapacityError, UndefinedValueError],
    )
    def test_common_base(self, error):
        assert issubclass(error, MixvolError)
