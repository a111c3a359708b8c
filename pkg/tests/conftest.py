import os

import hypothesis
import numpy as np
import pytest

from config.settings import OUTPUT_CONFIG
from src.main import main
from src.utils.report_generator import report_generator

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.register_profile("default-no-deadline", deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default-no-deadline"))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def response_schema():
    return report_generator.load_schema(OUTPUT_CONFIG["response_schema"])


@pytest.fixture(scope="session")
def sample_report_schema():
    return report_generator.load_schema(OUTPUT_CONFIG["sample_report_schema"])


@pytest.fixture
def cli(capsys):
    """Run the command line and return (exit code, stdout)."""

    def run(*argv):
        code = main(list(argv))
        return code, capsys.readouterr().out

    return run
