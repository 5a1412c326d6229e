import pytest
import sys

from loguru import logger


@pytest.fixture(autouse=True)
def wrapper():
    """
    A wrapper function to restore the default log sink after each test.
    """

    yield

    # SecondaryEngine replaces the loguru sinks, which would otherwise leak
    # into the following tests.
    logger.remove()
    logger.add(sys.stderr, level="ERROR")
