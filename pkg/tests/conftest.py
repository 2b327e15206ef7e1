import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from mjsim.hand import get_tables


@pytest.fixture(scope="session")
def tables():
    return get_tables()
