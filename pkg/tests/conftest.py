import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def provider():
    """One shared formula provider so bases and repairs derive once."""
    from divconv.convolution import FormulaProvider

    return FormulaProvider()
