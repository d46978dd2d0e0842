import math

import pytest
from hypothesis import strategies as st

from groot import BrieskornTriple


def coprime_triples(max_exponent: int = 40, max_product: int = 20000):
    """Hypothesis strategy for positively oriented Brieskorn triples."""

    def ok(t):
        a, b, c = t
        return (
            len({a, b, c}) == 3
            and math.gcd(a, b) == 1
            and math.gcd(a, c) == 1
            and math.gcd(b, c) == 1
            and a * b * c <= max_product
        )

    ints = st.integers(min_value=2, max_value=max_exponent)
    return st.tuples(ints, ints, ints).filter(ok).map(lambda t: BrieskornTriple(*t))


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "cache"
