import pytest

from hermlat.forms import build_form_power, reduce_form, transfer
from hermlat.lattice import GramMatrix


@pytest.fixture(scope="session")
def vn():
    """Cached transfers of the first-power form, keyed by modulus."""
    cache = {}

    def get(n: int) -> GramMatrix:
        if n not in cache:
            cache[n] = transfer(reduce_form(build_form_power(1), n))
        return cache[n]

    return get
