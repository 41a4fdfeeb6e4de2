import os
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from yoneda_ext import Morphism, Presentation, ZZ, Zmod

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

R4 = Zmod(4)

rings = st.sampled_from([ZZ, Zmod(4), Zmod(6), Zmod(8), Zmod(9)])
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def cyc(ring, d):
    return Presentation.cyclic(ring, d)


def free(ring, k=1):
    return Presentation.free(ring, k)


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def z4_nonsplit():
    """0 -> Z/2 -> Z/4 -> Z/2 -> 0 over Z/4."""
    from yoneda_ext import verify_exact

    a, z4 = cyc(R4, 2), free(R4)
    return verify_exact([Morphism(a, z4, [[2]]), Morphism(z4, a, [[1]])])


@pytest.fixture
def z_mult2():
    """0 -> Z -> Z -> Z/2 -> 0 with multiplication by 2."""
    from yoneda_ext import verify_exact

    z, z2 = free(ZZ), cyc(ZZ, 2)
    return verify_exact([Morphism(z, z, [[2]]), Morphism(z, z2, [[1]])])


ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} ({title}): {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
