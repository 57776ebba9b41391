from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from ghcseries import FIXTURES, get_fixture

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

FIXTURE_NAMES = sorted(FIXTURES)


@pytest.fixture(params=FIXTURE_NAMES)
def fixture_name(request):
    return request.param


@pytest.fixture
def pair(fixture_name):
    fixture = get_fixture(fixture_name)
    embedding = fixture.build_embedding()
    return embedding, fixture.build_parabolic()
