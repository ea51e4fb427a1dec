import pytest

from vircurv.exact import rational
from vircurv.virasoro import PRESETS, CentralParams


@pytest.fixture
def cubic():
    # theta_k = k^3
    return PRESETS["cubic"]


PARAM_SETS = [
    CentralParams(12, rational(1, 2)),
    CentralParams(6, rational(1, 4)),
    CentralParams(1, 1),
    CentralParams(6, rational(1, 100)),
]


@pytest.fixture(params=PARAM_SETS, ids=lambda p: f"c={p.c},h={p.h}")
def params(request):
    return request.param
