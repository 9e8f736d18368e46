import random

import pytest

from eqcube.alexander import SeifertData, alexander_from_polys
from eqcube.laurent import parse_poly
from eqcube.verify import random_seifert


@pytest.fixture
def trefoil():
    return SeifertData(1, [[-1, 1], [0, -1]])


@pytest.fixture
def figure_eight():
    return SeifertData(1, [[1, 1], [0, -1]])


@pytest.fixture
def trefoil_alex():
    d = parse_poly("t^-1 - 1 + t")
    return alexander_from_polys(d, d)


@pytest.fixture
def trivial_alex():
    return alexander_from_polys(parse_poly("1"), parse_poly("1"))


def seeded_seifert(seed, genus=None):
    return random_seifert(random.Random(seed), genus)
