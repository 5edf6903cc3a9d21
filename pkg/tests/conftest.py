"""Shared fixtures: the named 2-cube types and a handful of fixed outmaps.

Vertex and value masks use bit i-1 for coordinate i throughout; value
tuples are indexed by vertex mask.  The small constants here were worked
out by hand and act as frozen oracles for the library.
"""

import random

import pytest

from uso_kit import Outmap

# the four 2-cube orientation types
EYE = (0, 1, 2, 3)          # unique sink at 11, no antipodal failure
BOW = (0, 1, 3, 2)          # the 2-dimensional decreasing-path USO
TWIN_PEAK = (0, 3, 3, 0)    # two sinks, every antipodal pair ties
CYCLE = (1, 2, 2, 1)        # directed 4-cycle, no sink

# a hand-checked 3-dimensional border USO and its dual (the 3-dimensional
# decreasing-path USO); the two differ exactly in the values of 100/101
BORDER_3 = (0, 1, 3, 2, 6, 7, 5, 4)
KM_3 = (0, 1, 3, 2, 7, 6, 4, 5)

# 3-cube outmap whose bottom 2-face is a twin peak while the whole cube
# still has a unique sink: classified Other, smallest failing face [000, 110]
EMBEDDED_TWIN_PEAK = (4, 7, 7, 4, 0, 1, 2, 3)


@pytest.fixture
def eye():
    return Outmap(2, EYE)


@pytest.fixture
def bow():
    return Outmap(2, BOW)


@pytest.fixture
def twin_peak():
    return Outmap(2, TWIN_PEAK)


@pytest.fixture
def cycle():
    return Outmap(2, CYCLE)


@pytest.fixture
def border_3():
    return Outmap(3, BORDER_3)


@pytest.fixture
def km_3():
    return Outmap(3, KM_3)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
