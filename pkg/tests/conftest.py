"""Shared fixtures: domains, seeded generators, catalog shortcuts."""

from __future__ import annotations

import random

import pytest

from cesarospaces import piecewise as pw

HALFLINE = pw.DomainSpec("halfline")
UNIT = pw.DomainSpec("unit")


@pytest.fixture
def halfline() -> pw.DomainSpec:
    return HALFLINE


@pytest.fixture
def unit() -> pw.DomainSpec:
    return UNIT


@pytest.fixture
def rng() -> random.Random:
    # fixed seed so failures replay byte for byte
    return random.Random(1789)
