from __future__ import annotations

import random
import string

import pytest

from microresil import Scenario, builtin_new_england
from microresil.model import BoundedRange, ThreatSpec, VulnerabilitySpec


@pytest.fixture(scope="session")
def builtin() -> Scenario:
    return builtin_new_england()


def rand_name(rng: random.Random, prefix: str) -> str:
    return prefix + "".join(rng.choices(string.ascii_letters + " -", k=rng.randint(1, 12)))


def rand_range(rng: random.Random) -> BoundedRange:
    a, b = sorted(round(rng.random(), rng.randint(0, 6)) for _ in range(2))
    return BoundedRange(a, b)


def random_scenario(rng: random.Random) -> Scenario:
    threats = []
    for ti in range(rng.randint(1, 6)):
        vulns = []
        for vi in range(rng.randint(0, 5)):
            vulns.append(
                VulnerabilitySpec(
                    name=f"v{vi} " + rand_name(rng, "x"),
                    probability=rand_range(rng),
                    operational_impact=rand_range(rng),
                    infrastructural_impact=rand_range(rng),
                )
            )
        threats.append(
            ThreatSpec(
                name=f"t{ti} " + rand_name(rng, "y"),
                probability=rand_range(rng),
                importance=round(rng.random(), rng.randint(0, 6)),
                vulnerabilities=tuple(vulns),
            )
        )
    return Scenario(
        name=rand_name(rng, "scenario "),
        description=rand_name(rng, "desc "),
        threats=tuple(threats),
    )
