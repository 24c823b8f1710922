"""Built-in site register: a grid-tied coastal New England community microgrid.

The register lists fifteen threats against a site with rooftop PV, a wind
turbine, natural-gas generators, battery storage, and above-ground
distribution. Threats judged incapable of distinct effects carry a single
placeholder vulnerability named "none" with all ranges at [0, 0.01].
"""

from __future__ import annotations

from .model import BoundedRange, Scenario, ThreatSpec, VulnerabilitySpec

_DESCRIPTION = (
    "Grid-tied coastal New England community microgrid: rooftop PV, one wind "
    "turbine, natural-gas generation, battery storage, above-ground "
    "distribution. Where a row's qualitative label and printed numeric range "
    "disagreed, the numeric range was kept when parseable (hurricane "
    "turbine-loss and distribution probabilities, winter-storm distribution "
    "probability, electromagnetic-pulse threat and inverter probabilities "
    "0.01-0.5, fuel-price-spike probability 0.01-0.2, drought probability "
    "0.3-0.5, cyberattack and terrorism probabilities 0.05-0.3), with two "
    "exceptions where the printed 0-0.5 contradicted both the label and all "
    "analogous rows and the label value 0-0.05 was kept instead: the "
    "severe-thunderstorm PV-loss operational impact and both hail PV "
    "impacts. A stray trailing character in the severe-thunderstorm "
    "distribution-damage probability was dropped (0.01-0.5). Threats with no "
    "distinct vulnerabilities carry a placeholder row named 'none'."
)

# name, vulnerability probability, operational impact, infrastructural impact
_Row = tuple[str, tuple[float, float], tuple[float, float], tuple[float, float]]

_REGISTER: tuple[tuple[str, tuple[float, float], float, tuple[_Row, ...]], ...] = (
    (
        "Hurricane",
        (0.2, 0.7),
        1.0,
        (
            ("Clouds and Rain Lead to PV Generation Losses", (0.5, 0.7), (0.0, 0.05), (0.0, 0.01)),
            ("High Winds Leads to Turbine Generation Losses", (0.2, 0.5), (0.0, 0.2), (0.0, 0.01)),
            ("High Winds Damages PV", (0.05, 0.2), (0.0, 0.5), (0.0, 0.5)),
            ("High Winds Damage Turbine", (0.05, 0.2), (0.0, 0.5), (0.0, 0.5)),
            ("High Winds Damage Distribution", (0.05, 0.5), (0.0, 0.5), (0.0, 0.5)),
            ("Heavy Rains/Storm Surge Damages Generator", (0.05, 0.2), (0.0, 0.5), (0.0, 0.5)),
            ("Heavy Rains/Storm Surge Damages Storage", (0.05, 0.2), (0.0, 0.5), (0.0, 0.5)),
        ),
    ),
    (
        "Severe Winter Storm",
        (0.7, 0.9),
        1.0,
        (
            ("Snow and Ice Lead to PV Generation Losses", (0.5, 0.7), (0.0, 0.05), (0.0, 0.01)),
            ("Snow and Ice Lead to Turbine Generation Losses", (0.01, 0.2), (0.0, 0.2), (0.0, 0.01)),
            ("Snow, Ice, and Wind Damages PV", (0.01, 0.2), (0.0, 0.5), (0.0, 0.5)),
            ("Snow, Ice, and Wind Damages Turbine", (0.01, 0.2), (0.0, 0.5), (0.0, 0.5)),
            ("Snow, Ice, and Wind Damages Distribution", (0.01, 0.5), (0.0, 0.5), (0.0, 0.5)),
        ),
    ),
    (
        "Severe Thunderstorm",
        (0.7, 0.9),
        1.0,
        (
            ("Clouds and Rain Lead to PV Generation Losses", (0.5, 0.7), (0.0, 0.05), (0.0, 0.01)),
            ("High Winds Leads to Turbine Generation Losses", (0.01, 0.2), (0.0, 0.2), (0.0, 0.01)),
            ("High Winds and Rain Damage PV", (0.01, 0.2), (0.0, 0.2), (0.0, 0.2)),
            ("High Winds and Rain Damage Turbine", (0.01, 0.2), (0.0, 0.2), (0.0, 0.2)),
            ("High Winds and Rain Damage Distribution", (0.01, 0.5), (0.0, 0.2), (0.0, 0.2)),
            ("Lightning Causes Electrical System Damage", (0.01, 0.05), (0.0, 0.9), (0.0, 0.5)),
        ),
    ),
    (
        "Hail",
        (0.7, 0.9),
        1.0,
        (("Infrastructure Damage to PV", (0.01, 0.2), (0.0, 0.05), (0.0, 0.05)),),
    ),
    (
        "High Wind",
        (0.2, 0.7),
        1.0,
        (
            ("High Winds Leads to Wind Generation Losses", (0.5, 0.7), (0.0, 0.2), (0.0, 0.01)),
            ("Infrastructure Damage to PV", (0.01, 0.2), (0.0, 0.2), (0.0, 0.2)),
            ("Infrastructure Damage to Turbine", (0.01, 0.2), (0.0, 0.2), (0.0, 0.2)),
            ("Infrastructure Damage to Distribution", (0.01, 0.2), (0.0, 0.2), (0.0, 0.2)),
        ),
    ),
    (
        "Flooding",
        (0.05, 0.5),
        1.0,
        (
            ("Infrastructure Damage to Generator", (0.01, 0.5), (0.0, 0.7), (0.0, 0.7)),
            ("Infrastructure Damage to Storage", (0.01, 0.5), (0.0, 0.7), (0.0, 0.7)),
        ),
    ),
    (
        "Earthquake",
        (0.7, 0.9),
        1.0,
        (
            ("PV Damage", (0.01, 0.05), (0.0, 0.2), (0.0, 0.2)),
            ("Turbine Damage", (0.01, 0.05), (0.0, 0.2), (0.0, 0.2)),
            ("Generator Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
            ("Storage Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
            ("Distribution Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
        ),
    ),
    (
        "Tornado",
        (0.7, 0.9),
        1.0,
        (
            ("PV Damage", (0.01, 0.05), (0.0, 0.2), (0.0, 0.7)),
            ("Turbine Damage", (0.01, 0.05), (0.0, 0.2), (0.0, 0.7)),
            ("Generator Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
            ("Storage Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
            ("Distribution Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
        ),
    ),
    (
        "Electromagnetic Pulse",
        (0.01, 0.5),
        1.0,
        (("Inverter Damage", (0.01, 0.5), (0.0, 0.9), (0.0, 0.5)),),
    ),
    (
        "Fuel Price Spikes",
        (0.01, 0.2),
        1.0,
        (("Operation Shutdown", (0.01, 0.2), (0.0, 0.7), (0.0, 0.01)),),
    ),
    (
        "Drought",
        (0.3, 0.5),
        1.0,
        (("none", (0.0, 0.01), (0.0, 0.01), (0.0, 0.01)),),
    ),
    (
        "Tsunami",
        (0.0, 0.01),
        0.0,
        (("none", (0.0, 0.01), (0.0, 0.01), (0.0, 0.01)),),
    ),
    (
        "Wildfire",
        (0.0, 0.01),
        0.0,
        (("none", (0.0, 0.01), (0.0, 0.01), (0.0, 0.01)),),
    ),
    (
        "Cyberattack",
        (0.05, 0.3),
        1.0,
        (
            ("Controls Override", (0.01, 0.2), (0.0, 1.0), (0.0, 0.01)),
            ("PV Damage", (0.01, 0.05), (0.0, 0.2), (0.0, 0.2)),
            ("Turbine Damage", (0.01, 0.05), (0.0, 0.2), (0.0, 0.2)),
            ("Generator Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
            ("Storage Damage", (0.01, 0.05), (0.0, 0.7), (0.0, 0.7)),
            ("Distribution Damage", (0.01, 0.05), (0.0, 1.0), (0.0, 1.0)),
        ),
    ),
    (
        "Terrorism",
        (0.05, 0.3),
        1.0,
        (
            ("PV Damage", (0.01, 1.0), (0.0, 0.2), (0.0, 0.2)),
            ("Turbine Damage", (0.01, 1.0), (0.0, 0.2), (0.0, 0.2)),
            ("Generator Damage", (0.01, 1.0), (0.0, 0.7), (0.0, 0.7)),
            ("Storage Damage", (0.01, 1.0), (0.0, 0.7), (0.0, 0.7)),
            ("Distribution Damage", (0.01, 1.0), (0.0, 1.0), (0.0, 1.0)),
        ),
    ),
)


def builtin_new_england() -> Scenario:
    """Fresh copy of the built-in register."""
    threats = tuple(
        ThreatSpec(
            name=name,
            probability=BoundedRange(*prob),
            importance=importance,
            vulnerabilities=tuple(
                VulnerabilitySpec(
                    name=vname,
                    probability=BoundedRange(*vprob),
                    operational_impact=BoundedRange(*op),
                    infrastructural_impact=BoundedRange(*infra),
                )
                for vname, vprob, op, infra in rows
            ),
        )
        for name, prob, importance, rows in _REGISTER
    )
    return Scenario(
        name="Coastal New England Community Microgrid",
        description=_DESCRIPTION,
        threats=threats,
    )
