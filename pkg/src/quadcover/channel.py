"""Air-to-ground path loss over an elliptical footprint.

The LoS probability is the usual elevation sigmoid
``1 / (1 + eta * exp(-kappa * (elevation - eta)))`` with the elevation in
DEGREES: the (eta, kappa) presets below are degree-domain constants, and with
radians P(LoS) would be ~0 at every altitude.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT = 299_792_458.0


@dataclass(frozen=True)
class Environment:
    xi_los: float
    xi_nlos: float
    eta: float
    kappa: float
    name: str = "custom"

    def __post_init__(self):
        if not (self.xi_nlos > self.xi_los >= 0):
            raise ValueError(f"need xi_nlos > xi_los >= 0, got {self.xi_los}, {self.xi_nlos}")
        if not (self.eta > 0 and self.kappa > 0):
            raise ValueError(f"eta and kappa must be positive, got {self.eta}, {self.kappa}")


PRESETS = {
    "suburban": Environment(0.1, 21.0, 4.88, 0.43, "suburban"),
    "urban": Environment(1.0, 20.0, 9.61, 0.16, "urban"),
    "dense_urban": Environment(1.6, 23.0, 12.08, 0.11, "dense_urban"),
}


@dataclass(frozen=True)
class LinkGeometry:
    a: float
    b: float
    h: float
    f: float = 2e9

    def __post_init__(self):
        if not (self.a >= self.b > 0 and np.all(np.asarray(self.h) > 0) and self.f > 0):
            raise ValueError(f"invalid link geometry {self}")


def w_factor(g: LinkGeometry):
    """a*b + sqrt((b^2 + h^2)(a^2 - b^2)).

    W/b is the horizontal distance from the UAV's ground projection to the
    farthest point of the footprint.
    """
    return g.a * g.b + np.sqrt((g.b**2 + g.h**2) * (g.a**2 - g.b**2))


def p_los(env: Environment, elevation_deg):
    return 1.0 / (1.0 + env.eta * np.exp(-env.kappa * (elevation_deg - env.eta)))


def fspl_constant(f: float) -> float:
    """20 log10(4 pi f / c) in dB."""
    return 20.0 * math.log10(4.0 * math.pi * f / SPEED_OF_LIGHT)


def worst_case_elevation(g: LinkGeometry):
    """Elevation angle (degrees) of the farthest footprint point seen from the UAV."""
    return np.degrees(np.arctan(g.h * g.b / w_factor(g)))


def pl_max(env: Environment, g: LinkGeometry):
    """Path loss (dB) at the farthest footprint point, LoS/NLoS weighted.

    Accepts an array of altitudes in ``g.h`` (the other fields scalar).
    """
    w = w_factor(g)
    horizontal = w / g.b
    return (
        (env.xi_los - env.xi_nlos) * p_los(env, worst_case_elevation(g))
        + 10.0 * np.log10(g.h**2 + horizontal**2)
        + fspl_constant(g.f)
        + env.xi_nlos
    )
