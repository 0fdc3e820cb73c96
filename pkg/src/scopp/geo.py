"""Transforms between geographic coordinates and a local 1-meter Cartesian plane.

The plane is a tangent-plane projection anchored at a reference point: the
x axis measures the great-circle arc along the parallel through the target
point (east positive) and the y axis the arc along the meridian (north
positive).  Both directions use the same spherical-Earth model as the
distance function, and the inverse is analytically exact, so round trips
are lossless to floating-point precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError, OutOfRangeError

EARTH_RADIUS_M = 6_371_000.0  # spherical mean radius

# Half-width, in degrees, of the square window around the anchor inside
# which the tangent-plane approximation is accepted.
VALIDITY_WINDOW_DEG = 0.5


@dataclass(frozen=True)
class GeoPoint:
    """Latitude/longitude in decimal degrees; lon normalized to [-180, 180)."""

    lat: float
    lon: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lat) and math.isfinite(self.lon)):
            raise InvalidInputError(f"non-finite geographic point ({self.lat}, {self.lon})")
        if not -90.0 <= self.lat <= 90.0:
            raise InvalidInputError(f"latitude {self.lat} outside [-90, 90]")
        lon = ((self.lon + 180.0) % 360.0) - 180.0
        object.__setattr__(self, "lon", lon)


@dataclass(frozen=True)
class CartPoint:
    """Point in the local plane, meters east (x) and north (y) of the anchor."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidInputError(f"non-finite Cartesian point ({self.x}, {self.y})")


@dataclass(frozen=True)
class Projection:
    """Tangent-plane projection anchored at a reference geographic point."""

    anchor: GeoPoint
    earth_radius_m: float = EARTH_RADIUS_M

    def __post_init__(self) -> None:
        if not (math.isfinite(self.earth_radius_m) and self.earth_radius_m > 0):
            raise InvalidInputError(f"earth radius must be positive, got {self.earth_radius_m}")


def haversine_distance(a: GeoPoint, b: GeoPoint, radius_m: float = EARTH_RADIUS_M) -> float:
    """Great-circle distance in meters between two geographic points.

    Args:
        a, b: end points.
        radius_m: sphere radius in meters.

    Returns:
        Distance in meters, in [0, pi * radius_m].
    """
    if not (math.isfinite(radius_m) and radius_m > 0):
        raise InvalidInputError(f"radius must be positive, got {radius_m}")
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    d_phi = math.radians(b.lat - a.lat)
    d_lam = math.radians(b.lon - a.lon)
    h = math.sin(d_phi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(d_lam / 2.0) ** 2
    h = min(1.0, max(0.0, h))  # guard rounding at antipodes
    return 2.0 * radius_m * math.atan2(math.sqrt(h), math.sqrt(1.0 - h))


def _wrapped_delta_lon(lon: float, anchor_lon: float) -> float:
    return ((lon - anchor_lon + 180.0) % 360.0) - 180.0


def to_cartesian(p: Projection, g: GeoPoint) -> CartPoint:
    """Project a geographic point into the local plane.

    x is the signed arc along the parallel at g.lat between the anchor's
    longitude and g.lon; y is the signed arc along the meridian.  Raises
    OutOfRangeError when g is farther than the validity window from the
    anchor on either axis.
    """
    d_lat = g.lat - p.anchor.lat
    d_lon = _wrapped_delta_lon(g.lon, p.anchor.lon)
    if abs(d_lat) > VALIDITY_WINDOW_DEG or abs(d_lon) > VALIDITY_WINDOW_DEG:
        raise OutOfRangeError(
            f"point ({g.lat}, {g.lon}) outside {VALIDITY_WINDOW_DEG} deg window "
            f"around anchor ({p.anchor.lat}, {p.anchor.lon})"
        )
    r = p.earth_radius_m
    y = r * math.radians(d_lat)
    # Haversine along the parallel degenerates to 2R asin(cos(phi) sin(dlon/2)).
    half = math.cos(math.radians(g.lat)) * math.sin(math.radians(d_lon) / 2.0)
    x = math.copysign(2.0 * r * math.asin(min(1.0, abs(half))), d_lon)
    return CartPoint(x, y)


def to_geographic(p: Projection, c: CartPoint) -> GeoPoint:
    """Invert :func:`to_cartesian` exactly under the same projection."""
    r = p.earth_radius_m
    d_lat = math.degrees(c.y / r)
    lat = p.anchor.lat + d_lat
    if abs(d_lat) > VALIDITY_WINDOW_DEG or not -90.0 <= lat <= 90.0:
        raise OutOfRangeError(f"y={c.y} m leaves the projection validity window")
    cos_phi = math.cos(math.radians(lat))
    sin_half = math.sin(abs(c.x) / (2.0 * r))
    if cos_phi <= 0.0 or sin_half > cos_phi:
        raise OutOfRangeError(f"x={c.x} m has no longitude at latitude {lat}")
    d_lon = math.degrees(math.copysign(2.0 * math.asin(sin_half / cos_phi), c.x))
    if abs(d_lon) > VALIDITY_WINDOW_DEG:
        raise OutOfRangeError(f"x={c.x} m leaves the projection validity window")
    return GeoPoint(lat, p.anchor.lon + d_lon)
