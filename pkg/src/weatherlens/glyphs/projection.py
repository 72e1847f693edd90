"""Albers equal-area conic projection with Alaska/Hawaii insets.

Glyph geometry must be built in a Cartesian plane: polar-coordinate shapes
drawn in raw lon/lat warp when the map is projected, so stations are
projected first and all glyph math happens in projected units.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..base import ParamMixin
from ..exceptions import ConfigurationError, ProjectionDomainError
from ..validation import check_array

EARTH_RADIUS_MILES = 3958.8


class AlbersEqualArea(ParamMixin):
    """Spherical Albers equal-area conic projection (forward and inverse).

    Defaults are the standard parameters for the contiguous United States:
    standard parallels 29.5N and 45.5N, centered on 96W.
    """

    def __init__(
        self,
        lon_center: float = -96.0,
        lat_origin: float = 37.5,
        parallel_1: float = 29.5,
        parallel_2: float = 45.5,
        radius: float = EARTH_RADIUS_MILES,
    ):
        self.lon_center = lon_center
        self.lat_origin = lat_origin
        self.parallel_1 = parallel_1
        self.parallel_2 = parallel_2
        self.radius = radius

    def _constants(self) -> tuple[float, float, float]:
        phi1 = np.radians(self.parallel_1)
        phi2 = np.radians(self.parallel_2)
        n = 0.5 * (np.sin(phi1) + np.sin(phi2))
        if abs(n) < 1e-12:
            raise ConfigurationError("standard parallels may not be symmetric about the equator")
        C = np.cos(phi1) ** 2 + 2.0 * n * np.sin(phi1)
        rho0 = self._rho(C, n, np.radians(self.lat_origin))
        return n, C, rho0

    def _rho(self, C: float, n: float, phi) -> np.ndarray:
        under = C - 2.0 * n * np.sin(phi)
        if np.any(under <= 1e-15):
            raise ProjectionDomainError(
                "latitude reaches the projection pole for these standard parallels"
            )
        return self.radius * np.sqrt(under) / n

    def transform(self, lonlat) -> np.ndarray:
        """Project (n, 2) lon/lat degrees to plane coordinates."""
        lonlat = check_array(lonlat, name="lonlat")
        n, C, rho0 = self._constants()
        lam = np.radians(((lonlat[:, 0] - self.lon_center + 180.0) % 360.0) - 180.0)
        phi = np.radians(lonlat[:, 1])
        rho = self._rho(C, n, phi)
        theta = n * lam
        return np.column_stack((rho * np.sin(theta), rho0 - rho * np.cos(theta)))

    def inverse_transform(self, xy) -> np.ndarray:
        xy = check_array(xy, name="xy")
        n, C, rho0 = self._constants()
        x, y = xy[:, 0], xy[:, 1]
        rho = np.hypot(x, rho0 - y)
        theta = np.arctan2(x, rho0 - y)
        phi = np.arcsin((C - (rho * n / self.radius) ** 2) / (2.0 * n))
        lam = self.lon_center + np.degrees(theta / n)
        return np.column_stack((lam, np.degrees(phi)))

    def to_dict(self) -> dict:
        return {"kind": "albers", **self.get_params()}


@dataclass
class Inset:
    """A regional projection drawn scaled and shifted into the main frame."""

    projection: AlbersEqualArea
    scale: float = 1.0
    translate: tuple[float, float] = (0.0, 0.0)

    def transform(self, lonlat) -> np.ndarray:
        xy = self.projection.transform(lonlat)
        return xy * self.scale + np.asarray(self.translate)

    def to_dict(self) -> dict:
        return {
            "projection": self.projection.to_dict(),
            "scale": self.scale,
            "translate": list(self.translate),
        }


def _default_alaska() -> Inset:
    return Inset(
        projection=AlbersEqualArea(
            lon_center=-154.0, lat_origin=62.0, parallel_1=55.0, parallel_2=65.0
        ),
        scale=0.35,
        translate=(-1900.0, -1300.0),
    )


def _default_hawaii() -> Inset:
    return Inset(
        projection=AlbersEqualArea(
            lon_center=-157.0, lat_origin=20.0, parallel_1=8.0, parallel_2=18.0
        ),
        scale=1.0,
        translate=(-1000.0, -1700.0),
    )


@dataclass
class UsProjection:
    """Contiguous-US Albers plus translated-and-scaled Alaska/Hawaii insets."""

    conus: AlbersEqualArea = field(default_factory=AlbersEqualArea)
    alaska: Inset = field(default_factory=_default_alaska)
    hawaii: Inset = field(default_factory=_default_hawaii)
    alaska_min_lat: float = 50.0
    hawaii_max_lat: float = 25.0
    hawaii_max_lon: float = -140.0

    def zone(self, lon: float, lat: float) -> str:
        if lat >= self.alaska_min_lat:
            return "alaska"
        if lat <= self.hawaii_max_lat and lon <= self.hawaii_max_lon:
            return "hawaii"
        return "conus"

    def transform(self, lonlat) -> np.ndarray:
        lonlat = check_array(lonlat, name="lonlat")
        out = np.empty_like(lonlat)
        zones = np.array([self.zone(lon, lat) for lon, lat in lonlat])
        for name, proj in (
            ("conus", self.conus),
            ("alaska", self.alaska),
            ("hawaii", self.hawaii),
        ):
            mask = zones == name
            if mask.any():
                out[mask] = proj.transform(lonlat[mask])
        return out

    def transform_point(self, lon: float, lat: float) -> tuple[float, float]:
        xy = self.transform(np.array([[lon, lat]]))
        return float(xy[0, 0]), float(xy[0, 1])

    def to_dict(self) -> dict:
        return {
            "kind": "us_albers",
            "conus": self.conus.to_dict(),
            "alaska": self.alaska.to_dict(),
            "hawaii": self.hawaii.to_dict(),
            "alaska_min_lat": self.alaska_min_lat,
            "hawaii_max_lat": self.hawaii_max_lat,
            "hawaii_max_lon": self.hawaii_max_lon,
        }

    @classmethod
    def from_dict(cls, spec: dict | None) -> "UsProjection":
        if not spec:
            return cls()

        def albers(d: dict) -> AlbersEqualArea:
            params = {k: v for k, v in d.items() if k != "kind"}
            return AlbersEqualArea(**params)

        def inset(d: dict, default: Inset) -> Inset:
            if not d:
                return default
            return Inset(
                projection=albers(d["projection"]),
                scale=float(d.get("scale", 1.0)),
                translate=tuple(d.get("translate", (0.0, 0.0))),
            )

        proj = cls()
        if "conus" in spec:
            proj.conus = albers(spec["conus"])
        proj.alaska = inset(spec.get("alaska", {}), proj.alaska)
        proj.hawaii = inset(spec.get("hawaii", {}), proj.hawaii)
        for key in ("alaska_min_lat", "hawaii_max_lat", "hawaii_max_lon"):
            if key in spec:
                setattr(proj, key, float(spec[key]))
        return proj
