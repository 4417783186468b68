"""Run reports and their JSON/CSV/SVG serializations.

Reports are plain data: serialization is key-sorted and free of
timestamps, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

VERSION = "0.1.0"


def jsonable(value):
    """Normalize numbers, complex values and arrays to JSON-ready data.

    Complex numbers become [re, im] pairs; arrays become lists.
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (complex, np.complexfloating)):
        c = complex(value)
        return [c.real, c.imag]
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    raise TypeError(f"cannot serialize {type(value)!r}")


@dataclass(frozen=True)
class RunReport:
    """Echo of one command invocation: inputs, results and tolerances."""

    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    version: str = VERSION

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "results": jsonable(self.results),
            "tolerances": jsonable(self.tolerances),
            "version": self.version,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            results=data["results"],
            tolerances=data["tolerances"],
            version=data["version"],
        )


def boundary_csv(sample) -> str:
    """CSV rows theta,lambda,x,y with 17 significant digits."""
    lines = ["theta,lambda,x,y"]
    for theta, lam, (x, y) in zip(sample.thetas, sample.support, sample.points):
        lines.append(f"{theta:.17g},{lam:.17g},{x:.17g},{y:.17g}")
    return "\n".join(lines) + "\n"


def _svg_coords(points, size: float) -> str:
    # map the complex plane to SVG user units, y axis flipped
    half = size / 2.0
    scale = 0.4 * size
    return " ".join(
        f"{half + scale * p.real:.3f},{half - scale * p.imag:.3f}" for p in points
    )


def boundary_svg(sample=None, polygon=None, size: int = 560) -> str:
    """Static SVG of the unit circle, an optional boundary polyline and an
    optional polygon overlay."""
    half = size / 2.0
    scale = 0.4 * size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{half}" cy="{half}" r="{scale}" fill="none" '
        'stroke="#888888" stroke-width="1"/>',
    ]
    if sample is not None:
        pts = list(sample.points_complex())
        pts.append(pts[0])
        parts.append(
            f'<polyline points="{_svg_coords(pts, size)}" fill="none" '
            'stroke="#0044cc" stroke-width="1.5"/>'
        )
    if polygon is not None:
        verts = getattr(polygon, "vertices", polygon)
        parts.append(
            f'<polygon points="{_svg_coords(list(verts), size)}" fill="none" '
            'stroke="#cc2200" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
