"""Orbit serialization: CSV and JSON, lossless for finite values.

CSV has the header ``n,re,im`` and one row per stored iterate, ``n``
counting from 1.  Floats are written with :func:`repr`, the shortest
decimal string that round-trips (at most 17 significant digits).
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .maps import MapKind, MapSpec, Orbit, OrbitStatus, State, StatusKind

FORMATS = ("csv", "json")


def atomic_write(path, data: str | bytes) -> None:
    """Write ``data`` to ``path`` through a temp file in the same directory."""
    path = Path(path)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        kwargs = {} if mode == "wb" else {"encoding": "utf-8", "newline": ""}
        with os.fdopen(fd, mode, **kwargs) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _unpair(v) -> complex:
    re, im = v
    return complex(float(re), float(im))


def orbit_to_csv(o: Orbit) -> str:
    buf = io.StringIO()
    buf.write("n,re,im\n")
    for n, z in enumerate(o.points.tolist(), start=1):
        buf.write(f"{n},{z.real!r},{z.imag!r}\n")
    return buf.getvalue()


def orbit_to_dict(o: Orbit) -> dict:
    return {
        "spec": {"map": o.spec.kind.value, "alpha": _pair(o.spec.alpha), "beta": _pair(o.spec.beta)},
        "initial": {"z0": _pair(o.initial.z_prev), "z1": _pair(o.initial.z_curr)},
        "status": {"kind": o.status.kind.value, "step": o.status.step, "divisor": o.status.divisor},
        "points": [_pair(z) for z in o.points.tolist()],
    }


def orbit_to_json(o: Orbit) -> str:
    return json.dumps(orbit_to_dict(o), separators=(",", ":")) + "\n"


def export_orbit(o: Orbit, path, fmt: str | None = None) -> Path:
    """Write ``o`` to ``path`` as CSV or JSON (inferred from the suffix).

    Raises
    ------
    ValueError
        Empty orbit or unknown format.
    OSError
        Re-raised with the path in the message.
    """
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".")).lower()
    if fmt not in FORMATS:
        raise ValueError(f"unknown export format {fmt!r}; use csv or json")
    if len(o) == 0:
        raise ValueError("orbit has no iterates to export")
    text = orbit_to_csv(o) if fmt == "csv" else orbit_to_json(o)
    try:
        atomic_write(path, text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def read_csv_points(path) -> np.ndarray:
    """Points from an ``n,re,im`` CSV file."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["n", "re", "im"]:
            raise ValueError(f"{path}: expected header n,re,im, got {header}")
        vals = [complex(float(re), float(im)) for _, re, im in reader]
    return np.array(vals, dtype=complex)


def orbit_from_dict(d: dict) -> Orbit:
    spec = MapSpec(MapKind.parse(d["spec"]["map"]), _unpair(d["spec"]["alpha"]), _unpair(d["spec"]["beta"]))
    initial = State(_unpair(d["initial"]["z0"]), _unpair(d["initial"]["z1"]))
    st = d["status"]
    status = OrbitStatus(StatusKind(st["kind"]), st.get("step"), st.get("divisor"))
    pts = np.array([_unpair(p) for p in d["points"]], dtype=complex)
    return Orbit(spec, initial, pts, status)


def read_json_orbit(path) -> Orbit:
    with open(path, encoding="utf-8") as fh:
        return orbit_from_dict(json.load(fh))


def read_points(path) -> np.ndarray:
    """Points from either format, chosen by suffix."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        return read_json_orbit(path).points
    return read_csv_points(path)
