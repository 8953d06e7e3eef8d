"""
Field and wave-function files.

Binary (``.wcf``)::

    b"WCFIELD1" | uint64 little-endian header length | UTF-8 JSON header |
    little-endian complex128 samples in C order

CSV (``.csv``): two ``#`` comment lines (a tag and the JSON header), then one
row per sample with the integer indices, the real part and the imaginary part.
"""

import json
import struct
from pathlib import Path

import numpy as np

from .grid import AxisSpec, Field, PhaseSpaceGrid, WaveFunction

__all__ = ["write_field", "read_field", "read_object", "MAGIC"]

MAGIC = b"WCFIELD1"
CSV_TAG = "# wignercert field"
FLOAT_FMT = "%.17g"


def _header(obj) -> dict:
    if isinstance(obj, Field):
        return {"kind": "field", "grid": obj.grid.to_dict(), "label": obj.label,
                "shape": list(obj.grid.shape)}
    if isinstance(obj, WaveFunction):
        return {"kind": "wavefunction", "axes": [a.to_dict() for a in obj.axes], "hbar": obj.hbar,
                "shape": [a.points for a in obj.axes]}
    raise TypeError(f"cannot write {type(obj).__name__}")


def _build(header: dict, values: np.ndarray):
    values = values.reshape(header["shape"])
    if header["kind"] == "field":
        return Field(PhaseSpaceGrid.from_dict(header["grid"]), values, label=header.get("label", "field"))
    if header["kind"] == "wavefunction":
        axes = tuple(AxisSpec(int(a["points"]), float(a["half_extent"])) for a in header["axes"])
        return WaveFunction(axes, values, float(header["hbar"]))
    raise ValueError(f"unknown object kind {header['kind']!r}")


def _format(path: Path, fmt: str | None) -> str:
    if fmt is not None:
        return fmt
    return "csv" if path.suffix.lower() == ".csv" else "binary"


def write_field(path, obj, fmt: str | None = None) -> Path:
    """Write a Field or WaveFunction; ``fmt`` is 'binary' or 'csv' (default by suffix)."""
    path = Path(path)
    header = _header(obj)
    values = np.asarray(obj.values, dtype="<c16")
    if _format(path, fmt) == "csv":
        idx = np.indices(values.shape).reshape(values.ndim, -1).T
        table = np.column_stack([idx, values.real.ravel(), values.imag.ravel()])
        cols = [f"i{k}" for k in range(values.ndim)] + ["re", "im"]
        fmts = ["%d"] * values.ndim + [FLOAT_FMT, FLOAT_FMT]
        with open(path, "w", newline="\n") as fh:
            fh.write(CSV_TAG + "\n")
            fh.write("# " + json.dumps(header, sort_keys=True) + "\n")
            np.savetxt(fh, table, fmt=fmts, delimiter=",", header=",".join(cols), comments="")
    else:
        blob = json.dumps(header, sort_keys=True).encode()
        with open(path, "wb") as fh:
            fh.write(MAGIC)
            fh.write(struct.pack("<Q", len(blob)))
            fh.write(blob)
            fh.write(np.ascontiguousarray(values).tobytes())
    return path


def read_object(path):
    """Read a Field or WaveFunction written by :func:`write_field`."""
    path = Path(path)
    with open(path, "rb") as fh:
        head = fh.read(len(MAGIC))
    if head == MAGIC:
        raw = path.read_bytes()
        (hlen,) = struct.unpack("<Q", raw[8:16])
        header = json.loads(raw[16:16 + hlen].decode())
        values = np.frombuffer(raw[16 + hlen:], dtype="<c16").copy()
        if values.size != int(np.prod(header["shape"])):
            raise ValueError("sample count does not match the header")
        return _build(header, values)
    with open(path) as fh:
        tag = fh.readline().rstrip("\n")
        if tag != CSV_TAG:
            raise ValueError(f"{path} is neither a binary nor a CSV field file")
        header = json.loads(fh.readline()[1:].strip())
        table = np.loadtxt(fh, delimiter=",", skiprows=1, ndmin=2)
    shape = tuple(header["shape"])
    ndim = len(shape)
    values = np.zeros(shape, dtype=complex)
    idx = tuple(table[:, k].astype(int) for k in range(ndim))
    values[idx] = table[:, ndim] + 1j * table[:, ndim + 1]
    return _build(header, values.ravel())


def read_field(path) -> Field:
    obj = read_object(path)
    if not isinstance(obj, Field):
        raise ValueError(f"{path} holds a wave function, not a phase-space field")
    return obj
