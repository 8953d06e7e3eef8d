"""
Deterministic report serialization.

Floats are written with 17 significant digits and keys keep their insertion
order, so identical inputs give byte-identical files.
"""

import json
import math

import numpy as np

__all__ = ["dumps", "format_float", "status_of", "exit_code", "EXIT_CODES"]

EXIT_CODES = {"pass": 0, "fail": 1, "indeterminate": 2, "error": 3}


def format_float(x: float) -> str:
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return "%.17g" % x


def _escape(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _dump(obj, indent: int, level: int, out: list):
    pad = " " * (indent * (level + 1))
    end_pad = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = list(obj.items())
        for i, (k, v) in enumerate(items):
            out.append(pad + _escape(str(k)) + ": ")
            _dump(v, indent, level + 1, out)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(end_pad + "}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        seq = obj.tolist() if isinstance(obj, np.ndarray) else list(obj)
        if not seq:
            out.append("[]")
            return
        if all(isinstance(v, (int, float, np.floating, np.integer)) and not isinstance(v, bool) for v in seq):
            out.append("[" + ", ".join(_scalar(v) for v in seq) + "]")
            return
        out.append("[\n")
        for i, v in enumerate(seq):
            out.append(pad)
            _dump(v, indent, level + 1, out)
            out.append(",\n" if i < len(seq) - 1 else "\n")
        out.append(end_pad + "]")
    else:
        out.append(_scalar(obj))


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_float(v)
    if isinstance(v, complex):
        return "[" + format_float(v.real) + ", " + format_float(v.imag) + "]"
    return _escape(str(v))


def dumps(obj, indent: int = 2) -> str:
    """Serialize ``obj`` to JSON text with fixed float formatting."""
    out = []
    _dump(obj, indent, 0, out)
    return "".join(out) + "\n"


def status_of(verdicts, errors=()) -> str:
    """Overall status: error > fail > indeterminate > pass."""
    verdicts = list(verdicts)
    if errors:
        return "error"
    if "fail" in verdicts:
        return "fail"
    if "indeterminate" in verdicts:
        return "indeterminate"
    return "pass"


def exit_code(status: str) -> int:
    return EXIT_CODES[status]
