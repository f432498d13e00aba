"""JSON and CSV encodings of frames, multipliers, regions and spectra.

Complex numbers are written as ``[re, im]`` pairs.  CSV numbers use 17
significant digits and LF line endings so that files are bit-reproducible.
"""

from __future__ import annotations

import io
import json
import math

import numpy as np

from . import enclosures as en
from . import numerics as nx
from .errors import ValidationError
from .frames import Family, Frame
from .multipliers import Multiplier, Symbol


def cpair(z):
    z = complex(z)
    return [z.real, z.imag]


def from_cpair(p):
    if isinstance(p, (int, float)):
        return complex(p)
    re, im = p
    return complex(re, im)


def jsonable(obj):
    """Recursively convert numpy/complex values into plain JSON types."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return cpair(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    return obj


def dumps(obj):
    return json.dumps(jsonable(obj), indent=2, allow_nan=False) + "\n"


def fmt(x):
    return "%.17g" % x


# ---------------------------------------------------------------------------
# Frames


def frame_to_dict(F):
    S = F.synthesis
    return {
        "dim": F.dim,
        "count": F.count,
        "label": F.label,
        "synthesis": [cpair(z) for z in S.T.ravel()],
    }


def frame_from_dict(d, validate=True):
    try:
        dim, count = int(d["dim"]), int(d["count"])
        entries = d["synthesis"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed frame JSON: {exc}") from None
    if len(entries) != dim * count:
        raise ValidationError(f"frame JSON has {len(entries)} entries, expected {dim * count}")
    S = np.array([from_cpair(p) for p in entries], dtype=complex).reshape(count, dim).T
    cls = Frame if validate else Family
    return cls(S, d.get("label", ""))


def load_frame(path, validate=True):
    with open(path) as fh:
        return frame_from_dict(json.load(fh), validate)


def save_frame(F, path):
    with open(path, "w", newline="\n") as fh:
        fh.write(dumps(frame_to_dict(F)))


# ---------------------------------------------------------------------------
# Symbols and multipliers


def symbol_to_dict(m):
    return {"values": [cpair(z) for z in m.values], "generator": jsonable(m.generator)}


def symbol_from_dict(d):
    return Symbol([from_cpair(p) for p in d["values"]], d.get("generator"))


def multiplier_to_dict(M):
    return {
        "dim": M.dim,
        "phi_label": M.phi_label,
        "psi_label": M.psi_label,
        "dual": M.dual,
        "symbol": symbol_to_dict(M.symbol),
        "matrix": [cpair(z) for z in M.matrix.ravel()],
    }


def multiplier_from_dict(d):
    n = int(d["dim"])
    A = np.array([from_cpair(p) for p in d["matrix"]], dtype=complex).reshape(n, n)
    return Multiplier(A, symbol_from_dict(d["symbol"]), d["phi_label"], d["psi_label"], bool(d["dual"]))


# ---------------------------------------------------------------------------
# Regions


def rle_row(row):
    """Run lengths of a boolean row, starting with a (possibly empty) run of False."""
    runs, current, n = [], False, 0
    for v in row:
        v = bool(v)
        if v == current:
            n += 1
        else:
            runs.append(n)
            current, n = v, 1
    runs.append(n)
    return runs


def unrle_row(runs):
    out, v = [], False
    for n in runs:
        out.extend([v] * n)
        v = not v
    return out


def region_to_dict(r):
    d = {"type": r.kind, "provenance": jsonable(r.provenance)}
    if isinstance(r, en.Disk):
        d.update(center=cpair(r.center), radius=r.radius)
    elif isinstance(r, en.Interval):
        d.update(lo=r.lo, hi=r.hi)
    elif isinstance(r, en.IntervalUnion):
        d.update(intervals=[list(iv) for iv in r.intervals])
    elif isinstance(r, en.Polygon):
        d.update(vertices=[cpair(v) for v in r.polygon.vertices])
    elif isinstance(r, en.GridMask):
        nx_, ny = r.resolution
        d.update(box=list(r.box), resolution=[nx_, ny], orientation="certified-resolvent",
                 rows=[rle_row(row) for row in r.certified])
    return d


def region_from_dict(d):
    t = d["type"]
    prov = d.get("provenance") or {}
    if t == "disk":
        return en.Disk(from_cpair(d["center"]), d["radius"], provenance=prov)
    if t == "interval":
        return en.Interval(d["lo"], d["hi"], provenance=prov)
    if t == "interval_union":
        return en.IntervalUnion(tuple(tuple(iv) for iv in d["intervals"]), provenance=prov)
    if t == "polygon":
        return en.Polygon(polygon=nx.Polygon2D(tuple(from_cpair(v) for v in d["vertices"])), provenance=prov)
    if t == "grid_mask":
        mask = np.array([unrle_row(r) for r in d["rows"]], dtype=bool)
        return en.GridMask(box=tuple(d["box"]), certified=mask, provenance=prov)
    if t == "whole_plane":
        return en.WholePlane(provenance=prov)
    raise ValidationError(f"unknown region type {t!r}")


def region_outline(r, samples=128):
    """``(x, y, certified)`` rows for plotting; ``certified`` is None except for grids."""
    if isinstance(r, en.GridMask):
        P = r.points
        return [(z.real, z.imag, int(c)) for z, c in zip(P.ravel(), r.certified.ravel())]
    if isinstance(r, en.Disk):
        t = 2 * np.pi * np.arange(samples) / samples
        return [(z.real, z.imag, None) for z in r.center + r.radius * np.exp(1j * t)]
    if isinstance(r, en.Interval):
        return [(r.lo, 0.0, None), (r.hi, 0.0, None)]
    if isinstance(r, en.IntervalUnion):
        return [(x, 0.0, None) for iv in r.intervals for x in iv]
    if isinstance(r, en.Polygon):
        return [(v.real, v.imag, None) for v in r.polygon.vertices]
    return []


# ---------------------------------------------------------------------------
# CSV


def spectrum_csv(eigenvalues):
    buf = io.StringIO(newline="")
    buf.write("re,im\n")
    for z in np.asarray(eigenvalues, dtype=complex):
        buf.write(f"{fmt(z.real)},{fmt(z.imag)}\n")
    return buf.getvalue()


def grid_csv(mask):
    buf = io.StringIO(newline="")
    buf.write("x,y,certified\n")
    for x, y, c in region_outline(mask):
        buf.write(f"{fmt(x)},{fmt(y)},{c}\n")
    return buf.getvalue()


def regions_csv(named_regions):
    """One file for several regions: ``region,kind,x,y,certified``."""
    buf = io.StringIO(newline="")
    buf.write("region,kind,x,y,certified\n")
    for name, r in named_regions:
        for x, y, c in region_outline(r):
            buf.write(f"{name},{r.kind},{fmt(x)},{fmt(y)},{'' if c is None else c}\n")
    return buf.getvalue()


def write_text(path, text):
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
