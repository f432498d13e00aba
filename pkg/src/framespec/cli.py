"""Command-line front end.

    framespec gen --family onb-union --dim 8 --alphas 0.7071067811865476,0.7071067811865476 --out phi.json
    framespec spectrum --frame phi.json --dual self --symbol paper:ex5_2
    framespec enclose --method onb-union --frame phi.json --symbol paper:ex5_2
    framespec verify --experiment all --out reports --seed 7

Any subcommand accepts ``--config file.json`` whose keys are the long flag
names; explicit flags win over file values and unknown keys are rejected.
Errors print a single line ``ERROR:<kind>:<message>`` to stderr; a criterion
invoked outside its hypotheses exits with status 2, other errors with 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import enclosures as en
from . import frames as fr
from . import multipliers as mu
from . import serialize as ser
from . import verify as vf
from .errors import (
    DimensionError,
    FrameSpecError,
    HypothesisError,
    NotARieszBasisError,
    ValidationError,
)

SEED_ENV = "FRAMESPEC_SEED"

DEFAULTS = {
    "gen": {"family": "onb", "dim": 4, "alphas": None, "gabor": None, "bounds": "1,1", "window": None,
            "random_basis": False, "aligned": False, "label": None, "out": None},
    "spectrum": {"dual": "canonical", "repeat": False, "n": None, "csv": None, "json": None},
    "enclose": {"dual": "canonical", "repeat": False, "n": None, "index_set": None, "k": None, "ells": None,
                "mu": None, "radius": None, "midrange": False, "box": None, "resolution": 401,
                "out": None, "csv": None},
    "verify": {"experiment": "all", "out": "verify_out", "trials": 1000},
}
REQUIRED = {"spectrum": ("frame", "symbol"), "enclose": ("method", "frame", "symbol")}


class ConfigError(FrameSpecError):
    kind = "config"


def _complex_list(text):
    try:
        return [complex(s.replace(" ", "")) for s in str(text).split(",") if s.strip()]
    except ValueError:
        raise ValidationError(f"cannot parse number list {text!r}") from None


def _float_list(text, n=None):
    vals = [float(s) for s in str(text).split(",")]
    if n is not None and len(vals) != n:
        raise ValidationError(f"expected {n} comma-separated numbers, got {text!r}")
    return vals


def _seed(value):
    if value is None:
        value = os.environ.get(SEED_ENV, 0)
    seed = int(value)
    if not 0 <= seed < 2 ** 64:
        raise ValidationError("seed must be an unsigned 64-bit integer")
    return seed


def parse_symbol(spec, count, repeat=False, n=None):
    """Symbols: inline ``a,b,c`` (tiled with ``repeat``) or ``paper:ex5_2``, ``paper:rem5_4``, ``paper:ex3``."""
    spec = str(spec)
    if spec == "paper:ex5_2":
        m = mu.Symbol.periodic(vf.EX52_PATTERN, count)
    elif spec == "paper:rem5_4":
        m = mu.Symbol.harmonic_pairs(int(n) if n is not None else count // 2)
    elif spec == "paper:ex3":
        v = np.ones(count)
        v[0] = 2
        m = mu.Symbol(v, {"kind": "rule", "rule": "2,1,1,...", "length": count})
    else:
        vals = _complex_list(spec)
        m = mu.Symbol.periodic(vals, count) if repeat else mu.Symbol(vals)
    if len(m) != count:
        raise DimensionError(f"symbol has {len(m)} entries but the frame has {count} vectors")
    return m


def _index_set(spec, count, dim):
    if spec == "even":
        return np.arange(1, count, 2)
    if spec == "odd":
        return np.arange(0, count, 2)
    if spec == "first":
        return np.arange(dim)
    return np.array([int(s) for s in str(spec).split(",")])


def _load_pair(args):
    phi = ser.load_frame(args.frame)
    if args.dual == "canonical":
        psi = fr.canonical_dual(phi).psi
    elif args.dual == "self":
        psi = phi
    else:
        psi = ser.load_frame(args.dual)
    return phi, psi


def _emit(text, path):
    if path:
        ser.write_text(path, text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Commands


def cmd_gen(args):
    seed = _seed(args.seed)
    d = int(args.dim)
    if args.family == "onb":
        F = fr.onb(d, seed=seed if args.random_basis else None)
    elif args.family == "riesz":
        A, B = _float_list(args.bounds, 2)
        F = fr.random_riesz(d, A, B, seed)
    elif args.family == "onb-union":
        alphas = _complex_list(args.alphas or "1")
        rng = np.random.default_rng(seed)
        Us = [np.eye(d)] + [np.eye(d) if args.aligned else fr.random_unitary(d, rng) for _ in alphas[1:]]
        F = fr.scaled_onb_union(d, alphas, Us)
    elif args.family == "gabor":
        if not args.gabor:
            raise ValidationError("--gabor a,b is required for the gabor family")
        a, b = (int(x) for x in _float_list(args.gabor, 2))
        window = None if args.window is None else _complex_list(args.window)
        F = fr.gabor_frame(fr.GaborParams(d, a, b, window))
        if not F.is_frame:
            raise fr.NotAFrameError(f"Gabor system (d={d}, a={a}, b={b}) does not span C^{d}")
    else:
        raise ValidationError(f"unknown family {args.family!r}")
    if args.label:
        F = fr.Frame(F.synthesis, args.label)
    _emit(ser.dumps(ser.frame_to_dict(F)), args.out)
    return 0


def cmd_spectrum(args):
    phi, psi = _load_pair(args)
    m = parse_symbol(args.symbol, phi.count, args.repeat, args.n)
    M = mu.assemble(m, phi, psi)
    eigs = mu.spectrum_of(M)
    _emit(ser.spectrum_csv(eigs), args.csv)
    if args.json:
        ser.write_text(args.json, ser.dumps({"multiplier": ser.multiplier_to_dict(M),
                                             "eigenvalues": [ser.cpair(z) for z in eigs]}))
    return 0


def _predicate_union(args, m, phi, psi):
    preds = []
    names = []
    ok, _ = fr.is_dual_pair(phi, psi)
    if ok:
        preds.append(lambda lam: en.pertII_resolvent_predicate(lam, None, m, phi, psi))
        names.append("dual_disk_predicate")
    if args.index_set is not None and ok:
        data = en.riesz_split_data(phi, psi, _index_set(args.index_set, phi.count, phi.dim))
        preds.append(lambda lam: en.riesz_split_resolvent(lam, m, phi, psi, data))
        names.append("riesz_split")
    if args.k is not None:
        od = en.onb_union_data(m, phi, int(args.k), args.ells and _complex_list(args.ells))
        preds.append(lambda lam: en.onb_union_resolvent(lam, od))
        names.append("onb_union")
    if not preds:
        raise HypothesisError("no resolvent criterion applies (pair is not dual and no --k given)")

    def union(lam):
        out = np.zeros(np.shape(lam), dtype=bool)
        for p in preds:
            out |= p(lam)
        return out

    return union, names


def cmd_enclose(args):
    phi, psi = _load_pair(args)
    m = parse_symbol(args.symbol, phi.count, args.repeat, args.n)
    method = args.method
    box = tuple(_float_list(args.box, 4)) if args.box else en.default_box(m, phi, psi)
    if method == "bessel-disk":
        region = en.bessel_disk(m, phi, psi)
    elif method == "hull":
        region = en.hull_enclosure(m, phi, psi)
    elif method == "dual-disk":
        if args.midrange:
            region = en.dual_disk_item2(m, phi, psi)
        else:
            mu_ = None if args.mu is None else _complex_list(args.mu)[0]
            r = None if args.radius is None else float(args.radius)
            region = en.dual_disk_item1(m, phi, psi, mu_, r)
    elif method == "riesz-split":
        if args.index_set is None:
            raise ValidationError("--index-set is required for riesz-split")
        data = en.riesz_split_data(phi, psi, _index_set(args.index_set, phi.count, phi.dim))
        invertible = en.riesz_split_invertible(m, phi, psi, data)
        region = en.region_scan(lambda lam: en.riesz_split_resolvent(lam, m, phi, psi, data), box,
                                int(args.resolution),
                                provenance={"criterion": "riesz_split_scan", "certifies_invertible": invertible,
                                            "A_phi1": data.A_phi1, "A_psi1": data.A_psi1,
                                            "B_phi2": data.B_phi2, "B_psi2": data.B_psi2})
    elif method == "onb-union":
        od = en.onb_union_data(m, phi, int(args.k or 2), args.ells and _complex_list(args.ells))
        region = en.onb_union_interval(od) if m.is_real and args.ells is None else en.onb_union_disk(od)
    elif method == "scan":
        pred, names = _predicate_union(args, m, phi, psi)
        region = en.region_scan(pred, box, int(args.resolution), provenance={"criterion": "scan", "parts": names})
    else:
        raise ValidationError(f"unknown method {method!r}")
    _emit(ser.dumps(ser.region_to_dict(region)), args.out)
    if args.csv:
        text = ser.grid_csv(region) if isinstance(region, en.GridMask) else ser.regions_csv([(method, region)])
        ser.write_text(args.csv, text)
    return 0


def cmd_verify(args):
    seed = _seed(args.seed)
    names = [*vf.EXPERIMENTS, "random_soundness"] if args.experiment == "all" else [args.experiment]
    os.makedirs(args.out, exist_ok=True)
    passed = total = 0
    for name in names:
        p, t = vf.run_experiment(name, seed, int(args.trials), args.out)
        passed += p
        total += t
        print(f"{name}: {'PASS' if p == t else 'FAIL'} {p}/{t}")
    print(f"{'PASS' if passed == total else 'FAIL'} {passed}/{total}")
    return 0 if passed == total else 1


# ---------------------------------------------------------------------------
# Parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"ERROR:usage:{message}\n")


def build_parser():
    parser = _Parser(prog="framespec", description="Spectra and enclosures of frame multipliers")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file of flag values")
        p.add_argument("--seed", help=f"unsigned 64-bit seed (fallback ${SEED_ENV})")

    def pair_flags(p):
        p.add_argument("--frame", help="frame JSON file (phi)")
        p.add_argument("--dual", help="canonical | self | path to a psi frame JSON")
        p.add_argument("--symbol", help="a,b,c | paper:ex5_2 | paper:rem5_4 | paper:ex3")
        p.add_argument("--repeat", action="store_true", default=None, help="tile an inline symbol")
        p.add_argument("--n", type=int, help="pair count for paper:rem5_4")

    g = sub.add_parser("gen", help="construct a frame")
    common(g)
    g.add_argument("--family", choices=["onb", "riesz", "onb-union", "gabor"])
    g.add_argument("--dim", type=int)
    g.add_argument("--alphas", help="comma-separated branch scalars (onb-union)")
    g.add_argument("--gabor", help="a,b time and frequency steps")
    g.add_argument("--window", help="comma-separated Gabor window")
    g.add_argument("--bounds", help="A,B Riesz bounds")
    g.add_argument("--random-basis", action="store_true", default=None, help="seeded random ONB")
    g.add_argument("--aligned", action="store_true", default=None, help="onb-union with identical bases")
    g.add_argument("--label")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("spectrum", help="eigenvalues of a multiplier")
    common(s)
    pair_flags(s)
    s.add_argument("--csv", help="eigenvalue CSV path (default stdout)")
    s.add_argument("--json", help="multiplier JSON path")
    s.set_defaults(func=cmd_spectrum)

    e = sub.add_parser("enclose", help="spectral enclosure region")
    common(e)
    pair_flags(e)
    e.add_argument("--method", choices=["bessel-disk", "hull", "dual-disk", "riesz-split", "onb-union", "scan"])
    e.add_argument("--index-set", help="even | odd | first | comma-separated zero-based indices")
    e.add_argument("--k", type=int, help="number of orthonormal bases in the union")
    e.add_argument("--ells", help="comma-separated shift parameters for onb-union")
    e.add_argument("--mu", help="disk centre for dual-disk")
    e.add_argument("--radius", help="symbol radius about --mu")
    e.add_argument("--midrange", action="store_true", default=None, help="midrange disk for real symbols")
    e.add_argument("--box", help="xmin,xmax,ymin,ymax scan box")
    e.add_argument("--resolution", type=int)
    e.add_argument("--out", help="region JSON path (default stdout)")
    e.add_argument("--csv", help="plot CSV path")
    e.set_defaults(func=cmd_enclose)

    v = sub.add_parser("verify", help="run the verification experiments")
    common(v)
    v.add_argument("--experiment", help="experiment name, random_soundness, or all")
    v.add_argument("--out", help="output directory")
    v.add_argument("--trials", type=int, help="random soundness trial count")
    v.set_defaults(func=cmd_verify)
    return parser


def _merge_config(args):
    dests = set(vars(args)) - {"command", "func", "config"}
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(cfg, dict):
            raise ConfigError("config file must hold a JSON object")
        for key, value in cfg.items():
            dest = key.replace("-", "_")
            if dest not in dests:
                raise ConfigError(f"unknown config key {key!r}")
            if getattr(args, dest) is None:
                setattr(args, dest, value)
    for dest, value in DEFAULTS.get(args.command, {}).items():
        if getattr(args, dest, None) is None:
            setattr(args, dest, value)
    for dest in REQUIRED.get(args.command, ()):
        if getattr(args, dest) is None:
            raise ConfigError(f"--{dest.replace('_', '-')} is required")
    return args


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(_merge_config(args))
    except (HypothesisError, NotARieszBasisError) as exc:
        print(f"ERROR:{exc.kind}:{exc}", file=sys.stderr)
        return 2
    except FrameSpecError as exc:
        print(f"ERROR:{exc.kind}:{exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ERROR:io:{exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"ERROR:parse:{exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
