"""Command-line front end.

Subcommands operate on a JSON instance file:

    {"config":    {"points": [["x", "y"], ...]},
     "transport": {"dims": [...], "m": [[matrix, ...], ...]},   (optional)
     "quiver":    {"dims": [...], "dPsi": n, "a": [...], "b": [...]},
     "zeta":      "dx/dy",                                      (optional)
     "seed":      integer}                                      (optional)

with rational entries as canonical "num/den" strings.  All reports are
machine-readable JSON (--pretty for indentation); errors surface as
{"error": {"code", "message"}} with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import InfraredError, InvalidInput
from .geometry import (
    Config,
    Dir,
    anti_stokes_sequence,
    chirotope,
    convex_hull,
    dominance_order,
    general_position,
)
from .linalg import MatQ
from .paths import enumerate_zeta_convex_paths, height_data
from .perverse import Quiver, TransportData, mu
from .fourier import factorization_check, fourier_diagram
from .secondary import (
    deformation_complex,
    enumerate_subdivisions,
    is_regular,
    refinement_poset,
)
from .wallcross import CrossingSpec, apply_crossings, transport_along_path


def _parse_zeta(text: str) -> Dir:
    if "/" not in text:
        raise InvalidInput("--zeta expects 'dx/dy' with integer components")
    dx, dy = text.split("/", 1)
    return Dir(Fraction(int(dx)), Fraction(int(dy)))


def _mat_json(mat: MatQ):
    return [[str(x) for x in row] for row in mat.entries]


class Instance:
    def __init__(self, data: dict):
        self.config = Config.from_json(data["config"]) if "config" in data else None
        self.transport = (
            TransportData.from_json(data["transport"])
            if "transport" in data
            else None
        )
        self.quiver = Quiver.from_json(data["quiver"]) if "quiver" in data else None
        if self.transport is None and self.quiver is not None:
            self.transport = mu(self.quiver)
        self.zeta = _parse_zeta(data["zeta"]) if "zeta" in data else None
        self.seed = data.get("seed", 0)
        if (
            self.config is not None
            and self.transport is not None
            and len(self.config) != self.transport.n
        ):
            raise InvalidInput("config size and transport dims disagree")

    @staticmethod
    def load(path: str) -> "Instance":
        with open(path) as fh:
            return Instance(json.load(fh))


def _need(instance: Instance, *fields):
    for f in fields:
        if getattr(instance, f) is None:
            raise InvalidInput(f"instance file is missing '{f}'")


def cmd_matroid(inst: Instance, args) -> dict:
    _need(inst, "config")
    A = inst.config
    chi = chirotope(A)
    zeta = inst.zeta or (args.zeta and _parse_zeta(args.zeta))
    rep = general_position(A, zeta)
    return {
        "n": len(A),
        "chirotope": {
            "/".join(map(str, k)): v for k, v in sorted(chi.signs.items())
        },
        "lin_general": rep.lin_general,
        "strong_lin_general": rep.strong_lin_general,
        "incl_infinity": rep.incl_infinity,
        "exchange_axiom": chi.exchange_axiom_holds() if rep.lin_general else None,
        "hull": convex_hull(A),
    }


def cmd_antistokes(inst: Instance, args) -> dict:
    _need(inst, "config")
    zeta = inst.zeta or _parse_zeta(args.zeta or "1/0")
    word = anti_stokes_sequence(inst.config, zeta, rotation=args.rotation)
    return {
        "initial_order": dominance_order(inst.config, zeta),
        "rotation": args.rotation,
        "word": word,
        "length": len(word),
    }


def cmd_paths(inst: Instance, args) -> dict:
    _need(inst, "config")
    zeta = inst.zeta or _parse_zeta(args.zeta or "1/0")
    A = inst.config
    out = []
    pairs = []
    if args.source is not None and args.target is not None:
        pairs = [(args.source, args.target)]
    else:
        vals = sorted(range(len(A)), key=lambda i: zeta.infinity_form(A[i]))
        pairs = [
            (i, j)
            for a, i in enumerate(vals)
            for j in vals[a + 1:]
        ]
    for i, j in pairs:
        paths = enumerate_zeta_convex_paths(A, i, j, zeta)
        for p in paths:
            hd = height_data(p)
            out.append(
                {
                    "from": i,
                    "to": j,
                    "vertices": list(p.vertices),
                    "l_set": list(hd.l_set),
                    "h_set": list(hd.h_set),
                    "height": hd.h,
                }
            )
    if args.format == "jsonl":
        return {
            "__stream__": "\n".join(json.dumps(entry) for entry in out) + "\n"
        }
    return {"zeta": [str(zeta.dx), str(zeta.dy)], "paths": out}


def cmd_stokes(inst: Instance, args) -> dict:
    _need(inst, "config", "transport")
    zeta0 = inst.zeta or _parse_zeta(args.zeta or "-1/0")
    rep = factorization_check(inst.transport, inst.config, zeta0)
    return {
        "order": list(rep.order),
        "Cplus": _mat_json(rep.c_plus),
        "Cminus": _mat_json(rep.c_minus),
        "Delta": _mat_json(rep.delta),
        "T_glob": _mat_json(rep.lhs),
        "factorization_ok": rep.ok,
    }


def cmd_fourier(inst: Instance, args) -> dict:
    _need(inst, "config", "transport")
    zeta = inst.zeta or _parse_zeta(args.zeta or "1/0")
    diag = fourier_diagram(inst.transport, zeta, inst.config)
    mono = diag.monodromy()
    return {
        "order": list(diag.order),
        "dims": list(diag.dims),
        "aCheck": [_mat_json(x) for x in diag.a_check],
        "bCheck": _mat_json(diag.b_check),
        "monodromy": _mat_json(mono),
    }


def cmd_walk(inst: Instance, args) -> dict:
    _need(inst, "transport")
    if args.to is not None:
        _need(inst, "config")
        with open(args.to) as fh:
            target = Config.from_json(json.load(fh)["config"])
        new_m, log = transport_along_path(inst.transport, inst.config, target)
    elif args.events is not None:
        with open(args.events) as fh:
            specs = [CrossingSpec.from_json(d) for d in json.load(fh)["events"]]
        new_m = apply_crossings(inst.transport, specs)
        log = specs
    else:
        raise InvalidInput("walk needs --to CONFIG.json or --events EVENTS.json")
    return {
        "events": [s.to_json() for s in log],
        "transport": new_m.to_json(),
    }


def cmd_secondary(inst: Instance, args) -> dict:
    _need(inst, "config")
    A = inst.config
    subs = enumerate_subdivisions(A)
    reports = []
    regular_subs = []
    for sub in subs:
        wit = is_regular(A, sub)
        rep = deformation_complex(A, sub)
        reports.append(
            {
                "subdivision": sub.to_json(),
                "triangulation": sub.is_triangulation(),
                "regular": wit is not None,
                "witness": [str(x) for x in wit.psi] if wit else None,
                "codim": rep.codim,
                "exc": rep.exc,
                "h2": rep.h2,
            }
        )
        if wit is not None:
            regular_subs.append(sub)
    poset = refinement_poset(regular_subs)
    n_tri = sum(1 for r in reports if r["triangulation"])
    return {
        "n": len(A),
        "triangulations": n_tri,
        "subdivisions": len(subs),
        "regular": len(regular_subs),
        "poset_height": poset["height"],
        "coarse": sum(
            1 for sub, r in zip(subs, reports) if r["regular"] and r["codim"] == 1
        ),
        "reports": reports,
    }


def cmd_check(inst_or_none, args) -> dict:
    from . import checksuite

    return checksuite.run(seed=args.seed, n=args.n, dim=args.dim)


def cmd_plot(inst: Instance, args) -> dict:
    _need(inst, "config")
    from . import plotting

    zeta = inst.zeta or _parse_zeta(args.zeta or "1/0")
    if args.format == "svg":
        text = plotting.config_svg(inst.config, zeta)
    elif args.format == "csv":
        text = (
            plotting.poset_csv(inst.config)
            if args.poset
            else plotting.config_csv(inst.config)
        )
    else:  # dot: refinement poset
        text = plotting.poset_dot(inst.config)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return {"written": args.out, "bytes": len(text)}
    return {"content": text}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="infrared",
        description="exact workbench for planar perverse-sheaf combinatorics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_instance=True):
        p = sub.add_parser(name)
        if needs_instance:
            p.add_argument("instance", nargs="?", help="instance JSON file")
        p.add_argument("--zeta", help="direction dx/dy (integers)")
        p.add_argument("--out", help="output file")
        p.add_argument("--pretty", action="store_true")
        p.add_argument(
            "--format", choices=("json", "jsonl", "csv", "svg", "dot"), default="json"
        )
        p.set_defaults(fn=fn)
        return p

    add("matroid", cmd_matroid)
    p = add("antistokes", cmd_antistokes)
    p.add_argument("--rotation", choices=("ccw", "cw"), default="ccw")
    p = add("paths", cmd_paths)
    p.add_argument("--source", type=int)
    p.add_argument("--target", type=int)
    add("stokes", cmd_stokes)
    add("fourier", cmd_fourier)
    p = add("walk", cmd_walk)
    p.add_argument("--to", help="target configuration JSON")
    p.add_argument("--events", help="explicit crossing list JSON")
    add("secondary", cmd_secondary)
    p = add("check", cmd_check, needs_instance=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--dim", type=int, default=2)
    p = add("plot", cmd_plot)
    p.add_argument("--poset", action="store_true",
                   help="emit the refinement poset instead of the points")

    args = parser.parse_args(argv)
    try:
        inst = None
        if getattr(args, "instance", None):
            inst = Instance.load(args.instance)
        result = args.fn(inst, args)
    except InfraredError as exc:
        payload = {"error": {"code": exc.code, "message": str(exc)}}
        print(json.dumps(payload))
        return 2
    if isinstance(result, dict) and "__stream__" in result:
        text = result["__stream__"].rstrip("\n")
    else:
        text = json.dumps(result, indent=2 if args.pretty else None, default=str)
    if args.out and args.command != "plot":
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
