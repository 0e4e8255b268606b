"""Command-line interface.

Exit codes: 0 success, 1 runtime error, 2 audit found a MISMATCH, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from . import audit as audit_mod
from . import graph as graph_mod
from .derived import TransformKind, apply_transform
from .errors import ExplicitTooLarge, NZCError
from .formulas import catalog, entry, eval_formula
from .indices import bundle, bundle_from_quotient
from .space import (DEFAULT_EXPLICIT_CAP, SpaceParams, build_explicit, build_quotient,
                    mask_positions)

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 64

COMMANDS = ("build", "indices", "derived", "formulas", "audit", "export")
GRAPH_FORMATS = ("edgelist", "dot", "json")


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> List[int]:
    """``"2,3"``, ``"2..5"`` and mixtures such as ``"1,3..5"``."""
    out: List[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        else:
            out.append(int(part))
    if not out:
        raise UsageError(f"no integers in {text!r}")
    return out


def read_config_file(path) -> Dict[str, str]:
    """Flat ``key=value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


@dataclass
class RunConfig:
    command: str
    q: Optional[List[int]] = None
    n: Optional[List[int]] = None
    transform: Optional[TransformKind] = None
    output_path: Optional[str] = None
    format: Optional[str] = None
    explicit_cap: int = DEFAULT_EXPLICIT_CAP
    warn_nonprimepower: bool = True
    workers: int = 1
    input_path: Optional[str] = None
    input_format: Optional[str] = None
    formula_ids: List[str] = field(default_factory=list)
    m2: Optional[int] = None
    quotient: bool = False
    allow_quotient_fallback: bool = False
    method: str = "auto"
    bundle: bool = False

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        needs_space = {"build", "formulas", "audit"}
        if self.command in needs_space or (self.command in ("indices", "derived")
                                           and not self.input_path):
            if not self.q or not self.n:
                raise UsageError(f"{self.command} needs --q and --n")
        if self.command in ("build", "indices", "derived") and not self.input_path:
            if len(self.q) != 1 or len(self.n) != 1:
                raise UsageError(f"{self.command} takes a single --q and --n")
        if self.command == "derived" and self.transform is None:
            raise UsageError("derived needs --transform")
        if self.command == "export" and not self.input_path:
            raise UsageError("export needs --input")
        if self.explicit_cap < 1:
            raise UsageError("--explicit-cap must be positive")
        if self.workers < 1:
            raise UsageError("--workers must be positive")
        allowed = {
            "build": GRAPH_FORMATS,
            "indices": ("json",),
            "derived": GRAPH_FORMATS,
            "formulas": ("json", "markdown"),
            "audit": ("json", "csv", "markdown"),
            "export": GRAPH_FORMATS,
        }[self.command]
        if self.format is None:
            self.format = allowed[0] if self.command != "audit" else "markdown"
        if self.format not in allowed:
            raise UsageError(f"{self.command} supports formats {', '.join(allowed)}")
        if self.method not in ("auto", "explicit", "quotient"):
            raise UsageError("--method must be auto, explicit or quotient")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", help="field size; list or range for audit (e.g. 2,3 or 2..5)")
    common.add_argument("--n", help="dimension; list or range for audit")
    common.add_argument("--format")
    common.add_argument("--output", dest="output_path", help="write here instead of stdout")
    common.add_argument("--config", help="flat key=value file; flags override it")
    common.add_argument("--explicit-cap", type=int)
    common.add_argument("--no-warn-nonprimepower", dest="warn_nonprimepower",
                        action="store_false", default=None)
    common.add_argument("--workers", type=int)
    common.add_argument("--input", dest="input_path", help="graph file (edgelist or json)")
    common.add_argument("--input-format", choices=("edgelist", "json"))

    p = _Parser(prog="nzcgraph", description="Nonzero component graphs and their indices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="emit Gamma(V) or its quotient")
    b.add_argument("--quotient", action="store_true", default=None,
                   help="emit the support-class summary instead of the graph")
    b.add_argument("--allow-quotient-fallback", action="store_true", default=None)

    i = sub.add_parser("indices", parents=[common], help="index bundle as JSON")
    i.add_argument("--method", choices=("auto", "explicit", "quotient"))

    d = sub.add_parser("derived", parents=[common], help="apply a graph transformation")
    d.add_argument("--transform", choices=[k.value for k in TransformKind])
    d.add_argument("--bundle", action="store_true", default=None,
                   help="emit the index bundle as JSON")

    f = sub.add_parser("formulas", parents=[common], help="evaluate published formulas")
    f.add_argument("--id", dest="formula_ids", action="append", default=None)
    f.add_argument("--m2", type=int, help="M2 of the base graph; computed if omitted")

    sub.add_parser("audit", parents=[common], help="audit formulas over a grid")
    sub.add_parser("export", parents=[common], help="convert a graph file between formats")
    return p


def config_from_args(argv=None) -> RunConfig:
    parser = make_parser()
    ns = parser.parse_args(argv)
    values: Dict[str, object] = {}
    if ns.config:
        values.update(read_config_file(ns.config))
    env_cap = os.environ.get("NZC_EXPLICIT_CAP")
    if env_cap and "explicit_cap" not in values:
        values["explicit_cap"] = env_cap
    for key, val in vars(ns).items():
        if key in ("config", "command") or val is None:
            continue
        values[key] = val

    cfg = RunConfig(command=ns.command)
    for key, val in values.items():
        if key in ("q", "n"):
            val = parse_int_list(val)
        elif key in ("explicit_cap", "workers", "m2"):
            val = int(val)
        elif key in ("warn_nonprimepower", "quotient", "allow_quotient_fallback", "bundle"):
            val = val if isinstance(val, bool) else str(val).lower() in ("1", "true", "yes")
        elif key == "transform":
            val = TransformKind(val)
        elif key == "formula_ids":
            val = list(val) if isinstance(val, list) else [s.strip() for s in str(val).split(",")]
        elif not hasattr(cfg, key):
            raise UsageError(f"unknown setting {key!r}")
        setattr(cfg, key, val)
    if "workers" not in values:
        cfg.workers = os.cpu_count() or 1
    cfg.validate()
    return cfg


# -- command implementations -------------------------------------------------

def _params(cfg: RunConfig) -> SpaceParams:
    params = SpaceParams(cfg.q[0], cfg.n[0])
    _warn_prime_power(cfg, [params.q])
    return params


def _warn_prime_power(cfg: RunConfig, qs):
    if not cfg.warn_nonprimepower:
        return
    for q in qs:
        if not SpaceParams(q, 1).is_prime_power:
            print(f"warning: q={q} is not a prime power; no field of that size exists, "
                  f"the graph is built from the cardinality alone", file=sys.stderr)


def _read_graph(cfg: RunConfig) -> graph_mod.Graph:
    text = Path(cfg.input_path).read_text()
    fmt = cfg.input_format or ("json" if cfg.input_path.endswith(".json") else "edgelist")
    if fmt == "json":
        return graph_mod.from_json(text)
    return graph_mod.parse_edgelist(text)


def _render_graph(g: graph_mod.Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return graph_mod.to_edgelist(g)
    if fmt == "dot":
        return graph_mod.to_dot(g)
    return graph_mod.to_json(g)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _quotient_summary(params: SpaceParams) -> str:
    sq = build_quotient(params)
    return _dumps({
        "q": params.q,
        "n": params.n,
        "prime_power": params.is_prime_power,
        "vertex_count": str(sq.vertex_count),
        "edge_count": str(sq.edge_count),
        "classes": [
            {"support": sorted(mask_positions(c.mask)), "size": str(c.size),
             "degree": str(c.degree)}
            for c in sq.classes
        ],
    })


def cmd_build(cfg: RunConfig) -> str:
    params = _params(cfg)
    if cfg.quotient:
        return _quotient_summary(params)
    try:
        g = build_explicit(params, cap=cfg.explicit_cap)
    except ExplicitTooLarge:
        if not cfg.allow_quotient_fallback:
            raise
        print(f"note: {params.order} vertices exceeds the explicit cap of "
              f"{cfg.explicit_cap}; emitting the quotient summary", file=sys.stderr)
        return _quotient_summary(params)
    return _render_graph(g, cfg.format)


def _bundle_json(b, **extra) -> str:
    d = dict(extra)
    d.update(b.to_dict())
    return _dumps(d)


def cmd_indices(cfg: RunConfig) -> str:
    if cfg.input_path:
        return _bundle_json(bundle(_read_graph(cfg)), method="explicit")
    params = _params(cfg)
    method = cfg.method
    if method == "auto":
        method = "explicit" if params.order <= cfg.explicit_cap else "quotient"
    if method == "explicit":
        b = bundle(build_explicit(params, cap=cfg.explicit_cap))
    else:
        b = bundle_from_quotient(build_quotient(params))
    return _bundle_json(b, q=params.q, n=params.n, method=method)


def cmd_derived(cfg: RunConfig) -> str:
    if cfg.input_path:
        g = _read_graph(cfg)
    else:
        g = build_explicit(_params(cfg), cap=cfg.explicit_cap)
    h = apply_transform(cfg.transform, g)
    if cfg.bundle:
        return _bundle_json(bundle(h), transform=cfg.transform.value)
    return _render_graph(h, cfg.format)


def cmd_formulas(cfg: RunConfig) -> str:
    ids = cfg.formula_ids or [e.id.value for e in catalog()]
    _warn_prime_power(cfg, cfg.q)
    rows = []
    m2_cache = {}
    for fid in ids:
        e = entry(fid)
        for q in cfg.q:
            for n in cfg.n:
                m2_val = None
                if e.needs_m2:
                    m2_val = cfg.m2
                    if m2_val is None:
                        key = (q, n)
                        if key not in m2_cache:
                            m2_cache[key] = bundle_from_quotient(build_quotient(SpaceParams(q, n))).m2
                        m2_val = m2_cache[key]
                rows.append({"formula_id": e.id.value, "q": q, "n": n,
                             "value": str(eval_formula(e.id, q, n, m2_val)),
                             "m2_injected": None if m2_val is None else str(m2_val),
                             "statement_kind": e.statement_kind,
                             "provenance": e.provenance})
    if cfg.format == "json":
        return _dumps(rows)
    lines = ["| formula | q | n | value | statement |", "|---|---|---|---|---|"]
    lines.extend(f"| {r['formula_id']} | {r['q']} | {r['n']} | {r['value']} | {r['provenance']} |"
                 for r in rows)
    return "\n".join(lines) + "\n"


def cmd_audit(cfg: RunConfig):
    _warn_prime_power(cfg, cfg.q)
    grid = audit_mod.GridSpec(tuple(cfg.q), tuple(cfg.n), explicit_cap=cfg.explicit_cap)
    report = audit_mod.audit_grid(grid, workers=cfg.workers)
    return audit_mod.render_report(report, cfg.format), report.has_mismatch


def cmd_export(cfg: RunConfig) -> str:
    return _render_graph(_read_graph(cfg), cfg.format)


def _emit(cfg: RunConfig, payload):
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if cfg.output_path:
        Path(cfg.output_path).write_bytes(data)
    elif hasattr(sys.stdout, "buffer"):
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        sys.stdout.write(data.decode("utf-8"))


def run(cfg: RunConfig) -> int:
    mismatch = False
    if cfg.command == "audit":
        payload, mismatch = cmd_audit(cfg)
    else:
        payload = {"build": cmd_build, "indices": cmd_indices, "derived": cmd_derived,
                   "formulas": cmd_formulas, "export": cmd_export}[cfg.command](cfg)
    _emit(cfg, payload)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except (UsageError, ValueError) as exc:
        print(f"nzcgraph: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(cfg)
    except (NZCError, OSError) as exc:
        print(f"nzcgraph: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
