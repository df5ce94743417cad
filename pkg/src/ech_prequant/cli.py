"""Batch command-line front end with deterministic table, CSV, and JSON output.

Output is byte-identical across runs of the same invocation: no timestamps,
stable key order, rationals rendered in lowest terms as "p/q".  Exit codes:
0 success, 2 input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bundles import (
    ExactAction,
    InvariantViolation,
    MorseProfile,
    OrbitSet,
    PrequantizationBundle,
)
from .generators import enumerate_by_action, enumerate_by_grading
from .indices import ech_index, grading
from .obstruction import (
    CapacitySequence,
    ball_capacities,
    ellipsoid_capacities,
    gromov_width_report,
    obstructs_embedding,
)
from .spectrum import capacity_sphere, capacity_torus_bounds, sphere_u_step

FORMATS = ("table", "csv", "json")


# ----------------------------
# parsing helpers
# ----------------------------

def parse_orbit_spec(text: str, genus: int) -> OrbitSet:
    """Parse whitespace-separated factors like "e+^2 h1 e-^3".

    Omitted factors default to multiplicity 0; a bare name means
    multiplicity 1.  The empty string or "empty" denotes the empty orbit set.
    """
    m_plus = 0
    m_minus = 0
    m_hyp = [0] * (2 * genus)
    seen: set[str] = set()
    text = text.strip()
    if text and text != "empty":
        for token in text.split():
            name, caret, power = token.partition("^")
            if caret:
                try:
                    mult = int(power)
                except ValueError:
                    raise ValueError(f"bad multiplicity in factor {token!r}") from None
                if mult < 0:
                    raise ValueError(f"negative multiplicity in factor {token!r}")
            else:
                mult = 1
            if name in seen:
                raise ValueError(f"repeated factor {name!r} in orbit set")
            seen.add(name)
            if name == "e+":
                m_plus = mult
            elif name == "e-":
                m_minus = mult
            elif name.startswith("h") and name[1:].isdigit():
                idx = int(name[1:])
                if not 1 <= idx <= 2 * genus:
                    raise ValueError(
                        f"hyperbolic index {idx} out of range 1..{2 * genus} for genus {genus}"
                    )
                m_hyp[idx - 1] = mult
            else:
                raise ValueError(f"unknown orbit name {name!r}")
    return OrbitSet(m_plus, tuple(m_hyp), m_minus)


def render_orbit(alpha: OrbitSet) -> str:
    """Inverse of parse_orbit_spec, with ^1 omitted and "empty" for the empty set."""
    parts = []
    if alpha.m_plus:
        parts.append("e+" if alpha.m_plus == 1 else f"e+^{alpha.m_plus}")
    for i, m in enumerate(alpha.m_hyp, start=1):
        if m:
            parts.append(f"h{i}" if m == 1 else f"h{i}^{m}")
    if alpha.m_minus:
        parts.append("e-" if alpha.m_minus == 1 else f"e-^{alpha.m_minus}")
    return " ".join(parts) if parts else "empty"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rational {text!r}; use forms like 2, 5/2, or 2.5") from None


def _parse_domain(text: str) -> tuple:
    """Parse "ball:A" or "ellipsoid:A,B" into (kind, params)."""
    kind, sep, params = text.partition(":")
    if not sep:
        raise ValueError(f"domain {text!r} must look like ball:A or ellipsoid:A,B")
    if kind == "ball":
        return ("ball", _parse_rational(params))
    if kind == "ellipsoid":
        parts = params.split(",")
        if len(parts) != 2:
            raise ValueError(f"ellipsoid domain needs two parameters, got {params!r}")
        return ("ellipsoid", _parse_rational(parts[0]), _parse_rational(parts[1]))
    raise ValueError(f"unknown domain kind {kind!r}; expected ball or ellipsoid")


def _domain_sequence(domain: tuple, k_max: int) -> CapacitySequence:
    if domain[0] == "ball":
        return ball_capacities(domain[1], k_max)
    return ellipsoid_capacities(domain[1], domain[2], k_max)


def _parse_action_limit(text: str) -> ExactAction:
    """Parse "LEAD" or "LEAD:CORRECTION" into an action threshold."""
    lead_text, sep, corr_text = text.partition(":")
    try:
        leading = int(lead_text)
    except ValueError:
        raise ValueError(f"bad action leading term {lead_text!r}") from None
    correction = _parse_rational(corr_text) if sep else Fraction(0)
    return ExactAction(leading, correction)


def _parse_start_pair(text: str) -> tuple[int, int]:
    """Parse the U-map start "m-:m+"."""
    left, sep, right = text.partition(":")
    if not sep:
        raise ValueError(f"start {text!r} must look like m-:m+, e.g. 1:1")
    try:
        m_minus, m_plus = int(left), int(right)
    except ValueError:
        raise ValueError(f"start {text!r} must contain two integers") from None
    if m_minus < 0 or m_plus < 0:
        raise ValueError("start multiplicities must be nonnegative")
    return (m_minus, m_plus)


def _bundle_from(args: argparse.Namespace, genus: int | None = None) -> PrequantizationBundle:
    g = args.genus if genus is None else genus
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if args.euler >= 0:
        raise ValueError("Euler number must be negative (pass the signed value, e.g. -2)")
    return PrequantizationBundle(g, args.euler)


# ----------------------------
# output emission
# ----------------------------

def _render(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(command: str, fmt: str, columns: list[str], entries: list[dict], out=None) -> None:
    """Write rows in the requested format.

    Each entry carries ``inputs`` and ``result`` dicts (JSON payload) plus a
    flat ``row`` dict keyed by ``columns`` (CSV and table payload).
    """
    out = out or sys.stdout
    if fmt == "json":
        for entry in entries:
            record = {
                "command": command,
                "inputs": _jsonable(entry["inputs"]),
                "result": _jsonable(entry["result"]),
                "version": __version__,
            }
            out.write(json.dumps(record, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        for entry in entries:
            out.write(",".join(_render(entry["row"][c]) for c in columns) + "\n")
    else:
        cells = [[_render(entry["row"][c]) for c in columns] for entry in entries]
        widths = [
            max(len(col), max((len(row[i]) for row in cells), default=0))
            for i, col in enumerate(columns)
        ]
        out.write("  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip() + "\n")
        out.write("  ".join("-" * w for w in widths) + "\n")
        for row in cells:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _witness_dict(witness) -> dict:
    d, m_plus, m1, m2, m_minus = witness
    return {"d": d, "m_plus": m_plus, "m1": m1, "m2": m2, "m_minus": m_minus}


# ----------------------------
# subcommands
# ----------------------------

def cmd_capacity(args: argparse.Namespace) -> int:
    if args.euler >= 0:
        raise ValueError("Euler number must be negative (pass the signed value, e.g. -2)")
    abs_e = -args.euler
    k_last = args.k if args.k_max is None else args.k_max
    if k_last < args.k:
        raise ValueError("--k-max must be at least --k")

    entries = []
    if args.base == "sphere":
        columns = ["k", "capacity"]
        for k in range(args.k, k_last + 1):
            value = capacity_sphere(abs_e, k)
            entries.append(
                {
                    "inputs": {"base": "sphere", "euler": args.euler, "k": k},
                    "result": {"k": k, "capacity": value, "exact": True},
                    "row": {"k": k, "capacity": value},
                }
            )
    else:
        columns = [
            "k", "lower", "upper", "exact",
            "d_lower", "m_plus_lower", "m1_lower", "m2_lower", "m_minus_lower",
            "d_upper", "m_plus_upper", "m1_upper", "m2_upper", "m_minus_upper",
        ]
        for k in range(args.k, k_last + 1):
            res = capacity_torus_bounds(abs_e, k)
            wl, wu = res.witness_lower, res.witness_upper
            entries.append(
                {
                    "inputs": {"base": "torus", "euler": args.euler, "k": k},
                    "result": {
                        "k": k,
                        "lower": res.lower,
                        "upper": res.upper,
                        "exact": res.exact,
                        "witness_lower": _witness_dict(wl),
                        "witness_upper": _witness_dict(wu),
                    },
                    "row": {
                        "k": k, "lower": res.lower, "upper": res.upper, "exact": res.exact,
                        "d_lower": wl[0], "m_plus_lower": wl[1], "m1_lower": wl[2],
                        "m2_lower": wl[3], "m_minus_lower": wl[4],
                        "d_upper": wu[0], "m_plus_upper": wu[1], "m1_upper": wu[2],
                        "m2_upper": wu[3], "m_minus_upper": wu[4],
                    },
                }
            )
    _emit("capacity", args.format, columns, entries)
    return 0


def cmd_generators(args: argparse.Namespace) -> int:
    bundle = _bundle_from(args)
    profile = MorseProfile.default(bundle.genus)
    if args.grading is not None:
        gens = enumerate_by_grading(bundle, args.grading, profile)
        inputs = {"genus": args.genus, "euler": args.euler, "grading": args.grading}
    else:
        limit = _parse_action_limit(args.action_limit)
        gens = enumerate_by_action(bundle, profile, limit)
        inputs = {
            "genus": args.genus,
            "euler": args.euler,
            "action_limit": {"leading": limit.leading, "correction": limit.correction},
        }

    columns = ["orbitset", "grading", "action_leading", "action_correction", "d"]
    entries = []
    for gen in gens:
        row = {
            "orbitset": render_orbit(gen.orbit_set),
            "grading": gen.grading,
            "action_leading": gen.action.leading,
            "action_correction": gen.action.correction,
            "d": gen.d,
        }
        entries.append({"inputs": inputs, "result": dict(row), "row": row})
    _emit("generators", args.format, columns, entries)
    return 0


def cmd_index(args: argparse.Namespace) -> int:
    bundle = _bundle_from(args)
    alpha = parse_orbit_spec(args.orbitset, bundle.genus)
    value = ech_index(bundle, alpha, args.d)
    row = {"orbitset": render_orbit(alpha), "d": args.d, "index": value}
    entries = [
        {
            "inputs": {
                "genus": args.genus,
                "euler": args.euler,
                "orbitset": render_orbit(alpha),
                "d": args.d,
            },
            "result": {"index": value},
            "row": row,
        }
    ]
    _emit("index", args.format, ["orbitset", "d", "index"], entries)
    return 0


def cmd_umap(args: argparse.Namespace) -> int:
    if args.euler >= 0:
        raise ValueError("Euler number must be negative (pass the signed value, e.g. -2)")
    abs_e = -args.euler
    start = _parse_start_pair(args.start)
    if start == (0, 0):
        raise ValueError("the U map is not applied to the empty orbit set")
    if sum(start) % abs_e:
        raise ValueError(
            f"start {start[0]}:{start[1]} is not in the trivial class mod |e|={abs_e}"
        )
    bundle = PrequantizationBundle(0, args.euler)

    def gr(pair: tuple[int, int] | None) -> int:
        if pair is None:
            return 0
        return grading(bundle, OrbitSet(pair[1], (), pair[0]))

    inputs = {"euler": args.euler, "start": f"{start[0]}:{start[1]}"}
    columns = ["step", "state", "grading"]
    if args.trace:
        columns.append("rule")
    entries = []
    state: tuple[int, int] | None = start
    step = 0
    rule = ""
    while True:
        label = "empty" if state is None else f"{state[0]}:{state[1]}"
        row = {"step": step, "state": label, "grading": gr(state)}
        if args.trace:
            row["rule"] = rule
        entries.append({"inputs": inputs, "result": dict(row), "row": row})
        if state is None:
            break
        rule = "exchange" if state[1] >= 1 else "reduce"
        state = sphere_u_step(abs_e, state)
        step += 1
    _emit("umap", args.format, columns, entries)
    return 0


def cmd_obstruct(args: argparse.Namespace) -> int:
    if args.k_max < 0:
        raise ValueError("--k-max must be nonnegative")
    source = _domain_sequence(_parse_domain(args.source), args.k_max)
    target = _domain_sequence(_parse_domain(args.target), args.k_max)
    res = obstructs_embedding(source, target)
    row = {
        "source": source.label,
        "target": target.label,
        "k_max": args.k_max,
        "obstructs": res.obstructs,
        "first_k": res.first_k,
        "source_value": res.source_value,
        "target_value": res.target_value,
    }
    entries = [
        {
            "inputs": {"source": args.source, "target": args.target, "k_max": args.k_max},
            "result": {
                "obstructs": res.obstructs,
                "first_k": res.first_k,
                "source_value": res.source_value,
                "target_value": res.target_value,
            },
            "row": row,
        }
    ]
    columns = ["source", "target", "k_max", "obstructs", "first_k", "source_value", "target_value"]
    _emit("obstruct", args.format, columns, entries)
    return 0


def cmd_gromov(args: argparse.Namespace) -> int:
    bundle = _bundle_from(args)
    report = gromov_width_report(bundle)
    row = {
        "genus": report.genus,
        "euler": report.euler,
        "disk_width_bound": report.disk_width_bound,
        "genus_supported": report.genus_supported,
        "capacity_c1": report.capacity_c1,
        "best_bound": report.best_bound,
    }
    entries = [
        {
            "inputs": {"genus": args.genus, "euler": args.euler},
            "result": dict(row),
            "row": row,
        }
    ]
    columns = ["genus", "euler", "disk_width_bound", "genus_supported", "capacity_c1", "best_bound"]
    _emit("gromov", args.format, columns, entries)
    return 0


# ----------------------------
# argument parsing
# ----------------------------

def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="table", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ech-prequant",
        description="Exact capacity spectra and index combinatorics of circle bundles",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", help="capacity values (sphere base) or bounds (torus base)")
    p.add_argument("--base", choices=("sphere", "torus"), required=True)
    p.add_argument("--euler", type=int, required=True, help="signed Euler number, e.g. -2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--k-max", type=int, default=None, help="compute the whole range k..k-max")
    _add_format(p)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("generators", help="enumerate generators by grading or action limit")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--euler", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--grading", type=int, default=None)
    group.add_argument("--action-limit", default=None, help='strict bound "LEAD" or "LEAD:P/Q"')
    _add_format(p)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("index", help="ECH index of an orbit set at a chosen degree")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--euler", type=int, required=True)
    p.add_argument("--orbitset", required=True, help='factors like "e+^2 h1 e-^3"')
    p.add_argument("--d", type=int, required=True, help="degree of the relative class")
    _add_format(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("umap", help="walk a genus-0 generator down the U map to the empty set")
    p.add_argument("--euler", type=int, required=True)
    p.add_argument("--start", required=True, help='start multiplicities "m-:m+", e.g. 1:1')
    p.add_argument("--trace", action="store_true", help="also show which rule produced each state")
    _add_format(p)
    p.set_defaults(func=cmd_umap)

    p = sub.add_parser("obstruct", help="compare capacity sequences of two model domains")
    p.add_argument("--source", required=True, help="ball:A or ellipsoid:A,B")
    p.add_argument("--target", required=True, help="ball:A or ellipsoid:A,B")
    p.add_argument("--k-max", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("gromov", help="width bounds for the unit disk subbundle")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--euler", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_gromov)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
