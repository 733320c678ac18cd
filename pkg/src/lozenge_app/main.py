# command-line front end
# src/lozenge_app/main.py

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from tqdm import tqdm

from lozenge_core.codec import (
    heights_to_json,
    load_domain,
    parse_vertex,
    seed_record_to_json,
    tiling_to_json,
    zone_to_json,
)
from lozenge_core.domain import Domain, enclose, hexagon, parse_contour, trace
from lozenge_core.enumerator import EnumerateOptions, enumerate_domain, stream_tilings
from lozenge_core.fracture import fracture_zones
from lozenge_core.io import InputError, LozengeError, Untileable, save_bytes
from lozenge_core.lattice import to_dot
from lozenge_core.partitions import (
    all_limited_plane_partitions,
    as_plane_partition,
    limited_partitions,
    limited_plane_partitions,
)
from lozenge_core.seeds import seed_generations
from lozenge_core.tiling import Tiling, maximal_tiling, minimal_tiling

from lozenge_app.render import RenderSpec, render, render_ascii

logger = logging.getLogger("lozenge_forge")

SEED_LOG_ENV = "LOZENGE_FORGE_SEED_LOG"


def _ints(text: str, n: Optional[int] = None) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise InputError(f"Expected comma-separated integers, got {text!r}") from e
    if n is not None and len(out) != n:
        raise InputError(f"Expected {n} integers, got {text!r}")
    return out


def load_domain_args(args: argparse.Namespace) -> Domain:
    if args.start and args.contour is None:
        raise InputError("--start only applies to --contour")
    if args.contour is not None:
        start = parse_vertex(args.start) if args.start else (0, 0)
        return enclose(trace(parse_contour(args.contour), start))
    if args.domain is not None:
        return load_domain(Path(args.domain))
    x, y, z = _ints(args.hexagon, 3)
    return hexagon(x, y, z)


def _line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def format_tiling(T: Tiling, fmt: str) -> str:
    if fmt == "json":
        return _line(tiling_to_json(T)) + "\n"
    if fmt == "height":
        return _line(heights_to_json(T.heights)) + "\n"
    return render_ascii(T).decode("utf-8") + "\n"


def _progress(enabled: bool) -> tuple[Optional[Callable[[int, int, str, str], None]], Optional[tqdm]]:
    if not enabled:
        return None, None
    bar = tqdm(file=sys.stderr, unit=" fillings", leave=False)

    def cb(done: int, total: int, label: str, message: str) -> None:
        bar.total = total
        bar.n = done
        bar.set_description(label)
        bar.set_postfix_str(message)
        bar.refresh()

    return cb, bar


def _seed_echo(record: dict) -> None:
    print(_line(record), file=sys.stderr)


def _options(args: argparse.Namespace) -> EnumerateOptions:
    return EnumerateOptions(
        jobs=max(1, getattr(args, "jobs", 1)),
        seed_sink=_seed_echo if os.environ.get(SEED_LOG_ENV) == "1" else None,
    )


def cmd_check(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    try:
        minimal_tiling(D)
    except Untileable as e:
        print("untileable")
        print(f"reason: {e}", file=sys.stderr)
        return 1
    print("tileable")
    return 0


def cmd_extreme(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    T = minimal_tiling(D) if args.command == "min" else maximal_tiling(D)
    sys.stdout.write(format_tiling(T, args.format))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    result = enumerate_domain(D, _options(args))
    print(len(result.full))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    cb, bar = _progress(args.progress)
    try:
        if args.lattice == "dot":
            result = enumerate_domain(D, _options(args), cb)
            sys.stdout.write(to_dot(result.full))
            stats = result.stats
        else:
            stats = stream_tilings(D, lambda T: sys.stdout.write(format_tiling(T, args.format)), _options(args), cb)
    finally:
        if bar is not None:
            bar.close()
    if args.stats:
        print(_line(stats.as_dict()), file=sys.stderr)
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    result = enumerate_domain(D, _options(args))
    sys.stdout.write(to_dot(result.full, ranks=not args.no_ranks))
    return 0


def cmd_fracture(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    decomp = fracture_zones(D)
    for z in decomp.zones:
        print(_line(zone_to_json(z)))
    return 0


def cmd_seeds(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    decomp = fracture_zones(D)
    for zi, z in enumerate(decomp.zones):
        if z.kind != "fertile":
            continue
        for g in seed_generations(z.domain):
            for r in g.records:
                line = _line({"zone": zi, "generation": g.order, **seed_record_to_json(r)})
                print(line)
                if os.environ.get(SEED_LOG_ENV) == "1":
                    print(line, file=sys.stderr)
    return 0


def cmd_partitions(args: argparse.Namespace) -> int:
    if "/" in args.limit:
        P = as_plane_partition(_ints(row) for row in args.limit.split("/"))
        stream = all_limited_plane_partitions(P) if args.weight is None else limited_plane_partitions(args.weight, P)
        for A in stream:
            print("/".join(",".join(str(x) for x in row) for row in A))
        return 0

    p = _ints(args.limit)
    weights = range(sum(p) + 1) if args.weight is None else [args.weight]
    for s in weights:
        for a in limited_partitions(s, p):
            print(",".join(str(x) for x in a))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    D = load_domain_args(args)
    T = minimal_tiling(D) if args.tiling == "min" else maximal_tiling(D)
    palette = tuple(c.strip() for c in args.palette.split(",")) if args.palette else RenderSpec.palette
    spec = RenderSpec(format=args.format, scale=args.scale, palette=palette)  # type: ignore[arg-type]
    data = render(T, spec)
    if args.output:
        save_bytes(data, Path(args.output), overwrite=args.force)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0


def _add_domain_args(sp: argparse.ArgumentParser) -> None:
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--contour", help="contour word over a b c A B C (capitals are inverse steps)")
    g.add_argument("--domain", help="domain JSON file with 'contour' and 'start'")
    g.add_argument("--hexagon", help="hexagon side lengths x,y,z")
    sp.add_argument("--start", help="start vertex p,q for --contour (default 0,0)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lozenge-forge", description="Lozenge tilings of triangular-grid domains")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="decide tileability")
    _add_domain_args(sp)
    sp.set_defaults(func=cmd_check)

    for name, what in (("min", "minimal"), ("max", "maximal")):
        sp = sub.add_parser(name, help=f"print the {what} tiling")
        _add_domain_args(sp)
        sp.add_argument("--format", choices=("json", "height", "ascii"), default="json")
        sp.set_defaults(func=cmd_extreme)

    sp = sub.add_parser("count", help="number of tilings")
    _add_domain_args(sp)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="print every tiling once")
    _add_domain_args(sp)
    sp.add_argument("--format", choices=("json", "height", "ascii"), default="json")
    sp.add_argument("--lattice", choices=("dot",), help="print the lattice instead of the tilings")
    sp.add_argument("--stats", action="store_true", help="write enumeration stats as JSON on stderr")
    sp.add_argument("--jobs", type=int, default=1, help="zones enumerated in parallel")
    sp.add_argument("--progress", action="store_true", help="progress bar on stderr")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("lattice", help="DOT export of the lattice of tilings")
    _add_domain_args(sp)
    sp.add_argument("--no-ranks", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("fracture", help="fertile zones and frozen lozenges")
    _add_domain_args(sp)
    sp.set_defaults(func=cmd_fracture)

    sp = sub.add_parser("seeds", help="proper seeds of every generation")
    _add_domain_args(sp)
    sp.set_defaults(func=cmd_seeds)

    sp = sub.add_parser("partitions", help="partitions (or plane partitions) under a limit")
    sp.add_argument("--limit", required=True, help="2,2,1 or rows 2,2/2,1 for a plane partition")
    sp.add_argument("--weight", type=int)
    sp.set_defaults(func=cmd_partitions)

    sp = sub.add_parser("render", help="draw the minimal or maximal tiling")
    _add_domain_args(sp)
    sp.add_argument("--tiling", choices=("min", "max"), default="min")
    sp.add_argument("--format", choices=("svg", "ascii", "png"), default="svg")
    sp.add_argument("--scale", type=int, default=24)
    sp.add_argument("--palette", help="three colors c1,c2,c3 for the a, b, c diagonals")
    sp.add_argument("--output", help="write to this file instead of stdout")
    sp.add_argument("--force", action="store_true", help="overwrite --output if it exists")
    sp.set_defaults(func=cmd_render)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except Untileable as e:
        print(f"untileable: {e}", file=sys.stderr)
        return 1
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except LozengeError as e:
        logger.debug("failure", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
