"""
Command-line front end.

Subcommands
-----------
enumerate     subset -> exponent and probability table
poly          generating polynomial (optionally homogenized) as JSON
check         stability / Lorentzian / necessary-condition verdicts
fit           stochastic-approximation fit followed by the necessary-condition check
sample        Glauber estimate of the expected statistics
datasets list bundled datasets
export-dot    Graphviz DOT of a graph
scan          Lorentzian verdicts over a (beta_2, beta) grid

Exit codes: 0 all requested properties hold (or the command just produced
output), 1 some property refuted or an I/O / data error, 2 undetermined,
64 usage or configuration error.

Usage examples
--------------
  ergm-geometry enumerate --graph complete:3 --params zero.json
  ergm-geometry check --dataset medici_business --params medici.json --which necessary
  ergm-geometry fit sampson --K 2 --trajectory sampson.csv
  ergm-geometry scan --graph complete:3 --params cubic.json --beta2=-2:2:9 --beta=-2:2:9
"""

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ergm_geometry import __version__
from ergm_geometry.checks.check_names import CheckNames
from ergm_geometry.checks.check_suite import CheckSuite
from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES, CheckConfig
from ergm_geometry.core.errors import (
    ConfigurationError,
    ErgmGeometryError,
    UsageError,
)
from ergm_geometry.datasets.dataset_registry import DatasetRegistry
from ergm_geometry.datasets.dot import to_dot
from ergm_geometry.datasets.graph_loader import GraphLoader
from ergm_geometry.geometry.scan import lorentzian_scan
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.inference.chain_config import ChainConfig, GainSchedule
from ergm_geometry.inference.estimation import fit_stochastic_approximation, host_for
from ergm_geometry.inference.fit_result import theta_names
from ergm_geometry.inference.sampling import exact_expected_stats, sample_suffstats
from ergm_geometry.inference.suff_stats import stat_names
from ergm_geometry.models.bernoulli import bernoulli_distribution
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.models.params_file import ModelParams, load_params
from ergm_geometry.polynomials.homogeneous import homogenize
from ergm_geometry.polynomials.multiaffine import generating_polynomial
from ergm_geometry.polynomials.serialization import homog_to_dict, poly_to_dict
from ergm_geometry.utils.logger import disable_logging, set_package_level, setup_logger

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 64


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises UsageError instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


# ===================================================================
#  Shared helpers
# ===================================================================


def _finite(value: float) -> Optional[float]:
    return float(value) if math.isfinite(value) else None


def _dump(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _envelope(command: str, **fields: Any) -> Dict[str, Any]:
    return {"command": command, "version": __version__, **fields}


def _graph_echo(graph: Graph, graph_id: Optional[str]) -> Dict[str, Any]:
    return {"id": graph_id, "n": graph.n, "m": graph.m}


def resolve_graph(args: argparse.Namespace) -> Tuple[Graph, str]:
    """Load the graph named by --dataset or --graph; returns it with its id."""
    if args.dataset:
        return DatasetRegistry().load(args.dataset), args.dataset
    return GraphLoader.fetch(args.graph), args.graph


def resolve_source(source: str) -> Graph:
    """A bundled dataset id, or anything GraphLoader understands."""
    registry = DatasetRegistry()
    if source in registry.ids():
        return registry.load(source)
    return GraphLoader.fetch(source)


def require_markov(params: ModelParams, command: str) -> MarkovParams:
    if not isinstance(params, MarkovParams):
        raise ConfigurationError(f"'{command}' needs Markov parameters, got Bernoulli")
    return params


def parse_grid(text: str) -> List[float]:
    """'start:stop:count' for an inclusive linspace, or a comma list of values."""
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            if int(count) < 1:
                raise ValueError("count must be >= 1")
            return [float(v) for v in np.linspace(float(start), float(stop), int(count))]
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise UsageError(f"bad grid '{text}': {e}") from e


def _distribution(graph: Graph, params: ModelParams, max_edges: int):
    if isinstance(params, MarkovParams):
        return markov_distribution(graph, params, max_edges)
    return bernoulli_distribution(graph, params, max_edges)


def _subset_label(mask: int, m: int) -> str:
    return "{" + ",".join(str(i) for i in range(m) if (mask >> i) & 1) + "}"


# ===================================================================
#  Subcommands
# ===================================================================


def cmd_enumerate(args: argparse.Namespace) -> int:
    graph, graph_id = resolve_graph(args)
    params = load_params(args.params)
    dist = _distribution(graph, params, args.max_edges)
    probabilities = dist.probabilities()
    rows = [
        {
            "mask": mask,
            "edges": [i for i in range(graph.m) if (mask >> i) & 1],
            "exponent": _finite(dist.log_weights[mask]),
            "probability": float(probabilities[mask]),
        }
        for mask in range(1 << graph.m)
    ]
    if args.format == "json":
        text = _dump(
            _envelope(
                "enumerate",
                graph=_graph_echo(graph, graph_id),
                params=params.to_dict(),
                edges=[list(e) for e in graph.edges],
                log_z=dist.log_z,
                rows=rows,
            )
        )
    else:
        lines = [
            f"graph: {graph_id} (n={graph.n}, m={graph.m})",
            "edges: " + " ".join(f"{i}=({u},{v})" for i, (u, v) in enumerate(graph.edges)),
            f"log_z: {dist.log_z:.12g}",
            "subset\texponent\tprobability",
        ]
        for row in rows:
            exponent = "-inf" if row["exponent"] is None else f"{row['exponent']:.12g}"
            lines.append(
                f"{_subset_label(row['mask'], graph.m)}\t{exponent}\t{row['probability']:.12g}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_poly(args: argparse.Namespace) -> int:
    graph, graph_id = resolve_graph(args)
    params = load_params(args.params)
    poly = generating_polynomial(
        _distribution(graph, params, args.max_edges), normalized=not args.unnormalized
    )
    body = homog_to_dict(homogenize(poly)) if args.homogenize else poly_to_dict(poly)
    if args.format == "json":
        text = _dump(
            _envelope(
                "poly",
                graph=_graph_echo(graph, graph_id),
                params=params.to_dict(),
                homogenized=args.homogenize,
                polynomial=body,
            )
        )
    else:
        names = body["vars"]
        lines = [f"vars: {' '.join(names)}"]
        for term in body["terms"]:
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(names, term["exp"])
                if power
            )
            lines.append(f"{term['coeff']:.12g}\t{monomial or '1'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    graph, graph_id = resolve_graph(args)
    params = load_params(args.params)
    config = CheckConfig(
        seed=args.seed,
        budget=args.budget,
        tol=args.tol,
        threads=args.threads,
        max_edges=args.max_edges,
    )
    report = CheckSuite(graph, params, config, graph_id).run(args.which, args.timing)
    text = report.to_json() + "\n" if args.format == "json" else report.to_text()
    _emit(text, args.out)
    return report.exit_code


def cmd_fit(args: argparse.Namespace) -> int:
    observed = resolve_source(args.source)
    chain = ChainConfig(
        sweeps=args.sweeps,
        burnin=args.burnin,
        thin=args.thin,
        seed=args.seed,
        batches=args.batches,
        chains=args.chains,
    )
    schedule = GainSchedule(
        a0=args.a0,
        max_iter=args.iters,
        precondition=args.precondition,
        sweep_growth=args.sweep_growth,
    )
    result = fit_stochastic_approximation(
        observed,
        args.K,
        include_triangle=not args.no_triangle,
        schedule=schedule,
        cfg=chain,
        tol=args.tol,
        threads=args.threads,
    )
    if args.trajectory:
        with open(args.trajectory, "w", newline="", encoding="utf-8") as stream:
            result.to_csv(stream)

    config = CheckConfig(seed=args.seed, threads=args.threads, max_edges=args.max_edges)
    report = CheckSuite(host_for(observed), result.params, config, args.source).run(
        "necessary", args.timing, command="fit"
    )
    report.config.update({"chain": chain.to_dict(), "schedule": schedule.to_dict()})
    report.extra["fit"] = result.to_dict()

    if args.format == "json":
        text = report.to_json() + "\n"
    else:
        theta = ", ".join(
            f"{name}={value:.6g}"
            for name, value in zip(theta_names(result.params.K), result.params.theta)
        )
        gap = "n/a" if result.final_gap is None else f"{result.final_gap:.6g}"
        lines = [
            f"fit: {'converged' if result.converged else 'not converged'} after "
            f"{result.iterations} iteration(s), moment gap {gap}",
            f"estimate: {theta}",
        ]
        lines += [f"warning: {w}" for w in result.warnings]
        text = "\n".join(lines) + "\n" + report.to_text()
    _emit(text, args.out)
    return report.exit_code


def cmd_sample(args: argparse.Namespace) -> int:
    graph, graph_id = resolve_graph(args)
    params = require_markov(load_params(args.params), "sample")
    chain = ChainConfig(
        sweeps=args.sweeps,
        burnin=args.burnin,
        thin=args.thin,
        seed=args.seed,
        batches=args.batches,
        chains=args.chains,
    )
    summary = sample_suffstats(graph, params, chain, args.threads)
    exact = None
    if graph.m <= args.max_edges:
        exact = exact_expected_stats(graph, params, args.max_edges)
    names = stat_names(params.K)

    if args.format == "json":
        text = _dump(
            _envelope(
                "sample",
                graph=_graph_echo(graph, graph_id),
                params=params.to_dict(),
                config=chain.to_dict(),
                summary=summary.to_dict(),
                exact=exact.to_dict() if exact is not None else None,
            )
        )
    else:
        lines = [
            f"graph: {graph_id} (n={graph.n}, m={graph.m})",
            f"samples: {summary.samples}, boundary fraction {summary.boundary_fraction:.4g}",
            "statistic\tmean\tstderr\texact",
        ]
        for i, name in enumerate(names):
            exact_value = "unavailable" if exact is None else f"{exact.values[i]:.8g}"
            lines.append(
                f"{name}\t{summary.mean.values[i]:.8g}\t{summary.stderr[i]:.4g}\t{exact_value}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_datasets_list(args: argparse.Namespace) -> int:
    entries = DatasetRegistry().list_entries()
    if args.format == "json":
        text = _dump(_envelope("datasets list", datasets=[e.to_dict() for e in entries]))
    else:
        text = "".join(f"{e.id}\t{e.expected_n}\t{e.description}\n" for e in entries)
    _emit(text, args.out)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    graph, graph_id = resolve_graph(args)
    dot = to_dot(graph, args.name)
    if args.format == "json":
        text = _dump(_envelope("export-dot", graph=_graph_echo(graph, graph_id), dot=dot))
    else:
        text = dot
    _emit(text, args.out)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    graph, graph_id = resolve_graph(args)
    params = require_markov(load_params(args.params), "scan")
    points = lorentzian_scan(
        graph,
        params,
        parse_grid(args.beta2),
        parse_grid(args.beta),
        args.tol,
        args.max_edges,
    )
    if args.format == "json":
        text = _dump(
            _envelope(
                "scan",
                graph=_graph_echo(graph, graph_id),
                params=params.to_dict(),
                points=[p.to_dict() for p in points],
            )
        )
    else:
        lines = ["beta2\tbeta\toutcome\tmargin"]
        for p in points:
            margin = "n/a" if p.margin is None else f"{p.margin:.6g}"
            lines.append(f"{p.beta2:.6g}\t{p.beta:.6g}\t{p.outcome.value}\t{margin}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# ===================================================================
#  Parser
# ===================================================================


def _common_parent() -> argparse.ArgumentParser:
    parent = ArgumentParser(add_help=False)
    parent.add_argument(
        "--format", choices=["text", "json"], default="text", help="Output format"
    )
    parent.add_argument("--out", help="Write output to this file instead of stdout")
    parent.add_argument("--quiet", action="store_true", help="Silence log messages")
    parent.add_argument(
        "--verbose", action="store_true", help="Log progress at INFO level"
    )
    return parent


def _model_parent() -> argparse.ArgumentParser:
    parent = ArgumentParser(add_help=False)
    source = parent.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--graph",
        help="Edge-list path, http(s) URL, dataset:<id> or complete:<n>",
    )
    source.add_argument("--dataset", help="Bundled dataset id")
    parent.add_argument(
        "--max-edges",
        type=int,
        default=DEFAULT_MAX_EDGES,
        help=f"Enumeration cap on the edge count (default: {DEFAULT_MAX_EDGES})",
    )
    return parent


def _params_parent() -> argparse.ArgumentParser:
    parent = ArgumentParser(add_help=False)
    parent.add_argument("--params", required=True, help="JSON parameter file")
    return parent


def _chain_parent(defaults: ChainConfig) -> argparse.ArgumentParser:
    parent = ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    parent.add_argument("--threads", type=int, default=1, help="Worker threads")
    parent.add_argument("--sweeps", type=int, default=defaults.sweeps)
    parent.add_argument("--burnin", type=int, default=defaults.burnin)
    parent.add_argument("--thin", type=int, default=defaults.thin)
    parent.add_argument("--batches", type=int, default=defaults.batches)
    parent.add_argument("--chains", type=int, default=defaults.chains)
    return parent


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="ergm-geometry",
        description=(
            "Negative-dependence verdicts, sampling and fitting for Markov "
            "random graph models."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = _common_parent()
    model = _model_parent()
    params = _params_parent()
    chain = _chain_parent(ChainConfig.default())
    fit_chain = _chain_parent(ChainConfig.for_fit())

    # -- enumerate --
    p_enum = subparsers.add_parser(
        "enumerate",
        parents=[common, model, params],
        help="Probability of every edge subset",
    )
    p_enum.set_defaults(handler=cmd_enumerate)

    # -- poly --
    p_poly = subparsers.add_parser(
        "poly", parents=[common, model, params], help="Generating polynomial"
    )
    p_poly.add_argument(
        "--homogenize", action="store_true", help="Homogenize with a new variable z"
    )
    p_poly.add_argument(
        "--unnormalized",
        action="store_true",
        help="Use raw weights instead of probabilities as coefficients",
    )
    p_poly.set_defaults(handler=cmd_poly)

    # -- check --
    p_check = subparsers.add_parser(
        "check", parents=[common, model, params], help="Run verdict checks"
    )
    p_check.add_argument(
        "--which",
        choices=list(CheckNames.groups),
        default="all",
        help="Check group (default: all)",
    )
    p_check.add_argument("--seed", type=int, default=0, help="Falsifier seed (default: 0)")
    p_check.add_argument(
        "--budget", type=int, default=10_000, help="Falsifier evaluation budget"
    )
    p_check.add_argument("--tol", type=float, default=1e-9, help="Numerical tolerance")
    p_check.add_argument("--threads", type=int, default=1, help="Worker threads")
    p_check.add_argument("--timing", action="store_true", help="Include wall-clock timing")
    p_check.set_defaults(handler=cmd_check)

    # -- fit --
    p_fit = subparsers.add_parser(
        "fit", parents=[common, fit_chain], help="Fit a Markov model to an observed graph"
    )
    p_fit.add_argument("source", help="Bundled dataset id or graph locator")
    p_fit.add_argument("--K", type=int, default=2, help="Star order cap (default: 2)")
    p_fit.add_argument(
        "--no-triangle", action="store_true", help="Hold the triangle coefficient at 0"
    )
    p_fit.add_argument("--iters", type=int, default=200, help="Maximum iterations")
    p_fit.add_argument("--tol", type=float, default=0.02, help="Moment-gap tolerance")
    p_fit.add_argument("--a0", type=float, default=0.1, help="Initial gain")
    p_fit.add_argument(
        "--sweep-growth",
        type=float,
        default=2.0,
        help="Cap on how far per-iteration sweeps grow as the gain shrinks (default: 2)",
    )
    p_fit.add_argument(
        "--precondition",
        action="store_true",
        help="Scale steps by inverse statistic variances",
    )
    p_fit.add_argument("--trajectory", help="Write the iteration trajectory as CSV")
    p_fit.add_argument(
        "--max-edges", type=int, default=DEFAULT_MAX_EDGES, help="Enumeration cap"
    )
    p_fit.add_argument("--timing", action="store_true", help="Include wall-clock timing")
    p_fit.set_defaults(handler=cmd_fit)

    # -- sample --
    p_sample = subparsers.add_parser(
        "sample",
        parents=[common, model, params, chain],
        help="Glauber estimate of expected statistics",
    )
    p_sample.set_defaults(handler=cmd_sample)

    # -- datasets --
    p_datasets = subparsers.add_parser("datasets", help="Bundled datasets")
    datasets_sub = p_datasets.add_subparsers(dest="datasets_command", required=True)
    p_list = datasets_sub.add_parser("list", parents=[common], help="List datasets")
    p_list.set_defaults(handler=cmd_datasets_list)

    # -- export-dot --
    p_dot = subparsers.add_parser(
        "export-dot", parents=[common, model], help="Graphviz DOT export"
    )
    p_dot.add_argument("--name", default="G", help="Graph name in the DOT output")
    p_dot.set_defaults(handler=cmd_export_dot)

    # -- scan --
    p_scan = subparsers.add_parser(
        "scan",
        parents=[common, model, params],
        help="Lorentzian verdicts over a (beta_2, beta) grid",
    )
    p_scan.add_argument(
        "--beta2", required=True, help="start:stop:count or a comma list (use --beta2=...)"
    )
    p_scan.add_argument(
        "--beta", required=True, help="start:stop:count or a comma list (use --beta=...)"
    )
    p_scan.add_argument("--tol", type=float, default=1e-9, help="Signature tolerance")
    p_scan.set_defaults(handler=cmd_scan)

    return parser


# ===================================================================
#  CLI entry point
# ===================================================================


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        if args.quiet:
            disable_logging()
        elif args.verbose:
            set_package_level("INFO")
        return args.handler(args)
    except (UsageError, ConfigurationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ErgmGeometryError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
