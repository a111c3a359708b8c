"""
horn-spectra - Command-Line Entry Point

Exposes the exact deciders (LR coefficients, Horn inequality lists, the
Hermitian / unitary / singular feasibility checks, interlacing, stability,
density) and the Monte-Carlo harness.

Exit codes:
    0  feasible, stable or all samples passed
    1  infeasible, unstable or some sample failed
    2  invalid input

Usage:
    python -m src.main check hermitian 1,0 1,0 1,1 --json
    python -m src.main sample sum 2,1,0 1,0,0 --trials 1000 --seed 7
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Load environment variables from the project root directory
env_path = project_root / '.env'
load_dotenv(dotenv_path=env_path)

import pandas as pd

from config.settings import APPLICATION_CONFIG, NUMERICS_CONFIG, ORACLE_CONFIG, validate_configuration
from src.core.horn import horn_list, horn_list_recursive
from src.core.littlewood_richardson import lr_coefficient, tensor_decompose
from src.core.quantum import check_unitary_product
from src.core.spectral_checks import (
    check_hermitian_sum,
    check_singular_product,
    check_zero_sum,
    conjugacy_class_invariants,
    deligne_rigidity_check,
    evaluate_toric_stability,
    interlacing_check,
    simpson_density_check,
)
from src.oracle.sampler import monte_carlo_product, monte_carlo_singular, monte_carlo_sum
from src.utils.data_models import StabilityStatus
from src.utils.exceptions import (
    ConvergenceError,
    DimensionMismatchError,
    InputParseError,
    InvariantViolationError,
    SpectralProblemError,
)
from src.utils.helpers import parse_integers, parse_partition, parse_reals, parse_spectra, protect_negative_tokens
from src.utils.report_generator import report_generator

logger = logging.getLogger(__name__)

CommandResult = Tuple[Dict[str, Any], pd.DataFrame, int]


def _spectra(tokens: Sequence[str], count: Optional[int] = None) -> List:
    spectra = parse_spectra(tokens)
    if count is not None and len(spectra) != count:
        raise InputParseError(f"expected {count} spectra, got {len(spectra)}")
    return spectra


def _echo(spectra) -> List[List[float]]:
    return [s.to_list() for s in spectra]


def run_lr(args: argparse.Namespace) -> CommandResult:
    alpha, beta, gamma = (parse_partition(x) for x in (args.alpha, args.beta, args.gamma))
    c = lr_coefficient(alpha, beta, gamma)
    payload = report_generator.build_envelope(
        "lr", {"alpha": alpha.to_list(), "beta": beta.to_list(), "gamma": gamma.to_list()}, {"multiplicity": c})
    return payload, pd.DataFrame([{"alpha": str(alpha), "beta": str(beta), "gamma": str(gamma), "c": c}]), 0


def run_tensor(args: argparse.Namespace) -> CommandResult:
    alpha, beta = parse_partition(args.alpha), parse_partition(args.beta)
    rows = args.rows if args.rows is not None else len(alpha) + len(beta)
    decomposition = tensor_decompose(alpha, beta, rows)
    payload = report_generator.build_envelope(
        "tensor", {"alpha": alpha.to_list(), "beta": beta.to_list(), "rows": rows},
        {"decomposition": [{"gamma": g.to_list(), "multiplicity": c} for g, c in decomposition]})
    return payload, report_generator.decomposition_table(decomposition), 0


def run_horn(args: argparse.Namespace) -> CommandResult:
    if args.n < 2:
        raise InputParseError(f"n must be at least 2, got {args.n}")
    if args.recursive:
        triples = horn_list_recursive(args.n)
        if args.facets_only:
            facets = {t.key() for t in horn_list(args.n, facets_only=True)}
            triples = [t for t in triples if t.key() in facets]
    else:
        triples = horn_list(args.n, facets_only=args.facets_only)
    frame = report_generator.horn_table(triples)
    if args.csv:
        report_generator.export_csv(frame, args.csv)
    payload = report_generator.build_envelope(
        "horn", {"n": args.n, "facets_only": args.facets_only, "recursive": args.recursive},
        {"n": args.n, "count": len(triples), "triples": [t.to_dict() for t in triples]})
    return payload, frame, 0


def run_check_hermitian(args: argparse.Namespace) -> CommandResult:
    alpha, beta, gamma = _spectra(args.spectra, 3)
    verdict = check_hermitian_sum(alpha, beta, gamma, args.tol, facets_only=args.facets_only)
    payload = report_generator.build_envelope(
        "check hermitian", {"spectra": _echo((alpha, beta, gamma)), "tol": args.tol}, verdict.to_dict())
    return payload, report_generator.verdict_table(verdict), 0 if verdict.feasible else 1


def run_check_unitary(args: argparse.Namespace) -> CommandResult:
    lam_u, lam_v, lam_w = _spectra(args.spectra, 3)
    verdict = check_unitary_product(lam_u, lam_v, lam_w, args.tol)
    payload = report_generator.build_envelope(
        "check unitary", {"spectra": _echo((lam_u, lam_v, lam_w)), "tol": args.tol}, verdict.to_dict())
    return payload, report_generator.verdict_table(verdict), 0 if verdict.feasible else 1


def run_check_singular(args: argparse.Namespace) -> CommandResult:
    sigmas = _spectra(args.spectra)
    if len(sigmas) < 2:
        raise InputParseError("at least two singular spectra are required")
    verdict = check_singular_product(sigmas, args.tol)
    payload = report_generator.build_envelope(
        "check singular", {"spectra": _echo(sigmas), "tol": args.tol}, verdict.to_dict())
    return payload, report_generator.verdict_table(verdict), 0 if verdict.feasible else 1


def run_check_zero_sum(args: argparse.Namespace) -> CommandResult:
    spectra = _spectra(args.spectra)
    if len(spectra) < 2:
        raise InputParseError("at least two spectra are required")
    verdict = check_zero_sum(spectra, args.tol)
    payload = report_generator.build_envelope(
        "check zero-sum", {"spectra": _echo(spectra), "tol": args.tol}, verdict.to_dict())
    return payload, report_generator.verdict_table(verdict), 0 if verdict.feasible else 1


def run_check_interlace(args: argparse.Namespace) -> CommandResult:
    alpha, gamma = _spectra([args.alpha, args.gamma], 2)
    values = parse_reals(args.b)
    if len(values) != 1:
        raise InputParseError(f"expected one rank-one eigenvalue, got {len(values)}")
    interlaces = interlacing_check(alpha, values[0], gamma, args.tol)
    payload = report_generator.build_envelope(
        "check interlace", {"alpha": alpha.to_list(), "b": values[0], "gamma": gamma.to_list(), "tol": args.tol},
        {"feasible": interlaces, "slack": 0.0, "witness_kind": "none" if interlaces else "inequality",
         "witness": None, "inequality": "" if interlaces else "interlacing fails", "notes": []})
    frame = pd.DataFrame([("interlaces", interlaces)], columns=["field", "value"])
    return payload, frame, 0 if interlaces else 1


def run_check_stability(args: argparse.Namespace) -> CommandResult:
    alpha, beta, gamma = _spectra(args.spectra, 3)
    report = evaluate_toric_stability(alpha, beta, gamma, args.tol)
    payload = report_generator.build_envelope(
        "check stability", {"spectra": _echo((alpha, beta, gamma)), "tol": args.tol}, report.to_dict())
    code = 1 if report.status is StabilityStatus.UNSTABLE else 0
    return payload, report_generator.stability_table(report), code


def run_check_simpson(args: argparse.Namespace) -> CommandResult:
    n = args.n
    if args.multiplicities:
        invariants = [conjugacy_class_invariants(parse_integers(m), n) for m in args.multiplicities]
        dims = [d for d, _ in invariants]
        codims = [r for _, r in invariants]
    else:
        if args.dims is None or args.codims is None:
            raise InputParseError("give either --multiplicities or both --dims and --codims")
        dims, codims = parse_integers(args.dims), parse_integers(args.codims)
    if len(dims) != len(codims):
        raise DimensionMismatchError(f"{len(dims)} dimensions but {len(codims)} codimensions")
    dense = simpson_density_check(dims, codims, n)
    rigid = deligne_rigidity_check(dims, n)
    result = {"dense": dense, "dimension_sum": sum(dims), "codimension_sum": sum(codims), "rigid": rigid}
    payload = report_generator.build_envelope(
        "check simpson", {"n": n, "dims": dims, "codims": codims}, result)
    frame = pd.DataFrame(list(result.items()), columns=["field", "value"])
    return payload, frame, 0 if dense else 1


def _run_sample(kind: str, sampler: Callable, spectra_arg, args: argparse.Namespace) -> CommandResult:
    report = sampler(spectra_arg, args.trials, args.seed, args.jobs)
    spectra = spectra_arg if isinstance(spectra_arg, list) else list(spectra_arg)
    payload = report_generator.build_envelope(
        f"sample {kind}", {"spectra": _echo(spectra), "trials": report.trials, "seed": report.seed},
        report.to_dict())
    return payload, report_generator.sample_table(report), 0 if report.all_pass else 1


def run_sample_sum(args: argparse.Namespace) -> CommandResult:
    alpha, beta = _spectra(args.spectra, 2)
    return _run_sample("sum", lambda s, t, seed, jobs: monte_carlo_sum(s[0], s[1], t, seed, jobs),
                       [alpha, beta], args)


def run_sample_product(args: argparse.Namespace) -> CommandResult:
    lam_u, lam_v = _spectra(args.spectra, 2)
    return _run_sample("product", lambda s, t, seed, jobs: monte_carlo_product(s[0], s[1], t, seed, jobs),
                       [lam_u, lam_v], args)


def run_sample_singular(args: argparse.Namespace) -> CommandResult:
    sigmas = _spectra(args.spectra)
    return _run_sample("singular", monte_carlo_singular, sigmas, args)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per decider."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON response envelope")
    common.add_argument("--log-level", default=APPLICATION_CONFIG["log_level"])

    tolerant = argparse.ArgumentParser(add_help=False, parents=[common])
    tolerant.add_argument("--tol", type=float, default=NUMERICS_CONFIG["default_tolerance"])

    sampling = argparse.ArgumentParser(add_help=False, parents=[common])
    sampling.add_argument("--trials", type=int, default=ORACLE_CONFIG["default_trials"])
    sampling.add_argument("--seed", type=int, default=ORACLE_CONFIG["default_seed"])
    sampling.add_argument("--jobs", type=int, default=ORACLE_CONFIG["default_jobs"])

    parser = argparse.ArgumentParser(prog=APPLICATION_CONFIG["name"], description=__doc__.splitlines()[1].strip())
    parser.add_argument("--version", action="version", version=APPLICATION_CONFIG["app_version"])
    commands = parser.add_subparsers(dest="command", required=True)

    lr = commands.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    lr.add_argument("alpha")
    lr.add_argument("beta")
    lr.add_argument("gamma")
    lr.set_defaults(handler=run_lr)

    tensor = commands.add_parser("tensor", parents=[common], help="decompose V_alpha ⊗ V_beta")
    tensor.add_argument("alpha")
    tensor.add_argument("beta")
    tensor.add_argument("--rows", type=int, default=None)
    tensor.set_defaults(handler=run_tensor)

    horn = commands.add_parser("horn", parents=[common], help="list Horn triples")
    horn.add_argument("n", type=int)
    horn.add_argument("--facets-only", action="store_true")
    horn.add_argument("--recursive", action="store_true")
    horn.add_argument("--csv", default=None, metavar="PATH")
    horn.set_defaults(handler=run_horn)

    check = commands.add_parser("check", help="feasibility deciders")
    kinds = check.add_subparsers(dest="kind", required=True)

    hermitian = kinds.add_parser("hermitian", parents=[tolerant])
    hermitian.add_argument("spectra", nargs="+")
    hermitian.add_argument("--facets-only", action="store_true")
    hermitian.set_defaults(handler=run_check_hermitian)

    for name, handler in (("unitary", run_check_unitary), ("singular", run_check_singular),
                          ("stability", run_check_stability), ("zero-sum", run_check_zero_sum)):
        sub = kinds.add_parser(name, parents=[tolerant])
        sub.add_argument("spectra", nargs="+")
        sub.set_defaults(handler=handler)

    interlace = kinds.add_parser("interlace", parents=[tolerant])
    interlace.add_argument("alpha")
    interlace.add_argument("b")
    interlace.add_argument("gamma")
    interlace.set_defaults(handler=run_check_interlace)

    simpson = kinds.add_parser("simpson", parents=[common])
    simpson.add_argument("--n", type=int, required=True)
    simpson.add_argument("--dims", default=None)
    simpson.add_argument("--codims", default=None)
    simpson.add_argument("--multiplicities", nargs="+", default=None)
    simpson.set_defaults(handler=run_check_simpson)

    sample = commands.add_parser("sample", help="Monte-Carlo harness")
    sample_kinds = sample.add_subparsers(dest="kind", required=True)
    for name, handler in (("sum", run_sample_sum), ("product", run_sample_product),
                          ("singular", run_sample_singular)):
        sub = sample_kinds.add_parser(name, parents=[sampling])
        sub.add_argument("spectra", nargs="+")
        sub.set_defaults(handler=handler)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and print its result.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    argv = protect_negative_tokens(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=str(args.log_level).upper(),
                        format=APPLICATION_CONFIG["log_format"], force=True)
    if not validate_configuration():
        logger.error("Configuration is inconsistent; check the HORN_* environment variables")
        print("error: invalid configuration", file=sys.stderr)
        return 2

    try:
        payload, frame, code = args.handler(args)
    except (InvariantViolationError, ConvergenceError) as e:
        logger.error(f"Internal error in {args.command}: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (SpectralProblemError, ValueError) as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.json:
        print(report_generator.render_json(payload))
    else:
        print(report_generator.render_table(frame))
    return code


if __name__ == "__main__":
    sys.exit(main())
