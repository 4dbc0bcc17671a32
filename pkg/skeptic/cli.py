"""
Command line
------------

The ``skeptic`` command runs the experiment drivers of :mod:`skeptic.harness`
and a couple of one-off decision tools::

  skeptic simulate --m 2,3,4 --epsilon 0.05,0.45
  skeptic timing --m 3,4,5,6,7
  skeptic examples
  skeptic dataset --dataset emotions.csv --protocol corruption --levels 0,40,80
  skeptic br 0.6:1,0:1
  skeptic decide tree.json --rule alg1
  skeptic write-config

Settings come from the config file (see :mod:`skeptic.config`); flags
override them, and list-valued flags take comma-separated values.  Drivers
print their summary table, write the per-trial CSV and the JSON summary, and
exit with status 1 when an audit fails or a skeptic error is raised.

"""
from contextlib import contextmanager
from enum import Enum
import json
import logging
from pathlib import Path
from typing import Optional

import typer

from skeptic.config import SkepticConfig
from skeptic.decision import (
    FiniteCredalSet,
    LossMatrix,
    CheckCounter,
    eadmissible_set_finite,
    known_maximal,
    maximal_set_alg1,
    maximal_set_naive,
    outer_partial_vector,
)
from skeptic.core import is_partial_vector
from skeptic.harness import (
    run_dataset_experiment,
    run_simulation,
    run_timing,
    run_worked_examples,
)
from skeptic.logging import set_level
from skeptic.models import (
    VERSTR,
    ExperimentConfig,
    ExperimentKind,
    ExperimentResult,
    Protocol,
)
from skeptic.evaluation import CorruptionKind
from skeptic.relevance import (
    INTERVAL_DOMINANCE_LIMIT,
    MarginalIntervalModel,
    br_skeptical_prediction,
    expectation_bounds,
    gamma_minimax,
    gamma_minimin,
    interval_dominance_set,
)
from skeptic.signals import SignalHandlerFactory, SkepticException
from skeptic.tree import ImpreciseBinaryTree
from skeptic.util import parse_list

logger = logging.getLogger(__name__)

app = typer.Typer(help="Skeptical multi-label prediction experiments")


class Rule(str, Enum):
    alg1 = "alg1"
    naive = "naive"
    outer = "outer"
    eadmissible = "eadmissible"


class Loss(str, Enum):
    hamming = "hamming"
    zero_one = "zero-one"


@contextmanager
def reporting():
    """Turn skeptic errors into a message and exit status 1"""
    try:
        yield
    except SkepticException as e:
        logger.error(f"{type(e).__name__}: {e}")
        typer.secho(f"error: {e}", fg=typer.colors.RED, err=True)
        raise typer.Exit(code=1)


def _config(ctx: typer.Context) -> SkepticConfig:
    return ctx.obj


def finish(
    ctx: typer.Context,
    result: ExperimentResult,
    output: Optional[Path],
    name: str,
) -> None:
    """Print the summary, write the result files and report the audits"""
    typer.echo(result.summary.to_string(index=False))
    path = output or Path(_config(ctx).skeptic.output_dir) / name
    for written in result.write(path):
        typer.echo(f"wrote {written}", err=True)
    for audit, passed in result.audits.items():
        typer.secho(
            f"{'PASS' if passed else 'FAIL'} {audit}",
            fg=typer.colors.GREEN if passed else typer.colors.RED,
            err=True,
        )
    if not result.passed:
        raise typer.Exit(code=1)


@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", help="Config file to read (and create)"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug messages"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Log warnings only"),
):
    """Skeptical multi-label prediction under imprecise probabilities"""
    cfg = SkepticConfig(config) if config else SkepticConfig.get_config()
    ctx.obj = cfg
    if verbose:
        set_level(logging.DEBUG)
    elif quiet:
        set_level(logging.WARNING)
    else:
        set_level(cfg.skeptic.log_level)
    logger.debug(f"{VERSTR} using {cfg.skeptic.config_file}")


@app.command()
def simulate(
    ctx: typer.Context,
    m: Optional[str] = typer.Option(None, "--m", help="Label counts, e.g. 2,3,4"),
    epsilon: Optional[str] = typer.Option(None, "--epsilon", help="Imprecision levels"),
    trees: Optional[int] = typer.Option(None, "--trees", help="Trees per cell"),
    repetitions: Optional[int] = typer.Option(None, "--repetitions"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    early_skip: Optional[bool] = typer.Option(None, "--early-skip/--no-early-skip"),
    full_scale: bool = typer.Option(
        False, "--full-scale", "--paper-scale", help="2000 trees per cell, 5 repetitions"
    ),
    output: Optional[Path] = typer.Option(None, "--output", "-o"),
):
    """Exact maximal sets against their outer partial vectors"""
    SignalHandlerFactory.install()
    with reporting():
        cfg = ExperimentConfig.from_config(
            _config(ctx),
            ExperimentKind.simulation,
            full_scale,
            m_values=m,
            epsilons=epsilon,
            trees_per_cell=trees,
            repetitions=repetitions,
            seed=seed,
            early_skip=early_skip,
        )
        result = run_simulation(cfg)
        finish(ctx, result, output, "simulation")


@app.command()
def timing(
    ctx: typer.Context,
    m: Optional[str] = typer.Option(None, "--m", help="Label counts, e.g. 3,4,5"),
    instances: Optional[int] = typer.Option(None, "--instances"),
    epsilon: Optional[float] = typer.Option(None, "--epsilon"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    output: Optional[Path] = typer.Option(None, "--output", "-o"),
):
    """Time pairwise enumeration against the per-assignment rule"""
    SignalHandlerFactory.install()
    with reporting():
        cfg = ExperimentConfig.from_config(
            _config(ctx),
            ExperimentKind.timing,
            m_values=m,
            instances=instances,
            epsilon=epsilon,
            seed=seed,
        )
        finish(ctx, run_timing(cfg), output, "timing")


@app.command()
def examples(
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Also write the checks as CSV and JSON"
    ),
):
    """Re-check the worked examples"""
    with reporting():
        result = run_worked_examples()
        for _, row in result.rows.iterrows():
            line = f"{'PASS' if row.passed else 'FAIL'} {row.example}: {row['name']}"
            if not row.passed:
                line += f" (expected {row.expected}, got {row.actual})"
            typer.secho(line, fg=typer.colors.GREEN if row.passed else typer.colors.RED)
        if output:
            result.write(output)
        if not result.passed:
            raise typer.Exit(code=1)


@app.command()
def dataset(
    ctx: typer.Context,
    dataset: Optional[Path] = typer.Option(
        None, "--dataset", "-d", help="CSV file; the synthetic dataset otherwise"
    ),
    protocol: Optional[Protocol] = typer.Option(None, "--protocol"),
    corruption: Optional[CorruptionKind] = typer.Option(None, "--corruption"),
    levels: Optional[str] = typer.Option(None, "--levels", help="Percentages"),
    beta: Optional[float] = typer.Option(None, "--beta"),
    per_column: Optional[bool] = typer.Option(None, "--per-column/--whole-grid"),
    bins: Optional[int] = typer.Option(None, "--bins"),
    s: Optional[str] = typer.Option(None, "--s", help="Imprecision values"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="Rejection thresholds"),
    c_sep: Optional[str] = typer.Option(None, "--c-sep"),
    c_par: Optional[str] = typer.Option(None, "--c-par"),
    methods: Optional[str] = typer.Option(None, "--methods"),
    cv_repeats: Optional[int] = typer.Option(None, "--cv-repeats"),
    cv_folds: Optional[int] = typer.Option(None, "--cv-folds"),
    train_fractions: Optional[str] = typer.Option(None, "--train-fractions"),
    downsample_repeats: Optional[int] = typer.Option(None, "--downsample-repeats"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    output: Optional[Path] = typer.Option(None, "--output", "-o"),
):
    """Score the set-valued predictors on corrupted or downsampled data"""
    SignalHandlerFactory.install()
    with reporting():
        cfg = ExperimentConfig.from_config(
            _config(ctx),
            ExperimentKind.dataset,
            dataset=dataset,
            protocol=protocol,
            corruption=corruption,
            levels=levels,
            beta=beta,
            per_column=per_column,
            bins=bins,
            s_values=s,
            gammas=gamma,
            c_sep=c_sep,
            c_par=c_par,
            methods=methods,
            cv_repeats=cv_repeats,
            cv_folds=cv_folds,
            train_fractions=train_fractions,
            downsample_repeats=downsample_repeats,
            seed=seed,
        )
        finish(ctx, run_dataset_experiment(cfg), output, "dataset")


@app.command()
def br(
    intervals: str = typer.Argument(
        ..., help="Bounds on P(Y_i = 1) as lower:upper pairs, e.g. 0.6:1,0:1"
    ),
):
    """Decisions of a binary relevance model with interval marginals"""
    with reporting():
        try:
            pairs = parse_list(intervals, cast=lambda p: [float(v) for v in p.split(":")])
            model = MarginalIntervalModel.from_pairs(pairs)
        except ValueError as e:
            typer.secho(f"error: bad intervals {intervals!r}: {e}", fg=typer.colors.RED, err=True)
            raise typer.Exit(code=2)
        report = {
            "maximal": str(br_skeptical_prediction(model)),
            "gamma_minimax": str(gamma_minimax(model)),
            "gamma_minimin": str(gamma_minimin(model)),
        }
        if model.m <= INTERVAL_DOMINANCE_LIMIT:
            lower, upper = expectation_bounds(model)
            report["interval_dominance"] = interval_dominance_set(model).strings()
            report["expected_loss"] = {
                format(y, f"0{model.m}b"): [round(float(lo), 12), round(float(up), 12)]
                for y, (lo, up) in enumerate(zip(lower, upper))
            }
        typer.echo(json.dumps(report, indent=2))


@app.command()
def decide(
    path: Path = typer.Argument(..., help="Tree or finite credal set as JSON"),
    rule: Rule = typer.Option(Rule.alg1, "--rule"),
    loss: Loss = typer.Option(Loss.hamming, "--loss"),
    finite: bool = typer.Option(
        False, "--finite", help="The file lists distributions rather than a tree"
    ),
    known_member: bool = typer.Option(
        False, "--known-member", help="Skip checks against the Bayes vector of one member"
    ),
):
    """Prediction set of a stored credal set"""
    with reporting():
        try:
            oracle = FiniteCredalSet.load(path) if finite else ImpreciseBinaryTree.load(path)
        except (OSError, ValueError, KeyError) as e:
            typer.secho(f"error: cannot read {path}: {e}", fg=typer.colors.RED, err=True)
            raise typer.Exit(code=1)
        matrix = LossMatrix.zero_one(oracle.m) if loss is Loss.zero_one else None
        if rule in (Rule.alg1, Rule.outer) and matrix is not None:
            typer.secho(f"error: {rule.value} is for Hamming loss", fg=typer.colors.RED, err=True)
            raise typer.Exit(code=2)
        counter = CheckCounter()
        if rule is Rule.alg1:
            known = known_maximal(oracle) if known_member else None
            chosen = maximal_set_alg1(oracle, known=known, counter=counter)
        elif rule is Rule.naive:
            chosen = maximal_set_naive(oracle, matrix, counter=counter)
        elif rule is Rule.eadmissible:
            if not finite:
                typer.secho("error: eadmissible needs --finite", fg=typer.colors.RED, err=True)
                raise typer.Exit(code=2)
            chosen = eadmissible_set_finite(oracle, matrix)
        else:
            if finite:
                typer.secho("error: outer needs a tree", fg=typer.colors.RED, err=True)
                raise typer.Exit(code=2)
            partial = outer_partial_vector(oracle.marginal_intervals())
            report = {"m": oracle.m, "rule": rule.value, "partial": str(partial)}
            report["outer"] = report["partial"]
            typer.echo(json.dumps(report))
            return
        partial = is_partial_vector(chosen)
        report = {
            "m": oracle.m,
            "rule": rule.value,
            "set": chosen.strings(),
            "partial": str(partial) if partial else None,
            "checks": counter.checks,
        }
        if not finite:
            report["outer"] = str(outer_partial_vector(oracle.marginal_intervals()))
        typer.echo(json.dumps(report))


@app.command("write-config")
def write_config(
    ctx: typer.Context,
    location: Optional[Path] = typer.Argument(
        None, help="Where to write; the config file in use by default"
    ),
):
    """Write the current settings to an INI file"""
    try:
        written = _config(ctx).write(location)
    except OSError as e:
        typer.secho(f"error: {e}", fg=typer.colors.RED, err=True)
        raise typer.Exit(code=1)
    typer.echo(str(written))


def main():  # pragma: no cover
    app(prog_name="skeptic")


if __name__ == "__main__":  # pragma: no cover
    main()
