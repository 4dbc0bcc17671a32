"""
Experiment drivers
------------------

Each driver takes an :class:`~skeptic.models.ExperimentConfig` and returns
an :class:`~skeptic.models.ExperimentResult`:

  * :func:`run_simulation` compares the exact maximal set of random
    imprecise trees with the partial vector read off their marginals, and
    bins the distances between the two;
  * :func:`run_timing` times pairwise enumeration against the per-assignment
    algorithm as the number of labels grows;
  * :func:`run_worked_examples` re-checks the known answers in
    :mod:`skeptic.golden`;
  * :func:`run_dataset_experiment` trains naive credal classifiers on
    corrupted or downsampled data and scores every set-valued predictor.

Work units draw their random streams from :func:`~skeptic.util.sub_seed`, so
results do not depend on the order in which units run.  Rows are produced in
a fixed loop order and a run is repeatable bit for bit from its seed.

"""
import logging
import timeit
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

from skeptic import golden
from skeptic.baselines import par_decisions, reject_decisions, sep_decisions
from skeptic.dataset import MISSING, DiscreteDataset, make_synthetic_dataset
from skeptic.decision import (
    NAIVE_LIMIT,
    CheckCounter,
    interval_decisions,
    maximal_set_alg1,
    maximal_set_naive,
    outer_partial_vector,
)
from skeptic.evaluation import (
    Z_95,
    CorruptionSpec,
    bin_distances,
    confidence_halfwidth,
    corrupt,
    cross_validation_splits,
    downsample_split,
    score_predictions,
    set_distance,
)
from skeptic.models import (
    ExperimentConfig,
    ExperimentResult,
    Method,
    Protocol,
)
from skeptic.ncc import NccModel
from skeptic.signals import AuditFailure, ContainmentViolation
from skeptic.tree import generate_tree
from skeptic.util import sub_seed

logger = logging.getLogger(__name__)

BIN_COLUMNS = ("q0", "q25", "q50", "q100")
CI_NOTE = (
    f"normal approximation: {Z_95} * sample standard deviation / sqrt(trials)"
)


def _summarize(
    rows: pd.DataFrame, keys: List[str], columns: List[str]
) -> pd.DataFrame:
    """Mean and confidence half-width of `columns` for every group of `keys`"""
    aggregations = {}
    for column in columns:
        aggregations[f"{column}_mean"] = (column, "mean")
        aggregations[f"{column}_ci"] = (column, confidence_halfwidth)
    summary = rows.groupby(keys, sort=False, dropna=False).agg(**aggregations)
    return summary.reset_index()


def run_simulation(cfg: ExperimentConfig) -> ExperimentResult:
    """Distances between the outer partial vector and the exact maximal set

    For every label count, imprecision level and repetition,
    `cfg.trees_per_cell` random trees are drawn.  Tree ``t`` of repetition
    ``r`` has the same seed at every imprecision level, so the trees of one
    column are nested.  A tree whose outer partial vector misses part of the
    exact set aborts the run with :exc:`~skeptic.signals.AuditFailure`.

    """
    records = []
    trials = 0
    for m in cfg.m_values:
        for epsilon in cfg.epsilons:
            for rep in range(cfg.repetitions):
                distances = np.empty(cfg.trees_per_cell, dtype=np.int64)
                for t in range(cfg.trees_per_cell):
                    tree = generate_tree(
                        m, epsilon, sub_seed(cfg.seed, "simulation", m, rep, t)
                    )
                    exact = maximal_set_alg1(tree, early_skip=cfg.early_skip)
                    approx = outer_partial_vector(tree.marginal_intervals())
                    try:
                        distances[t] = set_distance(approx, exact)
                    except ContainmentViolation as e:
                        logger.error(
                            f"containment audit failed for m={m},"
                            f" epsilon={epsilon}, repetition {rep}, tree {t}: {e}"
                        )
                        raise AuditFailure(f"outer approximation too small: {e}") from e
                    trials += 1
                bins = bin_distances(distances, m)
                records.append(
                    dict(
                        m=m,
                        epsilon=epsilon,
                        repetition=rep,
                        trees=cfg.trees_per_cell,
                        **dict(zip(BIN_COLUMNS, bins)),
                        mean_distance=float(distances.mean()),
                    )
                )
            logger.info(f"simulation cell m={m}, epsilon={epsilon} done")
    rows = pd.DataFrame.from_records(records)
    summary = _summarize(rows, ["m", "epsilon"], list(BIN_COLUMNS) + ["mean_distance"])
    return ExperimentResult(
        rows,
        summary,
        audits={"containment": True},
        metadata=dict(
            experiment="simulation",
            seed=cfg.seed,
            trees_per_cell=cfg.trees_per_cell,
            repetitions=cfg.repetitions,
            trees=trials,
            confidence_interval=CI_NOTE,
        ),
    )


def run_timing(cfg: ExperimentConfig) -> ExperimentResult:
    """Mean decision time of pairwise enumeration and of the per-assignment rule

    Both rules call the tree once per comparison, so measured time follows
    the number of checks.  The pairwise arm is skipped above
    :const:`~skeptic.decision.NAIVE_LIMIT` labels.

    """
    records = []
    for m in cfg.m_values:
        naive_arm = m <= NAIVE_LIMIT
        if not naive_arm:
            logger.info(f"m={m}: pairwise enumeration skipped above {NAIVE_LIMIT}")
        for instance in range(cfg.instances):
            tree = generate_tree(m, cfg.epsilon, sub_seed(cfg.seed, "timing", m, instance))
            alg1_counter, naive_counter = CheckCounter(), CheckCounter()
            start = timeit.default_timer()
            exact = maximal_set_alg1(tree, counter=alg1_counter, batched=False)
            alg1_seconds = timeit.default_timer() - start
            naive_seconds = np.nan
            agree = True
            if naive_arm:
                start = timeit.default_timer()
                naive = maximal_set_naive(tree, counter=naive_counter, batched=False)
                naive_seconds = timeit.default_timer() - start
                agree = naive == exact
            records.append(
                dict(
                    m=m,
                    instance=instance,
                    alg1_seconds=alg1_seconds,
                    naive_seconds=naive_seconds,
                    alg1_checks_measured=alg1_counter.checks,
                    naive_checks_measured=naive_counter.checks if naive_arm else np.nan,
                    agree=agree,
                )
            )
    rows = pd.DataFrame.from_records(records)
    summary = rows.groupby("m", sort=False).agg(
        alg1_seconds=("alg1_seconds", "mean"),
        naive_seconds=("naive_seconds", "mean"),
    ).reset_index()
    size = 2 ** summary["m"]
    summary["naive_checks"] = size * (size - 1)
    summary["alg1_checks"] = 3 ** summary["m"] - 1
    summary["time_ratio"] = summary["naive_seconds"] / summary["alg1_seconds"]
    ratios = summary["time_ratio"].dropna()
    # wall-clock based, so not an audit
    ratio_grows = bool(len(ratios) > 1 and ratios.is_monotonic_increasing)

    expected_alg1 = 3 ** rows["m"] - 1
    expected_naive = 2 ** rows["m"] * (2 ** rows["m"] - 1)
    naive_rows = rows["m"] <= NAIVE_LIMIT
    audits = {
        "alg1_check_count": bool((rows["alg1_checks_measured"] == expected_alg1).all()),
        "naive_check_count": bool(
            (rows.loc[naive_rows, "naive_checks_measured"] == expected_naive[naive_rows]).all()
        ),
        "same_maximal_set": bool(rows["agree"].all()),
    }
    return ExperimentResult(
        rows,
        summary,
        audits=audits,
        metadata=dict(
            experiment="timing",
            seed=cfg.seed,
            instances=cfg.instances,
            epsilon=cfg.epsilon,
            clock="timeit.default_timer",
            time_ratio_increasing=ratio_grows,
        ),
    )


def run_worked_examples() -> ExperimentResult:
    """Every worked-example check, one row each; audits are per example"""
    results = golden.run_all()
    rows = pd.DataFrame.from_records([r.dict() for r in results])
    audits = {
        example: bool(group["passed"].all())
        for example, group in rows.groupby("example", sort=False)
    }
    for r in results:
        if not r.passed:
            logger.error(str(r))
    return ExperimentResult(rows, audits=audits, metadata=dict(experiment="examples"))


def load_dataset(cfg: ExperimentConfig) -> Tuple[str, DiscreteDataset]:
    """The configured CSV dataset, or the synthetic one when there is none"""
    if cfg.dataset is not None:
        return cfg.dataset.stem, DiscreteDataset.from_csv(cfg.dataset, cfg.bins)
    logger.info("no dataset configured; using the synthetic dataset")
    return "synthetic", make_synthetic_dataset(seed=cfg.seed, bins=cfg.bins)


def _trials(
    cfg: ExperimentConfig, data: DiscreteDataset
) -> Iterator[Tuple[float, int, DiscreteDataset, DiscreteDataset]]:
    """Yield ``(level, trial, train, test)`` for the configured protocol"""
    if cfg.protocol is Protocol.corruption:
        for level in cfg.levels:
            splits = cross_validation_splits(data.n, cfg.cv_repeats, cfg.cv_folds, cfg.seed)
            for repeat, fold, train_rows, test_rows in splits:
                train = data.take(train_rows)
                spec = CorruptionSpec(
                    kind=cfg.corruption,
                    percentage=level,
                    beta=cfg.beta,
                    per_column=cfg.per_column,
                    seed=sub_seed(cfg.seed, "corruption", level, repeat, fold),
                )
                train = train.with_labels(corrupt(train.labels, spec))
                yield level, repeat * cfg.cv_folds + fold, train, data.take(test_rows)
    else:
        for x in cfg.train_fractions:
            for repeat in range(cfg.downsample_repeats):
                train, test = downsample_split(data, x, repeat, cfg.seed)
                yield x, repeat, train, test


def predict_all(
    cfg: ExperimentConfig, model: NccModel, rows: np.ndarray
) -> Iterator[Tuple[Method, float, np.ndarray]]:
    """Yield ``(method, hyper-parameter, decisions)`` for every configured predictor"""
    methods = set(cfg.methods)
    precise = model.precise_marginals(rows)
    if Method.skeptic in methods:
        for s in cfg.s_values:
            lower, upper = model.with_s(s).bounds(rows)
            yield Method.skeptic, s, interval_decisions(lower, upper)
    if Method.precise in methods:
        yield Method.precise, np.nan, (precise >= 0.5).astype(np.int8)
    if Method.reject in methods:
        for gamma in cfg.gammas:
            yield Method.reject, gamma, reject_decisions(precise, gamma)
    if Method.abstain_sep in methods:
        for c in cfg.c_sep:
            yield Method.abstain_sep, c, sep_decisions(precise, c)
    if Method.abstain_par in methods:
        for c in cfg.c_par:
            yield Method.abstain_par, c, par_decisions(precise, c)


def run_dataset_experiment(
    cfg: ExperimentConfig, data: Optional[DiscreteDataset] = None
) -> ExperimentResult:
    """Incorrectness and completeness of every predictor, level and trial

    Only training labels are corrupted.  Test rows with a missing label are
    not scored.

    :param data: use this dataset instead of the configured one

    """
    name, data = ("custom", data) if data is not None else load_dataset(cfg)
    records = []
    for level, trial, train, test in _trials(cfg, data):
        scored = (test.labels != MISSING).all(axis=1)
        truth, features = test.labels[scored], test.features[scored]
        if not len(truth):
            logger.warning(f"level {level}, trial {trial}: no fully labelled test rows")
            continue
        model = NccModel.fit(train, s=0.0)
        for method, hyper, decisions in predict_all(cfg, model, features):
            ic, cp = score_predictions(decisions, truth)
            records.append(
                dict(
                    dataset=name,
                    method=method.value,
                    hyperparameter=hyper,
                    level=level,
                    trial=trial,
                    IC=float(ic.mean()),
                    CP=float(cp.mean()),
                )
            )
        logger.debug(f"level {level}, trial {trial} scored")
    rows = pd.DataFrame.from_records(
        records,
        columns=["dataset", "method", "hyperparameter", "level", "trial", "IC", "CP"],
    )
    summary = _summarize(rows, ["method", "hyperparameter", "level"], ["IC", "CP"])
    metadata: Dict[str, object] = dict(
        experiment="dataset",
        dataset=name,
        protocol=cfg.protocol.value,
        seed=cfg.seed,
        n=data.n,
        m=data.m,
        d=data.d,
        confidence_interval=CI_NOTE,
    )
    if cfg.protocol is Protocol.corruption:
        metadata.update(
            corruption=cfg.corruption.value,
            per_column=cfg.per_column,
            cv=f"{cfg.cv_repeats}x{cfg.cv_folds}",
        )
    logger.info(f"dataset experiment on {name}: {len(rows)} rows")
    return ExperimentResult(rows, summary, metadata=metadata)
