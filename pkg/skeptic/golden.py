"""
Worked examples
---------------

Small hand-checkable models with known answers, shipped as JSON fixtures
and re-checked by ``skeptic examples``:

  * a precise two-label chain whose second label has marginal 0.45, and
    where ``10`` beats ``01`` under zero-one loss by an expected 0.05;
  * an imprecise two-label tree whose exact maximal set under Hamming loss,
    ``{00, 10, 11}``, is found with eight dominance checks, although its
    marginal intervals both contain 1/2;
  * an imprecise tree on which one partial Hamming loss has lower
    expectation 0.325 (0.33 to two decimals), too little to dominate;
  * four explicit distributions whose E-admissible set under zero-one loss,
    ``{00, 10, 11}``, is strictly inside their maximal set;
  * independent marginals ``[0.6, 1]`` and ``[0, 1]``, for which interval
    dominance keeps every vector while maximality keeps ``1*``.

Each check returns :class:`CheckResult` records; :func:`run_all` collects
them all.

"""
import json
import logging
from pathlib import Path
from typing import Callable, List, Sequence

from pydantic import BaseModel

from skeptic.core import Assignment, BinaryVector, PredictionSet
from skeptic.decision import (
    CheckCounter,
    FiniteCredalSet,
    LossMatrix,
    dominance_check,
    eadmissible_set_finite,
    lower_difference,
    maximal_set_alg1,
    maximal_set_naive,
    outer_partial_vector,
    precise_bayes_hamming,
)
from skeptic.relevance import (
    MarginalIntervalModel,
    br_skeptical_prediction,
    expectation_bounds,
    gamma_minimax,
    gamma_minimin,
    interval_dominance_set,
)
from skeptic.tree import CostVector, ImpreciseBinaryTree, extreme_point_oracle

logger = logging.getLogger(__name__)

FIXTURES = Path(__file__).parent / "fixtures"
EXACT = 1e-9
ROUNDED = 1e-3


class CheckResult(BaseModel):
    """Outcome of one comparison against a known answer"""

    example: str
    name: str
    expected: str
    actual: str
    passed: bool

    class Config:
        frozen = True

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.example}: {self.name}"
        if not self.passed:
            line += f" (expected {self.expected}, got {self.actual})"
        return line


def fixture(name: str) -> Path:
    return FIXTURES / name


def _close(example: str, name: str, expected: float, actual: float, tol: float):
    return CheckResult(
        example=example,
        name=name,
        expected=f"{expected} +/- {tol:g}",
        actual=f"{actual:.6g}",
        passed=bool(abs(actual - expected) <= tol),
    )


def _equal(example: str, name: str, expected, actual):
    return CheckResult(
        example=example,
        name=name,
        expected=str(expected),
        actual=str(actual),
        passed=expected == actual,
    )


def precise_chain() -> List[CheckResult]:
    example = "precise chain"
    tree = ImpreciseBinaryTree.load(fixture("precise_chain_tree.json"))
    marginal = sum(
        tree.joint_probability(BinaryVector.from_string(s)) for s in ("01", "11")
    )
    zero_one = LossMatrix.zero_one(2)
    gap = lower_difference(
        tree, zero_one, BinaryVector.from_string("01"), BinaryVector.from_string("10")
    )
    return [
        _close(example, "P(Y2 = 1) from path products", 0.45, marginal, EXACT),
        _close(
            example, "P(Y2 = 1) from the tree", 0.45, tree.marginal_interval(2).lower, EXACT
        ),
        _close(example, "expected zero-one gap of 01 over 10", 0.05, gap, EXACT),
        _equal(
            example,
            "Hamming Bayes prediction",
            "10",
            str(precise_bayes_hamming([iv.lower for iv in tree.marginal_intervals()])),
        ),
    ]


DOMINANCE_EXPECTATIONS = (0.444, 0.456, 0.498, 0.354, 0.942, 0.846, 1.001, 0.810)


def dominance_tree() -> List[CheckResult]:
    example = "dominance tree"
    tree = ImpreciseBinaryTree.load(fixture("dominance_tree.json"))
    assignments = [
        Assignment(indices=(1,), values=(0,)),
        Assignment(indices=(1,), values=(1,)),
        Assignment(indices=(2,), values=(0,)),
        Assignment(indices=(2,), values=(1,)),
        Assignment(indices=(1, 2), values=(0, 0)),
        Assignment(indices=(1, 2), values=(0, 1)),
        Assignment(indices=(1, 2), values=(1, 0)),
        Assignment(indices=(1, 2), values=(1, 1)),
    ]
    checks = []
    for a, expected in zip(assignments, DOMINANCE_EXPECTATIONS):
        cost = CostVector.partial_hamming(a.complement(), tree.m)
        checks.append(
            _close(
                example,
                f"lower partial loss against {a.values} on {a.indices}",
                expected,
                tree.lower_expectation(cost),
                ROUNDED,
            )
        )
    counter = CheckCounter()
    exact = maximal_set_alg1(tree, counter=counter)
    expected_set = PredictionSet.from_strings(["00", "10", "11"])
    checks += [
        _equal(
            example,
            "10 dominates 01",
            True,
            dominance_check(tree, Assignment(indices=(1, 2), values=(1, 0))),
        ),
        _equal(
            example,
            "1* does not dominate 0*",
            False,
            dominance_check(tree, Assignment(indices=(1,), values=(1,))),
        ),
        _equal(example, "dominance checks", 8, counter.checks),
        _equal(example, "maximal set", expected_set.strings(), exact.strings()),
        _equal(
            example,
            "pairwise maximal set",
            expected_set.strings(),
            maximal_set_naive(tree).strings(),
        ),
        _equal(
            example,
            "outer partial vector",
            "**",
            str(outer_partial_vector(tree.marginal_intervals())),
        ),
        _close(example, "upper P(Y1 = 1)", 0.556, tree.marginal_interval(1).upper, EXACT),
        _close(example, "lower P(Y2 = 1)", 0.354, tree.marginal_interval(2).lower, ROUNDED),
        _close(example, "upper P(Y2 = 1)", 0.502, tree.marginal_interval(2).upper, ROUNDED),
    ]
    return checks


def partial_loss_tree() -> List[CheckResult]:
    example = "partial loss tree"
    tree = ImpreciseBinaryTree.load(fixture("partial_loss_tree.json"))
    cost = CostVector(2, [0, 1, 1, 0])
    value = tree.lower_expectation(cost)
    return [
        _close(example, "lower expectation", 0.325, value, EXACT),
        _close(example, "lower expectation to two decimals", 0.33, value, 0.005 + EXACT),
        _close(
            example,
            "endpoint enumeration agrees",
            value,
            extreme_point_oracle(tree, cost),
            EXACT,
        ),
        _equal(
            example,
            "1* does not dominate 0*",
            False,
            dominance_check(tree, Assignment(indices=(1,), values=(1,))),
        ),
    ]


DIFFERENCE_TABLE = {
    "00": (None, -0.1, -0.3, -0.2),
    "01": (-0.2, None, -0.2, -0.4),
    "10": (-0.4, -0.3, None, -0.4),
    "11": (-0.2, -0.1, -0.1, None),
}


def finite_credal_set() -> List[CheckResult]:
    example = "finite credal set"
    credal = FiniteCredalSet.load(fixture("finite_credal_set.json"))
    zero_one = LossMatrix.zero_one(2)
    checks = []
    for ref, row in DIFFERENCE_TABLE.items():
        for bits, expected in enumerate(row):
            if expected is None:
                continue
            y = BinaryVector(m=2, bits=bits)
            checks.append(
                _close(
                    example,
                    f"lower difference of {y} against {ref}",
                    expected,
                    lower_difference(credal, zero_one, y, BinaryVector.from_string(ref)),
                    EXACT,
                )
            )
    checks += [
        _equal(
            example,
            "E-admissible set",
            ["00", "10", "11"],
            eadmissible_set_finite(credal, zero_one).strings(),
        ),
        _equal(
            example,
            "maximal set",
            ["00", "01", "10", "11"],
            maximal_set_naive(credal, zero_one).strings(),
        ),
    ]
    return checks


def independent_marginals() -> List[CheckResult]:
    example = "independent marginals"
    pairs = json.loads(fixture("marginal_intervals.json").read_text())
    model = MarginalIntervalModel.from_pairs(pairs)
    lower, upper = expectation_bounds(model)
    order = [3, 2, 1, 0]  # 11, 10, 01, 00
    checks = [
        _equal(
            example,
            "lower expected losses of 11, 10, 01, 00",
            [0.0, 0.0, 0.6, 0.6],
            [round(float(v), 9) for v in lower[order]],
        ),
        _equal(
            example,
            "upper expected losses of 11, 10, 01, 00",
            [1.4, 1.4, 2.0, 2.0],
            [round(float(v), 9) for v in upper[order]],
        ),
        _equal(
            example,
            "interval dominance",
            ["00", "01", "10", "11"],
            interval_dominance_set(model).strings(),
        ),
        _equal(example, "maximality", "1*", str(br_skeptical_prediction(model))),
        _equal(example, "gamma-minimax", "1*", str(gamma_minimax(model))),
        _equal(example, "gamma-minimin", "1*", str(gamma_minimin(model))),
        _equal(
            example,
            "maximal set through the equivalent tree",
            ["10", "11"],
            maximal_set_alg1(model.to_tree()).strings(),
        ),
    ]
    return checks


EXAMPLES: Sequence[Callable[[], List[CheckResult]]] = (
    precise_chain,
    dominance_tree,
    partial_loss_tree,
    finite_credal_set,
    independent_marginals,
)


def run_all() -> List[CheckResult]:
    results = []
    for example in EXAMPLES:
        results.extend(example())
    failed = [r for r in results if not r.passed]
    logger.debug(f"{len(results)} worked-example checks, {len(failed)} failed")
    return results
