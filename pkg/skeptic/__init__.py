"""skeptic

Skeptical multi-label prediction under sets of probability distributions

The library computes set-valued predictions for multi-label problems when the
uncertainty about the labels is described by a credal set rather than a single
distribution.  Under Hamming loss it finds the exact set of maximal label
vectors on imprecise probabilistic binary trees, gives closed forms for binary
relevance models, and compares both against rejection and partial abstention
baselines driven by a naive credal classifier.  The :mod:`~.harness` and the
``skeptic`` command line reproduce the simulation, timing and dataset studies
at desk scale.

"""
from ._version import __version__
import skeptic.logging

__all__ = [
    "_version",
    "util",
    "config",
    "signals",
    "logging",
    "core",
    "tree",
    "decision",
    "relevance",
    "dataset",
    "ncc",
    "baselines",
    "evaluation",
    "models",
    "golden",
    "harness",
    "cli",
]
