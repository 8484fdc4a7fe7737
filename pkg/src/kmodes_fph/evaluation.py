"""Clustering accuracy against ground-truth classes.

Each cluster is credited with the count of its most frequent class; the
accuracy is the sum of those counts over n. Clusters are mapped to classes
independently, so two clusters may share a dominant class.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EvaluationError


@dataclass(frozen=True)
class ClusterPurity:
    size: int
    dominant_class: int | None
    dominant_count: int


@dataclass(frozen=True)
class AccuracyReport:
    accuracy: float
    correct: int
    n: int
    per_cluster: tuple[ClusterPurity, ...]

    def as_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "correct": self.correct,
            "n": self.n,
            "per_cluster": [
                {"size": c.size, "dominant_class": c.dominant_class, "dominant_count": c.dominant_count}
                for c in self.per_cluster
            ],
        }


def contingency(assignment, labels, k: int, n_classes: int | None = None) -> np.ndarray:
    """k x classes table of co-occurrence counts."""
    assignment = np.asarray(assignment, dtype=np.int64)
    labels = np.asarray(labels, dtype=np.int64)
    if n_classes is None:
        n_classes = int(labels.max()) + 1 if labels.size else 0
    table = np.zeros((k, n_classes), dtype=np.int64)
    np.add.at(table, (assignment, labels), 1)
    return table


def clustering_accuracy(assignment, labels, k: int, n_classes: int | None = None) -> AccuracyReport:
    if labels is None:
        raise EvaluationError("dataset has no class labels")
    assignment = np.asarray(assignment)
    labels = np.asarray(labels)
    if labels.shape != assignment.shape or assignment.ndim != 1:
        raise EvaluationError(
            f"labels shape {labels.shape} does not match assignment shape {assignment.shape}"
        )
    if assignment.size == 0:
        raise EvaluationError("nothing to evaluate")
    if assignment.min() < 0 or assignment.max() >= k:
        raise EvaluationError(f"assignment contains cluster indices outside [0, {k})")
    table = contingency(assignment, labels, k, n_classes)
    clusters = []
    for row in table:
        size = int(row.sum())
        if size == 0:
            clusters.append(ClusterPurity(0, None, 0))
        else:
            top = int(np.argmax(row))
            clusters.append(ClusterPurity(size, top, int(row[top])))
    correct = sum(c.dominant_count for c in clusters)
    n = int(assignment.size)
    return AccuracyReport(correct / n, correct, n, tuple(clusters))
