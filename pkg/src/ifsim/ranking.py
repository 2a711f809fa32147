"""Descending ranking of labeled scores with tolerance-based tie groups."""

from __future__ import annotations

from typing import Sequence

#: Scores closer than this to the head of a tie group join that group.
EPS_RANK = 1e-9


def rank_scores(
    labels: Sequence[str], scores: Sequence[float], eps: float = EPS_RANK
) -> tuple[tuple[str, ...], tuple[tuple[str, ...], ...]]:
    """Sort ``labels`` by score, best first.

    Returns ``(ranking, ties)``. Ties are the groups of two or more labels
    whose scores lie within ``eps`` of the group's highest score; inside a
    group labels keep their input order.
    """
    order = sorted(range(len(labels)), key=lambda i: -scores[i])
    groups: list[list[int]] = []
    for i in order:
        if groups and scores[groups[-1][0]] - scores[i] <= eps:
            groups[-1].append(i)
        else:
            groups.append([i])
    ranking: list[str] = []
    ties: list[tuple[str, ...]] = []
    for group in groups:
        members = sorted(group)
        if len(members) > 1:
            ties.append(tuple(labels[i] for i in members))
        ranking.extend(labels[i] for i in members)
    return tuple(ranking), tuple(ties)
