"""Direct computation of ranking extensions through extension weights.

The weight of a conflict-free candidate counts what accepting it costs:
one unit per non-self-attacking argument left out, plus one unit per
one-sided attack launched from a left-out argument at a non-self-attacking
target. Conflicting candidates (and ones reaching outside the
non-self-attacking arguments) weigh TOP. The extensions are the candidates
of minimal weight, which matches the rank of their partition proposition
under the canonical generic ranking model; that identity is this module's
defining oracle and is enforced in the tests.

A note on the second summand: it counts attack edges, not attacking
arguments. An argument outside the candidate that launches two one-sided
attacks contributes two units. Counting arguments instead would not
reproduce the canonical ranks (the construction spends one shift per
one-sided attack, so each edge costs a unit).
"""

from __future__ import annotations

from dataclasses import dataclass

from .framework import ArgumentationFramework, ArgumentSet, canonical_extensions
from .ranking import TOP, Rank


@dataclass(frozen=True)
class WeightReport:
    """All finite-weight candidates of a framework plus the minima."""

    weights: dict[ArgumentSet, int]
    minima: tuple[ArgumentSet, ...]
    minimum: int


def _one_sided_internal(framework: ArgumentationFramework) -> list[tuple[str, str]]:
    """One-sided attack edges whose endpoints both avoid self-attack."""
    positive = framework.non_self_attacking()
    return [
        (a, b)
        for a, b in framework.one_sided_attacks
        if a in positive and b in positive
    ]


def extension_weight(framework: ArgumentationFramework, candidate: ArgumentSet) -> Rank:
    """Weight of a candidate: TOP unless it is conflict-free and avoids
    self-attackers; otherwise the number of left-out non-self-attacking
    arguments plus the one-sided attack edges they launch at
    non-self-attacking targets."""
    framework._require_subset(candidate)
    positive = framework.non_self_attacking()
    if not candidate <= positive:
        return TOP
    if not framework.is_conflict_free(candidate):
        return TOP
    left_out = positive - candidate
    edges = sum(1 for a, _ in _one_sided_internal(framework) if a in left_out)
    return len(left_out) + edges


def weight_table(framework: ArgumentationFramework) -> WeightReport:
    """Weights of every conflict-free candidate inside the
    non-self-attacking arguments, plus the minima, in deterministic order."""
    positive = framework.non_self_attacking()
    weights: dict[ArgumentSet, int] = {}
    for candidate in framework.enumerate_conflict_free(positive):
        weights[candidate] = extension_weight(framework, candidate)
    minimum = min(weights.values())
    minima = canonical_extensions(e for e, w in weights.items() if w == minimum)
    ordered = {
        e: weights[e]
        for e in sorted(weights, key=lambda s: (weights[s], len(s), sorted(s)))
    }
    return WeightReport(ordered, tuple(minima), minimum)


def jz_extensions(framework: ArgumentationFramework) -> list[ArgumentSet]:
    """Candidates of minimal weight.

    Enumeration runs over conflict-free subsets of the non-self-attacking
    arguments; a candidate whose left-out count alone already exceeds the
    best weight seen is skipped without computing its edge count.
    """
    positive = framework.non_self_attacking()
    best: Rank = TOP
    found: list[ArgumentSet] = []
    for candidate in framework.enumerate_conflict_free(positive):
        lower_bound = len(positive) - len(candidate)
        if lower_bound > best:
            continue
        weight = extension_weight(framework, candidate)
        if weight < best:
            best = weight
            found = [candidate]
        elif weight == best:
            found.append(candidate)
    return canonical_extensions(found)
