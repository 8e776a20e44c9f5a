"""Classical Dung semantics, used as reference points for the ranking solver.

Everything here enumerates conflict-free candidates and filters; that is
entirely adequate at desk scale (around twenty arguments) and keeps the
implementations close to the definitions.
"""

from __future__ import annotations

from enum import Enum

from .framework import ArgumentationFramework, ArgumentSet, canonical_extensions


class Semantics(Enum):
    ADMISSIBLE = "admissible"
    GROUNDED = "grounded"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    STABLE = "stable"
    STAGE = "stage"
    SEMI_STABLE = "semi-stable"


def is_admissible(framework: ArgumentationFramework, subset: ArgumentSet) -> bool:
    """Conflict-free, and every attacker of a member is attacked back."""
    if not framework.is_conflict_free(subset):
        return False
    image = framework.attack_image(subset)
    for name in subset:
        attackers = framework.set_of(framework._attackers[framework.index[name]])
        if not attackers <= image:
            return False
    return True


def _defended(framework: ArgumentationFramework, subset: ArgumentSet) -> ArgumentSet:
    """Characteristic function: arguments whose attackers are all attacked."""
    image = framework.attack_image(subset)
    out = []
    for name in framework.arguments:
        attackers = framework.set_of(framework._attackers[framework.index[name]])
        if attackers <= image:
            out.append(name)
    return frozenset(out)


def grounded(framework: ArgumentationFramework) -> ArgumentSet:
    """Least fixed point of the characteristic function, starting from the
    empty set."""
    current: ArgumentSet = frozenset()
    while True:
        nxt = _defended(framework, current)
        if nxt == current:
            return current
        current = nxt


def admissible_sets(framework: ArgumentationFramework) -> list[ArgumentSet]:
    return canonical_extensions(
        s for s in framework.enumerate_conflict_free() if is_admissible(framework, s)
    )


def _maximal(sets: list[ArgumentSet]) -> list[ArgumentSet]:
    out = [s for s in sets if not any(s < t for t in sets)]
    return canonical_extensions(out)


def preferred(framework: ArgumentationFramework) -> list[ArgumentSet]:
    """Inclusion-maximal admissible sets."""
    return _maximal(admissible_sets(framework))


def complete(framework: ArgumentationFramework) -> list[ArgumentSet]:
    """Admissible sets containing everything they defend."""
    return canonical_extensions(
        s
        for s in framework.enumerate_conflict_free()
        if is_admissible(framework, s) and _defended(framework, s) <= s
    )


def stable(framework: ArgumentationFramework) -> list[ArgumentSet]:
    """Conflict-free sets attacking exactly the rest of the framework."""
    everything = frozenset(framework.arguments)
    return canonical_extensions(
        s
        for s in framework.enumerate_conflict_free()
        if framework.attack_image(s) == everything - s
    )


def _range_maximal(
    framework: ArgumentationFramework, candidates: list[ArgumentSet]
) -> list[ArgumentSet]:
    ranges = {s: s | framework.attack_image(s) for s in candidates}
    out = [
        s
        for s in candidates
        if not any(ranges[s] < ranges[t] for t in candidates)
    ]
    return canonical_extensions(out)


def stage(framework: ArgumentationFramework) -> list[ArgumentSet]:
    """Conflict-free sets with inclusion-maximal range."""
    return _range_maximal(framework, list(framework.enumerate_conflict_free()))


def semi_stable(framework: ArgumentationFramework) -> list[ArgumentSet]:
    """Admissible sets with inclusion-maximal range."""
    return _range_maximal(framework, admissible_sets(framework))
