"""Checkers for structural principles of extension semantics.

Each checker evaluates one quantified statement on concrete frameworks for
an arbitrary semantics, passed in as a callable from framework to a
collection of extensions. That keeps the checkers reusable: the ranking
semantics and the classical ones run through the same code paths, so the
classical semantics double as positive and negative controls.
"""

from __future__ import annotations

from typing import Callable, Collection, Iterable, Mapping

from .framework import ArgumentationFramework, ArgumentSet

Semantics = Callable[[ArgumentationFramework], Collection[ArgumentSet]]


def _extensions(sem: Semantics, framework: ArgumentationFramework) -> set[ArgumentSet]:
    return {frozenset(e) for e in sem(framework)}


def check_isomorphy(
    sem: Semantics, framework: ArgumentationFramework, mapping: Mapping[str, str]
) -> bool:
    """Renaming the framework renames the extensions and nothing else."""
    renamed = framework.apply_isomorphism(mapping)
    image = {frozenset(mapping[a] for a in e) for e in _extensions(sem, framework)}
    return _extensions(sem, renamed) == image


def check_conflict_freedom(sem: Semantics, framework: ArgumentationFramework) -> bool:
    return all(
        framework.is_conflict_free(e) for e in _extensions(sem, framework)
    )


def check_cf_maximality(
    sem: Semantics,
    framework: ArgumentationFramework,
    universe: ArgumentSet | None = None,
) -> bool:
    """Every extension is a maximal conflict-free subset of the universe.

    The default universe is the non-self-attacking arguments; passing the
    full argument set gives the same verdict, since no conflict-free set
    can contain a self-attacker anyway.
    """
    if universe is None:
        universe = framework.non_self_attacking()
    for e in _extensions(sem, framework):
        if not framework.is_conflict_free(e):
            return False
        for name in universe - e:
            if framework.is_conflict_free(e | {name}):
                return False
    return True


def check_inclusion_maximality(
    sem: Semantics, framework: ArgumentationFramework
) -> bool:
    """No extension strictly contains another."""
    exts = _extensions(sem, framework)
    return not any(a < b for a in exts for b in exts)


def check_reinstatement(sem: Semantics, framework: ArgumentationFramework) -> bool:
    """Arguments whose attackers are all counterattacked by an extension
    belong to it."""
    for e in _extensions(sem, framework):
        image = framework.attack_image(e)
        for name in framework.arguments:
            attackers = framework.set_of(framework._attackers[framework.index[name]])
            if attackers <= image and name not in e:
                return False
    return True


def compose(
    first: ArgumentationFramework,
    second: ArgumentationFramework,
    bridge: Iterable[tuple[str, str]],
) -> ArgumentationFramework:
    """Disjoint union with attacks from the first part into the second."""
    if set(first.arguments) & set(second.arguments):
        raise ValueError("component argument sets must be disjoint")
    bridge = list(bridge)
    for a, b in bridge:
        if a not in first.index or b not in second.index:
            raise ValueError("bridge attacks must run from the first part to the second")
    return ArgumentationFramework(
        first.arguments + second.arguments,
        list(first.attacks) + bridge + list(second.attacks),
    )


def check_directionality(
    sem: Semantics,
    first: ArgumentationFramework,
    second: ArgumentationFramework,
    bridge: Iterable[tuple[str, str]],
) -> bool:
    """Extensions of an unattacked part equal the projections of the
    composite's extensions onto it."""
    composite = compose(first, second, bridge)
    scope = frozenset(first.arguments)
    projected = {e & scope for e in _extensions(sem, composite)}
    return _extensions(sem, first) == projected


def _skeptical(exts: set[ArgumentSet], framework: ArgumentationFramework) -> ArgumentSet:
    # Intersection over no extensions defaults to everything.
    if not exts:
        return frozenset(framework.arguments)
    out = frozenset(framework.arguments)
    for e in exts:
        out &= e
    return out


def _rejected(exts: set[ArgumentSet], framework: ArgumentationFramework) -> list[str]:
    accepted = frozenset().union(*exts) if exts else frozenset()
    return [a for a in framework.arguments if a not in accepted]


def check_rej_cut(sem: Semantics, framework: ArgumentationFramework) -> bool:
    """Dropping a fully rejected argument must not add skeptical
    conclusions."""
    exts = _extensions(sem, framework)
    skeptical = _skeptical(exts, framework)
    for name in _rejected(exts, framework):
        reduced = framework.restrict(frozenset(framework.arguments) - {name})
        if not _skeptical(_extensions(sem, reduced), reduced) <= skeptical:
            return False
    return True


def check_rej_cm(sem: Semantics, framework: ArgumentationFramework) -> bool:
    """Dropping a fully rejected argument must not erase skeptical
    conclusions."""
    exts = _extensions(sem, framework)
    skeptical = _skeptical(exts, framework)
    for name in _rejected(exts, framework):
        reduced = framework.restrict(frozenset(framework.arguments) - {name})
        if not skeptical <= _skeptical(_extensions(sem, reduced), reduced):
            return False
    return True
