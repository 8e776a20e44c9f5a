"""Generic instantiation of a framework by independent atom pairs.

Each argument ``a`` gets two fresh atoms: X_a (its premise) and Y_a, with
X_a & Y_a as its claim. An attack between two arguments makes their joint
claims impossible; a one-sided attack additionally keeps the attacker's
claim normal in the joint premise context. Those constraints form a default
base whose unique justified construction is available in closed form, and
evaluating it over a compact world space yields the ranking extensions.

The compact space stores one of three states per argument instead of the
two underlying atoms: X false, claim (X and Y), or premise-only (X and not
Y). Collapsing the Y value when X is false never changes a rank, because no
shift region can tell the two apart and ranks are minima; the full
assignment space is kept around as an independent cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .framework import ArgumentationFramework, ArgumentSet, canonical_extensions
from .ranking import (
    TOP,
    BooleanSpace,
    Conditional,
    Proposition,
    Rank,
    RankingMeasure,
    WorldSpace,
    construct,
)

_MAX_GENERIC_ARGS = 12
_MAX_FULL_ARGS = 9


class GenericState(IntEnum):
    """Per-argument state in the compact world space."""

    X_FALSE = 0
    XY = 1
    X_NOT_Y = 2


class GenericSpace(WorldSpace):
    """Compact world space: one three-valued state per argument."""

    def __init__(self, framework: ArgumentationFramework):
        n = len(framework.arguments)
        if n > _MAX_GENERIC_ARGS:
            raise ValueError(
                f"compact world space grows as 3^n; {n} arguments is too many "
                "(use the direct extension-weight solver instead)"
            )
        self.framework = framework
        codes = np.arange(3**n, dtype=np.int64)
        if n:
            cols = [(codes // 3 ** (n - 1 - i)) % 3 for i in range(n)]
            self.states = np.stack(cols, axis=1).astype(np.int8)
        else:
            self.states = np.zeros((1, 0), dtype=np.int8)
        super().__init__(tuple(map(tuple, self.states.tolist())))

    def _column(self, name: str) -> np.ndarray:
        return self.states[:, self.framework.index[name]]

    def phi(self, name: str) -> Proposition:
        """Premise X_a: the argument's state is not X_FALSE."""
        return self.proposition(map(int, np.flatnonzero(self._column(name) >= 1)))

    def psi(self, name: str) -> Proposition:
        """Claim X_a & Y_a: the argument's state is XY."""
        return self.proposition(map(int, np.flatnonzero(self._column(name) == 1)))

    @cached_property
    def instantiation(self) -> "ShallowInstantiation":
        triples = {
            a: (self.phi(a), self.phi(a), self.psi(a))
            for a in self.framework.arguments
        }
        return ShallowInstantiation(self, self.framework.arguments, triples, generic=True)

    @cached_property
    def jz_rank_array(self) -> np.ndarray:
        return _closed_form_rank_array(self.framework, self.states)

    def jz_measure(self) -> RankingMeasure:
        ranks = [int(v) if np.isfinite(v) else TOP for v in self.jz_rank_array]
        return RankingMeasure(self, ranks)


class FullGenericSpace(BooleanSpace):
    """Full assignment space over the X_a, Y_a atoms of a framework.

    Exponentially bigger than the compact space (4^n worlds); exists to
    validate the compaction and to drive the construction machinery over a
    plain boolean space.
    """

    def __init__(self, framework: ArgumentationFramework):
        if len(framework.arguments) > _MAX_FULL_ARGS:
            raise ValueError(
                f"assignment space grows as 4^n; {len(framework.arguments)} "
                "arguments is too many"
            )
        self.framework = framework
        atoms = []
        for a in framework.arguments:
            atoms.append(f"X_{a}")
            atoms.append(f"Y_{a}")
        super().__init__(atoms)

    def phi(self, name: str) -> Proposition:
        return self.atom(f"X_{name}")

    def psi(self, name: str) -> Proposition:
        return self.atom(f"X_{name}") & self.atom(f"Y_{name}")

    @cached_property
    def instantiation(self) -> "ShallowInstantiation":
        triples = {
            a: (self.phi(a), self.phi(a), self.psi(a))
            for a in self.framework.arguments
        }
        return ShallowInstantiation(self, self.framework.arguments, triples, generic=True)


class ShallowInstantiation:
    """Per-argument proposition triples (premise, strict content, claim).

    The claim must entail the strict content and the strict content the
    premise; that is checked extensionally on construction.
    """

    def __init__(
        self,
        space: WorldSpace,
        arguments: Sequence[str],
        triples: Mapping[str, tuple[Proposition, Proposition, Proposition]],
        generic: bool = False,
    ):
        self.space = space
        self.arguments = tuple(arguments)
        self.triples = dict(triples)
        self.is_generic = generic
        for a in self.arguments:
            phi, theta, psi = self.triples[a]
            if not (psi.entails(theta) and theta.entails(phi)):
                raise ValueError(f"triple for {a!r} is not nested (psi <= theta <= phi)")

    def phi(self, name: str) -> Proposition:
        return self.triples[name][0]

    def theta(self, name: str) -> Proposition:
        return self.triples[name][1]

    def psi(self, name: str) -> Proposition:
        return self.triples[name][2]


def theta_proposition(
    instantiation: ShallowInstantiation, subset: Iterable[str]
) -> Proposition:
    """Joint strict content of a set: conjunction of premise and strict
    content over its members (the empty set gives the tautology)."""
    prop = instantiation.space.top
    for a in subset:
        prop = prop & instantiation.phi(a) & instantiation.theta(a)
    return prop


def psi_proposition(
    instantiation: ShallowInstantiation,
    subset: Iterable[str],
    extension: Iterable[str],
) -> Proposition:
    """Worlds realizing the strict content of ``subset`` and exactly the
    claims of ``extension`` (claims outside it are false)."""
    s, e = frozenset(subset), frozenset(extension)
    if not e <= s:
        raise ValueError("extension candidate must be a subset of its context")
    prop = theta_proposition(instantiation, s)
    for a in instantiation.arguments:
        if a in e:
            prop = prop & instantiation.psi(a)
        else:
            prop = prop & ~instantiation.psi(a)
    return prop


# -- the induced default base and its closed-form model ----------------------


def generic_delta(
    framework: ArgumentationFramework,
    instantiation: ShallowInstantiation | None = None,
    include_strict: bool = False,
) -> list[Conditional]:
    """Default base induced by a framework under a generic instantiation.

    Three families, in deterministic order: one default per argument
    (premise normally yields the claim), one conflict default per attacking
    pair (joint claims impossible), and one default per one-sided attack
    (the attacker's claim stays normal in the joint premise context).

    The per-argument strict conditionals are tautologies here (strict
    content equals premise) and are omitted unless ``include_strict`` is
    set, in which case each follows its argument's default.
    """
    if instantiation is None:
        instantiation = GenericSpace(framework).instantiation
    base: list[Conditional] = []
    for a in framework.arguments:
        base.append(Conditional.default(instantiation.phi(a), instantiation.psi(a)))
        if include_strict:
            base.append(Conditional.strict(instantiation.phi(a), instantiation.theta(a)))
    bottom = instantiation.space.bottom
    for a, b in framework.conflict_pairs:
        base.append(
            Conditional.default(instantiation.psi(a) & instantiation.psi(b), bottom)
        )
    for a, b in framework.one_sided_attacks:
        base.append(
            Conditional.default(
                instantiation.phi(a) & instantiation.phi(b), instantiation.psi(a)
            )
        )
    return base


def closed_form_shifts(
    framework: ArgumentationFramework, include_strict: bool = False
) -> list[Rank]:
    """Shift vector aligned with ``generic_delta`` that builds the canonical
    model: threshold shifts everywhere, TOP where impossibility is forced
    (self-attackers' claims and joint claims of attacking pairs)."""
    shifts: list[Rank] = []
    for a in framework.arguments:
        shifts.append(TOP if (a, a) in framework.attacks else 1)
        if include_strict:
            shifts.append(0)
    shifts.extend(TOP for _ in framework.conflict_pairs)
    shifts.extend(1 for _ in framework.one_sided_attacks)
    return shifts


def jz_world_rank(
    framework: ArgumentationFramework, world: Sequence[int]
) -> Rank:
    """Closed-form rank of a single compact world.

    One unit per non-self-attacking argument stuck at premise-only, TOP for
    a self-attacker there; one unit per one-sided attack whose source is
    premise-only while the target's premise holds; TOP when both members of
    an attacking pair realize their claims.
    """
    if len(world) != len(framework.arguments):
        raise ValueError("one state per argument required")
    index = framework.index
    total: Rank = 0
    for i, name in enumerate(framework.arguments):
        if world[i] == GenericState.X_NOT_Y:
            total += TOP if (name, name) in framework.attacks else 1
    for a, b in framework.one_sided_attacks:
        if world[index[a]] == GenericState.X_NOT_Y and world[index[b]] != GenericState.X_FALSE:
            total += 1
    for a, b in framework.conflict_pairs:
        if world[index[a]] == GenericState.XY and world[index[b]] == GenericState.XY:
            total += TOP
    return total


def _closed_form_rank_array(
    framework: ArgumentationFramework, states: np.ndarray
) -> np.ndarray:
    index = framework.index
    ranks = np.zeros(states.shape[0], dtype=np.float64)
    for i, name in enumerate(framework.arguments):
        premise_only = states[:, i] == 2
        if (name, name) in framework.attacks:
            ranks[premise_only] = np.inf
        else:
            ranks[premise_only] += 1
    for a, b in framework.one_sided_attacks:
        hit = (states[:, index[a]] == 2) & (states[:, index[b]] >= 1)
        ranks[hit] += 1
    for a, b in framework.conflict_pairs:
        if a == b:
            hit = states[:, index[a]] == 1
        else:
            hit = (states[:, index[a]] == 1) & (states[:, index[b]] == 1)
        ranks[hit] = np.inf
    return ranks


@dataclass(frozen=True)
class RankingInstantiationModel:
    """A ranking measure paired with an instantiation of the arguments."""

    measure: RankingMeasure
    instantiation: ShallowInstantiation

    def __post_init__(self):
        if self.measure.space is not self.instantiation.space:
            raise ValueError("measure and instantiation use different spaces")

    def rebuts(self, a: str, b: str) -> bool:
        """Joint claims impossible."""
        return self.measure.rank_of(
            self.instantiation.psi(a) & self.instantiation.psi(b)
        ) == TOP

    def undermines(self, a: str, b: str) -> bool:
        """The first claim is impossible alongside the second premise."""
        return self.measure.rank_of(
            self.instantiation.psi(a) & self.instantiation.phi(b)
        ) == TOP


def jz_model(framework: ArgumentationFramework) -> RankingInstantiationModel:
    """The canonical ranking model over the compact generic space."""
    space = GenericSpace(framework)
    return RankingInstantiationModel(space.jz_measure(), space.instantiation)


def instantiation_base(instantiation: ShallowInstantiation) -> list[Conditional]:
    """Per-argument constraints every instantiation model must satisfy."""
    base: list[Conditional] = []
    for a in instantiation.arguments:
        base.append(Conditional.default(instantiation.phi(a), instantiation.psi(a)))
        base.append(Conditional.strict(instantiation.phi(a), instantiation.theta(a)))
    return base


def derive_attacks(
    arguments: Iterable[str],
    measure: RankingMeasure,
    instantiation: ShallowInstantiation,
) -> frozenset[tuple[str, str]]:
    """Attack relation supported by a measure, over all ordered pairs.

    ``a`` attacks ``b`` when their joint claims are impossible and the
    attacker's claim stays normal in the joint premise context, or at least
    the attacked one's does not. Pairs touching an impossible premise
    qualify vacuously, self-pairs included.
    """
    args = list(arguments)
    if not measure.satisfies_base(instantiation_base(instantiation)):
        raise ValueError("measure does not satisfy the instantiation constraints")
    bottom = instantiation.space.bottom
    normal: dict[tuple[str, str], bool] = {}
    for a in args:
        for b in args:
            joint = instantiation.phi(a) & instantiation.phi(b)
            normal[a, b] = measure.satisfies(
                Conditional.default(joint, instantiation.psi(a))
            )
    attacks = set()
    for a in args:
        for b in args:
            conflict = measure.satisfies(
                Conditional.default(instantiation.psi(a) & instantiation.psi(b), bottom)
            )
            if conflict and (normal[a, b] or not normal[b, a]):
                attacks.add((a, b))
    return frozenset(attacks)


def _rank_array(measure: RankingMeasure) -> np.ndarray:
    values = []
    for r in measure.ranks:
        if r == TOP:
            values.append(np.inf)
        elif isinstance(r, int) or (isinstance(r, float) and r.is_integer()):
            values.append(float(r))
        else:
            raise ValueError("generic-space measures use integer or TOP ranks")
    return np.array(values, dtype=np.float64)


def _derived_attacks_fast(
    space: GenericSpace, ranks: np.ndarray, names: Sequence[str]
) -> frozenset[tuple[str, str]]:
    """Vectorized twin of ``derive_attacks`` for generic compact spaces."""
    cols = {a: space._column(a) for a in names}

    def masked_min(mask: np.ndarray) -> float:
        return float(ranks[mask].min()) if mask.any() else np.inf

    normal = {}
    for a in names:
        claim_a = cols[a] == 1
        premise_only_a = cols[a] == 2
        for b in names:
            premise_b = cols[b] >= 1
            holds = masked_min(claim_a & premise_b)
            fails = masked_min(premise_only_a & premise_b)
            normal[a, b] = holds + 1 <= fails
    attacks = set()
    for a in names:
        for b in names:
            if masked_min((cols[a] == 1) & (cols[b] == 1)) != np.inf:
                continue
            if normal[a, b] or not normal[b, a]:
                attacks.add((a, b))
    return frozenset(attacks)


def is_ranking_instantiation_model(
    framework: ArgumentationFramework,
    measure: RankingMeasure,
    instantiation: ShallowInstantiation,
) -> bool:
    """Does (measure, instantiation) interpret the framework faithfully?

    The measure must satisfy the instantiation constraints, and the attack
    relation it supports must coincide with the framework's attacks over
    the non-self-attacking arguments.
    """
    if not measure.is_normalized:
        return False
    if not measure.satisfies_base(instantiation_base(instantiation)):
        return False
    positive = framework.non_self_attacking()
    names = [a for a in framework.arguments if a in positive]
    if instantiation.is_generic and isinstance(instantiation.space, GenericSpace):
        derived = _derived_attacks_fast(
            instantiation.space, _rank_array(measure), names
        )
    else:
        derived = derive_attacks(names, measure, instantiation)
    actual = frozenset(
        (a, b) for a, b in framework.attacks if a in positive and b in positive
    )
    return derived == actual


# -- semantic extension computation ------------------------------------------


def _theta_rank(space: GenericSpace, subset: ArgumentSet, ranks: np.ndarray) -> Rank:
    idx = sorted(space.framework.index[a] for a in subset)
    mask = (
        (space.states[:, idx] >= 1).all(axis=1)
        if idx
        else np.ones(len(space), dtype=bool)
    )
    value = ranks[mask].min() if mask.any() else np.inf
    return int(value) if np.isfinite(value) else TOP


def _psi_rank_table(
    space: GenericSpace, subset: ArgumentSet, ranks: np.ndarray
) -> dict[ArgumentSet, Rank]:
    """Rank of the partition proposition for every candidate inside
    ``subset``, from a single pass over the worlds."""
    framework = space.framework
    idx = sorted(framework.index[a] for a in subset)
    outside = [i for i in range(len(framework.arguments)) if i not in set(idx)]
    claimed = space.states == 1
    valid = (
        (space.states[:, idx] >= 1).all(axis=1)
        if idx
        else np.ones(len(space), dtype=bool)
    )
    if outside:
        valid &= ~claimed[:, outside].any(axis=1)
    codes = np.zeros(len(space), dtype=np.int64)
    for pos, i in enumerate(idx):
        codes |= claimed[:, i].astype(np.int64) << pos
    table = np.full(2 ** len(idx), np.inf)
    np.minimum.at(table, codes[valid], ranks[valid])
    out: dict[ArgumentSet, Rank] = {}
    for code, value in enumerate(table):
        members = frozenset(
            framework.arguments[idx[pos]] for pos in range(len(idx)) if code >> pos & 1
        )
        out[members] = int(value) if np.isfinite(value) else TOP
    return out


def maximal_coherent_sets(
    framework: ArgumentationFramework,
    model: RankingInstantiationModel | None = None,
) -> list[ArgumentSet]:
    """Inclusion-maximal sets whose joint strict content is possible.

    Computed semantically from the measure, not read off the attack
    structure; under the canonical generic model this is exactly the set of
    non-self-attacking arguments.
    """
    if model is None:
        model = jz_model(framework)
    space = model.measure.space
    if not isinstance(space, GenericSpace):
        raise ValueError("semantic computation needs the compact generic space")
    ranks = _rank_array(model.measure)
    premise_true = (space.states >= 1).astype(np.int64)
    weights = 1 << np.arange(premise_true.shape[1], dtype=np.int64)
    masks = premise_true @ weights if premise_true.shape[1] else np.zeros(len(space), np.int64)
    finite = sorted(set(masks[np.isfinite(ranks)].tolist()))
    maximal = [
        m for m in finite if not any(m != other and m & other == m for other in finite)
    ]
    return canonical_extensions(framework.set_of(m) for m in maximal)


def ranking_extensions_semantic(
    framework: ArgumentationFramework,
    model: RankingInstantiationModel | None = None,
) -> list[ArgumentSet]:
    """Extensions by plausibility maximization inside every maximal
    coherent context: candidates whose partition proposition is exactly as
    plausible as the context's strict content."""
    if model is None:
        model = jz_model(framework)
    space = model.measure.space
    if not isinstance(space, GenericSpace) or not model.instantiation.is_generic:
        raise ValueError("semantic solving is supported for generic instantiations")
    ranks = _rank_array(model.measure)
    found: set[ArgumentSet] = set()
    for context in maximal_coherent_sets(framework, model):
        baseline = _theta_rank(space, context, ranks)
        if baseline == TOP:
            continue
        for candidate, value in _psi_rank_table(space, context, ranks).items():
            if value == baseline:
                found.add(candidate)
    return canonical_extensions(found)


class FullSpaceOracle:
    """Rank queries on the full 4^n assignment space.

    The canonical measure is built once by explicit construction over the
    induced default base; rank queries then cross-check what the compact
    space reports.
    """

    def __init__(self, framework: ArgumentationFramework):
        self.framework = framework
        self.space = FullGenericSpace(framework)
        self.instantiation = self.space.instantiation
        base = generic_delta(framework, self.instantiation)
        self.measure = construct(base, closed_form_shifts(framework), self.space)

    def theta_rank(self, subset: Iterable[str]) -> Rank:
        return self.measure.rank_of(theta_proposition(self.instantiation, subset))

    def psi_rank(self, subset: Iterable[str], extension: Iterable[str]) -> Rank:
        return self.measure.rank_of(
            psi_proposition(self.instantiation, subset, extension)
        )
