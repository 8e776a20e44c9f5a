"""Ranking measures over finite world spaces.

A ranking measure assigns each world a degree of surprise: a nonnegative
number, or TOP for doxastic impossibility. The rank of a proposition is the
minimum over its worlds, so disjunction maps to min and the empty
proposition gets TOP. Strict conditionals demand that their violation is
impossible; default conditionals demand that the violation is strictly more
surprising than the compliance (threshold one).

Measures are built from the uniform measure by shifting violation regions
upward. A shift vector is justified when every strictly positive shift
lands its conditional exactly on the threshold; searching the integer shift
vectors for such models is what ``jj_search`` does, by brute force, for
small bases.

Finite ranks may be ints or fractions; TOP is ``math.inf``. All values used
by the framework solver are integers or TOP.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

TOP = math.inf

Rank = float | int  # finite number or TOP


class WorldSpace:
    """A finite, ordered collection of worlds.

    Worlds are opaque hashable values; propositions are sets of world
    indices, so every connective is a set operation and every classical law
    holds by construction.
    """

    def __init__(self, worlds: Iterable[object]):
        self.worlds = tuple(worlds)
        if not self.worlds:
            raise ValueError("world space must be nonempty")

    def __len__(self) -> int:
        return len(self.worlds)

    @cached_property
    def top(self) -> "Proposition":
        return Proposition(self, frozenset(range(len(self.worlds))))

    @cached_property
    def bottom(self) -> "Proposition":
        return Proposition(self, frozenset())

    def where(self, predicate: Callable[[object], bool]) -> "Proposition":
        return Proposition(
            self, frozenset(i for i, w in enumerate(self.worlds) if predicate(w))
        )

    def proposition(self, indices: Iterable[int]) -> "Proposition":
        return Proposition(self, frozenset(indices))


class BooleanSpace(WorldSpace):
    """All total truth assignments over a list of atoms.

    Worlds are 0/1 tuples aligned with the atom order, enumerated
    lexicographically (first atom most significant).
    """

    def __init__(self, atoms: Sequence[str]):
        self.atoms = tuple(atoms)
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("duplicate atoms")
        super().__init__(itertools.product((0, 1), repeat=len(self.atoms)))

    def atom(self, name: str) -> "Proposition":
        pos = self.atoms.index(name)
        return self.where(lambda w: bool(w[pos]))


@dataclass(frozen=True)
class Proposition:
    """Extensional proposition: the set of worlds where it holds."""

    space: WorldSpace
    indices: frozenset[int]

    def _check(self, other: "Proposition") -> None:
        if self.space is not other.space:
            raise ValueError("propositions live in different world spaces")

    def __and__(self, other: "Proposition") -> "Proposition":
        self._check(other)
        return Proposition(self.space, self.indices & other.indices)

    def __or__(self, other: "Proposition") -> "Proposition":
        self._check(other)
        return Proposition(self.space, self.indices | other.indices)

    def __invert__(self) -> "Proposition":
        return Proposition(self.space, self.space.top.indices - self.indices)

    def entails(self, other: "Proposition") -> bool:
        self._check(other)
        return self.indices <= other.indices

    @property
    def is_empty(self) -> bool:
        return not self.indices

    def __hash__(self) -> int:
        return hash((id(self.space), self.indices))


class ConditionalKind(Enum):
    STRICT = "strict"
    DEFAULT = "default"


@dataclass(frozen=True)
class Conditional:
    """Flat conditional over a world space, strict or default."""

    kind: ConditionalKind
    antecedent: Proposition
    consequent: Proposition

    @classmethod
    def default(cls, antecedent: Proposition, consequent: Proposition):
        return cls(ConditionalKind.DEFAULT, antecedent, consequent)

    @classmethod
    def strict(cls, antecedent: Proposition, consequent: Proposition):
        return cls(ConditionalKind.STRICT, antecedent, consequent)

    @property
    def violation(self) -> Proposition:
        return self.antecedent & ~self.consequent

    @property
    def compliance(self) -> Proposition:
        return self.antecedent & self.consequent


DefaultBase = Sequence[Conditional]


class RankingMeasure:
    """World-rank assignment; proposition ranks are minima over worlds.

    A measure is normalized when its minimum world rank is zero. Shifting
    can leave that region, so intermediate construction results are
    representable but flagged; satisfaction checks insist on normalization.
    """

    def __init__(self, space: WorldSpace, ranks: Sequence[Rank]):
        if len(ranks) != len(space):
            raise ValueError("one rank per world required")
        for r in ranks:
            if r != TOP and (r < 0 or r == -TOP):
                raise ValueError("ranks must be nonnegative or TOP")
        self.space = space
        self.ranks = tuple(ranks)

    @classmethod
    def uniform(cls, space: WorldSpace) -> "RankingMeasure":
        return cls(space, (0,) * len(space))

    @cached_property
    def is_normalized(self) -> bool:
        return min(self.ranks) == 0

    def rank_of(self, prop: Proposition) -> Rank:
        """Minimum world rank over the proposition; TOP when it is empty."""
        if prop.space is not self.space:
            raise ValueError("proposition from a different world space")
        if not prop.indices:
            return TOP
        return min(self.ranks[i] for i in prop.indices)

    def conditional_rank(self, prop: Proposition, given: Proposition) -> Rank:
        """Rank of ``prop`` conditional on ``given``; TOP if the condition
        is impossible."""
        base = self.rank_of(given)
        if base == TOP:
            return TOP
        return self.rank_of(given & prop) - base

    def satisfies(self, conditional: Conditional) -> bool:
        if not self.is_normalized:
            raise ValueError("satisfaction requires a normalized measure")
        holds = self.rank_of(conditional.compliance)
        fails = self.rank_of(conditional.violation)
        if conditional.kind is ConditionalKind.STRICT:
            return fails == TOP
        return holds + 1 <= fails

    def satisfies_base(self, base: DefaultBase) -> bool:
        return all(self.satisfies(c) for c in base)

    def shift(self, region: Proposition, amount: Rank) -> "RankingMeasure":
        """Raise the rank of every world in ``region`` by ``amount``.

        The result may be unnormalized; check ``is_normalized`` before
        using it for satisfaction.
        """
        if region.space is not self.space:
            raise ValueError("region from a different world space")
        if amount != TOP and amount < 0:
            raise ValueError("shift amounts must be nonnegative or TOP")
        ranks = list(self.ranks)
        for i in region.indices:
            ranks[i] += amount
        return RankingMeasure(self.space, ranks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RankingMeasure)
            and self.space is other.space
            and self.ranks == other.ranks
        )

    def __hash__(self) -> int:
        return hash((id(self.space), self.ranks))


def construct(
    base: DefaultBase, shifts: Sequence[Rank], space: WorldSpace
) -> RankingMeasure:
    """Uniform measure plus one shift on each conditional's violation area."""
    if len(shifts) != len(base):
        raise ValueError("need exactly one shift per conditional")
    measure = RankingMeasure.uniform(space)
    for conditional, amount in zip(base, shifts):
        if amount:
            measure = measure.shift(conditional.violation, amount)
    return measure


def is_justifiably_constructible(
    base: DefaultBase, shifts: Sequence[Rank], space: WorldSpace
) -> bool:
    """Do these shifts build a normalized model of ``base`` in which every
    strictly positive shift lands its conditional exactly on the threshold?
    """
    measure = construct(base, shifts, space)
    if not measure.is_normalized:
        return False
    if not measure.satisfies_base(base):
        return False
    for conditional, amount in zip(base, shifts):
        if amount and amount > 0:
            holds = measure.rank_of(conditional.compliance)
            fails = measure.rank_of(conditional.violation)
            if holds + 1 != fails:
                return False
    return True


_CHUNK_CELLS = 2_000_000


def jj_search(
    base: DefaultBase, bound: int, space: WorldSpace
) -> list[tuple[Rank, ...]]:
    """Brute-force search for justified shift vectors.

    Sweeps every vector in {0..bound, TOP}^len(base), keeps the ones that
    pass ``is_justifiably_constructible``, and deduplicates vectors that
    build the same measure (first vector in lexicographic domain order
    wins). Intended as an oracle for small bases only.
    """
    if not base:
        return [()]
    domain: list[Rank] = list(range(bound + 1)) + [TOP]
    n_worlds = len(space)

    violation_masks = []
    compliance_masks = []
    for c in base:
        v = np.zeros(n_worlds, dtype=bool)
        v[list(c.violation.indices)] = True
        violation_masks.append(v)
        h = np.zeros(n_worlds, dtype=bool)
        h[list(c.compliance.indices)] = True
        compliance_masks.append(h)

    survivors: list[tuple[Rank, ...]] = []
    chunk_size = max(1, _CHUNK_CELLS // n_worlds)
    vectors = itertools.product(domain, repeat=len(base))
    while True:
        chunk = list(itertools.islice(vectors, chunk_size))
        if not chunk:
            break
        cand = np.array(chunk, dtype=np.float64)
        ranks = np.zeros((len(chunk), n_worlds), dtype=np.float64)
        for i, mask in enumerate(violation_masks):
            ranks[:, mask] += cand[:, i : i + 1]
        ok = ranks.min(axis=1) == 0.0
        for i, c in enumerate(base):
            with_ = np.where(compliance_masks[i], ranks, np.inf).min(axis=1)
            against = np.where(violation_masks[i], ranks, np.inf).min(axis=1)
            if c.kind is ConditionalKind.STRICT:
                ok &= np.isinf(against)
            else:
                ok &= with_ + 1 <= against
            positive = cand[:, i] > 0
            ok &= ~positive | (with_ + 1 == against)
        for j in np.flatnonzero(ok):
            survivors.append(chunk[j])

    results: list[tuple[Rank, ...]] = []
    seen_measures = set()
    for vector in survivors:
        if not is_justifiably_constructible(base, vector, space):
            continue
        key = construct(base, vector, space).ranks
        if key not in seen_measures:
            seen_measures.add(key)
            results.append(vector)
    return results
