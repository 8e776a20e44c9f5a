"""Immutable abstract argumentation frameworks and their set primitives.

A framework is a finite, ordered collection of named arguments together
with a binary attack relation (self-attacks allowed, duplicates collapse).
Argument sets cross the API as plain ``frozenset`` values; internally the
arguments are densely indexed so that subsets become integer bitmasks,
which keeps conflict-free enumeration cheap and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

ArgumentSet = frozenset[str]
Attack = tuple[str, str]


@dataclass(frozen=True, init=False)
class ArgumentationFramework:
    """Finite argument set plus attack relation.

    Iteration order of ``arguments`` is the declared order and is used for
    every deterministic enumeration in the package.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[Attack]

    def __init__(self, arguments: Iterable[str], attacks: Iterable[Attack] = ()):
        args = tuple(arguments)
        if len(set(args)) != len(args):
            raise ValueError("duplicate argument identifiers")
        atts = frozenset((a, b) for a, b in attacks)
        declared = set(args)
        for a, b in atts:
            if a not in declared or b not in declared:
                raise ValueError(f"attack endpoint not declared: ({a}, {b})")
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", atts)

    # -- dense indexing ----------------------------------------------------

    @cached_property
    def index(self) -> Mapping[str, int]:
        return {name: i for i, name in enumerate(self.arguments)}

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, name: str) -> bool:
        return name in self.index

    @cached_property
    def _attackers(self) -> tuple[int, ...]:
        """Bitmask of attackers per argument index."""
        masks = [0] * len(self.arguments)
        for a, b in self.attacks:
            masks[self.index[b]] |= 1 << self.index[a]
        return tuple(masks)

    @cached_property
    def _targets(self) -> tuple[int, ...]:
        """Bitmask of attacked arguments per argument index."""
        masks = [0] * len(self.arguments)
        for a, b in self.attacks:
            masks[self.index[a]] |= 1 << self.index[b]
        return tuple(masks)

    @cached_property
    def _self_mask(self) -> int:
        mask = 0
        for a, b in self.attacks:
            if a == b:
                mask |= 1 << self.index[a]
        return mask

    @cached_property
    def _all_mask(self) -> int:
        return (1 << len(self.arguments)) - 1

    def mask_of(self, subset: Iterable[str]) -> int:
        mask = 0
        for name in subset:
            mask |= 1 << self.index[name]
        return mask

    def set_of(self, mask: int) -> ArgumentSet:
        return frozenset(
            name for i, name in enumerate(self.arguments) if mask >> i & 1
        )

    def _require_subset(self, subset: ArgumentSet) -> None:
        for name in subset:
            if name not in self.index:
                raise ValueError(f"unknown argument: {name}")

    # -- attack structure ----------------------------------------------------

    def attacks_between(self, a: str, b: str) -> bool:
        return (a, b) in self.attacks

    def is_mutual(self, a: str, b: str) -> bool:
        return (a, b) in self.attacks and (b, a) in self.attacks

    @cached_property
    def one_sided_attacks(self) -> tuple[Attack, ...]:
        """Attacks (a, b) with no counterattack (b, a), in index order.

        Self-attacks never qualify. No restriction to non-self-attacking
        endpoints is applied here; callers filter when they need to.
        """
        pairs = [
            (a, b)
            for a, b in self.attacks
            if (b, a) not in self.attacks
        ]
        pairs.sort(key=lambda p: (self.index[p[0]], self.index[p[1]]))
        return tuple(pairs)

    @cached_property
    def conflict_pairs(self) -> tuple[tuple[str, str], ...]:
        """Unordered attacking pairs (including self-pairs), sorted by index."""
        seen = set()
        for a, b in self.attacks:
            i, j = sorted((self.index[a], self.index[b]))
            seen.add((i, j))
        return tuple(
            (self.arguments[i], self.arguments[j]) for i, j in sorted(seen)
        )

    # -- core operations -----------------------------------------------------

    def non_self_attacking(self) -> ArgumentSet:
        """All arguments that do not attack themselves."""
        return self.set_of(self._all_mask & ~self._self_mask)

    def is_conflict_free(self, subset: ArgumentSet) -> bool:
        """True iff no member of ``subset`` attacks a member (itself included)."""
        self._require_subset(subset)
        mask = self.mask_of(subset)
        if mask & self._self_mask:
            return False
        for name in subset:
            if self._targets[self.index[name]] & mask:
                return False
        return True

    def attack_image(self, subset: ArgumentSet) -> ArgumentSet:
        """Arguments attacked by at least one member of ``subset``."""
        self._require_subset(subset)
        image = 0
        for name in subset:
            image |= self._targets[self.index[name]]
        return self.set_of(image)

    def enumerate_conflict_free(
        self, universe: ArgumentSet | None = None
    ) -> Iterator[ArgumentSet]:
        """Yield every conflict-free subset of ``universe`` exactly once.

        Backtracking over ascending argument index, inclusion branch first;
        a partial set that already conflicts is never extended, and the
        resulting stream order is deterministic.
        """
        if universe is None:
            indices = list(range(len(self.arguments)))
        else:
            self._require_subset(universe)
            indices = sorted(self.index[name] for name in universe)
        attackers, targets, selfish = self._attackers, self._targets, self._self_mask

        def extend(pos: int, current: int) -> Iterator[ArgumentSet]:
            if pos == len(indices):
                yield self.set_of(current)
                return
            i = indices[pos]
            bit = 1 << i
            conflicting = (
                bit & selfish
                or attackers[i] & current
                or targets[i] & current
            )
            if not conflicting:
                yield from extend(pos + 1, current | bit)
            yield from extend(pos + 1, current)

        return extend(0, 0)

    def restrict(self, subset: ArgumentSet) -> "ArgumentationFramework":
        """Framework induced on ``subset``: attacks outside it are dropped."""
        self._require_subset(subset)
        kept = [name for name in self.arguments if name in subset]
        atts = [(a, b) for a, b in self.attacks if a in subset and b in subset]
        return ArgumentationFramework(kept, atts)

    def apply_isomorphism(
        self, mapping: Mapping[str, str]
    ) -> "ArgumentationFramework":
        """Rename arguments through a bijection; attacks are mapped pointwise."""
        if set(mapping) != set(self.arguments):
            raise ValueError("mapping must be total on the arguments")
        if len(set(mapping.values())) != len(self.arguments):
            raise ValueError("mapping must be injective")
        return ArgumentationFramework(
            (mapping[a] for a in self.arguments),
            ((mapping[a], mapping[b]) for a, b in self.attacks),
        )


def canonical_extensions(sets: Iterable[ArgumentSet]) -> list[ArgumentSet]:
    """Deterministic output order: by size, then lexicographic membership."""
    return sorted(set(sets), key=lambda s: (len(s), sorted(s)))
