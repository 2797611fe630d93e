"""Cyclic structures: single-cycle permutations of a finite set of items."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .errors import DuplicateItem, ItemNotFound, NotABijection


@dataclass(frozen=True)
class CyclicStruct:
    """A finite set with a step map forming exactly one cycle.

    ``order`` lists the items along the cycle, rotated so that it starts at
    the smallest item; two structures are equal iff their cycles are.
    """

    order: tuple
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        order = tuple(self.order)
        pos = {}
        for i, item in enumerate(order):
            if item in pos:
                raise DuplicateItem(f"item {item!r} listed twice")
            pos[item] = i
        if order:
            k = pos[min(order)]
            order = order[k:] + order[:k]
            pos = {item: i for i, item in enumerate(order)}
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_pos", pos)

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, item) -> bool:
        return item in self._pos

    def __iter__(self):
        return iter(self.order)

    @property
    def elements(self) -> frozenset:
        return frozenset(self.order)

    def step(self, item):
        """The image of ``item`` under the cyclic permutation."""
        try:
            i = self._pos[item]
        except KeyError:
            raise ItemNotFound(item) from None
        return self.order[(i + 1) % len(self.order)]

    __call__ = step

    def step_back(self, item):
        try:
            i = self._pos[item]
        except KeyError:
            raise ItemNotFound(item) from None
        return self.order[i - 1]

    def as_mapping(self) -> dict:
        n = len(self.order)
        return {a: self.order[(i + 1) % n] for i, a in enumerate(self.order)}

    def relabel(self, mapping: Mapping) -> "CyclicStruct":
        return CyclicStruct(tuple(mapping[a] for a in self.order))

    def listing_from(self, item) -> tuple:
        """The cycle written out starting at ``item``."""
        i = self._pos[item]
        return self.order[i:] + self.order[:i]


EMPTY = CyclicStruct(())


def cycle_from_list(items: Iterable[Hashable]) -> CyclicStruct:
    """Each listed item steps to the next one, the last back to the first."""
    return CyclicStruct(tuple(items))


def cycle_from_mapping(step: Mapping) -> CyclicStruct:
    """Build from an explicit permutation; raises if it is not a single cycle."""
    if not step:
        return EMPTY
    if set(step.values()) != set(step):
        raise NotABijection("step map is not a permutation of its domain")
    start = min(step)
    order = [start]
    at = step[start]
    while at != start:
        order.append(at)
        at = step[at]
    if len(order) != len(step):
        raise ValueError(f"permutation splits into more than one cycle ({len(order)} of {len(step)} items in the first)")
    return CyclicStruct(tuple(order))


def equal_up_to_relabel(c1: CyclicStruct, c2: CyclicStruct, bijection: Mapping) -> bool:
    """True iff ``bijection . step1 == step2 . bijection``."""
    dom = set(bijection)
    if dom != c1.elements:
        raise NotABijection("bijection domain differs from the first structure's elements")
    image = [bijection[a] for a in c1.order]
    if len(set(image)) != len(image) or set(image) != c2.elements:
        raise NotABijection("bijection does not map onto the second structure's elements")
    return all(bijection[c1.step(a)] == c2.step(bijection[a]) for a in c1.order)


def step_count(c: CyclicStruct, a, b) -> int:
    """The unique ``k < len(c)`` with ``step^k(a) == b``."""
    if a not in c:
        raise ItemNotFound(a)
    if b not in c:
        raise ItemNotFound(b)
    return (c._pos[b] - c._pos[a]) % len(c)
