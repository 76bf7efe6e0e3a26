"""Exact-arithmetic domain objects: state spaces, priors, distributions,
partitions, and multi-player information structures, plus their JSON forms.

Every probability is a fractions.Fraction. Floats are rejected at parse time
so that all downstream identities and strict inequalities stay exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError

# "|" separates a block from a signal in strategy keys and "," separates the
# states of a block, so state labels may not use either character.
_LABEL_RESERVED = ("|", ",")


def parse_rational(value: object) -> Fraction:
    """Turn an int or a "p/q" string into a Fraction; floats are refused."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r} (floats are not accepted)")


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class StateSpace:
    """Ordered finite set of distinct state labels.

    The construction order is fixed and used for every canonical
    serialization (vectors, block sorting, reports).
    """

    states: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.states, tuple):
            object.__setattr__(self, "states", tuple(self.states))
        if not self.states:
            raise InputError("state space must contain at least one state")
        seen = set()
        for s in self.states:
            if not isinstance(s, str) or not s:
                raise InputError(f"state labels must be nonempty strings, got {s!r}")
            for ch in _LABEL_RESERVED:
                if ch in s:
                    raise InputError(f"state label {s!r} may not contain {ch!r}")
            if s in seen:
                raise InputError(f"duplicate state label '{s}'")
            seen.add(s)

    def index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise InputError(f"unknown state '{state}'") from None

    def sort_states(self, states: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(states, key=self.index))

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __contains__(self, state: object) -> bool:
        return state in self.states


def _vector_from(space: StateSpace, mass: object) -> tuple[Fraction, ...]:
    if isinstance(mass, Mapping):
        for state in mass:
            space.index(state)
        return tuple(parse_rational(mass.get(s, 0)) for s in space.states)
    values = [parse_rational(v) for v in mass]
    if len(values) != len(space):
        raise InputError(
            f"expected {len(space)} masses for states {list(space.states)}, got {len(values)}"
        )
    return tuple(values)


@dataclass(frozen=True)
class Distribution:
    """Probability distribution over a state space; masses sum to exactly 1."""

    space: StateSpace
    vector: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(Fraction(v) for v in self.vector))
        if len(self.vector) != len(self.space):
            raise InputError("distribution length does not match the state space")
        for s, v in zip(self.space.states, self.vector):
            if v < 0:
                raise InputError(f"negative mass {v} at state '{s}'")
        if sum(self.vector) != 1:
            raise InputError(f"masses sum to {sum(self.vector)}, not 1")

    @classmethod
    def from_mass(cls, space: StateSpace, mass: object) -> "Distribution":
        return cls(space, _vector_from(space, mass))

    @classmethod
    def point(cls, space: StateSpace, state: str) -> "Distribution":
        i = space.index(state)
        return cls(space, tuple(Fraction(1 if j == i else 0) for j in range(len(space))))

    def of(self, state: str) -> Fraction:
        return self.vector[self.space.index(state)]

    def support(self) -> tuple[str, ...]:
        return tuple(s for s, v in zip(self.space.states, self.vector) if v > 0)

    def as_strings(self) -> list[str]:
        return [format_rational(v) for v in self.vector]


@dataclass(frozen=True)
class Prior:
    """Full-support prior: every state carries strictly positive mass.

    Full support is required, not optional: the witness-game constructions
    divide by per-state and per-block masses.
    """

    space: StateSpace
    vector: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(Fraction(v) for v in self.vector))
        if len(self.vector) != len(self.space):
            raise InputError("prior length does not match the state space")
        for s, v in zip(self.space.states, self.vector):
            if v <= 0:
                raise InputError(f"prior must have full support; state '{s}' has mass {v}")
        if sum(self.vector) != 1:
            raise InputError(f"prior masses sum to {sum(self.vector)}, not 1")

    @classmethod
    def from_mass(cls, space: StateSpace, mass: object) -> "Prior":
        return cls(space, _vector_from(space, mass))

    @classmethod
    def uniform(cls, space: StateSpace) -> "Prior":
        n = len(space)
        return cls(space, tuple(Fraction(1, n) for _ in range(n)))

    def of(self, state: str) -> Fraction:
        return self.vector[self.space.index(state)]

    def event_mass(self, event: Iterable[str]) -> Fraction:
        return sum((self.of(s) for s in set(event)), Fraction(0))

    def min_mass(self) -> Fraction:
        return min(self.vector)

    def as_distribution(self) -> Distribution:
        return Distribution(self.space, self.vector)


def conditional(prior: Prior, event: Iterable[str]) -> Distribution:
    """Bayes-condition the prior on an event (a nonempty set of states)."""
    states = set(event)
    for s in states:
        prior.space.index(s)
    if not states:
        raise DomainError("cannot condition on an empty event")
    total = prior.event_mass(states)
    vector = tuple(
        prior.vector[i] / total if s in states else Fraction(0)
        for i, s in enumerate(prior.space.states)
    )
    return Distribution(prior.space, vector)


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of the state space.

    Canonical form everywhere: states inside a block follow state order, and
    blocks are sorted by their least member's index. The constructor
    normalizes, so equality of partitions is equality of canonical forms.
    """

    space: StateSpace
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        seen: set[str] = set()
        norm: list[tuple[str, ...]] = []
        for block in self.blocks:
            bl = self.space.sort_states(block)
            if not bl:
                raise InputError("partition contains an empty block")
            for s in bl:
                if s in seen:
                    raise InputError(f"state '{s}' appears in more than one block")
                seen.add(s)
            norm.append(bl)
        for s in self.space.states:
            if s not in seen:
                raise InputError(f"partition blocks do not cover state '{s}'")
        norm.sort(key=lambda b: self.space.index(b[0]))
        object.__setattr__(self, "blocks", tuple(norm))

    @classmethod
    def trivial(cls, space: StateSpace) -> "Partition":
        return cls(space, (tuple(space.states),))

    @classmethod
    def singletons(cls, space: StateSpace) -> "Partition":
        return cls(space, tuple((s,) for s in space.states))

    def block_of(self, state: str) -> tuple[str, ...]:
        self.space.index(state)
        for block in self.blocks:
            if state in block:
                return block
        raise AssertionError("partition invariant violated")  # pragma: no cover

    def block_index(self, state: str) -> int:
        self.space.index(state)
        for i, block in enumerate(self.blocks):
            if state in block:
                return i
        raise AssertionError("partition invariant violated")  # pragma: no cover

    def restrict(self, new_space: StateSpace) -> "Partition":
        """Intersect every block with a sub-space, dropping empties."""
        keep = set(new_space.states)
        blocks = []
        for block in self.blocks:
            inter = tuple(s for s in block if s in keep)
            if inter:
                blocks.append(inter)
        return Partition(new_space, tuple(blocks))

    def as_json(self) -> list[list[str]]:
        return [list(b) for b in self.blocks]


def canonicalize(partition: Partition) -> Partition:
    """Return the canonical form (idempotent; the constructor already sorts)."""
    return Partition(partition.space, partition.blocks)


@dataclass(frozen=True)
class InformationStructure:
    """A state space with a full-support prior, named player partitions
    (n >= 1), and named oracle partitions."""

    space: StateSpace
    prior: Prior
    player_names: tuple[str, ...]
    players: tuple[Partition, ...]
    oracle_names: tuple[str, ...] = ()
    oracles: tuple[Partition, ...] = ()

    def __post_init__(self):
        if len(self.player_names) != len(self.players) or not self.players:
            raise InputError("need at least one named player partition")
        if len(self.oracle_names) != len(self.oracles):
            raise InputError("oracle names and partitions do not line up")
        if self.prior.space != self.space:
            raise InputError("prior is defined over a different state space")
        for name, part in zip(self.player_names + self.oracle_names, self.players + self.oracles):
            if part.space != self.space:
                raise InputError(f"partition '{name}' is defined over a different state space")
        for names, kind in ((self.player_names, "player"), (self.oracle_names, "oracle")):
            if len(set(names)) != len(names):
                raise InputError(f"duplicate {kind} name")

    @property
    def n(self) -> int:
        return len(self.players)

    def player_index(self, name: str) -> int:
        try:
            return self.player_names.index(name)
        except ValueError:
            raise InputError(
                f"unknown player '{name}' (players: {', '.join(self.player_names)})"
            ) from None

    def oracle(self, name: str) -> Partition:
        try:
            return self.oracles[self.oracle_names.index(name)]
        except ValueError:
            raise InputError(
                f"unknown oracle '{name}' (oracles: {', '.join(self.oracle_names) or 'none'})"
            ) from None


# ---------------------------------------------------------------------------
# JSON forms


def partition_from_json(space: StateSpace, blocks: object) -> Partition:
    if not isinstance(blocks, Sequence) or isinstance(blocks, (str, bytes)):
        raise InputError("partition must be a list of blocks (lists of states)")
    return Partition(space, tuple(tuple(block) for block in blocks))


def structure_from_json(data: Mapping) -> InformationStructure:
    if not isinstance(data, Mapping):
        raise InputError("structure file must contain a JSON object")
    try:
        states = data["states"]
        prior_raw = data["prior"]
        players_raw = data["players"]
    except KeyError as exc:
        raise InputError(f"structure file is missing required key {exc}") from None
    space = StateSpace(tuple(states))
    prior = Prior.from_mass(space, prior_raw)
    player_names, players = [], []
    for entry in players_raw:
        try:
            player_names.append(entry["name"])
            players.append(partition_from_json(space, entry["partition"]))
        except KeyError as exc:
            raise InputError(f"player entry is missing key {exc}") from None
    oracle_names, oracles = [], []
    for entry in data.get("oracles", []):
        try:
            oracle_names.append(entry["name"])
            oracles.append(partition_from_json(space, entry["partition"]))
        except KeyError as exc:
            raise InputError(f"oracle entry is missing key {exc}") from None
    return InformationStructure(
        space, prior, tuple(player_names), tuple(players), tuple(oracle_names), tuple(oracles)
    )


def load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


def load_structure(path: str) -> InformationStructure:
    return structure_from_json(load_json(path))
