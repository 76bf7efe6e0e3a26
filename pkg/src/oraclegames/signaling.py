"""Signaling functions measurable over an oracle partition, Bayesian
posteriors, joint-posterior atlases, Blackwell experiment matrices, garbling
lifts, a deterministic two-signal separating construction, and
column-proportionality decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DomainError, InputError
from .partitions import join
from .types import (
    Distribution,
    InformationStructure,
    Partition,
    Prior,
    StateSpace,
    conditional,
    format_rational,
    parse_rational,
    partition_from_json,
)


def _check_signal_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise InputError(f"signal labels must be nonempty strings, got {label!r}")
    if "|" in label:
        raise InputError(f"signal label {label!r} may not contain '|'")
    return label


@dataclass(frozen=True)
class StochasticSignaling:
    """Row-stochastic kernel tau(s|state), constant on oracle blocks.

    Signals with zero probability everywhere are trimmed at construction so
    the signal set is canonical (the support of the kernel).
    """

    oracle_partition: Partition
    signals: tuple[str, ...]
    kernel: tuple[tuple[Fraction, ...], ...]  # rows in state order, cols in signal order

    def __post_init__(self):
        space = self.oracle_partition.space
        signals = tuple(_check_signal_label(s) for s in self.signals)
        if len(set(signals)) != len(signals):
            raise InputError("duplicate signal label")
        kernel = tuple(tuple(Fraction(v) for v in row) for row in self.kernel)
        if len(kernel) != len(space) or any(len(row) != len(signals) for row in kernel):
            raise InputError("kernel shape does not match states x signals")
        for state, row in zip(space.states, kernel):
            for sig, v in zip(signals, row):
                if v < 0:
                    raise InputError(f"negative probability {v} at ({state}, {sig})")
            if sum(row) != 1:
                raise InputError(f"kernel row for state '{state}' sums to {sum(row)}, not 1")
        for block in self.oracle_partition.blocks:
            ref = kernel[space.index(block[0])]
            for s in block[1:]:
                if kernel[space.index(s)] != ref:
                    raise InputError(
                        f"kernel is not measurable: states '{block[0]}' and '{s}' share an "
                        "oracle block but have different rows"
                    )
        keep = [j for j in range(len(signals)) if any(row[j] > 0 for row in kernel)]
        object.__setattr__(self, "signals", tuple(signals[j] for j in keep))
        object.__setattr__(
            self, "kernel", tuple(tuple(row[j] for j in keep) for row in kernel)
        )

    @property
    def space(self) -> StateSpace:
        return self.oracle_partition.space

    def signal_index(self, signal: str) -> int:
        try:
            return self.signals.index(signal)
        except ValueError:
            raise InputError(f"unknown signal '{signal}'") from None

    def prob(self, state: str, signal: str) -> Fraction:
        return self.kernel[self.space.index(state)][self.signal_index(signal)]

    def row(self, state: str) -> tuple[Fraction, ...]:
        return self.kernel[self.space.index(state)]

    def column(self, signal: str) -> tuple[Fraction, ...]:
        j = self.signal_index(signal)
        return tuple(row[j] for row in self.kernel)

    def fully_supported(self) -> bool:
        return all(v > 0 for row in self.kernel for v in row)

    @classmethod
    def from_rows(
        cls,
        oracle_partition: Partition,
        signals: Sequence[str],
        rows: Mapping[str, Mapping[str, object]],
    ) -> "StochasticSignaling":
        space = oracle_partition.space
        for state in space.states:
            if state not in rows:
                raise InputError(f"kernel is missing a row for state '{state}'")
        for state in rows:
            space.index(state)
        kernel = tuple(
            tuple(parse_rational(rows[state].get(sig, 0)) for sig in signals)
            for state in space.states
        )
        return cls(oracle_partition, tuple(signals), kernel)


@dataclass(frozen=True)
class DeterministicSignaling:
    """One signal per oracle block; the signal preimages form a coarsening of
    the oracle partition."""

    oracle_partition: Partition
    assignment: tuple[str, ...]  # signal per block, in canonical block order

    def __post_init__(self):
        assignment = tuple(_check_signal_label(s) for s in self.assignment)
        if len(assignment) != len(self.oracle_partition.blocks):
            raise InputError("need exactly one signal per oracle block")
        object.__setattr__(self, "assignment", assignment)

    @property
    def space(self) -> StateSpace:
        return self.oracle_partition.space

    @property
    def signals(self) -> tuple[str, ...]:
        out: list[str] = []
        for s in self.assignment:
            if s not in out:
                out.append(s)
        return tuple(out)

    def signal_at(self, state: str) -> str:
        return self.assignment[self.oracle_partition.block_index(state)]

    def induced_partition(self) -> Partition:
        groups: dict[str, list[str]] = {}
        for block, sig in zip(self.oracle_partition.blocks, self.assignment):
            groups.setdefault(sig, []).extend(block)
        return Partition(self.space, tuple(tuple(g) for g in groups.values()))

    def as_stochastic(self) -> StochasticSignaling:
        signals = self.signals
        kernel = tuple(
            tuple(Fraction(1 if self.signal_at(state) == sig else 0) for sig in signals)
            for state in self.space.states
        )
        return StochasticSignaling(self.oracle_partition, signals, kernel)


Signaling = Union[StochasticSignaling, DeterministicSignaling]


def as_stochastic(tau: Signaling) -> StochasticSignaling:
    if isinstance(tau, DeterministicSignaling):
        return tau.as_stochastic()
    return tau


@dataclass(frozen=True)
class JointPosteriorProfile:
    """One exact posterior per player, in player order."""

    per_player: tuple[Distribution, ...]

    def sort_key(self):
        return tuple(d.vector for d in self.per_player)

    def as_json(self) -> list[list[str]]:
        return [d.as_strings() for d in self.per_player]


class PosteriorAtlas:
    """The distribution over joint posterior profiles induced by a signaling
    function: profile -> positive weight, weights summing to 1. The key set
    is the reachable-profile set of the signaling."""

    def __init__(self, entries: Mapping[JointPosteriorProfile, Fraction]):
        self.entries: dict[JointPosteriorProfile, Fraction] = dict(entries)
        if not self.entries:
            raise InputError("an atlas cannot be empty")
        for profile, w in self.entries.items():
            if w <= 0:
                raise InputError(f"atlas weight {w} is not positive")
        if sum(self.entries.values()) != 1:
            raise InputError("atlas weights do not sum to 1")
        self._order = tuple(sorted(self.entries, key=JointPosteriorProfile.sort_key))

    def profiles(self) -> tuple[JointPosteriorProfile, ...]:
        return self._order

    def weight(self, profile: JointPosteriorProfile) -> Fraction:
        try:
            return self.entries[profile]
        except KeyError:
            raise DomainError("profile is not in the atlas") from None

    def __contains__(self, profile: JointPosteriorProfile) -> bool:
        return profile in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PosteriorAtlas) and self.entries == other.entries

    def player_menu(self, i: int) -> tuple[Distribution, ...]:
        """Distinct player-i posteriors across the atlas, sorted by vector."""
        menu = {p.per_player[i] for p in self.entries}
        return tuple(sorted(menu, key=lambda d: d.vector))

    def as_json(self) -> list[dict]:
        return [
            {"posteriors": p.as_json(), "weight": format_rational(self.entries[p])}
            for p in self._order
        ]


def det_posterior(
    structure: InformationStructure, i: int, tau: DeterministicSignaling, omega: str
) -> Distribution:
    """Posterior of player i at state omega after a deterministic public
    signal: the prior conditioned on the joined information block."""
    info = join(structure.players[i], tau.induced_partition())
    return conditional(structure.prior, info.block_of(omega))


def stoch_posterior(
    structure: InformationStructure,
    i: int,
    tau: StochasticSignaling,
    omega: str,
    signal: str,
) -> Distribution:
    """Posterior of player i at (omega, signal): mass proportional to
    prior * kernel on the player's block, zero elsewhere."""
    if tau.prob(omega, signal) == 0:
        raise DomainError(f"signal '{signal}' impossible at state '{omega}'")
    block = structure.players[i].block_of(omega)
    weights = {w: structure.prior.of(w) * tau.prob(w, signal) for w in block}
    total = sum(weights.values())
    vector = tuple(
        weights.get(s, Fraction(0)) / total for s in structure.space.states
    )
    return Distribution(structure.space, vector)


def posterior_atlas(structure: InformationStructure, tau: Signaling) -> PosteriorAtlas:
    """Enumerate all (state, signal) pairs with positive kernel mass, form the
    joint posterior profiles, merge exact duplicates, and accumulate weights
    prior(state) * tau(signal|state)."""
    st = as_stochastic(tau)
    # The posterior of player i depends only on (player block, signal).
    cache: dict[tuple[int, tuple[str, ...], str], Distribution] = {}
    entries: dict[JointPosteriorProfile, Fraction] = {}
    for omega in structure.space.states:
        for sig in st.signals:
            p = st.prob(omega, sig)
            if p == 0:
                continue
            posts = []
            for i in range(structure.n):
                key = (i, structure.players[i].block_of(omega), sig)
                if key not in cache:
                    cache[key] = stoch_posterior(structure, i, st, omega, sig)
                posts.append(cache[key])
            profile = JointPosteriorProfile(tuple(posts))
            entries[profile] = entries.get(profile, Fraction(0)) + structure.prior.of(omega) * p
    return PosteriorAtlas(entries)


def post_included(a: PosteriorAtlas, b: PosteriorAtlas) -> bool:
    """Key-set inclusion: every profile reachable under a is reachable under b."""
    return set(a.entries) <= set(b.entries)


def post_equal(a: PosteriorAtlas, b: PosteriorAtlas) -> bool:
    return set(a.entries) == set(b.entries)


def atlas_equal(a: PosteriorAtlas, b: PosteriorAtlas) -> bool:
    """Full weighted-map equality (profiles and weights)."""
    return a.entries == b.entries


# ---------------------------------------------------------------------------
# Experiment matrices


@dataclass(frozen=True)
class StochasticMatrix:
    """Row-stochastic matrix with rows indexed by states."""

    space: StateSpace
    column_labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(entries) != len(self.space):
            raise InputError("matrix must have one row per state")
        if len(set(self.column_labels)) != len(self.column_labels):
            raise InputError("duplicate column label")
        for state, row in zip(self.space.states, entries):
            if len(row) != len(self.column_labels):
                raise InputError(f"row for state '{state}' has the wrong width")
            if any(v < 0 for v in row):
                raise InputError(f"negative entry in row for state '{state}'")
            if sum(row) != 1:
                raise InputError(f"row for state '{state}' sums to {sum(row)}, not 1")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "column_labels", tuple(self.column_labels))

    def row(self, state: str) -> tuple[Fraction, ...]:
        return self.entries[self.space.index(state)]

    def as_json(self) -> dict:
        return {
            "states": list(self.space.states),
            "columns": list(self.column_labels),
            "entries": {
                s: [format_rational(v) for v in row]
                for s, row in zip(self.space.states, self.entries)
            },
        }


@dataclass(frozen=True)
class ExperimentMatrix(StochasticMatrix):
    """Blackwell experiment of an agent observing a public signal on top of a
    partition: columns are (signal, block) pairs and an entry is positive only
    when the state lies in the column's block."""

    columns: tuple[tuple[str, str], ...] = ()
    blocks: tuple[tuple[str, tuple[str, ...]], ...] = ()

    def __post_init__(self):
        super().__post_init__()
        block_map = dict(self.blocks)
        if len(self.columns) != len(self.column_labels):
            raise InputError("column metadata does not match the matrix width")
        for (sig, label) in self.columns:
            if label not in block_map:
                raise InputError(f"column references unknown block '{label}'")
        for state, row in zip(self.space.states, self.entries):
            for (sig, label), v in zip(self.columns, row):
                if v > 0 and state not in block_map[label]:
                    raise InputError(
                        f"entry for state '{state}' is positive outside block '{label}'"
                    )

    def as_json(self) -> dict:
        data = super().as_json()
        data["columns"] = [[sig, label] for sig, label in self.columns]
        data["blocks"] = {label: list(states) for label, states in self.blocks}
        return data


def experiment_matrix(
    tau: Signaling, partition: Partition, prior: Optional[Prior] = None
) -> ExperimentMatrix:
    """Entry at (state, (signal, block)) = tau(signal|state) * [state in block].

    Column order is signal-major over canonical blocks; block labels are
    "b0", "b1", ... in canonical order.
    """
    st = as_stochastic(tau)
    if partition.space != st.space:
        raise DomainError("partition and signaling use different state spaces")
    if prior is not None and prior.space != st.space:
        raise DomainError("prior uses a different state space")
    labels = [f"b{i}" for i in range(len(partition.blocks))]
    columns = tuple((sig, lab) for sig in st.signals for lab in labels)
    rows = []
    for state in st.space.states:
        bidx = partition.block_index(state)
        row = tuple(
            st.prob(state, sig) if lab == labels[bidx] else Fraction(0)
            for sig, lab in columns
        )
        rows.append(row)
    return ExperimentMatrix(
        space=st.space,
        column_labels=tuple(f"{sig}@{lab}" for sig, lab in columns),
        entries=tuple(rows),
        columns=columns,
        blocks=tuple((lab, block) for lab, block in zip(labels, partition.blocks)),
    )


def lift_garbled(
    tau: StochasticSignaling, m: Mapping[str, Mapping[str, object]]
) -> StochasticSignaling:
    """Compose tau with a garbling over its signals: the lifted kernel sends
    (s, t) with probability m[s][t] * tau(s|state). For a fixed s, every (s, t)
    signal induces the posterior that s induces under tau."""
    rows: dict[str, dict[str, Fraction]] = {}
    for s in tau.signals:
        if s not in m:
            raise DomainError(f"garbling is missing a row for signal '{s}'")
        row = {t: parse_rational(v) for t, v in m[s].items()}
        if any(v < 0 for v in row.values()) or sum(row.values()) != 1:
            raise DomainError(f"garbling row for signal '{s}' is not a distribution")
        rows[s] = row
    new_signals: list[str] = []
    pairs: list[tuple[str, str]] = []
    for s in tau.signals:
        for t in rows[s]:
            _check_signal_label(t)
            new_signals.append(f"({s},{t})")
            pairs.append((s, t))
    kernel = tuple(
        tuple(rows[s][t] * tau.prob(state, s) for s, t in pairs)
        for state in tau.space.states
    )
    return StochasticSignaling(tau.oracle_partition, tuple(new_signals), kernel)


def merge_garbled(
    tau: StochasticSignaling, m: Mapping[str, Mapping[str, object]]
) -> StochasticSignaling:
    """The garbled signaling itself: only the garbled label t is emitted,
    with kernel t|state = sum over s of m[s][t] * tau(s|state). Unlike
    ``lift_garbled`` this genuinely coarsens the information."""
    rows: dict[str, dict[str, Fraction]] = {}
    targets: list[str] = []
    for s in tau.signals:
        if s not in m:
            raise DomainError(f"garbling is missing a row for signal '{s}'")
        row = {t: parse_rational(v) for t, v in m[s].items()}
        if any(v < 0 for v in row.values()) or sum(row.values()) != 1:
            raise DomainError(f"garbling row for signal '{s}' is not a distribution")
        rows[s] = row
        for t in row:
            _check_signal_label(t)
            if t not in targets:
                targets.append(t)
    kernel = tuple(
        tuple(
            sum((rows[s].get(t, Fraction(0)) * tau.prob(state, s) for s in tau.signals), Fraction(0))
            for t in targets
        )
        for state in tau.space.states
    )
    return StochasticSignaling(tau.oracle_partition, tuple(targets), kernel)


def separating_strategy(
    oracle_partition: Partition, prior: Optional[Prior] = None
) -> StochasticSignaling:
    """Two-signal kernel with one interior probability p_j per oracle block
    such that all ratios of distinct members of {p_j, 1-p_j} are pairwise
    different, so every block leaves a distinct arithmetic fingerprint on the
    posteriors.

    Deterministic construction: scan candidates 1/3, 1/5, 1/7, ... and keep
    the first ones whose ratio set passes the exhaustive pairwise check. Each
    accepted value rules out only finitely many later candidates, so the scan
    always terminates.
    """
    if prior is not None and prior.space != oracle_partition.space:
        raise DomainError("prior uses a different state space")
    m = len(oracle_partition.blocks)

    def ratios_ok(ps: list[Fraction]) -> bool:
        values = []
        for p in ps:
            values.extend((p, 1 - p))
        if len(set(values)) != len(values):
            return False
        seen = set()
        for i, x in enumerate(values):
            for j, y in enumerate(values):
                if i == j:
                    continue
                r = x / y
                if r in seen:
                    return False
                seen.add(r)
        return True

    chosen: list[Fraction] = []
    k = 1
    while len(chosen) < m:
        candidate = Fraction(1, 2 * k + 1)
        k += 1
        if ratios_ok(chosen + [candidate]):
            chosen.append(candidate)
    space = oracle_partition.space
    kernel = []
    for state in space.states:
        p = chosen[oracle_partition.block_index(state)]
        kernel.append((p, 1 - p))
    return StochasticSignaling(oracle_partition, ("s1", "s2"), tuple(kernel))


def proportional_decompose(
    tau1: StochasticSignaling, tau2: StochasticSignaling
) -> dict[str, Optional[tuple[str, Fraction]]]:
    """For each signal t of tau1, find the first signal s of tau2 and constant
    c > 0 with tau1(t|state) = c * tau2(s|state) for every state, or None for
    that t when no column is proportional. tau2 must be fully supported."""
    if tau1.space != tau2.space:
        raise DomainError("signaling functions use different state spaces")
    if not tau2.fully_supported():
        raise DomainError("the reference signaling must be fully supported")
    out: dict[str, Optional[tuple[str, Fraction]]] = {}
    states = tau1.space.states
    for t in tau1.signals:
        col1 = [tau1.prob(w, t) for w in states]
        found = None
        for s in tau2.signals:
            col2 = [tau2.prob(w, s) for w in states]
            c = col1[0] / col2[0]
            if c > 0 and all(a == c * b for a, b in zip(col1, col2)):
                found = (s, c)
                break
        out[t] = found
    return out


# ---------------------------------------------------------------------------
# JSON forms


def _resolve_oracle(
    structure: InformationStructure, data: Mapping
) -> Partition:
    if "oracle" in data:
        return structure.oracle(data["oracle"])
    if "partition" in data:
        return partition_from_json(structure.space, data["partition"])
    raise InputError("signaling file needs an 'oracle' name or an inline 'partition'")


def signaling_from_json(structure: InformationStructure, data: Mapping) -> Signaling:
    if not isinstance(data, Mapping):
        raise InputError("signaling file must contain a JSON object")
    oracle = _resolve_oracle(structure, data)
    kind = data.get("type")
    if kind == "stochastic":
        try:
            signals = tuple(data["signals"])
            kernel = data["kernel"]
        except KeyError as exc:
            raise InputError(f"stochastic signaling is missing key {exc}") from None
        return StochasticSignaling.from_rows(oracle, signals, kernel)
    if kind == "deterministic":
        try:
            assignment = data["assignment"]
        except KeyError as exc:
            raise InputError(f"deterministic signaling is missing key {exc}") from None
        out = []
        for i in range(len(oracle.blocks)):
            key = f"block{i}"
            if key not in assignment:
                raise InputError(f"assignment is missing '{key}'")
            out.append(assignment[key])
        return DeterministicSignaling(oracle, tuple(out))
    raise InputError("signaling 'type' must be 'stochastic' or 'deterministic'")


def matrix_from_json(data: Mapping) -> StochasticMatrix:
    if not isinstance(data, Mapping):
        raise InputError("matrix file must contain a JSON object")
    try:
        space = StateSpace(tuple(data["states"]))
        entries = data["entries"]
    except KeyError as exc:
        raise InputError(f"matrix file is missing key {exc}") from None
    rows = []
    for state in space.states:
        if state not in entries:
            raise InputError(f"matrix is missing a row for state '{state}'")
        rows.append(tuple(parse_rational(v) for v in entries[state]))
    if "blocks" in data:
        columns = tuple((sig, lab) for sig, lab in data["columns"])
        blocks = tuple(
            (label, tuple(states)) for label, states in data["blocks"].items()
        )
        return ExperimentMatrix(
            space=space,
            column_labels=tuple(f"{sig}@{lab}" for sig, lab in columns),
            entries=tuple(rows),
            columns=columns,
            blocks=blocks,
        )
    return StochasticMatrix(
        space=space, column_labels=tuple(data["columns"]), entries=tuple(rows)
    )
