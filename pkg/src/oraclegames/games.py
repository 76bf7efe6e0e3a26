"""Game evaluation over information structures, all in exact arithmetic.

Covers finite Bayesian games played after a signaling round (strategies live
on reachable (block, signal) pairs), single-agent decision problems, and the
specialized constructions used to separate oracles: the block-permutation
decision problem, the belief-report game, the two-stage declaration game, the
log-score game (scores compared exactly, without evaluating logarithms), and
the combination of the last two.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import DomainError, InputError, ResourceLimitError
from .partitions import ckc_decompose, join
from .signaling import (
    DeterministicSignaling,
    JointPosteriorProfile,
    Signaling,
    StochasticSignaling,
    as_stochastic,
    posterior_atlas,
    stoch_posterior,
)
from .types import (
    Distribution,
    InformationStructure,
    Partition,
    Prior,
    StateSpace,
    format_rational,
    parse_rational,
)

DEFAULT_EQUILIBRIUM_CAP = 100000
DEFAULT_PERMUTATION_CAP = 10000

ActionProfile = tuple[str, ...]
Pair = tuple[tuple[str, ...], str]


def _check_action_label(label: object) -> str:
    if not isinstance(label, str) or not label:
        raise InputError(f"action labels must be nonempty strings, got {label!r}")
    if "|" in label:
        raise InputError(f"action label {label!r} may not contain '|'")
    return label


@dataclass(eq=False)
class BayesianGame:
    """A finite n-player game with state-dependent payoffs.

    ``payoffs`` maps (state, action profile) to one utility per player and
    must be total over states x action profiles.  When ``log_domain`` is set
    the stored values are nonnegative likelihoods whose logarithm is the
    payoff (zero standing for minus infinity); such games are evaluated with
    ``kld_expected_scores`` rather than ``expected_payoffs``.
    """

    structure: InformationStructure
    actions: tuple[tuple[str, ...], ...]
    payoffs: dict[tuple[str, ActionProfile], tuple[Fraction, ...]]
    log_domain: bool = False

    def __post_init__(self):
        n = self.structure.n
        self.actions = tuple(tuple(acts) for acts in self.actions)
        if len(self.actions) != n:
            raise InputError(
                f"expected action sets for {n} players, got {len(self.actions)}"
            )
        for acts in self.actions:
            if not acts:
                raise InputError("every player needs at least one action")
            seen = set()
            for a in acts:
                _check_action_label(a)
                if a in seen:
                    raise InputError(f"duplicate action label {a!r}")
                seen.add(a)
        expected = {
            (state, profile)
            for state in self.structure.space
            for profile in itertools.product(*self.actions)
        }
        keys = set(self.payoffs)
        if keys != expected:
            missing = sorted(expected - keys)
            extra = sorted(keys - expected)
            what = missing[0] if missing else extra[0]
            kind = "missing" if missing else "unexpected"
            raise InputError(f"{kind} payoff entry for {what!r}")
        for key, values in self.payoffs.items():
            if len(values) != n:
                raise InputError(f"payoff entry {key!r} must list {n} utilities")
            if self.log_domain and any(v < 0 for v in values):
                raise InputError("log-domain likelihoods must be nonnegative")

    def payoff(self, state: str, profile: ActionProfile) -> tuple[Fraction, ...]:
        try:
            return self.payoffs[(state, profile)]
        except KeyError:
            raise DomainError(
                f"no payoff entry for state '{state}' and profile {profile!r}"
            ) from None

    def as_json(self) -> dict:
        payoffs: dict[str, dict[str, list[str]]] = {}
        for state in self.structure.space:
            row: dict[str, list[str]] = {}
            for profile in itertools.product(*self.actions):
                values = self.payoffs[(state, profile)]
                row["|".join(profile)] = [
                    "-inf" if self.log_domain and v == 0 else format_rational(v)
                    for v in values
                ]
            payoffs[state] = row
        data = {
            "actions": {
                name: list(acts)
                for name, acts in zip(self.structure.player_names, self.actions)
            },
            "payoffs": payoffs,
        }
        if self.log_domain:
            data["log_domain"] = True
        return data


def game_from_json(structure: InformationStructure, data: Mapping) -> BayesianGame:
    """Build a game from its JSON form (see ``BayesianGame.as_json``)."""
    log_domain = bool(data.get("log_domain", False))
    try:
        action_map = data["actions"]
        payoff_map = data["payoffs"]
    except KeyError as exc:
        raise InputError(f"game JSON is missing the {exc.args[0]!r} section") from None
    actions = []
    for name in structure.player_names:
        if name not in action_map:
            raise InputError(f"game JSON lists no actions for player '{name}'")
        actions.append(tuple(action_map[name]))
    if set(action_map) != set(structure.player_names):
        extra = sorted(set(action_map) - set(structure.player_names))
        raise InputError(f"game JSON lists actions for unknown player '{extra[0]}'")
    payoffs: dict[tuple[str, ActionProfile], tuple[Fraction, ...]] = {}
    for state, row in payoff_map.items():
        if state not in structure.space:
            raise InputError(f"unknown state '{state}' in payoffs")
        for key, values in row.items():
            profile = tuple(key.split("|"))
            parsed = []
            for v in values:
                if v == "-inf":
                    if not log_domain:
                        raise InputError(
                            "'-inf' payoffs are admitted only in log-domain games"
                        )
                    parsed.append(Fraction(0))
                else:
                    parsed.append(parse_rational(v))
            payoffs[(state, profile)] = tuple(parsed)
    return BayesianGame(structure, tuple(actions), payoffs, log_domain=log_domain)


def reachable_pairs(
    structure: InformationStructure, tau: Signaling
) -> tuple[tuple[Pair, ...], ...]:
    """Per player, the (block, signal) pairs that occur with positive mass."""
    stoch = as_stochastic(tau)
    if stoch.space != structure.space:
        raise DomainError("signaling and structure use different state spaces")
    out = []
    for partition in structure.players:
        pairs = []
        for block in partition.blocks:
            for signal in stoch.signals:
                if any(stoch.prob(state, signal) > 0 for state in block):
                    pairs.append((block, signal))
        out.append(tuple(pairs))
    return tuple(out)


@dataclass(eq=False)
class StrategyProfile:
    """One mixed action per player per reachable (block, signal) pair."""

    per_player: tuple[dict[Pair, dict[str, Fraction]], ...]

    def mixture(self, player: int, block: tuple[str, ...], signal: str) -> dict[str, Fraction]:
        try:
            return self.per_player[player][(block, signal)]
        except KeyError:
            raise DomainError(
                f"strategy for player {player} has no entry at block "
                f"{{{','.join(block)}}} with signal '{signal}'"
            ) from None

    def as_json(self, player_names: Sequence[str]) -> dict:
        out: dict[str, dict] = {}
        for name, table in zip(player_names, self.per_player):
            entry = {}
            for (block, signal), mix in table.items():
                key = ",".join(block) + "|" + signal
                pure = [a for a, p in mix.items() if p == 1]
                if len(pure) == 1 and len([p for p in mix.values() if p > 0]) == 1:
                    entry[key] = pure[0]
                else:
                    entry[key] = {
                        a: format_rational(p) for a, p in sorted(mix.items()) if p > 0
                    }
            out[name] = entry
        return out


def _normalize_mixture(value: object, actions: Sequence[str]) -> dict[str, Fraction]:
    if isinstance(value, str):
        mix = {value: Fraction(1)}
    elif isinstance(value, Mapping):
        mix = {a: parse_rational(p) for a, p in value.items()}
    else:
        raise InputError(f"a strategy entry must be an action or a mixture, got {value!r}")
    total = Fraction(0)
    for action, p in mix.items():
        if action not in actions:
            raise InputError(f"unknown action {action!r} in strategy")
        if p < 0:
            raise InputError(f"negative probability {p} in strategy")
        total += p
    if total != 1:
        raise InputError(f"strategy mixture sums to {total}, expected 1")
    return mix


def make_strategy(
    game: BayesianGame,
    tau: Signaling,
    per_player: Sequence[Mapping[Pair, object]],
) -> StrategyProfile:
    """Validate and assemble a strategy: its domain must be exactly the
    reachable pairs, and every mixture must be a distribution over the
    player's actions."""
    pairs = reachable_pairs(game.structure, tau)
    if len(per_player) != game.structure.n:
        raise InputError(
            f"expected strategies for {game.structure.n} players, got {len(per_player)}"
        )
    tables = []
    for i, mapping in enumerate(per_player):
        wanted = set(pairs[i])
        got = set(mapping)
        if got != wanted:
            missing = sorted(wanted - got)
            extra = sorted(got - wanted)
            block, signal = (missing or extra)[0]
            kind = "missing" if missing else "unreachable"
            raise DomainError(
                f"strategy for player '{game.structure.player_names[i]}' has a "
                f"{kind} entry at block {{{','.join(block)}}} with signal '{signal}'"
            )
        tables.append(
            {
                pair: _normalize_mixture(mapping[pair], game.actions[i])
                for pair in pairs[i]
            }
        )
    return StrategyProfile(tuple(tables))


def _parse_pair_key(key: str, partition: Partition) -> Pair:
    if "|" not in key:
        raise InputError(f"strategy key {key!r} must look like 'state,...|signal'")
    block_part, signal = key.split("|", 1)
    states = tuple(block_part.split(","))
    for state in states:
        if state not in partition.space:
            raise InputError(f"unknown state '{state}' in strategy key {key!r}")
    block = partition.block_of(states[0])
    if set(states) != set(block):
        raise InputError(f"strategy key {key!r} does not name a block of the player")
    return (block, signal)


def strategy_from_json(
    game: BayesianGame, tau: Signaling, data: Mapping
) -> StrategyProfile:
    """Parse {"player": {"state,...|signal": action-or-mixture}} strategies."""
    per_player: list[dict[Pair, object]] = []
    for i, name in enumerate(game.structure.player_names):
        if name not in data:
            raise InputError(f"strategy JSON has no entry for player '{name}'")
        table = {}
        for key, value in data[name].items():
            table[_parse_pair_key(key, game.structure.players[i])] = value
        per_player.append(table)
    if set(data) != set(game.structure.player_names):
        extra = sorted(set(data) - set(game.structure.player_names))
        raise InputError(f"strategy JSON names unknown player '{extra[0]}'")
    return make_strategy(game, tau, per_player)


def _branch_mixtures(
    structure: InformationStructure,
    strategy: StrategyProfile,
    state: str,
    signal: str,
) -> list[list[tuple[str, Fraction]]]:
    out = []
    for i, partition in enumerate(structure.players):
        mix = strategy.mixture(i, partition.block_of(state), signal)
        out.append([(a, p) for a, p in mix.items() if p > 0])
    return out


def expected_payoffs(
    game: BayesianGame,
    tau: Signaling,
    strategy: StrategyProfile,
    given_event: Optional[Iterable[str]] = None,
) -> tuple[Fraction, ...]:
    """Exact expected utility per player, optionally conditional on an event."""
    if game.log_domain:
        raise DomainError("log-domain game: evaluate with kld_expected_scores")
    stoch = as_stochastic(tau)
    structure = game.structure
    if stoch.space != structure.space:
        raise DomainError("signaling and structure use different state spaces")
    if given_event is None:
        states = list(structure.space)
    else:
        states = list(given_event)
        if not states:
            raise DomainError("cannot condition on an empty event")
        for state in states:
            if state not in structure.space:
                raise InputError(f"unknown state '{state}' in event")
    totals = [Fraction(0)] * structure.n
    for state in states:
        base = structure.prior.of(state)
        for signal in stoch.signals:
            w = base * stoch.prob(state, signal)
            if w == 0:
                continue
            mixtures = _branch_mixtures(structure, strategy, state, signal)
            for combo in itertools.product(*mixtures):
                weight = w
                for _, p in combo:
                    weight *= p
                values = game.payoff(state, tuple(a for a, _ in combo))
                for i in range(structure.n):
                    totals[i] += weight * values[i]
    if given_event is not None:
        mass = structure.prior.event_mass(states)
        totals = [t / mass for t in totals]
    return tuple(totals)


@dataclass(eq=False)
class OutcomeDistribution:
    """Joint distribution over (state, action profile) outcomes."""

    space: StateSpace
    mass: dict[tuple[str, ActionProfile], Fraction]

    def __post_init__(self):
        total = Fraction(0)
        for (state, _), value in self.mass.items():
            if state not in self.space:
                raise InputError(f"unknown state '{state}' in outcome distribution")
            if value < 0:
                raise InputError("outcome masses must be nonnegative")
            total += value
        if total != 1:
            raise InputError(f"outcome masses sum to {total}, expected 1")

    def of(self, state: str, profile: ActionProfile) -> Fraction:
        return self.mass.get((state, tuple(profile)), Fraction(0))

    def as_json(self) -> list[dict]:
        rows = []
        for (state, profile), value in sorted(self.mass.items()):
            if value > 0:
                rows.append(
                    {
                        "state": state,
                        "actions": list(profile),
                        "mass": format_rational(value),
                    }
                )
        return rows


def ned_distribution(
    game: BayesianGame, tau: Signaling, strategy: StrategyProfile
) -> OutcomeDistribution:
    """Distribution over (state, action profile) induced by prior, signaling,
    and strategy."""
    stoch = as_stochastic(tau)
    structure = game.structure
    mass: dict[tuple[str, ActionProfile], Fraction] = {}
    for state in structure.space:
        base = structure.prior.of(state)
        for signal in stoch.signals:
            w = base * stoch.prob(state, signal)
            if w == 0:
                continue
            mixtures = _branch_mixtures(structure, strategy, state, signal)
            for combo in itertools.product(*mixtures):
                weight = w
                for _, p in combo:
                    weight *= p
                key = (state, tuple(a for a, _ in combo))
                mass[key] = mass.get(key, Fraction(0)) + weight
    return OutcomeDistribution(structure.space, mass)


@dataclass(frozen=True)
class EquilibriumResult:
    """Outcome of an equilibrium check; the witness names the first
    profitable deviation in scan order."""

    holds: bool
    witness: Optional[tuple] = None


def _deviation_value(
    game: BayesianGame,
    stoch: StochasticSignaling,
    strategy: StrategyProfile,
    player: int,
    block: tuple[str, ...],
    signal: str,
    action: str,
) -> Fraction:
    structure = game.structure
    total = Fraction(0)
    for state in block:
        w = structure.prior.of(state) * stoch.prob(state, signal)
        if w == 0:
            continue
        others = []
        for j, partition in enumerate(structure.players):
            if j == player:
                continue
            mix = strategy.mixture(j, partition.block_of(state), signal)
            others.append((j, [(a, p) for a, p in mix.items() if p > 0]))
        for combo in itertools.product(*(items for _, items in others)):
            weight = w
            profile: list[Optional[str]] = [None] * structure.n
            profile[player] = action
            for (j, _), (a, p) in zip(others, combo):
                weight *= p
                profile[j] = a
            values = game.payoff(state, tuple(profile))  # type: ignore[arg-type]
            total += weight * values[player]
    return total


def is_equilibrium(
    game: BayesianGame, tau: Signaling, strategy: StrategyProfile
) -> EquilibriumResult:
    """Check for profitable unilateral deviations, pair by pair.

    Payoffs are additive across a player's reachable pairs (the underlying
    events are disjoint), so a per-pair sweep over pure actions is exhaustive.
    """
    if game.log_domain:
        raise DomainError("log-domain game: evaluate with kld_expected_scores")
    stoch = as_stochastic(tau)
    pairs = reachable_pairs(game.structure, stoch)
    for i in range(game.structure.n):
        for block, signal in pairs[i]:
            mix = strategy.mixture(i, block, signal)
            values = {
                a: _deviation_value(game, stoch, strategy, i, block, signal, a)
                for a in game.actions[i]
            }
            current = sum(
                (p * values[a] for a, p in mix.items() if p > 0), Fraction(0)
            )
            for a in game.actions[i]:
                if values[a] > current:
                    witness = (game.structure.player_names[i], block, signal, a)
                    return EquilibriumResult(False, witness)
    return EquilibriumResult(True)


def enumerate_pure_equilibria(
    game: BayesianGame, tau: Signaling, cap: int = DEFAULT_EQUILIBRIUM_CAP
) -> list[StrategyProfile]:
    """All pure-strategy equilibria, enumerated in deterministic order."""
    if game.log_domain:
        raise DomainError("log-domain game: evaluate with kld_expected_scores")
    pairs = reachable_pairs(game.structure, tau)
    count = 1
    for i in range(game.structure.n):
        count *= len(game.actions[i]) ** len(pairs[i])
    if count > cap:
        raise ResourceLimitError(
            f"{count} pure strategy profiles exceed the cap of {cap}", cap=cap
        )
    slots = [(i, pair) for i in range(game.structure.n) for pair in pairs[i]]
    found = []
    for combo in itertools.product(*(game.actions[i] for i, _ in slots)):
        tables: list[dict[Pair, dict[str, Fraction]]] = [
            {} for _ in range(game.structure.n)
        ]
        for (i, pair), action in zip(slots, combo):
            tables[i][pair] = {action: Fraction(1)}
        strategy = StrategyProfile(tuple(tables))
        if is_equilibrium(game, tau, strategy).holds:
            found.append(strategy)
    return found


# ---------------------------------------------------------------------------
# Single-agent decision problems and the block-permutation construction.


@dataclass(eq=False)
class DecisionProblem:
    """A single-agent decision problem with state-dependent payoffs."""

    space: StateSpace
    prior: Prior
    actions: tuple[str, ...]
    payoffs: dict[tuple[str, str], Fraction]

    def __post_init__(self):
        self.actions = tuple(self.actions)
        if not self.actions:
            raise InputError("a decision problem needs at least one action")
        expected = {(state, a) for state in self.space for a in self.actions}
        if set(self.payoffs) != expected:
            raise InputError("decision problem payoffs must be total")

    def payoff(self, state: str, action: str) -> Fraction:
        return self.payoffs[(state, action)]


def information_partition(
    structure: InformationStructure, player: int, source: Union[Partition, Signaling]
) -> Partition:
    """The player's effective information: own partition joined with the
    partition induced by a deterministic signaling (or a raw partition)."""
    if isinstance(source, Partition):
        induced = source
    elif isinstance(source, DeterministicSignaling):
        induced = source.induced_partition()
    else:
        raise DomainError("deterministic information is required here")
    return join(structure.players[player], induced)


def decision_value(problem: DecisionProblem, info: Partition) -> Fraction:
    """Best expected payoff when choosing one action per information block."""
    if info.space != problem.space:
        raise DomainError("information partition uses a different state space")
    total = Fraction(0)
    for block in info.blocks:
        best = None
        for action in problem.actions:
            value = sum(
                (problem.prior.of(state) * problem.payoffs[(state, action)]
                 for state in block),
                Fraction(0),
            )
            if best is None or value > best:
                best = value
        total += best
    return total


def build_permutation_game(
    structure: InformationStructure,
    player: int,
    source: Union[Partition, Signaling],
    cap: int = DEFAULT_PERMUTATION_CAP,
) -> DecisionProblem:
    """Decision problem whose actions rank the states inside one block of the
    player's effective information partition.

    Ranking a block correctly is rewarded in proportion to the assigned
    position, normalized by the conditional state probability; acting on the
    wrong block costs a penalty so large that it can never pay off.  Exact
    value comparisons of this problem separate effective partitions.
    """
    base = information_partition(structure, player, source)
    size = 0
    for block in base.blocks:
        size += math.factorial(len(block))
    if size > cap:
        raise ResourceLimitError(
            f"{size} permutation actions exceed the cap of {cap}", cap=cap
        )
    prior = structure.prior
    penalty = Fraction(-(2 ** (10 * len(structure.space)))) / prior.min_mass()
    actions = []
    payoffs: dict[tuple[str, str], Fraction] = {}
    for j, block in enumerate(base.blocks):
        block_mass = prior.event_mass(block)
        for perm in itertools.permutations(block):
            label = f"b{j}:" + ",".join(perm)
            actions.append(label)
            for state in structure.space:
                if state in block:
                    position = perm.index(state) + 1
                    cond = prior.of(state) / block_mass
                    payoffs[(state, label)] = Fraction(position) / (cond * len(block))
                else:
                    payoffs[(state, label)] = penalty
    return DecisionProblem(structure.space, prior, tuple(actions), payoffs)


# ---------------------------------------------------------------------------
# Belief-report games.


@dataclass(eq=False)
class BeliefGame:
    """Proper-scoring game built from a declared posterior profile.

    Player i may act only on the support of their declared posterior; hitting
    the realized state pays the inverse declared probability, landing outside
    the declared support costs 2, and everyone is docked a share of the other
    players' successes, which makes truthful declarations sum to exactly -1
    per player.
    """

    space: StateSpace
    declared: tuple[Distribution, ...]

    def __post_init__(self):
        self.declared = tuple(self.declared)
        if len(self.declared) < 2:
            raise DomainError("a belief game needs at least two players")
        for dist in self.declared:
            if dist.space != self.space:
                raise InputError("declared posteriors use a different state space")

    @property
    def n(self) -> int:
        return len(self.declared)

    def action_set(self, player: int) -> tuple[str, ...]:
        return self.declared[player].support()

    def r_value(self, player: int, action: str, state: str) -> Fraction:
        mass = self.declared[player].of(state)
        if mass == 0:
            return Fraction(-2)
        if action == state:
            return 1 / mass
        return Fraction(0)

    def utility(self, player: int, state: str, actions: Sequence[str]) -> Fraction:
        value = self.r_value(player, actions[player], state)
        share = Fraction(2, self.n - 1)
        for j in range(self.n):
            if j == player:
                continue
            if self.declared[j].of(state) > 0:
                value -= share * self.r_value(j, actions[j], state)
        return value


def build_belief_game(
    profile: Union[JointPosteriorProfile, Sequence[Distribution]]
) -> BeliefGame:
    if isinstance(profile, JointPosteriorProfile):
        dists = profile.per_player
    else:
        dists = tuple(profile)
    if not dists:
        raise DomainError("a belief game needs at least two players")
    return BeliefGame(dists[0].space, dists)


def _check_belief_inputs(
    game: BeliefGame, beliefs: Sequence[Distribution], choices: Sequence[str]
) -> None:
    if len(beliefs) != game.n or len(choices) != game.n:
        raise InputError(f"expected {game.n} beliefs and choices")
    for i, (belief, choice) in enumerate(zip(beliefs, choices)):
        if belief.space != game.space:
            raise InputError("beliefs use a different state space")
        if choice not in game.action_set(i):
            raise DomainError(
                f"action '{choice}' is outside player {i}'s declared support"
            )


def belief_expected_payoffs(
    game: BeliefGame, beliefs: Sequence[Distribution], choices: Sequence[str]
) -> tuple[Fraction, ...]:
    """Expected utilities where every scoring term is weighted by the acting
    player's own belief about the state."""
    _check_belief_inputs(game, beliefs, choices)
    own = []
    hits = []
    for k in range(game.n):
        e_own = Fraction(0)
        e_hit = Fraction(0)
        for state in game.space:
            q = beliefs[k].of(state)
            if q == 0:
                continue
            r = game.r_value(k, choices[k], state)
            e_own += q * r
            if game.declared[k].of(state) > 0:
                e_hit += q * r
        own.append(e_own)
        hits.append(e_hit)
    share = Fraction(2, game.n - 1)
    return tuple(
        own[i] - share * sum((hits[j] for j in range(game.n) if j != i), Fraction(0))
        for i in range(game.n)
    )


def belief_aggregate(
    game: BeliefGame, beliefs: Sequence[Distribution], choices: Sequence[str]
) -> Fraction:
    return sum(belief_expected_payoffs(game, beliefs, choices), Fraction(0))


def belief_best_response(game: BeliefGame, player: int, belief: Distribution) -> str:
    """Action maximizing the player's own scoring term (ties go to the
    earliest state); the cross terms do not depend on the player's action."""
    if belief.space != game.space:
        raise InputError("belief uses a different state space")
    best = None
    best_value = None
    for action in game.action_set(player):
        value = belief.of(action) / game.declared[player].of(action)
        if best is None or value > best_value:
            best, best_value = action, value
    if best is None:
        raise DomainError("declared posterior has empty support")
    return best


def belief_is_equilibrium(
    game: BeliefGame, beliefs: Sequence[Distribution], choices: Sequence[str]
) -> bool:
    """No player can raise their own expected score by switching actions."""
    _check_belief_inputs(game, beliefs, choices)
    for i in range(game.n):
        current = sum(
            (
                beliefs[i].of(state) * game.r_value(i, choices[i], state)
                for state in game.space
            ),
            Fraction(0),
        )
        for action in game.action_set(i):
            value = sum(
                (
                    beliefs[i].of(state) * game.r_value(i, action, state)
                    for state in game.space
                ),
                Fraction(0),
            )
            if value > current:
                return False
    return True


def truthful_choices(game: BeliefGame) -> tuple[str, ...]:
    """First in-support action per player (all are payoff-equivalent when
    beliefs match declarations)."""
    return tuple(game.action_set(i)[0] for i in range(game.n))


# ---------------------------------------------------------------------------
# Exact log-domain scores.


@dataclass(frozen=True, eq=False)
class LogScore:
    """The quantity log(product)/denom, compared without evaluating logs.

    Two scores compare via product1**denom2 vs product2**denom1, which is
    exact in big-rational arithmetic; ``neg_inf`` marks minus infinity.
    """

    neg_inf: bool
    product: Fraction
    denom: int

    def __post_init__(self):
        if self.denom < 1:
            raise InputError("log score denominator must be a positive integer")
        if not self.neg_inf and self.product <= 0:
            raise InputError("log score product must be positive")

    @classmethod
    def zero(cls) -> "LogScore":
        return cls(False, Fraction(1), 1)

    @classmethod
    def minus_infinity(cls) -> "LogScore":
        return cls(True, Fraction(1), 1)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Fraction, Fraction]]) -> "LogScore":
        """Score sum(w * log(v)) from (weight, value) terms with w >= 0."""
        kept = []
        for weight, value in terms:
            if weight < 0:
                raise InputError("log score weights must be nonnegative")
            if value < 0:
                raise InputError("log score values must be nonnegative")
            if weight == 0:
                continue
            if value == 0:
                return cls.minus_infinity()
            kept.append((Fraction(weight), Fraction(value)))
        if not kept:
            return cls.zero()
        denom = 1
        for weight, _ in kept:
            denom = math.lcm(denom, weight.denominator)
        product = Fraction(1)
        for weight, value in kept:
            exponent = weight * denom
            product *= value ** int(exponent)
        return cls(False, product, denom)

    def half(self) -> "LogScore":
        return LogScore(self.neg_inf, self.product, self.denom * 2)

    def __add__(self, other: "LogScore") -> "LogScore":
        if not isinstance(other, LogScore):
            return NotImplemented
        if self.neg_inf or other.neg_inf:
            return LogScore.minus_infinity()
        return LogScore(
            False,
            self.product ** other.denom * other.product ** self.denom,
            self.denom * other.denom,
        )

    def _compare(self, other: "LogScore") -> int:
        if self.neg_inf and other.neg_inf:
            return 0
        if self.neg_inf:
            return -1
        if other.neg_inf:
            return 1
        left = self.product ** other.denom
        right = other.product ** self.denom
        return (left > right) - (left < right)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogScore):
            return NotImplemented
        return self._compare(other) == 0

    def __lt__(self, other: "LogScore") -> bool:
        if not isinstance(other, LogScore):
            return NotImplemented
        return self._compare(other) < 0

    def __le__(self, other: "LogScore") -> bool:
        if not isinstance(other, LogScore):
            return NotImplemented
        return self._compare(other) <= 0

    def __gt__(self, other: "LogScore") -> bool:
        if not isinstance(other, LogScore):
            return NotImplemented
        return self._compare(other) > 0

    def __ge__(self, other: "LogScore") -> bool:
        if not isinstance(other, LogScore):
            return NotImplemented
        return self._compare(other) >= 0

    def as_json(self) -> object:
        if self.neg_inf:
            return "-inf"
        return {"product": format_rational(self.product), "denom": self.denom}


def log_score(q: Distribution, p: Distribution) -> LogScore:
    """sum over states of q(state) * log p(state), with 0*log(0) = 0."""
    if q.space != p.space:
        raise DomainError("distributions use different state spaces")
    return LogScore.from_terms((q.of(s), p.of(s)) for s in q.support())


def log_score_argmax(
    q: Distribution, candidates: Sequence[Distribution]
) -> Distribution:
    """Candidate maximizing the expected log score under q; the first strict
    maximum in listed order wins."""
    if not candidates:
        raise DomainError("no candidates to score")
    best = None
    best_score = None
    for candidate in candidates:
        score = log_score(q, candidate)
        if best is None or score > best_score:
            best, best_score = candidate, score
    return best


# ---------------------------------------------------------------------------
# Log-score declaration game.


def kld_action_label(dist: Distribution) -> str:
    return "(" + ",".join(format_rational(v) for v in dist.vector) + ")"


def build_kld_game(
    structure: InformationStructure, tau: Signaling
) -> BayesianGame:
    """Log-domain game where each player declares one posterior from their
    menu under the given signaling and is scored by the likelihood the
    declaration assigns to the realized state."""
    atlas = posterior_atlas(structure, tau)
    menus = tuple(atlas.player_menu(i) for i in range(structure.n))
    actions = tuple(tuple(kld_action_label(d) for d in menu) for menu in menus)
    payoffs: dict[tuple[str, ActionProfile], tuple[Fraction, ...]] = {}
    for state in structure.space:
        for combo in itertools.product(*menus):
            profile = tuple(kld_action_label(d) for d in combo)
            payoffs[(state, profile)] = tuple(d.of(state) for d in combo)
    return BayesianGame(structure, actions, payoffs, log_domain=True)


def kld_menus(
    structure: InformationStructure, tau: Signaling
) -> tuple[tuple[Distribution, ...], ...]:
    atlas = posterior_atlas(structure, tau)
    return tuple(atlas.player_menu(i) for i in range(structure.n))


def true_posterior_at(
    structure: InformationStructure,
    player: int,
    tau: Signaling,
    block: tuple[str, ...],
    signal: str,
) -> Distribution:
    """The player's posterior at a reachable (block, signal) pair."""
    stoch = as_stochastic(tau)
    for state in block:
        if stoch.prob(state, signal) > 0:
            return stoch_posterior(structure, player, stoch, state, signal)
    raise DomainError(
        f"signal '{signal}' is unreachable from block {{{','.join(block)}}}"
    )


def truthful_kld_strategy(
    game: BayesianGame, tau: Signaling
) -> StrategyProfile:
    """Declare the true posterior at every reachable pair; fails when some
    true posterior is missing from the declaration menu."""
    structure = game.structure
    pairs = reachable_pairs(structure, tau)
    tables: list[dict[Pair, object]] = []
    for i in range(structure.n):
        table: dict[Pair, object] = {}
        for block, signal in pairs[i]:
            posterior = true_posterior_at(structure, i, tau, block, signal)
            label = kld_action_label(posterior)
            if label not in game.actions[i]:
                raise DomainError(
                    f"posterior {label} is not in player "
                    f"'{structure.player_names[i]}'s declaration menu"
                )
            table[(block, signal)] = label
        tables.append(table)
    return make_strategy(game, tau, tables)


def kld_expected_scores(
    game: BayesianGame, tau: Signaling, strategy: StrategyProfile
) -> tuple[LogScore, ...]:
    """Per-player expected log score under the signaling and strategy."""
    if not game.log_domain:
        raise DomainError("kld_expected_scores applies to log-domain games only")
    stoch = as_stochastic(tau)
    structure = game.structure
    terms: list[list[tuple[Fraction, Fraction]]] = [[] for _ in range(structure.n)]
    for state in structure.space:
        base = structure.prior.of(state)
        for signal in stoch.signals:
            w = base * stoch.prob(state, signal)
            if w == 0:
                continue
            mixtures = _branch_mixtures(structure, strategy, state, signal)
            for combo in itertools.product(*mixtures):
                weight = w
                for _, p in combo:
                    weight *= p
                values = game.payoff(state, tuple(a for a, _ in combo))
                for i in range(structure.n):
                    terms[i].append((weight, values[i]))
    return tuple(LogScore.from_terms(t) for t in terms)


def kld_aggregate(
    game: BayesianGame, tau: Signaling, strategy: StrategyProfile
) -> LogScore:
    scores = kld_expected_scores(game, tau, strategy)
    total = LogScore.zero()
    for score in scores:
        total = total + score
    return total


# ---------------------------------------------------------------------------
# Two-stage declaration game.


Declaration = tuple[Optional[str], Optional[Distribution], Optional[str]]
BOTTOM: Declaration = (None, None, None)


@dataclass(eq=False)
class TwoStageStrategy:
    """Per player: (block, observed signal) -> (declared signal, declared
    posterior, action), or the opt-out declaration (None, None, None)."""

    per_player: tuple[dict[Pair, Declaration], ...]

    def declaration(self, player: int, block: tuple[str, ...], signal: str) -> Declaration:
        try:
            return self.per_player[player][(block, signal)]
        except KeyError:
            raise DomainError(
                f"two-stage strategy for player {player} has no entry at block "
                f"{{{','.join(block)}}} with signal '{signal}'"
            ) from None


class TwoStageGame:
    """Declaration game that certifies a signaling's posterior geometry.

    Players first observe their block and the realized signal, then publicly
    declare a signal, a posterior from their menu, and an action inside the
    declared posterior's support.  Declarations that disagree on the signal,
    opt out, or name a jointly infeasible posterior profile cost everyone M;
    feasible declarations are settled by the matching belief game at the true
    state.  Truthful play earns each player exactly -1 in expectation.
    """

    def __init__(
        self,
        structure: InformationStructure,
        tau: Signaling,
        M: Optional[object] = None,
    ):
        if structure.n < 2:
            raise DomainError("the two-stage game needs at least two players")
        self.structure = structure
        self.tau2 = as_stochastic(tau)
        if self.tau2.space != structure.space:
            raise DomainError("signaling and structure use different state spaces")
        self.atlas = posterior_atlas(structure, self.tau2)
        self.menus = tuple(self.atlas.player_menu(i) for i in range(structure.n))
        self._branch_profiles: dict[tuple[str, str], tuple[Distribution, ...]] = {}
        feasible: dict[str, set[tuple[Distribution, ...]]] = {}
        for state in structure.space:
            for signal in self.tau2.signals:
                if self.tau2.prob(state, signal) == 0:
                    continue
                profile = tuple(
                    stoch_posterior(structure, i, self.tau2, state, signal)
                    for i in range(structure.n)
                )
                self._branch_profiles[(state, signal)] = profile
                feasible.setdefault(signal, set()).add(profile)
        self.feasible = {s: frozenset(ps) for s, ps in feasible.items()}
        self._belief_games = {
            profile: BeliefGame(structure.space, profile)
            for profiles in self.feasible.values()
            for profile in profiles
        }
        bound = self._payoff_bound()
        if M is None:
            self.M = bound
        else:
            self.M = parse_rational(M)
            if self.M < bound:
                raise DomainError(
                    f"penalty {self.M} is below the required bound {bound}"
                )
        self._menu_cache: dict[int, tuple[Declaration, ...]] = {}

    def _payoff_bound(self) -> Fraction:
        worst = Fraction(0)
        for game in self._belief_games.values():
            supports = [game.action_set(i) for i in range(game.n)]
            for state in self.structure.space:
                for actions in itertools.product(*supports):
                    for i in range(game.n):
                        worst = max(worst, abs(game.utility(i, state, actions)))
        n = self.structure.n
        return 2 + n * len(self.structure.space) * (1 + worst)

    def option_menu(self, player: int) -> tuple[Declaration, ...]:
        """Opt-out first, then (signal, posterior, action) in deterministic
        order."""
        if player not in self._menu_cache:
            options: list[Declaration] = [BOTTOM]
            for signal in self.tau2.signals:
                for posterior in self.menus[player]:
                    for action in posterior.support():
                        options.append((signal, posterior, action))
            self._menu_cache[player] = tuple(options)
        return self._menu_cache[player]

    def _check_declaration(self, player: int, declaration: Declaration) -> None:
        if declaration == BOTTOM:
            return
        signal, posterior, action = declaration
        if signal not in self.tau2.signals:
            raise DomainError(f"declared signal '{signal}' is not a signal of the game")
        if posterior not in self.menus[player]:
            raise DomainError(
                f"declared posterior is not in player {player}'s menu"
            )
        if action not in posterior.support():
            raise DomainError(
                f"action '{action}' is outside the declared posterior's support"
            )

    def truthful_strategy(self) -> TwoStageStrategy:
        """Declare the observed signal, the true posterior, and its first
        in-support state, at every reachable pair."""
        pairs = reachable_pairs(self.structure, self.tau2)
        tables = []
        for i in range(self.structure.n):
            table: dict[Pair, Declaration] = {}
            for block, signal in pairs[i]:
                posterior = true_posterior_at(
                    self.structure, i, self.tau2, block, signal
                )
                table[(block, signal)] = (signal, posterior, posterior.support()[0])
            tables.append(table)
        return TwoStageStrategy(tuple(tables))

    def validate_strategy(self, tau: Signaling, strategy: TwoStageStrategy) -> None:
        pairs = reachable_pairs(self.structure, tau)
        if len(strategy.per_player) != self.structure.n:
            raise InputError(
                f"expected strategies for {self.structure.n} players"
            )
        for i in range(self.structure.n):
            wanted = set(pairs[i])
            got = set(strategy.per_player[i])
            if wanted != got:
                missing = sorted(wanted - got)
                extra = sorted(got - wanted)
                block, signal = (missing or extra)[0]
                kind = "missing" if missing else "unreachable"
                raise DomainError(
                    f"two-stage strategy for player "
                    f"'{self.structure.player_names[i]}' has a {kind} entry at "
                    f"block {{{','.join(block)}}} with signal '{signal}'"
                )
            for declaration in strategy.per_player[i].values():
                self._check_declaration(i, declaration)

    def branch_payoffs(
        self, state: str, declarations: Sequence[Declaration]
    ) -> tuple[Fraction, ...]:
        """Settle one realized state against the players' declarations."""
        signals = {d[0] for d in declarations}
        if len(signals) != 1 or None in signals:
            return tuple(-self.M for _ in range(self.structure.n))
        declared_signal = next(iter(signals))
        profile = tuple(d[1] for d in declarations)
        if profile not in self.feasible.get(declared_signal, frozenset()):
            return tuple(-self.M for _ in range(self.structure.n))
        game = self._belief_games[profile]
        actions = tuple(d[2] for d in declarations)
        return tuple(
            game.utility(i, state, actions) for i in range(self.structure.n)
        )

    def _strategy_declarations(
        self, strategy: TwoStageStrategy, state: str, signal: str
    ) -> tuple[Declaration, ...]:
        return tuple(
            strategy.declaration(i, partition.block_of(state), signal)
            for i, partition in enumerate(self.structure.players)
        )

    def expected_payoffs(
        self, tau: Signaling, strategy: TwoStageStrategy
    ) -> tuple[Fraction, ...]:
        """Objective expectation of the settled payoffs over (state, signal)
        branches of the evaluation signaling."""
        stoch = as_stochastic(tau)
        self.validate_strategy(stoch, strategy)
        totals = [Fraction(0)] * self.structure.n
        for state in self.structure.space:
            base = self.structure.prior.of(state)
            for signal in stoch.signals:
                w = base * stoch.prob(state, signal)
                if w == 0:
                    continue
                values = self.branch_payoffs(
                    state, self._strategy_declarations(strategy, state, signal)
                )
                for i in range(self.structure.n):
                    totals[i] += w * values[i]
        return tuple(totals)

    def aggregate(self, tau: Signaling, strategy: TwoStageStrategy) -> Fraction:
        return sum(self.expected_payoffs(tau, strategy), Fraction(0))

    def is_equilibrium(
        self, tau: Signaling, strategy: TwoStageStrategy
    ) -> EquilibriumResult:
        """Sweep every player's option menu at every reachable pair; payoffs
        are additive across a player's pairs."""
        stoch = as_stochastic(tau)
        self.validate_strategy(stoch, strategy)
        pairs = reachable_pairs(self.structure, stoch)
        for i in range(self.structure.n):
            partition = self.structure.players[i]
            for block, signal in pairs[i]:
                current = self._pair_value(stoch, strategy, i, block, signal, None)
                for option in self.option_menu(i):
                    value = self._pair_value(
                        stoch, strategy, i, block, signal, option
                    )
                    if value > current:
                        witness = (
                            self.structure.player_names[i],
                            block,
                            signal,
                            option,
                        )
                        return EquilibriumResult(False, witness)
        return EquilibriumResult(True)

    def _pair_value(
        self,
        stoch: StochasticSignaling,
        strategy: TwoStageStrategy,
        player: int,
        block: tuple[str, ...],
        signal: str,
        replacement: Optional[Declaration],
    ) -> Fraction:
        total = Fraction(0)
        for state in block:
            w = self.structure.prior.of(state) * stoch.prob(state, signal)
            if w == 0:
                continue
            declarations = list(
                self._strategy_declarations(strategy, state, signal)
            )
            if replacement is not None:
                declarations[player] = replacement
            total += w * self.branch_payoffs(state, declarations)[player]
        return total

    def max_aggregate(self, tau: Signaling) -> Fraction:
        """Exact ceiling on the total expected payoff of any self-enforcing
        play under the evaluation signaling.

        Declarations (signal and posterior per slot) are maximized over
        jointly, but each slot's action is the acting player's own best
        response to their true conditional beliefs -- any profile without
        that property admits a profitable unilateral action change, so no
        equilibrium exceeds this value.  The total is additive over (signal,
        common-knowledge component) cells, and declarations are free per
        cell, so each cell maximizes independently.
        """
        stoch = as_stochastic(tau)
        if stoch.space != self.structure.space:
            raise DomainError("signaling and structure use different state spaces")
        structure = self.structure
        n = structure.n
        meet = ckc_decompose(structure.players)
        declaration_menu = []
        for i in range(n):
            options: list[tuple] = [(None, None)]
            for declared_signal in self.tau2.signals:
                for posterior in self.menus[i]:
                    options.append((declared_signal, posterior))
            declaration_menu.append(tuple(options))
        total = Fraction(0)
        for signal in stoch.signals:
            for component in meet.blocks:
                branches = []
                for state in component:
                    w = structure.prior.of(state) * stoch.prob(state, signal)
                    if w > 0:
                        branches.append((state, w))
                if not branches:
                    continue
                slots: list[tuple[int, tuple[str, ...]]] = []
                index: dict[tuple[int, tuple[str, ...]], int] = {}
                for i in range(n):
                    for state, _ in branches:
                        block = structure.players[i].block_of(state)
                        if (i, block) not in index:
                            index[(i, block)] = len(slots)
                            slots.append((i, block))
                positioned = [
                    (
                        state,
                        w,
                        tuple(
                            index[(i, structure.players[i].block_of(state))]
                            for i in range(n)
                        ),
                    )
                    for state, w in branches
                ]
                best = None
                for combo in itertools.product(
                    *(declaration_menu[i] for i, _ in slots)
                ):
                    value = self._cell_value_with_best_responses(
                        positioned, slots, combo
                    )
                    if best is None or value > best:
                        best = value
                total += best
        return total

    def _cell_value_with_best_responses(
        self,
        positioned: Sequence[tuple[str, Fraction, tuple[int, ...]]],
        slots: Sequence[tuple[int, tuple[str, ...]]],
        combo: Sequence[tuple],
    ) -> Fraction:
        """Value of one (signal, component) cell for fixed declarations,
        with every slot's action set to the owner's selfish best response."""
        feasibility = []
        for state, w, positions in positioned:
            decls = [combo[k] for k in positions]
            signals = {d[0] for d in decls}
            feasible = len(signals) == 1 and None not in signals
            if feasible:
                declared_signal = next(iter(signals))
                profile = tuple(d[1] for d in decls)
                feasible = profile in self.feasible.get(declared_signal, frozenset())
            feasibility.append(feasible)
        actions: list[Optional[str]] = []
        for k, (player, _) in enumerate(slots):
            declared_signal, posterior = combo[k]
            if posterior is None:
                actions.append(None)
                continue
            weight_at: dict[str, Fraction] = {}
            for (state, w, positions), feasible in zip(positioned, feasibility):
                if feasible and positions[player] == k:
                    weight_at[state] = weight_at.get(state, Fraction(0)) + w
            best_action = None
            best_ratio = None
            for action in posterior.support():
                ratio = weight_at.get(action, Fraction(0)) / posterior.of(action)
                if best_action is None or ratio > best_ratio:
                    best_action, best_ratio = action, ratio
            actions.append(best_action)
        value = Fraction(0)
        for (state, w, positions), feasible in zip(positioned, feasibility):
            if not feasible:
                value += w * (-self.M) * self.structure.n
                continue
            profile = tuple(combo[k][1] for k in positions)
            game = self._belief_games[profile]
            branch_actions = tuple(actions[k] for k in positions)
            value += w * sum(
                (
                    game.utility(i, state, branch_actions)
                    for i in range(self.structure.n)
                ),
                Fraction(0),
            )
        return value


def build_two_stage_game(
    structure: InformationStructure, tau: Signaling, M: Optional[object] = None
) -> TwoStageGame:
    return TwoStageGame(structure, tau, M)


def _max_over_components(
    structure: InformationStructure,
    stoch: StochasticSignaling,
    options_for: Callable[[int], Sequence],
    value_at: Callable[[str, str, tuple], Fraction],
) -> Fraction:
    """Maximize a branch-additive objective over pure measurable strategies.

    Every branch (state, signal) touches only the strategy slots
    (player-block, signal) inside the state's common-knowledge component, so
    the maximum decomposes exactly across (signal, component) blocks.
    """
    meet = ckc_decompose(structure.players)
    total = Fraction(0)
    for signal in stoch.signals:
        for component in meet.blocks:
            branches = []
            for state in component:
                w = structure.prior.of(state) * stoch.prob(state, signal)
                if w > 0:
                    branches.append((state, w))
            if not branches:
                continue
            slots: list[tuple[int, tuple[str, ...]]] = []
            index: dict[tuple[int, tuple[str, ...]], int] = {}
            for i in range(structure.n):
                for state, _ in branches:
                    block = structure.players[i].block_of(state)
                    if (i, block) not in index:
                        index[(i, block)] = len(slots)
                        slots.append((i, block))
            positioned = []
            for state, w in branches:
                positions = tuple(
                    index[(i, structure.players[i].block_of(state))]
                    for i in range(structure.n)
                )
                positioned.append((state, w, positions))
            best = None
            for combo in itertools.product(
                *(options_for(i) for i, _ in slots)
            ):
                value = Fraction(0)
                for state, w, positions in positioned:
                    picks = tuple(combo[k] for k in positions)
                    value += w * value_at(state, signal, picks)
                if best is None or value > best:
                    best = value
            total += best
    return total


# ---------------------------------------------------------------------------
# Combined two-stage + log-score game.


@dataclass(frozen=True)
class MixedValue:
    """A payoff with an exact rational part and an exact log-domain part.

    The two parts live on incomparable scales, so only componentwise
    equality and comparison are offered.
    """

    rational: Fraction
    log: LogScore

    def __add__(self, other: "MixedValue") -> "MixedValue":
        if not isinstance(other, MixedValue):
            return NotImplemented
        return MixedValue(self.rational + other.rational, self.log + other.log)

    def half(self) -> "MixedValue":
        return MixedValue(self.rational / 2, self.log.half())

    def as_json(self) -> dict:
        return {
            "rational": format_rational(self.rational),
            "log": self.log.as_json(),
        }


class CombinedGame:
    """Equal-weight combination of the two-stage declaration game and the
    log-score game built from the same signaling; payoffs are kept as exact
    (rational, log) pairs."""

    def __init__(
        self,
        structure: InformationStructure,
        tau: Signaling,
        M: Optional[object] = None,
    ):
        self.structure = structure
        self.stage = build_two_stage_game(structure, tau, M)
        self.kld = build_kld_game(structure, tau)
        self.tau2 = self.stage.tau2

    def expected_payoffs(
        self,
        tau: Signaling,
        stage_strategy: TwoStageStrategy,
        kld_strategy: StrategyProfile,
    ) -> tuple[MixedValue, ...]:
        stage_values = self.stage.expected_payoffs(tau, stage_strategy)
        kld_values = kld_expected_scores(self.kld, tau, kld_strategy)
        return tuple(
            MixedValue(v / 2, score.half())
            for v, score in zip(stage_values, kld_values)
        )

    def truthful_payoffs(self) -> tuple[MixedValue, ...]:
        return self.expected_payoffs(
            self.tau2,
            self.stage.truthful_strategy(),
            truthful_kld_strategy(self.kld, self.tau2),
        )


def build_combined_game(
    structure: InformationStructure, tau: Signaling, M: Optional[object] = None
) -> CombinedGame:
    return CombinedGame(structure, tau, M)


# ---------------------------------------------------------------------------
# Common-objective coordination value.


def best_common_payoff(game: BayesianGame, tau: Signaling) -> Fraction:
    """Highest expected common payoff over pure measurable strategy profiles.

    Requires all players to share one payoff function; maximization
    decomposes exactly over (signal, common-knowledge component) blocks.
    """
    if game.log_domain:
        raise DomainError("log-domain game: evaluate with kld_expected_scores")
    for (state, profile), values in game.payoffs.items():
        if any(v != values[0] for v in values):
            raise DomainError(
                f"payoffs differ across players at state '{state}' under "
                f"profile {profile!r}"
            )
    stoch = as_stochastic(tau)
    if stoch.space != game.structure.space:
        raise DomainError("signaling and structure use different state spaces")
    return _max_over_components(
        game.structure,
        stoch,
        lambda i: game.actions[i],
        lambda state, signal, picks: game.payoff(state, picks)[0],
    )
