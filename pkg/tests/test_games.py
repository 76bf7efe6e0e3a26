"""Game constructions and evaluators: Bayesian games, strategies, equilibria,
decision problems, belief games, exact log scores, declaration games, and the
common-objective coordination value."""

import random
from fractions import Fraction

import pytest

import oracles
from oraclegames import (
    BayesianGame,
    BeliefGame,
    DomainError,
    Distribution,
    InformationStructure,
    InputError,
    LogScore,
    MixedValue,
    Partition,
    Prior,
    ResourceLimitError,
    StateSpace,
    StochasticSignaling,
    belief_aggregate,
    belief_best_response,
    belief_expected_payoffs,
    belief_is_equilibrium,
    best_common_payoff,
    build_belief_game,
    build_combined_game,
    build_kld_game,
    build_permutation_game,
    build_two_stage_game,
    decision_value,
    enumerate_pure_equilibria,
    expected_payoffs,
    game_from_json,
    information_partition,
    is_equilibrium,
    kld_expected_scores,
    log_score,
    log_score_argmax,
    make_strategy,
    merge_garbled,
    ned_distribution,
    posterior_atlas,
    reachable_pairs,
    strategy_from_json,
    truthful_choices,
    truthful_kld_strategy,
)
from oraclegames.games import kld_action_label

SPACE2 = StateSpace(("x", "y"))
SPACE = StateSpace(("w1", "w2", "w3", "w4"))
PRIOR = Prior.uniform(SPACE)
P1 = Partition(SPACE, (("w1", "w2"), ("w3", "w4")))
P2 = Partition(SPACE, (("w1",), ("w2", "w3"), ("w4",)))
STRUCTURE = InformationStructure(SPACE, PRIOR, ("A", "B"), (P1, P2))


def _matching_pennies():
    space = SPACE2
    structure = InformationStructure(
        space,
        Prior.uniform(space),
        ("A", "B"),
        (Partition.trivial(space), Partition.trivial(space)),
    )
    actions = (("h", "t"), ("h", "t"))
    payoffs = {}
    for state in space:
        for a in "ht":
            for b in "ht":
                win = 1 if a == b else -1
                payoffs[(state, (a, b))] = (Fraction(win), Fraction(-win))
    return structure, BayesianGame(structure, actions, payoffs)


def _uninformative(structure):
    return StochasticSignaling(
        Partition.trivial(structure.space),
        ("u",),
        tuple((Fraction(1),) for _ in structure.space),
    )


def test_game_requires_total_payoffs():
    structure, game = _matching_pennies()
    payoffs = dict(game.payoffs)
    del payoffs[("x", ("h", "h"))]
    with pytest.raises(InputError):
        BayesianGame(structure, game.actions, payoffs)
    bad_width = {k: v[:1] for k, v in game.payoffs.items()}
    with pytest.raises(InputError):
        BayesianGame(structure, game.actions, bad_width)


def test_game_json_round_trip():
    structure, game = _matching_pennies()
    again = game_from_json(structure, game.as_json())
    assert again.payoffs == game.payoffs
    assert again.actions == game.actions


def test_minus_infinity_only_in_log_domain():
    structure, game = _matching_pennies()
    data = game.as_json()
    data["payoffs"]["x"]["h|h"] = ["-inf", "1"]
    with pytest.raises(InputError):
        game_from_json(structure, data)
    data["log_domain"] = True
    data["payoffs"] = {
        state: {key: ["1", "1"] for key in row}
        for state, row in data["payoffs"].items()
    }
    data["payoffs"]["x"]["h|h"] = ["-inf", "1"]
    parsed = game_from_json(structure, data)
    assert parsed.log_domain
    assert parsed.payoff("x", ("h", "h")) == (Fraction(0), Fraction(1))


def test_reachable_pairs_skip_zero_mass_signals():
    tau = StochasticSignaling.from_rows(
        Partition(SPACE, (("w1", "w2"), ("w3", "w4"))),
        ("s1", "s2"),
        {
            "w1": {"s1": 1},
            "w2": {"s1": 1},
            "w3": {"s2": 1},
            "w4": {"s2": 1},
        },
    )
    pairs = reachable_pairs(STRUCTURE, tau)
    assert pairs[0] == ((("w1", "w2"), "s1"), (("w3", "w4"), "s2"))
    assert (("w2", "w3"), "s1") in pairs[1] and (("w2", "w3"), "s2") in pairs[1]
    assert (("w1",), "s2") not in pairs[1]


def test_make_strategy_demands_exact_domain():
    structure, game = _matching_pennies()
    tau = _uninformative(structure)
    block = tuple(structure.space.states)
    good = make_strategy(game, tau, [{(block, "u"): "h"}, {(block, "u"): "t"}])
    assert good.mixture(0, block, "u") == {"h": Fraction(1)}
    with pytest.raises(DomainError):
        make_strategy(game, tau, [{}, {(block, "u"): "t"}])
    with pytest.raises(DomainError):
        make_strategy(
            game,
            tau,
            [
                {(block, "u"): "h", (block, "bogus"): "h"},
                {(block, "u"): "t"},
            ],
        )
    with pytest.raises(InputError):
        make_strategy(game, tau, [{(block, "u"): {"h": "1/2"}}, {(block, "u"): "t"}])


def test_strategy_json_round_trip_and_mixtures():
    structure, game = _matching_pennies()
    tau = _uninformative(structure)
    data = {"A": {"x,y|u": {"h": "1/3", "t": "2/3"}}, "B": {"x,y|u": "h"}}
    strategy = strategy_from_json(game, tau, data)
    block = tuple(structure.space.states)
    assert strategy.mixture(0, block, "u") == {
        "h": Fraction(1, 3),
        "t": Fraction(2, 3),
    }
    assert strategy.as_json(structure.player_names) == data
    with pytest.raises(InputError):
        strategy_from_json(game, tau, {"A": {"x|u": "h"}, "B": {"x,y|u": "h"}})
    with pytest.raises(InputError):
        strategy_from_json(game, tau, {"A": {"x,yu": "h"}, "B": {"x,y|u": "h"}})


def test_expected_payoffs_by_hand():
    structure, game = _matching_pennies()
    tau = _uninformative(structure)
    mixed = make_strategy(
        game,
        tau,
        [
            {(("x", "y"), "u"): {"h": Fraction(1, 2), "t": Fraction(1, 2)}},
            {(("x", "y"), "u"): "h"},
        ],
    )
    values = expected_payoffs(game, tau, mixed)
    assert values == (Fraction(0), Fraction(0))
    conditional = expected_payoffs(game, tau, mixed, given_event=("x",))
    assert conditional == (Fraction(0), Fraction(0))
    with pytest.raises(DomainError):
        expected_payoffs(game, tau, mixed, given_event=())


def test_ned_distribution_masses():
    structure, game = _matching_pennies()
    tau = _uninformative(structure)
    mixed = make_strategy(
        game,
        tau,
        [
            {(("x", "y"), "u"): {"h": Fraction(1, 2), "t": Fraction(1, 2)}},
            {(("x", "y"), "u"): "h"},
        ],
    )
    dist = ned_distribution(game, tau, mixed)
    assert sum(dist.mass.values()) == 1
    assert dist.of("x", ("h", "h")) == Fraction(1, 4)
    assert dist.of("x", ("t", "t")) == 0


def test_is_equilibrium_finds_the_profitable_deviation():
    structure, game = _matching_pennies()
    tau = _uninformative(structure)
    block = tuple(structure.space.states)
    pure = make_strategy(game, tau, [{(block, "u"): "h"}, {(block, "u"): "h"}])
    result = is_equilibrium(game, tau, pure)
    assert not result.holds
    player, dev_block, signal, action = result.witness
    assert player == "B" and dev_block == block and signal == "u" and action == "t"
    mixed = make_strategy(
        game,
        tau,
        [
            {(block, "u"): {"h": Fraction(1, 2), "t": Fraction(1, 2)}},
            {(block, "u"): {"h": Fraction(1, 2), "t": Fraction(1, 2)}},
        ],
    )
    assert is_equilibrium(game, tau, mixed).holds


def test_enumerate_pure_equilibria_and_cap():
    structure = InformationStructure(
        SPACE2,
        Prior.uniform(SPACE2),
        ("A", "B"),
        (Partition.singletons(SPACE2), Partition.trivial(SPACE2)),
    )
    actions = (("l", "r"), ("l", "r"))
    payoffs = {}
    for state in SPACE2:
        for a in ("l", "r"):
            for b in ("l", "r"):
                match = Fraction(1) if a == b else Fraction(0)
                payoffs[(state, (a, b))] = (match, match)
    game = BayesianGame(structure, actions, payoffs)
    tau = _uninformative(structure)
    found = enumerate_pure_equilibria(game, tau)
    # Pure coordination: both players play the same constant action; the
    # informed player must not split across her two singleton blocks.
    assert len(found) == 2
    with pytest.raises(ResourceLimitError):
        enumerate_pure_equilibria(game, tau, cap=1)


# ---------------------------------------------------------------------------
# Decision problems


def test_permutation_game_value_at_own_information():
    problem = build_permutation_game(STRUCTURE, 0, Partition.trivial(SPACE))
    base = information_partition(STRUCTURE, 0, Partition.trivial(SPACE))
    # Ranking a block perfectly is worth mass * (|block| + 1) / 2.
    expected = sum(
        (PRIOR.event_mass(b) * Fraction(len(b) + 1, 2) for b in base.blocks),
        Fraction(0),
    )
    assert decision_value(problem, base) == expected


def test_permutation_game_value_monotone_in_information():
    rng = random.Random(42)
    parts = [
        Partition(SPACE, blocks) for blocks in oracles.all_partitions(SPACE.states)
    ]
    problem = build_permutation_game(STRUCTURE, 1, Partition.trivial(SPACE))
    for _ in range(20):
        fine, coarse = rng.choice(parts), rng.choice(parts)
        if not oracles.naive_refines(fine.blocks, coarse.blocks):
            continue
        assert decision_value(problem, fine) >= decision_value(problem, coarse)


def test_permutation_game_penalizes_block_straddle():
    problem = build_permutation_game(STRUCTURE, 0, Partition.trivial(SPACE))
    base = information_partition(STRUCTURE, 0, Partition.trivial(SPACE))
    straddle = Partition(SPACE, (("w1", "w3"), ("w2", "w4")))
    assert decision_value(problem, straddle) < 0 < decision_value(problem, base)


def test_permutation_game_cap():
    wide = StateSpace(tuple(f"s{i}" for i in range(8)))
    structure = InformationStructure(
        wide,
        Prior.uniform(wide),
        ("A",),
        (Partition.trivial(wide),),
    )
    with pytest.raises(ResourceLimitError):
        build_permutation_game(structure, 0, Partition.trivial(wide), cap=100)


def test_information_partition_rejects_stochastic_sources():
    tau = _uninformative(STRUCTURE)
    with pytest.raises(DomainError):
        information_partition(STRUCTURE, 0, tau)


# ---------------------------------------------------------------------------
# Belief games


def _random_profile(rng, space, n):
    declared = []
    for _ in range(n):
        size = rng.randint(1, len(space))
        support = rng.sample(range(len(space)), size)
        nums = [0] * len(space)
        for j in support:
            nums[j] = rng.randint(1, 6)
        total = sum(nums)
        declared.append(
            Distribution(space, tuple(Fraction(k, total) for k in nums))
        )
    return tuple(declared)


def test_belief_game_scoring_by_hand():
    space = SPACE2
    p = (
        Distribution(space, (Fraction(1, 3), Fraction(2, 3))),
        Distribution(space, (Fraction(1), Fraction(0))),
    )
    game = BeliefGame(space, p)
    assert game.action_set(1) == ("x",)
    assert game.r_value(0, "x", "x") == 3
    assert game.r_value(0, "x", "y") == 0
    assert game.r_value(1, "x", "y") == -2
    # At state x both declared supports contain x.
    assert game.utility(0, "x", ("x", "x")) == 3 - 2 * 1
    # At state y player 1's declaration missed and is docked 2, which in turn
    # is credited to player 0 through the shared term only when y is inside
    # player 1's support -- it is not, so no share is applied.
    assert game.utility(0, "y", ("x", "x")) == 0
    assert game.utility(1, "y", ("x", "x")) == -2


def test_belief_truthful_play_pays_minus_one_each():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.choice((2, 3))
        size = rng.randint(2, 4)
        space = StateSpace(tuple(f"s{i}" for i in range(size)))
        declared = _random_profile(rng, space, n)
        game = build_belief_game(declared)
        choices = truthful_choices(game)
        values = belief_expected_payoffs(game, declared, choices)
        assert values == (Fraction(-1),) * n
        assert belief_is_equilibrium(game, declared, choices)
        assert belief_aggregate(game, declared, choices) == -n


def test_belief_perturbations_strictly_lose_value():
    rng = random.Random(12)
    checked = 0
    while checked < 60:
        n = rng.choice((2, 3))
        size = rng.randint(2, 4)
        space = StateSpace(tuple(f"s{i}" for i in range(size)))
        declared = _random_profile(rng, space, n)
        beliefs = list(declared)
        k = rng.randrange(n)
        perturbed = _random_profile(rng, space, 1)[0]
        if perturbed == declared[k]:
            continue
        beliefs[k] = perturbed
        game = build_belief_game(declared)
        choices = tuple(
            belief_best_response(game, i, beliefs[i]) for i in range(n)
        )
        assert belief_aggregate(game, beliefs, choices) < -n
        checked += 1


def test_belief_best_response_maximizes_likelihood_ratio():
    space = SPACE2
    declared = (
        Distribution(space, (Fraction(1, 4), Fraction(3, 4))),
        Distribution(space, (Fraction(1, 2), Fraction(1, 2))),
    )
    game = BeliefGame(space, declared)
    belief = Distribution(space, (Fraction(1, 2), Fraction(1, 2)))
    # Ratios for player 0: x -> 2, y -> 2/3.
    assert belief_best_response(game, 0, belief) == "x"
    assert not belief_is_equilibrium(game, (belief, belief), ("y", "x"))


def test_belief_game_input_validation():
    space = SPACE2
    lone = (Distribution(space, (Fraction(1), Fraction(0))),)
    with pytest.raises(DomainError):
        BeliefGame(space, lone)
    with pytest.raises(DomainError):
        build_belief_game(())
    declared = _random_profile(random.Random(1), space, 2)
    game = build_belief_game(declared)
    outside = [a for a in space.states if a not in game.action_set(0)]
    if outside:
        with pytest.raises(DomainError):
            belief_expected_payoffs(game, declared, (outside[0], "x"))


# ---------------------------------------------------------------------------
# Exact log scores


def test_log_score_from_terms_by_hand():
    q = Distribution(SPACE2, (Fraction(1, 2), Fraction(1, 2)))
    p = Distribution(SPACE2, (Fraction(1, 4), Fraction(3, 4)))
    score = log_score(q, p)
    assert score.product == Fraction(3, 16) and score.denom == 2
    own = log_score(q, q)
    assert own.product == Fraction(1, 4) and own.denom == 2
    assert own > score


def test_log_score_zero_candidate_mass_is_minus_infinity():
    q = Distribution(SPACE2, (Fraction(1, 2), Fraction(1, 2)))
    p = Distribution(SPACE2, (Fraction(1), Fraction(0)))
    assert log_score(q, p).neg_inf
    assert log_score(p, p).product == 1  # 0 * log 0 contributes nothing


def test_log_score_equality_is_representation_independent():
    a = LogScore(False, Fraction(1, 4), 2)
    b = LogScore(False, Fraction(1, 2), 1)
    assert a == b and a <= b and a >= b
    assert (a == "not a score") is False


def test_log_score_addition_and_half():
    a = LogScore(False, Fraction(2), 1)  # log 2
    b = LogScore(False, Fraction(8), 2)  # (log 8)/2 = 1.5 log 2
    total = a + b
    assert total == LogScore(False, Fraction(32), 2)  # 2.5 log 2
    assert total.half() == LogScore(False, Fraction(32), 4)
    neg = LogScore.minus_infinity()
    assert (a + neg).neg_inf
    assert neg < a and not neg > a and neg == LogScore.minus_infinity()


def test_log_score_validation():
    with pytest.raises(InputError):
        LogScore(False, Fraction(1), 0)
    with pytest.raises(InputError):
        LogScore(False, Fraction(0), 1)
    with pytest.raises(InputError):
        LogScore.from_terms([(Fraction(-1), Fraction(1))])
    with pytest.raises(TypeError):
        LogScore.zero() < 3


def test_log_score_argmax_is_strictly_proper_on_random_menus():
    rng = random.Random(77)
    for _ in range(40):
        size = rng.randint(2, 4)
        space = StateSpace(tuple(f"s{i}" for i in range(size)))
        menu = list({d for d in _random_profile(rng, space, rng.randint(2, 5))})
        menu.sort(key=lambda d: d.vector)
        for q in menu:
            assert log_score_argmax(q, menu) == q
            for p in menu:
                if p != q:
                    assert log_score(q, q) > log_score(q, p)


# ---------------------------------------------------------------------------
# Declaration games


def _example_signaling():
    oracle = Partition.singletons(SPACE)
    return StochasticSignaling.from_rows(
        oracle,
        ("s1", "s2", "s3"),
        {
            "w1": {"s1": 0, "s2": "1/2", "s3": "1/2"},
            "w2": {"s1": "1/4", "s2": "1/2", "s3": "1/4"},
            "w3": {"s1": "1/4", "s2": "1/2", "s3": "1/4"},
            "w4": {"s1": "1/2", "s2": "1/2", "s3": 0},
        },
    )


def test_kld_game_is_log_domain_and_guards_evaluators():
    tau = _example_signaling()
    game = build_kld_game(STRUCTURE, tau)
    assert game.log_domain
    strategy = truthful_kld_strategy(game, tau)
    with pytest.raises(DomainError):
        expected_payoffs(game, tau, strategy)
    with pytest.raises(DomainError):
        is_equilibrium(game, tau, strategy)
    with pytest.raises(DomainError):
        enumerate_pure_equilibria(game, tau)


def test_truthful_kld_scores_match_direct_computation():
    tau = _example_signaling()
    game = build_kld_game(STRUCTURE, tau)
    strategy = truthful_kld_strategy(game, tau)
    scores = kld_expected_scores(game, tau, strategy)
    from oraclegames import stoch_posterior

    for i in range(STRUCTURE.n):
        terms = []
        for state in SPACE:
            for sig in tau.signals:
                w = PRIOR.of(state) * tau.prob(state, sig)
                if w == 0:
                    continue
                post = stoch_posterior(STRUCTURE, i, tau, state, sig)
                terms.append((w, post.of(state)))
        assert scores[i] == LogScore.from_terms(terms)


def test_truthful_kld_strategy_requires_menu_membership():
    tau = _example_signaling()
    game = build_kld_game(STRUCTURE, tau)
    other = StochasticSignaling.from_rows(
        Partition.singletons(SPACE),
        ("t1", "t2"),
        {
            "w1": {"t1": "1/4", "t2": "3/4"},
            "w2": {"t1": "3/8", "t2": "5/8"},
            "w3": {"t1": "3/8", "t2": "5/8"},
            "w4": {"t1": "1/4", "t2": "3/4"},
        },
    )
    with pytest.raises(DomainError):
        truthful_kld_strategy(game, other)


def test_kld_action_labels_are_exact_vectors():
    d = Distribution(SPACE2, (Fraction(1, 3), Fraction(2, 3)))
    assert kld_action_label(d) == "(1/3,2/3)"


def _small_two_stage_cases(rng, count):
    """Random 2-player structures with <=2 blocks per player partition and a
    2-signal kernel, small enough to sweep exactly."""
    cases = []
    while len(cases) < count:
        size = rng.randint(3, 4)
        states = tuple(f"s{i}" for i in range(size))
        space = StateSpace(states)
        nums = [rng.randint(1, 4) for _ in states]
        prior = Prior(space, tuple(Fraction(k, sum(nums)) for k in nums))
        small = [
            blocks
            for blocks in oracles.all_partitions(states)
            if len(blocks) <= 2
        ]
        players = (
            Partition(space, rng.choice(small)),
            Partition(space, rng.choice(small)),
        )
        oracle = Partition(space, rng.choice(small))
        rows = {}
        for block in oracle.blocks:
            a = rng.randint(0, 3)
            b = rng.randint(0, 3)
            if a + b == 0:
                a = 1
            row = {"t1": Fraction(a, a + b), "t2": Fraction(b, a + b)}
            for state in block:
                rows[state] = row
        tau = StochasticSignaling.from_rows(oracle, ("t1", "t2"), rows)
        structure = InformationStructure(space, prior, ("A", "B"), players)
        cases.append((structure, tau))
    return cases


def test_two_stage_truthful_play_and_ceiling():
    rng = random.Random(5)
    for structure, tau in _small_two_stage_cases(rng, 12):
        game = build_two_stage_game(structure, tau)
        truthful = game.truthful_strategy()
        values = game.expected_payoffs(tau, truthful)
        assert values == (Fraction(-1),) * structure.n
        assert game.aggregate(tau, truthful) == -structure.n
        assert game.is_equilibrium(tau, truthful).holds
        assert game.max_aggregate(tau) == -structure.n


def test_two_stage_ceiling_never_beats_truthful_under_garbling():
    rng = random.Random(6)
    for structure, tau in _small_two_stage_cases(rng, 8):
        game = build_two_stage_game(structure, tau)
        nums = [rng.randint(0, 2) for _ in range(2)]
        if sum(nums) == 0:
            nums[0] = 1
        row1 = {
            "g1": Fraction(nums[0], sum(nums)),
            "g2": Fraction(nums[1], sum(nums)),
        }
        nums2 = [rng.randint(0, 2) for _ in range(2)]
        if sum(nums2) == 0:
            nums2[1] = 1
        row2 = {
            "g1": Fraction(nums2[0], sum(nums2)),
            "g2": Fraction(nums2[1], sum(nums2)),
        }
        merged = merge_garbled(tau, {"t1": row1, "t2": row2})
        assert game.max_aggregate(merged) <= -structure.n


def test_two_stage_penalty_bound_and_mismatches():
    rng = random.Random(9)
    structure, tau = _small_two_stage_cases(rng, 1)[0]
    game = build_two_stage_game(structure, tau)
    with pytest.raises(DomainError):
        build_two_stage_game(structure, tau, M=game.M - 1)
    bigger = build_two_stage_game(structure, tau, M=game.M + 5)
    assert bigger.M == game.M + 5
    # A lone opt-out poisons the branch for everyone.
    from oraclegames.games import BOTTOM

    truthful = game.truthful_strategy()
    tables = [dict(t) for t in truthful.per_player]
    some_pair = next(iter(tables[0]))
    tables[0][some_pair] = BOTTOM
    from oraclegames import TwoStageStrategy

    broken = TwoStageStrategy((tables[0], tables[1]))
    block, signal = some_pair
    state = block[0]
    declarations = tuple(
        broken.declaration(i, structure.players[i].block_of(state), signal)
        for i in range(structure.n)
    )
    assert game.branch_payoffs(state, declarations) == (-game.M,) * structure.n


def test_two_stage_needs_two_players():
    solo = InformationStructure(
        SPACE, PRIOR, ("A",), (Partition.trivial(SPACE),)
    )
    with pytest.raises(DomainError):
        build_two_stage_game(solo, _example_signaling())


def test_mixed_value_algebra():
    a = MixedValue(Fraction(1, 2), LogScore(False, Fraction(2), 1))
    b = MixedValue(Fraction(1, 3), LogScore(False, Fraction(2), 2))
    total = a + b
    assert total.rational == Fraction(5, 6)
    assert total.log == LogScore(False, Fraction(8), 2)
    assert a.half().rational == Fraction(1, 4)
    assert a.as_json() == {"rational": "1/2", "log": {"product": "2", "denom": 1}}


def test_combined_game_is_the_equal_weight_pair():
    tau = _example_signaling()
    combined = build_combined_game(STRUCTURE, tau)
    stage_strategy = combined.stage.truthful_strategy()
    kld_strategy = truthful_kld_strategy(combined.kld, tau)
    values = combined.expected_payoffs(tau, stage_strategy, kld_strategy)
    stage_values = combined.stage.expected_payoffs(tau, stage_strategy)
    kld_values = kld_expected_scores(combined.kld, tau, kld_strategy)
    for value, sv, kv in zip(values, stage_values, kld_values):
        assert value.rational == sv / 2
        assert value.log == kv.half()
    assert combined.truthful_payoffs() == values


# ---------------------------------------------------------------------------
# Common-objective coordination value


def _random_common_game(rng, structure, n_actions):
    labels = tuple(f"a{j}" for j in range(n_actions))
    actions = (labels, labels)
    payoffs = {}
    import itertools

    for state in structure.space:
        for profile in itertools.product(labels, repeat=2):
            value = Fraction(rng.randint(-4, 6))
            payoffs[(state, profile)] = (value, value)
    return BayesianGame(structure, actions, payoffs)


def test_best_common_payoff_requires_common_payoffs():
    structure, game = _matching_pennies()
    with pytest.raises(DomainError):
        best_common_payoff(game, _uninformative(structure))


def test_best_common_payoff_small_example():
    # A guessing game: both players must name the realized state, but only
    # player A can tell the two states apart.
    structure = InformationStructure(
        SPACE2,
        Prior.uniform(SPACE2),
        ("A", "B"),
        (Partition.singletons(SPACE2), Partition.trivial(SPACE2)),
    )
    actions = (("x", "y"), ("x", "y"))
    payoffs = {}
    for state in SPACE2:
        for a in ("x", "y"):
            for b in ("x", "y"):
                value = Fraction(int(a == state) + int(b == state))
                payoffs[(state, (a, b))] = (value, value)
    game = BayesianGame(structure, actions, payoffs)
    # Without a signal: A always scores, B guesses one state (1/2 on average).
    assert best_common_payoff(game, _uninformative(structure)) == Fraction(3, 2)
    reveal = StochasticSignaling.from_rows(
        Partition.singletons(SPACE2),
        ("rx", "ry"),
        {"x": {"rx": 1}, "y": {"ry": 1}},
    )
    assert best_common_payoff(game, reveal) == Fraction(2)


def test_best_common_payoff_monotone_under_merging_signals():
    rng = random.Random(21)
    for structure, tau in _small_two_stage_cases(rng, 10):
        game = _random_common_game(rng, structure, 3)
        merged = merge_garbled(
            tau, {"t1": {"g": "1"}, "t2": {"g": "1"}}
        )  # drop all information
        assert best_common_payoff(game, tau) >= best_common_payoff(game, merged)
