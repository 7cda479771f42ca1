#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ghz/games.hpp"
#include "ghz/rational.hpp"

namespace ghz {

// Default cap on elementary evaluations for exhaustive sweeps.
inline constexpr std::uint64_t kDefaultWorkBound = std::uint64_t(1) << 28;

// Per-player answer tables: tables[j][x_j] in [0..M), j 0-based.
struct DeterministicStrategy {
    std::vector<std::vector<int>> tables;

    int answer(int player, int input) const { return tables[player][input]; }
};

// The D = 2 parametrization: d_j = S_j(1) - S_j(0) mod M, b = sum_j S_j(0)
// mod M.  Win on x depends only on (d, b).
struct ReducedStrategy {
    std::vector<int> d;
    int b;
};

struct StrategyReport {
    BigInt wins;
    BigInt total;        // |P| = D^(n-1)
    Rational rate;       // wins / total
    Rational expectation;  // 2*rate - 1
};

StrategyReport make_report(const BigInt& wins, const BigInt& total);

StrategyReport eval_deterministic(const GameSpec& spec, const DeterministicStrategy& strat,
                                  std::uint64_t limit = kDefaultWorkBound);

struct SearchResult {
    Rational value;
    DeterministicStrategy witness;
};

struct ReducedSearchResult {
    Rational value;
    ReducedStrategy witness;
};

// Exact maximum over all (M^D)^n deterministic strategies; witness is the
// strategy with the smallest base-M encoding among the maximizers.
SearchResult brute_force_omega_tilde(const GameSpec& spec,
                                     std::uint64_t limit = kDefaultWorkBound);

ReducedStrategy reduce_strategy(const GameSpec& spec, const DeterministicStrategy& strat);

// Win predicate of a reduced strategy on input x: sum_j (2d_j - 1) x_j == -2b
// (mod 2M).
bool reduced_wins(const GameSpec& spec, const ReducedStrategy& rs, const InputString& x);

// Maximum win rate over all (d, b); equals brute_force_omega_tilde for D = 2.
ReducedSearchResult brute_force_reduced(const GameSpec& spec,
                                        std::uint64_t limit = kDefaultWorkBound);

using SharedBitstring = std::vector<int>;  // length n, |s| == floor(n/2) (mod 2)

bool shared_string_valid(int n, const SharedBitstring& s);

// The shared-randomness strategy: player j >= 2 answers s_j x_j, player 1
// answers s_1 x_1 + (floor(n/2) - |s|)/2 mod M.
OutputString halving_answers(int n, int m, const SharedBitstring& s, const InputString& x);

// |s xor x| == floor(n/2); equivalent to the game's winning condition when
// ceil(n/2) < 2M.
bool halving_win_predicate(int n, int m, const SharedBitstring& s, const InputString& x);

// Win probability of the halving strategy on input x, exact over all of S.
// Requires D = 2, M = 2^m in the regime ceil(n/2) < 2M.
Rational exact_win_probability(const GameSpec& spec, const InputString& x);

// gcd(D, M) = 1: player j answers a*x_j mod M with a*D == 1 (mod M); perfect.
DeterministicStrategy bezout_strategy(const GameSpec& spec);

struct FootnoteResult {
    DeterministicStrategy strat;
    Rational rate;
};

// For M = 2(2r+1): all players pick d_j with 2d_j - 1 = M/2, a divisor of 2M,
// and player 1 carries the better of the two constant offsets.  Wins on at
// least half the promised inputs.
FootnoteResult footnote_strategy(const GameSpec& spec);

struct HalvingTag {};
using StrategyHandle = std::variant<DeterministicStrategy, HalvingTag>;

struct MonteCarloResult {
    double estimate;
    double halfwidth_95;
    std::uint64_t trials;
    std::uint64_t seed;
};

MonteCarloResult monte_carlo(const GameSpec& spec, const StrategyHandle& strategy,
                             std::uint64_t trials, std::uint64_t seed);

}  // namespace ghz
