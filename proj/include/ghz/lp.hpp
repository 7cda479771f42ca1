#pragma once

#include <cstdint>
#include <vector>

#include "ghz/classical.hpp"
#include "ghz/games.hpp"
#include "ghz/rational.hpp"

namespace ghz {

// omega(G) = max over mixtures of deterministic strategies of the worst-case
// (over promised inputs) win probability: the value of the zero-sum matrix
// game with inputs as rows and deterministic strategies as columns.
struct LpResult {
    Rational value;                       // certified exactly
    std::vector<std::uint64_t> support;   // strategy encodings with positive mass
    std::vector<Rational> mixture;        // masses, aligned with support
    std::vector<std::size_t> tight_rows;  // worst-case input indices
    std::vector<Rational> dual_mixture;   // adversary distribution over tight rows
    bool certified;
};

// Float simplex locates the optimal support; the support system is then
// re-solved in exact rationals and both primal and dual feasibility are
// checked exactly, so `value` carries a proof when `certified` is true.
LpResult exact_omega_lp(const GameSpec& spec, std::uint64_t limit = kDefaultWorkBound);

}  // namespace ghz
