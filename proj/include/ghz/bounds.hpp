#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghz/classical.hpp"
#include "ghz/games.hpp"
#include "ghz/rational.hpp"

namespace ghz {

// floor(lg((n+1)/4)) + 1, the minimum answer bit-width for the regime
// ceil(n/2) < 2M; may be <= 0 for n <= 2.
int ell(int n);

// m must also be at least 1.
int effective_min_m(int n);

// ceil(n/2) < 2M
bool regime_ok(int n, int m_modulo);

// 1/2 + 1/2^ceil(n/2)
Rational mermin_bound(int n);

// Number of bitstrings s in {0,1}^n with |s| == j (mod q).
BigInt binom_mod_q(int n, int j, int q);

// Max number of x in {0,1}^n with sum a_j x_j (mod q) in a size-r residue
// set, over odd coefficients a_j and all choices of the set.
BigInt griggs_bound(int n, int q, int r);

// C(n, floor(n/2)) / 2^(n-1)
Rational tight_bound(int n);

// 2 sqrt(2/pi) / sqrt(n)
double asymptotic_bound(int n);

enum class Verdict { NotPseudoTelepathy, PseudoTelepathy, UnresolvedByTheorem };

struct Classification {
    Verdict verdict;
    std::optional<DeterministicStrategy> perfect_witness;  // gcd(D,M) = 1 case
    std::optional<int> prime;                              // smallest common prime factor
};

Classification classify_game(const GameSpec& spec);

std::string verdict_name(Verdict v);

struct CrossoverRow {
    int n;
    int ell;
    bool regime;
    Rational mermin;
    Rational tight;
    double asymptote;
};

struct CrossoverTable {
    int m_bits;
    std::vector<CrossoverRow> rows;
    // First n where the marker holds, 0 if not reached by n_max.
    int first_tight_below_mermin;
    int first_tight_below_half;
    int first_tight_below_quarter;
};

CrossoverTable crossover_scan(int m_bits, int n_max);

}  // namespace ghz
