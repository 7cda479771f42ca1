#include "ghz/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ghz/rng.hpp"

namespace ghz {

StrategyReport make_report(const BigInt& wins, const BigInt& total) {
    Rational rate(wins, total);
    return {wins, total, rate, 2 * rate - 1};
}

static std::uint64_t work_pow(std::uint64_t base, int exp, std::uint64_t limit,
                              const std::string& hint = "") {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base)
            throw WorkBoundExceededError("work bound exceeded: " + std::to_string(base) + "^" +
                                         std::to_string(exp) + " > " + std::to_string(limit) +
                                         hint);
        r *= base;
    }
    return r;
}

static OutputString answers_for(const DeterministicStrategy& strat, const InputString& x) {
    OutputString y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = strat.tables[j][x[j]];
    return y;
}

StrategyReport eval_deterministic(const GameSpec& spec, const DeterministicStrategy& strat,
                                  std::uint64_t limit) {
    spec.validate();
    if (static_cast<int>(strat.tables.size()) != spec.n)
        throw MalformedInputError("strategy has wrong number of tables");
    for (const auto& t : strat.tables) {
        if (static_cast<int>(t.size()) != spec.d)
            throw MalformedInputError("strategy table has wrong arity");
        for (int e : t)
            if (e < 0 || e >= spec.m) throw MalformedInputError("strategy answer out of range");
    }
    work_pow(spec.d, spec.n, limit);
    BigInt wins = 0, total = 0;
    for (const InputString& x : enumerate_promise(spec, limit)) {
        if (is_winning(spec, x, answers_for(strat, x))) ++wins;
        ++total;
    }
    return make_report(wins, total);
}

// Strategies are encoded as base-M integers over the concatenated tables,
// player 1's table in the least significant digits.
static DeterministicStrategy decode_strategy(const GameSpec& spec, std::uint64_t code) {
    DeterministicStrategy s;
    s.tables.assign(spec.n, std::vector<int>(spec.d));
    for (int j = 0; j < spec.n; ++j)
        for (int x = 0; x < spec.d; ++x) {
            s.tables[j][x] = static_cast<int>(code % spec.m);
            code /= spec.m;
        }
    return s;
}

SearchResult brute_force_omega_tilde(const GameSpec& spec, std::uint64_t limit) {
    spec.validate();
    std::string hint = spec.d == 2 ? "; try the reduced search (--reduced)" : "";
    std::uint64_t num_strategies = work_pow(spec.m, spec.d * spec.n, limit, hint);
    std::vector<InputString> inputs = enumerate_promise(spec, limit);

    std::uint64_t best_wins = 0;
    std::uint64_t best_code = 0;
    for (std::uint64_t code = 0; code < num_strategies; ++code) {
        DeterministicStrategy s = decode_strategy(spec, code);
        std::uint64_t wins = 0;
        for (const InputString& x : inputs)
            if (is_winning(spec, x, answers_for(s, x))) ++wins;
        if (wins > best_wins || code == 0) {
            best_wins = wins;
            best_code = code;
        }
    }
    return {Rational(best_wins, inputs.size()), decode_strategy(spec, best_code)};
}

ReducedStrategy reduce_strategy(const GameSpec& spec, const DeterministicStrategy& strat) {
    if (spec.d != 2) throw UnsupportedDivisorError("reduction defined only for divisor 2");
    if (static_cast<int>(strat.tables.size()) != spec.n)
        throw MalformedInputError("strategy has wrong number of tables");
    ReducedStrategy rs;
    rs.d.resize(spec.n);
    long long b = 0;
    for (int j = 0; j < spec.n; ++j) {
        rs.d[j] = ((strat.tables[j][1] - strat.tables[j][0]) % spec.m + spec.m) % spec.m;
        b += strat.tables[j][0];
    }
    rs.b = static_cast<int>(b % spec.m);
    return rs;
}

bool reduced_wins(const GameSpec& spec, const ReducedStrategy& rs, const InputString& x) {
    if (spec.d != 2) throw UnsupportedDivisorError("reduction defined only for divisor 2");
    const int q = 2 * spec.m;
    long long sum = 0;
    for (int j = 0; j < spec.n; ++j)
        if (x[j]) sum += 2 * rs.d[j] - 1;
    long long lhs = ((sum % q) + q) % q;
    long long rhs = ((-2LL * rs.b) % q + q) % q;
    return lhs == rhs;
}

ReducedSearchResult brute_force_reduced(const GameSpec& spec, std::uint64_t limit) {
    spec.validate();
    if (spec.d != 2) throw UnsupportedDivisorError("reduced search defined only for divisor 2");
    const int m = spec.m;
    const int q = 2 * m;
    BigInt work = BigInt(1);
    for (int i = 0; i <= spec.n; ++i) work *= m;
    work <<= spec.n - 1;
    if (work > limit)
        throw WorkBoundExceededError("work bound exceeded: M^(n+1)*2^(n-1) = " + work.str() +
                                     " > " + std::to_string(limit));

    std::uint64_t num_d = 1;
    for (int i = 0; i < spec.n; ++i) num_d *= m;

    // For each d, count winning x per residue of sum_j (2d_j - 1) x_j mod 2M
    // restricted to even-weight x, by a parity x residue DP over players.
    std::vector<std::uint64_t> dp(2 * q), next(2 * q);
    std::vector<int> d(spec.n);
    std::uint64_t best_wins = 0;
    ReducedStrategy best{std::vector<int>(spec.n, 0), 0};
    bool have_best = false;
    for (std::uint64_t code = 0; code < num_d; ++code) {
        std::uint64_t c = code;
        for (int j = 0; j < spec.n; ++j) {
            d[j] = static_cast<int>(c % m);
            c /= m;
        }
        std::fill(dp.begin(), dp.end(), 0);
        dp[0] = 1;  // parity 0, residue 0
        for (int j = 0; j < spec.n; ++j) {
            int a = ((2 * d[j] - 1) % q + q) % q;
            std::fill(next.begin(), next.end(), 0);
            for (int p = 0; p < 2; ++p)
                for (int r = 0; r < q; ++r) {
                    std::uint64_t v = dp[p * q + r];
                    if (!v) continue;
                    next[p * q + r] += v;
                    next[(p ^ 1) * q + (r + a) % q] += v;
                }
            dp.swap(next);
        }
        for (int b = 0; b < m; ++b) {
            int rhs = ((-2 * b) % q + q) % q;
            std::uint64_t wins = dp[rhs];  // parity 0 block
            if (!have_best || wins > best_wins) {
                best_wins = wins;
                best.d = d;
                best.b = b;
                have_best = true;
            }
        }
    }
    std::uint64_t total = std::uint64_t(1) << (spec.n - 1);
    return {Rational(best_wins, total), best};
}

bool shared_string_valid(int n, const SharedBitstring& s) {
    if (static_cast<int>(s.size()) != n) return false;
    int weight = 0;
    for (int bit : s) {
        if (bit != 0 && bit != 1) return false;
        weight += bit;
    }
    return weight % 2 == (n / 2) % 2;
}

OutputString halving_answers(int n, int m, const SharedBitstring& s, const InputString& x) {
    if (!shared_string_valid(n, s))
        throw InvalidSharedStringError("shared string fails the parity membership condition");
    GameSpec spec{n, 2, m};
    if (!validate_input(spec, x)) throw PromiseViolationError("halving: input weight is odd");
    int weight_s = std::accumulate(s.begin(), s.end(), 0);
    OutputString y(n);
    for (int j = 1; j < n; ++j) y[j] = s[j] * x[j];
    int offset = (n / 2 - weight_s) / 2;  // exact by the parity invariant
    y[0] = ((s[0] * x[0] + offset) % m + m) % m;
    return y;
}

bool halving_win_predicate(int n, int m, const SharedBitstring& s, const InputString& x) {
    if ((n + 1) / 2 >= 2 * m)
        throw OutOfRegimeError("halving predicate needs ceil(n/2) < 2M");
    if (!shared_string_valid(n, s))
        throw InvalidSharedStringError("shared string fails the parity membership condition");
    GameSpec spec{n, 2, m};
    if (!validate_input(spec, x)) throw PromiseViolationError("halving: input weight is odd");
    int dist = 0;
    for (int j = 0; j < n; ++j) dist += s[j] ^ x[j];
    return dist == n / 2;
}

Rational exact_win_probability(const GameSpec& spec, const InputString& x) {
    spec.validate();
    if (spec.d != 2) throw UnsupportedDivisorError("halving strategy defined only for divisor 2");
    if ((spec.m & (spec.m - 1)) != 0)
        throw OutOfRegimeError("halving analysis needs M a power of 2");
    if ((spec.n + 1) / 2 >= 2 * spec.m)
        throw OutOfRegimeError("halving analysis needs ceil(n/2) < 2M");
    if (!validate_input(spec, x)) throw PromiseViolationError("input weight is odd");
    checked_pow(2, spec.n, kDefaultWorkBound);

    const int n = spec.n;
    BigInt wins = 0;
    std::uint64_t members = 0;
    SharedBitstring s(n);
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
        int weight = 0;
        for (int j = 0; j < n; ++j) {
            s[j] = static_cast<int>((code >> j) & 1);
            weight += s[j];
        }
        if (weight % 2 != (n / 2) % 2) continue;
        ++members;
        if (is_winning(spec, x, halving_answers(n, spec.m, s, x))) ++wins;
    }
    return Rational(wins, members);
}

DeterministicStrategy bezout_strategy(const GameSpec& spec) {
    spec.validate();
    if (std::gcd(spec.d, spec.m) != 1)
        throw NoBezoutWitnessError("gcd(D, M) != 1: no inverse of D modulo M");
    int a = 0;
    for (int cand = 0; cand < spec.m; ++cand)
        if (cand * spec.d % spec.m == 1) {
            a = cand;
            break;
        }
    DeterministicStrategy strat;
    strat.tables.assign(spec.n, std::vector<int>(spec.d));
    for (int j = 0; j < spec.n; ++j)
        for (int x = 0; x < spec.d; ++x) strat.tables[j][x] = a * x % spec.m;
    return strat;
}

FootnoteResult footnote_strategy(const GameSpec& spec) {
    spec.validate();
    if (spec.d != 2) throw UnsupportedDivisorError("footnote strategy defined only for divisor 2");
    if (spec.m % 4 != 2 || spec.m < 6)
        throw MalformedInputError("footnote strategy needs M = 2(2r+1) with r >= 1");
    // 2d - 1 = M/2, an odd divisor of 2M; answer sums then only hit the
    // residues 0 and M mod 2M, one constant offset per residue.
    int d = (spec.m + 2) / 4;
    FootnoteResult best;
    bool first = true;
    for (int b : {0, spec.m / 2}) {
        DeterministicStrategy strat;
        strat.tables.assign(spec.n, std::vector<int>(2));
        for (int j = 0; j < spec.n; ++j) {
            int base = j == 0 ? b : 0;
            strat.tables[j][0] = base;
            strat.tables[j][1] = (base + d) % spec.m;
        }
        StrategyReport rep = eval_deterministic(spec, strat);
        if (first || rep.rate > best.rate) {
            best = {strat, rep.rate};
            first = false;
        }
    }
    return best;
}

MonteCarloResult monte_carlo(const GameSpec& spec, const StrategyHandle& strategy,
                             std::uint64_t trials, std::uint64_t seed) {
    spec.validate();
    if (trials < 1) throw MalformedInputError("monte_carlo: need at least one trial");
    const bool halving = std::holds_alternative<HalvingTag>(strategy);
    if (halving && spec.d != 2)
        throw UnsupportedDivisorError("halving strategy defined only for divisor 2");

    SplitMix64 rng(seed);
    InputString x(spec.n);
    SharedBitstring s(spec.n);
    std::uint64_t wins = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        long long sum = 0;
        for (int j = 0; j < spec.n - 1; ++j) {
            x[j] = static_cast<int>(rng.next_below(spec.d));
            sum += x[j];
        }
        x[spec.n - 1] = static_cast<int>((spec.d - sum % spec.d) % spec.d);
        OutputString y;
        if (halving) {
            int weight = 0;
            for (int j = 0; j < spec.n - 1; ++j) {
                s[j] = static_cast<int>(rng.next_below(2));
                weight += s[j];
            }
            s[spec.n - 1] = (weight % 2 == (spec.n / 2) % 2) ? 0 : 1;
            y = halving_answers(spec.n, spec.m, s, x);
        } else {
            y = answers_for(std::get<DeterministicStrategy>(strategy), x);
        }
        if (is_winning(spec, x, y)) ++wins;
    }
    double p = static_cast<double>(wins) / static_cast<double>(trials);
    double hw = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return {p, hw, trials, seed};
}

}  // namespace ghz
