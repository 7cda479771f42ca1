#include "ghz/bounds.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ghz {

int ell(int n) {
    if (n < 1) throw MalformedInputError("ell: need n >= 1");
    // floor(lg((n+1)/4)) = bitlength(n+1) - 3, so ell(n) = bitlength(n+1) - 2;
    // integer throughout, valid down to n = 1 where the value is 0.
    return std::bit_width(static_cast<unsigned>(n + 1)) - 2;
}

int effective_min_m(int n) { return std::max(1, ell(n)); }

bool regime_ok(int n, int m_modulo) { return (n + 1) / 2 < 2 * m_modulo; }

Rational mermin_bound(int n) {
    if (n < 1) throw MalformedInputError("mermin_bound: need n >= 1");
    return Rational(1, 2) + Rational(1, pow2((n + 1) / 2));
}

BigInt binom_mod_q(int n, int j, int q) {
    if (q < 1 || j < 0 || j >= q) throw MalformedInputError("binom_mod_q: need 0 <= j < q");
    BigInt total = 0;
    for (int i = j; i <= n; i += q) total += binomial(n, i);
    return total;
}

BigInt griggs_bound(int n, int q, int r) {
    if (r < 1 || r > q) throw MalformedInputError("griggs_bound: need 1 <= r <= q");
    BigInt total = 0;
    auto ceil_half = [](int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); };
    int lo = ceil_half(n - r);
    int hi = ceil_half(n + r) - 1;
    for (int j = lo; j <= hi; ++j) total += binom_mod_q(n, ((j % q) + q) % q, q);
    return total;
}

Rational tight_bound(int n) {
    if (n < 1) throw MalformedInputError("tight_bound: need n >= 1");
    return Rational(binomial(n, n / 2), pow2(n - 1));
}

double asymptotic_bound(int n) {
    if (n < 1) throw MalformedInputError("asymptotic_bound: need n >= 1");
    return 2.0 * std::sqrt(2.0 / std::numbers::pi) / std::sqrt(static_cast<double>(n));
}

Classification classify_game(const GameSpec& spec) {
    spec.validate();
    int g = std::gcd(spec.d, spec.m);
    if (g == 1) {
        Classification c{Verdict::NotPseudoTelepathy, bezout_strategy(spec), std::nullopt};
        return c;
    }
    int p = 2;
    while (g % p != 0) ++p;
    if (spec.n >= std::max(3, p)) return {Verdict::PseudoTelepathy, std::nullopt, p};
    return {Verdict::UnresolvedByTheorem, std::nullopt, p};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NotPseudoTelepathy: return "not-pseudo-telepathy";
        case Verdict::PseudoTelepathy: return "pseudo-telepathy";
        case Verdict::UnresolvedByTheorem: return "unresolved-by-theorem";
    }
    return "?";
}

CrossoverTable crossover_scan(int m_bits, int n_max) {
    if (m_bits < 1 || n_max < 1) throw MalformedInputError("crossover_scan: need m >= 1, n_max >= 1");
    CrossoverTable table{m_bits, {}, 0, 0, 0};
    int m_modulo = 1 << m_bits;
    for (int n = 1; n <= n_max; ++n) {
        CrossoverRow row{n,
                         ell(n),
                         regime_ok(n, m_modulo),
                         mermin_bound(n),
                         tight_bound(n),
                         asymptotic_bound(n)};
        if (table.first_tight_below_mermin == 0 && row.tight < row.mermin)
            table.first_tight_below_mermin = n;
        if (table.first_tight_below_half == 0 && row.tight < Rational(1, 2))
            table.first_tight_below_half = n;
        if (table.first_tight_below_quarter == 0 && row.tight < Rational(1, 4))
            table.first_tight_below_quarter = n;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace ghz
