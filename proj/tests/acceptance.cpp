// Acceptance suite: one line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "ghz/bounds.hpp"
#include "ghz/classical.hpp"
#include "ghz/lp.hpp"
#include "ghz/quantum.hpp"
#include "ghz/report.hpp"

using namespace ghz;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, double seconds) {
    std::printf("criterion %2d: %s  %-55s (%.2fs)\n", id, ok ? "PASS" : "FAIL", what.c_str(),
                seconds);
    if (!ok) ++failures;
}

template <typename F>
void criterion(int id, const std::string& what, F&& f) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", id, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(id, what, ok, secs);
}

std::vector<GameSpec> certainty_grid() {
    std::vector<GameSpec> grid;
    for (int n = 1; n <= 9; ++n) grid.push_back({n, 2, 2});
    for (int n = 1; n <= 9; ++n) grid.push_back({n, 2, 4});
    grid.push_back({3, 4, 2});
    grid.push_back({3, 3, 3});
    grid.push_back({2, 3, 3});
    grid.push_back({4, 8, 2});
    return grid;
}

}  // namespace

int main() {
    criterion(1, "quantum certainty across the grid", [] {
        for (const GameSpec& spec : certainty_grid()) {
            auto start = std::chrono::steady_clock::now();
            CertaintyReport rep = verify_certainty(spec);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (std::abs(rep.min_win_probability - 1.0) > 1e-9) return false;
            if (secs >= 60.0) return false;
        }
        return true;
    });

    criterion(2, "uniform collapse onto W(x)", [] {
        for (const GameSpec& spec : certainty_grid()) {
            CertaintyReport rep = verify_certainty(spec);
            if (rep.max_leak > 1e-9) return false;
            if (rep.max_deviation_from_uniform > 1e-9) return false;
        }
        return true;
    });

    criterion(3, "Pauli-observable form, n = 2..6", [] {
        for (int n = 2; n <= 6; ++n)
            if (!pauli_sign_check(n)) return false;
        return true;
    });

    criterion(4, "Mermin tight bound via search, n = 2..10", [] {
        for (int n = 2; n <= 5; ++n)
            if (brute_force_omega_tilde({n, 2, 2}).value != mermin_bound(n)) return false;
        for (int n = 6; n <= 10; ++n)
            if (brute_force_reduced({n, 2, 2}).value != mermin_bound(n)) return false;
        return true;
    });

    criterion(5, "new tight bound via reduced search", [] {
        const std::uint64_t limit = std::uint64_t(1) << 33;
        for (int n = 3; n <= 9; ++n)
            if (brute_force_reduced({n, 2, 4}, limit).value != tight_bound(n)) return false;
        for (int n = 3; n <= 7; ++n)
            if (brute_force_reduced({n, 2, 8}, limit).value != tight_bound(n)) return false;
        return true;
    });

    criterion(6, "reduction soundness, exhaustive n <= 4, M <= 4", [] {
        for (int n = 2; n <= 4; ++n)
            for (int m = 2; m <= 4; ++m) {
                GameSpec spec{n, 2, m};
                std::uint64_t num = 1;
                for (int i = 0; i < 2 * n; ++i) num *= m;
                auto inputs = enumerate_promise(spec);
                for (std::uint64_t code = 0; code < num; ++code) {
                    DeterministicStrategy s;
                    s.tables.assign(n, std::vector<int>(2));
                    std::uint64_t c = code;
                    for (int j = 0; j < n; ++j)
                        for (int x = 0; x < 2; ++x) {
                            s.tables[j][x] = static_cast<int>(c % m);
                            c /= m;
                        }
                    ReducedStrategy rs = reduce_strategy(spec, s);
                    for (const auto& x : inputs) {
                        OutputString y(n);
                        for (int j = 0; j < n; ++j) y[j] = s.tables[j][x[j]];
                        if (is_winning(spec, x, y) != reduced_wins(spec, rs, x)) return false;
                    }
                }
            }
        return true;
    });

    criterion(7, "halving duality + exact win probability, n <= 10", [] {
        for (int n = 2; n <= 10; ++n) {
            int m = 1 << effective_min_m(n);
            GameSpec spec{n, 2, m};
            for (std::uint64_t sc = 0; sc < (std::uint64_t(1) << n); ++sc) {
                SharedBitstring s(n);
                int sw = 0;
                for (int j = 0; j < n; ++j) sw += s[j] = static_cast<int>((sc >> j) & 1);
                if (sw % 2 != (n / 2) % 2) continue;
                for (const auto& x : enumerate_promise(spec)) {
                    if (halving_win_predicate(n, m, s, x) !=
                        is_winning(spec, x, halving_answers(n, m, s, x)))
                        return false;
                }
            }
            for (const auto& x : enumerate_promise(spec))
                if (exact_win_probability(spec, x) != tight_bound(n)) return false;
        }
        return true;
    });

    criterion(8, "certified LP values", [] {
        auto a = exact_omega_lp({3, 2, 2});
        auto b = exact_omega_lp({3, 2, 4});
        auto c = exact_omega_lp({2, 2, 2});
        return a.certified && a.value == Rational(3, 4) && b.certified &&
               b.value == Rational(3, 4) && c.certified && c.value == Rational(1);
    });

    criterion(9, "conclusion crossovers", [] {
        auto t2 = crossover_scan(2, 20);
        if (t2.first_tight_below_mermin != 7) return false;
        if (t2.first_tight_below_half != 9) return false;
        for (const auto& row : t2.rows)
            if (row.regime != (row.n <= 14)) return false;
        auto t4 = crossover_scan(4, 64);
        return t4.first_tight_below_quarter == 41;
    });

    criterion(10, "asymptotic bound at n = 1000 and 10000", [] {
        double c = 2.0 * std::sqrt(2.0 / std::numbers::pi);
        double r1 = to_double(tight_bound(1000)) * std::sqrt(1000.0) / c;
        double r2 = to_double(tight_bound(10000)) * std::sqrt(10000.0) / c;
        return std::abs(r1 - 1.0) <= 0.002 && std::abs(r2 - 1.0) <= 0.0002;
    });

    criterion(11, "classifier, Bezout and footnote instances", [] {
        for (int n = 1; n <= 4; ++n)
            for (int d = 2; d <= 6; ++d)
                for (int m = 2; m <= 6; ++m) {
                    if (std::gcd(d, m) != 1) continue;
                    GameSpec spec{n, d, m};
                    if (classify_game(spec).verdict != Verdict::NotPseudoTelepathy) return false;
                    if (eval_deterministic(spec, bezout_strategy(spec)).rate != Rational(1))
                        return false;
                }
        for (int n = 3; n <= 8; ++n) {
            if (classify_game({n, 2, 2}).verdict != Verdict::PseudoTelepathy) return false;
            if (brute_force_reduced({n, 2, 2}).value >= Rational(1)) return false;
        }
        for (int n = 4; n <= 6; ++n)
            if (footnote_strategy({n, 2, 22}).rate < Rational(1, 2)) return false;
        return true;
    });

    criterion(12, "Monte Carlo reproducibility and accuracy", [] {
        GameSpec spec{9, 2, 4};
        auto a = monte_carlo(spec, HalvingTag{}, 100000, 20260824);
        auto b = monte_carlo(spec, HalvingTag{}, 100000, 20260824);
        std::string ra = fmt_double(a.estimate) + "/" + fmt_double(a.halfwidth_95);
        std::string rb = fmt_double(b.estimate) + "/" + fmt_double(b.halfwidth_95);
        if (ra != rb) return false;
        double exact = to_double(Rational(63, 128));
        return std::abs(a.estimate - exact) <= 3 * a.halfwidth_95;
    });

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
