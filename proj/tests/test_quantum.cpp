#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ghz/quantum.hpp"

using namespace ghz;

namespace {

std::uint64_t index_of(const std::vector<int>& y, int m) {
    std::uint64_t idx = 0, place = 1;
    for (int digit : y) {
        idx += digit * place;
        place *= m;
    }
    return idx;
}

std::vector<int> decode(std::uint64_t idx, int n, int m) {
    std::vector<int> y(n);
    for (int j = 0; j < n; ++j) {
        y[j] = static_cast<int>(idx % m);
        idx /= m;
    }
    return y;
}

}  // namespace

TEST_CASE("ghz_state") {
    auto s = ghz_state(2, 2);
    CHECK(std::abs(s.amps[0] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    CHECK(std::abs(s.amps[3] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    CHECK(std::abs(s.amps[1]) == 0);
    CHECK(std::abs(s.amps[2]) == 0);

    auto s1 = ghz_state(1, 3);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(s1.amps[k] - Complex{1 / std::sqrt(3.0), 0}) < 1e-12);

    auto s3 = ghz_state(3, 4);
    int nonzero = 0;
    for (const auto& a : s3.amps)
        if (std::abs(a) > 1e-12) {
            ++nonzero;
            CHECK(std::abs(std::abs(a) - 0.5) < 1e-12);
        }
    CHECK(nonzero == 4);
    CHECK(s3.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(ghz_state(30, 4), InstanceTooLargeError);
}

TEST_CASE("fourier_gate") {
    auto h = fourier_gate(2);
    double r = 1 / std::sqrt(2.0);
    CHECK(std::abs(h.at(0, 0) - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(h.at(1, 1) - Complex{-r, 0}) < 1e-12);
    CHECK(fourier_gate(1).at(0, 0) == Complex{1, 0});
    for (int m : {2, 3, 4, 8, 16}) CHECK(fourier_gate(m).is_unitary(1e-12));
}

TEST_CASE("phase_gate") {
    auto s = phase_gate(4, 2);
    CHECK(std::abs(s.at(0, 0) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(s.at(1, 1) - Complex{0, 1}) < 1e-12);
    auto id = phase_gate(1, 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(id.at(k, k) - Complex{1, 0}) < 1e-12);
    auto s8 = phase_gate(8, 4);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(s8.at(k, k) - root_of_unity(k, 8)) < 1e-12);
}

TEST_CASE("phase gate power identity: (S_DM)^D == S_M entrywise") {
    for (auto [d, m] : {std::pair{2, 2}, {2, 4}, {3, 3}, {4, 2}}) {
        auto sdm = phase_gate(d * m, m);
        LocalGate pow = identity_gate(m);
        for (int i = 0; i < d; ++i) pow = pow.multiply(sdm);
        auto sm = phase_gate(m, m);
        for (int k = 0; k < m; ++k) CHECK(std::abs(pow.at(k, k) - sm.at(k, k)) < 1e-12);
    }
}

TEST_CASE("apply_local_gate") {
    auto s = ghz_state(3, 3);
    auto same = apply_local_gate(s, 2, identity_gate(3));
    for (std::size_t i = 0; i < s.amps.size(); ++i) CHECK(std::abs(s.amps[i] - same.amps[i]) < 1e-12);

    StateVector zero{1, 2, {Complex{1, 0}, Complex{0, 0}}};
    auto plus = apply_local_gate(zero, 1, fourier_gate(2));
    double r = 1 / std::sqrt(2.0);
    CHECK(std::abs(plus.amps[0] - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(plus.amps[1] - Complex{r, 0}) < 1e-12);

    // phase_gate(4) twice on player 1 of |Phi_2+> flips the |11> sign
    auto phi = ghz_state(2, 2);
    auto g = phase_gate(4, 2);
    auto out = apply_local_gate(apply_local_gate(phi, 1, g), 1, g);
    CHECK(std::abs(out.amps[0] - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(out.amps[3] - Complex{-r, 0}) < 1e-12);

    CHECK_THROWS_AS(apply_local_gate(phi, 1, identity_gate(3)), DimensionMismatchError);
    CHECK_THROWS_AS(apply_local_gate(phi, 3, identity_gate(2)), DimensionMismatchError);
}

TEST_CASE("norm preserved by random gate sequences") {
    auto state = ghz_state(3, 4);
    for (int round = 0; round < 5; ++round) {
        state = apply_local_gate(state, 1 + round % 3, fourier_gate(4));
        state = apply_local_gate(state, 1 + (round + 1) % 3, phase_gate(8, 4));
        CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("run_quantum_strategy matches winning_set") {
    for (auto [n, d, m] : {std::tuple{3, 2, 2}, {3, 2, 4}, {2, 3, 3}, {3, 4, 2}, {2, 2, 4}}) {
        GameSpec spec{n, d, m};
        double uniform = 1.0;
        for (int i = 0; i < n - 1; ++i) uniform /= m;
        for (const auto& x : enumerate_promise(spec)) {
            auto probs = run_quantum_strategy(spec, x);
            int t = target_value(spec, x);
            for (std::uint64_t idx = 0; idx < probs.size(); ++idx) {
                auto y = decode(idx, n, m);
                bool wins = std::accumulate(y.begin(), y.end(), 0) % m == t;
                if (wins)
                    CHECK(std::abs(probs[idx] - uniform) < 1e-9);
                else
                    CHECK(probs[idx] < 1e-9);
            }
        }
    }
    CHECK_THROWS_AS(run_quantum_strategy({3, 2, 2}, {1, 0, 0}), PromiseViolationError);
}

TEST_CASE("run_quantum_strategy spec examples") {
    GameSpec spec{3, 2, 2};
    auto probs = run_quantum_strategy(spec, {0, 0, 0});
    for (auto y : {std::vector<int>{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}})
        CHECK(probs[index_of(y, 2)] == doctest::Approx(0.25).epsilon(1e-9));

    GameSpec spec2{3, 2, 4};
    auto probs2 = run_quantum_strategy(spec2, {1, 1, 0});
    int support = 0;
    for (double p : probs2)
        if (p > 1e-9) {
            ++support;
            CHECK(p == doctest::Approx(1.0 / 16).epsilon(1e-9));
        }
    CHECK(support == 16);
}

TEST_CASE("intermediate_state_check") {
    CHECK(intermediate_state_check({3, 2, 2}, {0, 0, 0}));
    CHECK(intermediate_state_check({3, 2, 2}, {1, 1, 0}));
    CHECK(intermediate_state_check({2, 2, 4}, {1, 1}));
    CHECK(intermediate_state_check({2, 3, 3}, {1, 2}));
}

TEST_CASE("verify_certainty") {
    for (auto [n, d, m] : {std::tuple{3, 2, 2}, {4, 2, 4}, {3, 4, 2}, {2, 3, 3}}) {
        auto rep = verify_certainty({n, d, m});
        CHECK(rep.min_win_probability == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(rep.max_leak < 1e-9);
        std::uint64_t expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= d;
        CHECK(rep.inputs_checked == expect);
    }
}

TEST_CASE("pauli_sign_check") {
    for (int n = 1; n <= 6; ++n) CHECK(pauli_sign_check(n));
}

TEST_CASE("pauli eigenbasis distribution equals standard-basis strategy at D=M=2") {
    for (int n = 2; n <= 6; ++n) {
        GameSpec spec{n, 2, 2};
        for (const auto& x : enumerate_promise(spec)) {
            auto a = run_quantum_strategy(spec, x);
            auto b = pauli_measurement_distribution(x);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
        }
    }
}
