#include "ghz/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace ghz {

double StateVector::norm_sq() const {
    double s = 0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
}

LocalGate LocalGate::adjoint() const {
    LocalGate g{dim, std::vector<Complex>(entries.size())};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g.at(r, c) = std::conj(at(c, r));
    return g;
}

LocalGate LocalGate::multiply(const LocalGate& rhs) const {
    LocalGate g{dim, std::vector<Complex>(entries.size(), Complex{})};
    for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k) {
            Complex v = at(r, k);
            if (v == Complex{}) continue;
            for (int c = 0; c < dim; ++c) g.at(r, c) += v * rhs.at(k, c);
        }
    return g;
}

bool LocalGate::is_unitary(double tol) const {
    LocalGate p = multiply(adjoint());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            Complex expect = r == c ? Complex{1, 0} : Complex{};
            if (std::abs(p.at(r, c) - expect) > tol) return false;
        }
    return true;
}

Complex root_of_unity(long long k, long long m) {
    long long kr = ((k % m) + m) % m;
    double theta = 2.0 * std::numbers::pi * static_cast<double>(kr) / static_cast<double>(m);
    return {std::cos(theta), std::sin(theta)};
}

StateVector ghz_state(int n, int m, std::uint64_t limit) {
    if (n < 1 || m < 1) throw MalformedInputError("ghz_state: need n >= 1, M >= 1");
    std::uint64_t dim = checked_pow(m, n, limit);
    StateVector s{n, m, std::vector<Complex>(dim, Complex{})};
    double amp = 1.0 / std::sqrt(static_cast<double>(m));
    // |k>^{tensor n} has index k * (M^n - 1) / (M - 1) = k * sum_j M^j
    std::uint64_t stride = 0;
    std::uint64_t p = 1;
    for (int j = 0; j < n; ++j) {
        stride += p;
        p *= m;
    }
    for (int k = 0; k < m; ++k) s.amps[k * stride] = {amp, 0};
    return s;
}

LocalGate fourier_gate(int m) {
    if (m < 1) throw MalformedInputError("fourier_gate: need M >= 1");
    LocalGate g{m, std::vector<Complex>(static_cast<std::size_t>(m) * m)};
    double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (int y = 0; y < m; ++y)
        for (int k = 0; k < m; ++k)
            g.at(y, k) = scale * root_of_unity(static_cast<long long>(k) * y, m);
    return g;
}

LocalGate phase_gate(int mprime, int dim) {
    if (mprime < 1 || dim < 1) throw MalformedInputError("phase_gate: need M' >= 1, dim >= 1");
    LocalGate g{dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim, Complex{})};
    for (int k = 0; k < dim; ++k) g.at(k, k) = root_of_unity(k, mprime);
    return g;
}

LocalGate identity_gate(int dim) {
    LocalGate g{dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim, Complex{})};
    for (int k = 0; k < dim; ++k) g.at(k, k) = {1, 0};
    return g;
}

StateVector apply_local_gate(const StateVector& state, int player, const LocalGate& gate) {
    if (gate.dim != state.m) throw DimensionMismatchError("gate dimension does not match qudit");
    if (player < 1 || player > state.n) throw DimensionMismatchError("player index out of range");
    const int m = state.m;
    std::uint64_t stride = 1;
    for (int j = 1; j < player; ++j) stride *= m;
    const std::uint64_t dim = state.amps.size();
    StateVector out{state.n, m, std::vector<Complex>(dim)};
    const std::uint64_t block = stride * m;
    std::vector<Complex> in_col(m), out_col(m);
    for (std::uint64_t base = 0; base < dim; base += block) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            for (int k = 0; k < m; ++k) in_col[k] = state.amps[base + off + k * stride];
            for (int r = 0; r < m; ++r) {
                Complex acc{};
                for (int k = 0; k < m; ++k) acc += gate.at(r, k) * in_col[k];
                out_col[r] = acc;
            }
            for (int r = 0; r < m; ++r) out.amps[base + off + r * stride] = out_col[r];
        }
    }
    return out;
}

std::vector<double> measure_probabilities(const StateVector& state) {
    std::vector<double> p(state.amps.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amps[i]);
    return p;
}

std::vector<double> run_quantum_strategy(const GameSpec& spec, const InputString& x,
                                         std::uint64_t limit) {
    if (!validate_input(spec, x))
        throw PromiseViolationError("run_quantum_strategy: promise violated");
    StateVector state = ghz_state(spec.n, spec.m, limit);
    LocalGate phase = phase_gate(spec.d * spec.m, spec.m);
    LocalGate f_adj = fourier_gate(spec.m).adjoint();
    for (int j = 1; j <= spec.n; ++j) {
        for (int rep = 0; rep < x[j - 1]; ++rep) state = apply_local_gate(state, j, phase);
        state = apply_local_gate(state, j, f_adj);
    }
    return measure_probabilities(state);
}

bool intermediate_state_check(const GameSpec& spec, const InputString& x,
                              std::uint64_t limit) {
    int t = target_value(spec, x);
    StateVector state = ghz_state(spec.n, spec.m, limit);
    LocalGate phase = phase_gate(spec.d * spec.m, spec.m);
    for (int j = 1; j <= spec.n; ++j)
        for (int rep = 0; rep < x[j - 1]; ++rep) state = apply_local_gate(state, j, phase);

    const int m = spec.m;
    double amp = 1.0 / std::sqrt(static_cast<double>(m));
    std::uint64_t stride = 0, p = 1;
    for (int j = 0; j < spec.n; ++j) {
        stride += p;
        p *= m;
    }
    std::vector<Complex> expected(state.amps.size(), Complex{});
    for (int k = 0; k < m; ++k)
        expected[k * stride] = amp * root_of_unity(static_cast<long long>(k) * t, m);
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (std::abs(state.amps[i] - expected[i]) > 1e-9) return false;
    return true;
}

CertaintyReport verify_certainty(const GameSpec& spec, std::uint64_t limit) {
    std::vector<InputString> inputs = enumerate_promise(spec, limit);
    checked_pow(spec.m, spec.n, limit);
    const int m = spec.m;
    double uniform = 1.0;
    for (int j = 0; j < spec.n - 1; ++j) uniform /= m;

    CertaintyReport rep{1.0, 0.0, 0.0, 0};
    // The distribution depends on x only through the target residue, so cache
    // full runs per residue; every input is still checked against its W(x).
    std::vector<std::vector<double>> by_target(m);
    for (const InputString& x : inputs) {
        int t = target_value(spec, x);
        if (by_target[t].empty()) by_target[t] = run_quantum_strategy(spec, x, limit);
        const std::vector<double>& probs = by_target[t];
        double win_mass = 0;
        for (std::uint64_t code = 0; code < probs.size(); ++code) {
            std::uint64_t c = code;
            long long sum = 0;
            for (int j = 0; j < spec.n; ++j) {
                sum += static_cast<long long>(c % m);
                c /= m;
            }
            if (sum % m == t) {
                win_mass += probs[code];
                rep.max_deviation_from_uniform =
                    std::max(rep.max_deviation_from_uniform, std::abs(probs[code] - uniform));
            } else {
                rep.max_leak = std::max(rep.max_leak, probs[code]);
            }
        }
        rep.min_win_probability = std::min(rep.min_win_probability, win_mass);
        ++rep.inputs_checked;
    }
    return rep;
}

namespace {

LocalGate sigma_x() { return {2, {Complex{0, 0}, {1, 0}, {1, 0}, {0, 0}}}; }
LocalGate sigma_y() { return {2, {Complex{0, 0}, {0, -1}, {0, 1}, {0, 0}}}; }
LocalGate sigma_z() { return {2, {Complex{1, 0}, {0, 0}, {0, 0}, {-1, 0}}}; }

bool gates_close(const LocalGate& a, const LocalGate& b, double tol) {
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (std::abs(a.entries[i] - b.entries[i]) > tol) return false;
    return true;
}

}  // namespace

bool pauli_sign_check(int n, std::uint64_t limit) {
    if (n < 1) throw MalformedInputError("pauli_sign_check: need n >= 1");

    // sigma_X = H sigma_Z H and sigma_Y = -S^dag H sigma_Z H S
    LocalGate h = fourier_gate(2);  // F_2 is real symmetric: the Hadamard
    LocalGate s = phase_gate(4, 2);
    LocalGate hzh = h.multiply(sigma_z()).multiply(h);
    if (!gates_close(hzh, sigma_x(), 1e-9)) return false;
    LocalGate shzhs = s.adjoint().multiply(hzh).multiply(s);
    for (Complex& e : shzhs.entries) e = -e;
    if (!gates_close(shzhs, sigma_y(), 1e-9)) return false;

    StateVector phi = ghz_state(n, 2, limit);
    std::uint64_t num_inputs = std::uint64_t(1) << n;
    for (std::uint64_t code = 0; code < num_inputs; ++code) {
        int weight = static_cast<int>(std::popcount(code));
        if (weight % 2 != 0) continue;
        StateVector state = phi;
        for (int j = 1; j <= n; ++j) {
            bool bit = (code >> (j - 1)) & 1;
            state = apply_local_gate(state, j, bit ? sigma_y() : sigma_x());
        }
        double sign = weight % 4 == 0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i < state.amps.size(); ++i)
            if (std::abs(state.amps[i] - sign * phi.amps[i]) > 1e-9) return false;
    }
    return true;
}

std::vector<double> pauli_measurement_distribution(const InputString& x,
                                                   std::uint64_t limit) {
    int n = static_cast<int>(x.size());
    // Rows are the eigenvector bras; row y holds the eigenvalue-(-1)^y vector.
    double r = 1.0 / std::sqrt(2.0);
    LocalGate basis_x{2, {Complex{r, 0}, {r, 0}, {r, 0}, {-r, 0}}};
    LocalGate basis_y{2, {Complex{r, 0}, {0, -r}, {r, 0}, {0, r}}};
    StateVector state = ghz_state(n, 2, limit);
    for (int j = 1; j <= n; ++j) {
        if (x[j - 1] < 0 || x[j - 1] > 1)
            throw MalformedInputError("pauli measurement needs a bitstring");
        state = apply_local_gate(state, j, x[j - 1] ? basis_y : basis_x);
    }
    return measure_probabilities(state);
}

}  // namespace ghz
