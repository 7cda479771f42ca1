#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ghz/games.hpp"

namespace ghz {

using Complex = std::complex<double>;

// Probabilities below this are classified as zero when reading out supports.
inline constexpr double kZeroThreshold = 1e-9;

// Dense amplitude vector over [0..M)^n.  Basis state (k_1,...,k_n) sits at
// index sum_j k_j * M^(j-1): player 1 is the least significant base-M digit.
struct StateVector {
    int n;
    int m;
    std::vector<Complex> amps;

    double norm_sq() const;
};

// M x M complex matrix, row-major; entry(r, c).
struct LocalGate {
    int dim;
    std::vector<Complex> entries;

    Complex& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
    const Complex& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * dim + c];
    }
    LocalGate adjoint() const;
    LocalGate multiply(const LocalGate& rhs) const;
    bool is_unitary(double tol = 1e-9) const;
};

// e^{2*pi*i*k/m}, computed from cos/sin of the reduced angle.
Complex root_of_unity(long long k, long long m);

// (1/sqrt(M)) sum_k |k>^{tensor n}
StateVector ghz_state(int n, int m, std::uint64_t limit = kDefaultSizeLimit);

// F_M: entry(y, k) = omega_M^{ky} / sqrt(M)
LocalGate fourier_gate(int m);

// diag(omega_{mprime}^k) on dimension dim
LocalGate phase_gate(int mprime, int dim);

LocalGate identity_gate(int dim);

// (I x ... x gate at player j x ... x I) |state>;  player is 1-based.
StateVector apply_local_gate(const StateVector& state, int player, const LocalGate& gate);

// Born-rule probabilities, indexed like the state vector.
std::vector<double> measure_probabilities(const StateVector& state);

// The full protocol: from the GHZ state, each player applies (S_{DM})^{x_j}
// then F_M^dagger, and measures.  Returns the outcome distribution over
// OutputString, indexed by the base-M encoding.
std::vector<double> run_quantum_strategy(const GameSpec& spec, const InputString& x,
                                         std::uint64_t limit = kDefaultSizeLimit);

// Checks the post-phase-step state against (1/sqrt(M)) sum_k omega_M^{kt} |k..k>.
bool intermediate_state_check(const GameSpec& spec, const InputString& x,
                              std::uint64_t limit = kDefaultSizeLimit);

struct CertaintyReport {
    double min_win_probability;
    double max_deviation_from_uniform;  // over winning outcomes, vs 1/M^(n-1)
    double max_leak;                    // largest probability on a losing outcome
    std::uint64_t inputs_checked;
};

// Runs the strategy on every promised input and aggregates the win mass.
CertaintyReport verify_certainty(const GameSpec& spec,
                                 std::uint64_t limit = kDefaultSizeLimit);

// For every even-weight x in {0,1}^n, checks
// (tensor_j sigma_{1+x_j}) |Phi+> = (-1)^{|x|/2} |Phi+>, plus the gate
// identities sigma_X = H sigma_Z H and sigma_Y = -S^dag H sigma_Z H S.
bool pauli_sign_check(int n, std::uint64_t limit = kDefaultSizeLimit);

// Distribution from measuring each qubit j in the sigma_X (x_j = 0) or
// sigma_Y (x_j = 1) eigenbasis, outcome bit 0 for eigenvalue +1.
// Independent route used to cross-check run_quantum_strategy at D = M = 2.
std::vector<double> pauli_measurement_distribution(const InputString& x,
                                                   std::uint64_t limit = kDefaultSizeLimit);

}  // namespace ghz
