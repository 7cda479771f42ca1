#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghz/errors.hpp"

namespace ghz {

// The game instance G_{n,D,M}: n players, each given x_j in [0..D) with the
// promise D | sum(x), answering y_j in [0..M); they win iff
// sum(y) == sum(x)/D (mod M).
struct GameSpec {
    int n;  // player count, >= 1
    int d;  // divisor, >= 2
    int m;  // modulo, >= 2

    void validate() const {
        if (n < 1) throw MalformedInputError("player count must be >= 1");
        if (d < 2) throw MalformedInputError("divisor must be >= 2");
        if (m < 2) throw MalformedInputError("modulo must be >= 2");
    }
};

using InputString = std::vector<int>;   // length n, entries in [0..D)
using OutputString = std::vector<int>;  // length n, entries in [0..M)

// Default guard on enumerated items / amplitudes.
inline constexpr std::uint64_t kDefaultSizeLimit = std::uint64_t(1) << 24;

// Canonical textual form: digits concatenated, player 1 leftmost, when every
// entry fits a single decimal digit; comma-separated otherwise.
std::string string_to_text(const std::vector<int>& v, int radix);
std::vector<int> text_to_string(const std::string& text, int n, int radix);

// checked_pow(b, e) or throws InstanceTooLargeError if b^e exceeds limit.
std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit);

bool validate_input(const GameSpec& spec, const InputString& x);

// (sum x_j)/D mod M; requires the promise to hold.
int target_value(const GameSpec& spec, const InputString& x);

bool is_winning(const GameSpec& spec, const InputString& x, const OutputString& y);

// All x in P = {x : D | sum(x)}, lexicographic; |P| = D^(n-1).
std::vector<InputString> enumerate_promise(const GameSpec& spec,
                                           std::uint64_t limit = kDefaultSizeLimit);

// W(x) = {y : sum(y) == target (mod M)}, lexicographic; |W(x)| = M^(n-1).
std::vector<OutputString> winning_set(const GameSpec& spec, const InputString& x,
                                      std::uint64_t limit = kDefaultSizeLimit);

}  // namespace ghz
