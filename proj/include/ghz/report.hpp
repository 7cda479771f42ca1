#pragma once

#include <string>
#include <vector>

#include "ghz/bounds.hpp"
#include "ghz/classical.hpp"
#include "ghz/games.hpp"
#include "ghz/rational.hpp"

namespace ghz {

// All report output is byte-stable: fixed key order, floats printed with 17
// significant digits, LF line endings.

std::string fmt_double(double v);
std::string json_escape(const std::string& s);

// {"num":N,"den":D,"float":F}
std::string json_rational(const Rational& r);

std::string json_game(const GameSpec& spec);

// {"tables":[[..],..]} plus "d"/"b" fields when D = 2.
std::string json_strategy(const GameSpec& spec, const DeterministicStrategy& strat);

// Outcome distribution dump, outcomes above the zero threshold only, sorted
// lexicographically by the textual form of y.
std::string json_distribution(const GameSpec& spec, const InputString& x,
                              const std::vector<double>& probs, double threshold);

std::string crossover_csv(const CrossoverTable& table);
std::string crossover_json(const CrossoverTable& table);

}  // namespace ghz
