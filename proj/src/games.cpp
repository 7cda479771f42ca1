#include "ghz/games.hpp"

#include <numeric>
#include <sstream>

namespace ghz {

std::string string_to_text(const std::vector<int>& v, int radix) {
    std::ostringstream os;
    bool single_digit = radix <= 10;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!single_digit && i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::vector<int> text_to_string(const std::string& text, int n, int radix) {
    std::vector<int> out;
    if (radix <= 10 && text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw MalformedInputError("invalid digit in input string");
            out.push_back(c - '0');
        }
    } else {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                out.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw MalformedInputError("invalid entry in input string");
            }
        }
    }
    if (static_cast<int>(out.size()) != n)
        throw MalformedInputError("input string has wrong length");
    for (int e : out)
        if (e < 0 || e >= radix) throw MalformedInputError("input string entry out of range");
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base)
            throw InstanceTooLargeError("instance too large: " + std::to_string(base) + "^" +
                                        std::to_string(exp) + " exceeds limit " +
                                        std::to_string(limit));
        r *= base;
    }
    return r;
}

static void check_wellformed(const GameSpec& spec, const std::vector<int>& v, int radix,
                             const char* what) {
    spec.validate();
    if (static_cast<int>(v.size()) != spec.n)
        throw MalformedInputError(std::string(what) + " has wrong length");
    for (int e : v)
        if (e < 0 || e >= radix)
            throw MalformedInputError(std::string(what) + " entry out of range");
}

bool validate_input(const GameSpec& spec, const InputString& x) {
    check_wellformed(spec, x, spec.d, "input");
    long long sum = std::accumulate(x.begin(), x.end(), 0LL);
    return sum % spec.d == 0;
}

int target_value(const GameSpec& spec, const InputString& x) {
    if (!validate_input(spec, x))
        throw PromiseViolationError("promise violated: divisor does not divide input sum");
    long long sum = std::accumulate(x.begin(), x.end(), 0LL);
    return static_cast<int>((sum / spec.d) % spec.m);
}

bool is_winning(const GameSpec& spec, const InputString& x, const OutputString& y) {
    int t = target_value(spec, x);
    check_wellformed(spec, y, spec.m, "output");
    long long sum = std::accumulate(y.begin(), y.end(), 0LL);
    return sum % spec.m == t;
}

// The first n-1 digits are free, the last one is forced by the residue
// condition; distinct prefixes mean prefix order equals full lexicographic
// order.
std::vector<InputString> enumerate_promise(const GameSpec& spec, std::uint64_t limit) {
    spec.validate();
    std::uint64_t count = checked_pow(spec.d, spec.n - 1, limit);
    std::vector<InputString> out;
    out.reserve(count);
    InputString x(spec.n, 0);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        long long sum = 0;
        for (int j = spec.n - 2; j >= 0; --j) {
            x[j] = static_cast<int>(c % spec.d);
            sum += x[j];
            c /= spec.d;
        }
        x[spec.n - 1] = static_cast<int>((spec.d - sum % spec.d) % spec.d);
        out.push_back(x);
    }
    return out;
}

std::vector<OutputString> winning_set(const GameSpec& spec, const InputString& x,
                                      std::uint64_t limit) {
    int t = target_value(spec, x);
    std::uint64_t count = checked_pow(spec.m, spec.n - 1, limit);
    std::vector<OutputString> out;
    out.reserve(count);
    OutputString y(spec.n, 0);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        long long sum = 0;
        for (int j = spec.n - 2; j >= 0; --j) {
            y[j] = static_cast<int>(c % spec.m);
            sum += y[j];
            c /= spec.m;
        }
        y[spec.n - 1] = static_cast<int>(((t - sum) % spec.m + spec.m) % spec.m);
        out.push_back(y);
    }
    return out;
}

}  // namespace ghz
