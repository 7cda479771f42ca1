#include "ghz/report.hpp"

#include <cstdio>
#include <sstream>

namespace ghz {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_rational(const Rational& r) {
    std::ostringstream os;
    os << "{\"num\":" << boost::multiprecision::numerator(r)
       << ",\"den\":" << boost::multiprecision::denominator(r)
       << ",\"float\":" << fmt_double(to_double(r)) << "}";
    return os.str();
}

std::string json_game(const GameSpec& spec) {
    std::ostringstream os;
    os << "{\"n\":" << spec.n << ",\"d\":" << spec.d << ",\"m\":" << spec.m << "}";
    return os.str();
}

std::string json_strategy(const GameSpec& spec, const DeterministicStrategy& strat) {
    std::ostringstream os;
    os << "{\"tables\":[";
    for (std::size_t j = 0; j < strat.tables.size(); ++j) {
        if (j) os << ",";
        os << "[";
        for (std::size_t k = 0; k < strat.tables[j].size(); ++k) {
            if (k) os << ",";
            os << strat.tables[j][k];
        }
        os << "]";
    }
    os << "]";
    if (spec.d == 2) {
        ReducedStrategy rs = reduce_strategy(spec, strat);
        os << ",\"d\":[";
        for (std::size_t j = 0; j < rs.d.size(); ++j) {
            if (j) os << ",";
            os << rs.d[j];
        }
        os << "],\"b\":" << rs.b;
    }
    os << "}";
    return os.str();
}

std::string json_distribution(const GameSpec& spec, const InputString& x,
                              const std::vector<double>& probs, double threshold) {
    std::ostringstream os;
    os << "{\"game\":" << json_game(spec) << ",\"x\":\""
       << json_escape(string_to_text(x, spec.d)) << "\",\"outcomes\":[";
    // walk outcomes in lexicographic y order: player 1 is the most significant
    // position textually but the least significant in the state index
    const std::uint64_t dim = probs.size();
    OutputString y(spec.n);
    bool first = true;
    for (std::uint64_t lex = 0; lex < dim; ++lex) {
        std::uint64_t c = lex;
        std::uint64_t index = 0;
        std::uint64_t place = 1;
        for (int j = spec.n - 1; j >= 0; --j) {
            y[j] = static_cast<int>(c % spec.m);
            c /= spec.m;
        }
        for (int j = 0; j < spec.n; ++j) {
            index += static_cast<std::uint64_t>(y[j]) * place;
            place *= spec.m;
        }
        if (probs[index] <= threshold) continue;
        if (!first) os << ",";
        first = false;
        os << "{\"y\":\"" << json_escape(string_to_text(y, spec.m))
           << "\",\"p\":" << fmt_double(probs[index]) << "}";
    }
    os << "]}";
    return os.str();
}

std::string crossover_csv(const CrossoverTable& table) {
    std::ostringstream os;
    os << "n,ell,regime,mermin_num,mermin_den,tight_num,tight_den,asymptote\n";
    for (const CrossoverRow& row : table.rows) {
        os << row.n << "," << row.ell << "," << (row.regime ? "true" : "false") << ","
           << boost::multiprecision::numerator(row.mermin) << ","
           << boost::multiprecision::denominator(row.mermin) << ","
           << boost::multiprecision::numerator(row.tight) << ","
           << boost::multiprecision::denominator(row.tight) << ","
           << fmt_double(row.asymptote) << "\n";
    }
    return os.str();
}

std::string crossover_json(const CrossoverTable& table) {
    std::ostringstream os;
    os << "{\"m_bits\":" << table.m_bits << ",\"rows\":[";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const CrossoverRow& row = table.rows[i];
        if (i) os << ",";
        os << "{\"n\":" << row.n << ",\"ell\":" << row.ell
           << ",\"regime\":" << (row.regime ? "true" : "false")
           << ",\"mermin\":" << json_rational(row.mermin)
           << ",\"tight\":" << json_rational(row.tight)
           << ",\"asymptote\":" << fmt_double(row.asymptote) << "}";
    }
    os << "],\"first_tight_below_mermin\":" << table.first_tight_below_mermin
       << ",\"first_tight_below_half\":" << table.first_tight_below_half
       << ",\"first_tight_below_quarter\":" << table.first_tight_below_quarter << "}";
    return os.str();
}

}  // namespace ghz
