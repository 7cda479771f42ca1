#include "ghz/lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace ghz {

namespace {

// Dense simplex with Bland's rule on the standard-form tableau.  Sizes here
// are a handful of rows by a few thousand columns, so no factorization.
struct Simplex {
    std::size_t nrows, ncols;       // constraints, structural + slack variables
    std::vector<std::vector<double>> t;  // nrows x (ncols + 1), rhs last
    std::vector<double> obj;             // ncols reduced costs (maximization)
    std::vector<std::size_t> basis;
    static constexpr double kEps = 1e-9;

    bool solve(std::size_t max_iters) {
        for (std::size_t iter = 0; iter < max_iters; ++iter) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (obj[j] > kEps) {
                    enter = j;
                    break;
                }
            if (enter == ncols) return true;  // optimal
            std::size_t leave = nrows;
            double best_ratio = 0;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (t[i][enter] <= kEps) continue;
                double ratio = t[i][ncols] / t[i][enter];
                if (leave == nrows || ratio < best_ratio - kEps ||
                    (ratio < best_ratio + kEps && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == nrows) return false;  // unbounded; cannot happen here
            pivot(leave, enter);
        }
        return false;
    }

    void pivot(std::size_t row, std::size_t col) {
        double p = t[row][col];
        for (double& v : t[row]) v /= p;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || std::abs(t[i][col]) < 1e-14) continue;
            double f = t[i][col];
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
        }
        double f = obj[col];
        if (std::abs(f) > 0) {
            for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * t[row][j];
            obj_rhs -= f * t[row][ncols];
        }
        basis[row] = col;
    }

    double obj_rhs = 0;
};

// Particular rational solution of an augmented linear system, free unknowns
// pinned to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> aug,
                                                    std::size_t nunknowns) {
    std::size_t nrows = aug.size();
    std::vector<std::size_t> pivot_col(nrows, nunknowns);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nunknowns && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && aug[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(aug[sel], aug[row]);
        Rational p = aug[row][col];
        for (auto& v : aug[row]) v /= p;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (std::size_t j = col; j <= nunknowns; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (std::size_t i = row; i < nrows; ++i)
        if (aug[i][nunknowns] != 0) return std::nullopt;
    std::vector<Rational> sol(nunknowns, Rational(0));
    for (std::size_t i = 0; i < row; ++i) sol[pivot_col[i]] = aug[i][nunknowns];
    return sol;
}

struct WinMatrix {
    std::size_t nrows, ncols;
    std::vector<std::uint8_t> wins;  // row-major

    std::uint8_t at(std::size_t r, std::size_t c) const { return wins[r * ncols + c]; }
};

WinMatrix build_matrix(const GameSpec& spec, std::uint64_t limit) {
    std::uint64_t ncols = 1;
    for (int i = 0; i < spec.d * spec.n; ++i) {
        if (spec.m != 0 && ncols > limit / spec.m)
            throw WorkBoundExceededError("work bound exceeded: too many strategy columns");
        ncols *= spec.m;
    }
    std::vector<InputString> inputs = enumerate_promise(spec, limit);
    if (ncols * inputs.size() > limit)
        throw WorkBoundExceededError("work bound exceeded: LP matrix too large");
    WinMatrix wm{inputs.size(), ncols, std::vector<std::uint8_t>(inputs.size() * ncols)};
    std::vector<int> y(spec.n);
    for (std::uint64_t code = 0; code < ncols; ++code) {
        // decode tables lazily per column: digit (j, x) at position j*D + x
        std::vector<int> digits(spec.d * spec.n);
        std::uint64_t c = code;
        for (int i = 0; i < spec.d * spec.n; ++i) {
            digits[i] = static_cast<int>(c % spec.m);
            c /= spec.m;
        }
        for (std::size_t r = 0; r < inputs.size(); ++r) {
            long long sum = 0;
            for (int j = 0; j < spec.n; ++j) sum += digits[j * spec.d + inputs[r][j]];
            long long target = 0;
            for (int j = 0; j < spec.n; ++j) target += inputs[r][j];
            target = target / spec.d % spec.m;
            wm.wins[r * ncols + code] = (sum % spec.m == target) ? 1 : 0;
        }
    }
    return wm;
}

struct Certificate {
    Rational value;
    std::vector<Rational> mixture;
    std::vector<Rational> dual;
    bool ok;
};

Certificate certify(const WinMatrix& wm, const std::vector<std::uint64_t>& support,
                    const std::vector<std::size_t>& tight) {
    Certificate cert{Rational(0), {}, {}, false};
    const std::size_t ns = support.size(), nt = tight.size();

    // Primal: masses over the support plus the value, equal on tight rows.
    std::vector<std::vector<Rational>> aug(nt + 1,
                                           std::vector<Rational>(ns + 2, Rational(0)));
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < ns; ++j)
            aug[i][j] = Rational(wm.at(tight[i], static_cast<std::size_t>(support[j])));
        aug[i][ns] = Rational(-1);  // -v
    }
    for (std::size_t j = 0; j < ns; ++j) aug[nt][j] = Rational(1);
    aug[nt][ns + 1] = Rational(1);
    auto primal = solve_rational(std::move(aug), ns + 1);
    if (!primal) return cert;
    Rational v = (*primal)[ns];
    for (std::size_t j = 0; j < ns; ++j)
        if ((*primal)[j] < 0) return cert;
    for (std::size_t r = 0; r < wm.nrows; ++r) {
        Rational row_val(0);
        for (std::size_t j = 0; j < ns; ++j)
            row_val += Rational(wm.at(r, static_cast<std::size_t>(support[j]))) * (*primal)[j];
        if (row_val < v) return cert;  // primal infeasible: value >= v fails
    }

    // Dual: adversary masses over the tight rows, equal on support columns.
    std::vector<std::vector<Rational>> daug(ns + 1,
                                            std::vector<Rational>(nt + 2, Rational(0)));
    for (std::size_t j = 0; j < ns; ++j) {
        for (std::size_t i = 0; i < nt; ++i)
            daug[j][i] = Rational(wm.at(tight[i], static_cast<std::size_t>(support[j])));
        daug[j][nt] = Rational(-1);  // -u
    }
    for (std::size_t i = 0; i < nt; ++i) daug[ns][i] = Rational(1);
    daug[ns][nt + 1] = Rational(1);
    auto dual = solve_rational(std::move(daug), nt + 1);
    if (!dual) return cert;
    Rational u = (*dual)[nt];
    if (u != v) return cert;
    for (std::size_t i = 0; i < nt; ++i)
        if ((*dual)[i] < 0) return cert;
    for (std::size_t c = 0; c < wm.ncols; ++c) {
        Rational col_val(0);
        for (std::size_t i = 0; i < nt; ++i)
            col_val += Rational(wm.at(tight[i], c)) * (*dual)[i];
        if (col_val > u) return cert;  // dual infeasible: value <= u fails
    }

    cert.value = v;
    cert.mixture.assign(primal->begin(), primal->begin() + ns);
    cert.dual.assign(dual->begin(), dual->begin() + nt);
    cert.ok = true;
    return cert;
}

}  // namespace

LpResult exact_omega_lp(const GameSpec& spec, std::uint64_t limit) {
    spec.validate();
    WinMatrix wm = build_matrix(spec, limit);
    const std::size_t R = wm.nrows, N = wm.ncols;

    // maximize v subject to  v - sum_S A[x][S] p_S <= 0  per row x,
    // sum p <= 1, everything nonnegative.  Variables: v, p_1..p_N, slacks.
    Simplex sx;
    sx.nrows = R + 1;
    sx.ncols = 1 + N + R + 1;
    sx.t.assign(sx.nrows, std::vector<double>(sx.ncols + 1, 0.0));
    sx.obj.assign(sx.ncols, 0.0);
    sx.basis.resize(sx.nrows);
    for (std::size_t r = 0; r < R; ++r) {
        sx.t[r][0] = 1.0;
        for (std::size_t c = 0; c < N; ++c) sx.t[r][1 + c] = -static_cast<double>(wm.at(r, c));
        sx.t[r][1 + N + r] = 1.0;
        sx.basis[r] = 1 + N + r;
    }
    for (std::size_t c = 0; c < N; ++c) sx.t[R][1 + c] = 1.0;
    sx.t[R][1 + N + R] = 1.0;
    sx.t[R][sx.ncols] = 1.0;
    sx.basis[R] = 1 + N + R;
    sx.obj[0] = 1.0;
    if (!sx.solve(200000))
        throw WorkBoundExceededError("simplex failed to converge");

    std::vector<double> primal(sx.ncols, 0.0);
    for (std::size_t i = 0; i < sx.nrows; ++i) primal[sx.basis[i]] = sx.t[i][sx.ncols];

    LpResult result;
    result.certified = false;
    for (double tol : {1e-7, 1e-6, 1e-5}) {
        std::vector<std::uint64_t> support;
        for (std::size_t c = 0; c < N; ++c)
            if (primal[1 + c] > tol) support.push_back(c);
        std::vector<std::size_t> tight;
        for (std::size_t r = 0; r < R; ++r)
            if (primal[1 + N + r] < tol) tight.push_back(r);
        Certificate cert = certify(wm, support, tight);
        if (cert.ok) {
            result.value = cert.value;
            result.support = std::move(support);
            result.mixture = std::move(cert.mixture);
            result.tight_rows = std::move(tight);
            result.dual_mixture = std::move(cert.dual);
            result.certified = true;
            return result;
        }
    }
    // Fall back to the float value, flagged as uncertified.
    result.value = Rational(BigInt(std::llround(primal[0] * 9007199254740992.0)),
                            BigInt(1) << 53);
    return result;
}

}  // namespace ghz
