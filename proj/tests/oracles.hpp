#pragma once

// Test-side oracles, independent of the library code paths they check:
// direct convolution, path counting, shuffle/infiltration recursions,
// a plain Gaussian rank, and the random generators shared by the
// property and acceptance suites.

#include "ratcalc/linrep.hpp"
#include "ratcalc/ratexpr.hpp"
#include "ratcalc/semiring.hpp"
#include "ratcalc/series.hpp"

#include <random>
#include <vector>

namespace oracle {

using namespace ratcalc;

// --- one-letter series as plain coefficient sequences -----------------

inline std::vector<long long> convolve(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// --- path counting for letter-labelled graphs -------------------------

// adjacency[x][i][j] = 1 if there is an x-labelled edge i -> j; returns
// the number of w-labelled paths from `from` to `to`.
inline long long count_paths(const std::vector<std::vector<std::vector<int>>>& adjacency,
                             const std::vector<uint32_t>& w, size_t from, size_t to) {
    const size_t n = adjacency.empty() ? 0 : adjacency[0].size();
    std::vector<long long> cur(n, 0);
    cur[from] = 1;
    for (uint32_t x : w) {
        std::vector<long long> next(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (cur[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) next[j] += cur[i] * adjacency[x][i][j];
        }
        cur = std::move(next);
    }
    return cur[to];
}

// --- shuffle / infiltration coefficients -------------------------------

// <u shuffle v, w> over the naturals, by the last-letter recursion.
inline long long shuffle_coeff(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                               const std::vector<uint32_t>& w) {
    if (u.empty()) return w == v ? 1 : 0;
    if (v.empty()) return w == u ? 1 : 0;
    if (w.empty()) return 0;
    std::vector<uint32_t> w1(w.begin(), w.end() - 1);
    long long total = 0;
    if (u.back() == w.back()) {
        std::vector<uint32_t> u1(u.begin(), u.end() - 1);
        total += shuffle_coeff(u1, v, w1);
    }
    if (v.back() == w.back()) {
        std::vector<uint32_t> v1(v.begin(), v.end() - 1);
        total += shuffle_coeff(u, v1, w1);
    }
    return total;
}

// <u infiltration v, w>: the shuffle recursion plus the letter-merging
// branch when all three words end alike.
inline long long infiltration_coeff(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                                    const std::vector<uint32_t>& w) {
    if (u.empty()) return w == v ? 1 : 0;
    if (v.empty()) return w == u ? 1 : 0;
    if (w.empty()) return 0;
    std::vector<uint32_t> w1(w.begin(), w.end() - 1);
    long long total = 0;
    if (u.back() == w.back()) {
        std::vector<uint32_t> u1(u.begin(), u.end() - 1);
        total += infiltration_coeff(u1, v, w1);
    }
    if (v.back() == w.back()) {
        std::vector<uint32_t> v1(v.begin(), v.end() - 1);
        total += infiltration_coeff(u, v1, w1);
    }
    if (u.back() == w.back() && v.back() == w.back()) {
        std::vector<uint32_t> u1(u.begin(), u.end() - 1);
        std::vector<uint32_t> v1(v.begin(), v.end() - 1);
        total += infiltration_coeff(u1, v1, w1);
    }
    return total;
}

// n-fold sum of x, the semiring action of a natural coefficient
inline Value ntimes(const Semiring& k, long long n, const Value& x) {
    Value acc = k.zero();
    for (long long i = 0; i < n; ++i) acc = k.add(acc, x);
    return acc;
}

// --- plain Gaussian rank over the rationals ----------------------------

inline size_t rank_of(std::vector<std::vector<Rational>> m) {
    size_t rank = 0;
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[rank][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// --- random generators --------------------------------------------------

inline Value random_scalar(std::mt19937_64& rng, const Semiring& k) {
    switch (k.id()) {
        case SemiringId::boolean:
            return k.from_bool(rng() % 2);
        case SemiringId::natural:
            return k.from_int(static_cast<long long>(rng() % 3));
        case SemiringId::integer:
            return k.from_int(static_cast<long long>(rng() % 5) - 2);
        case SemiringId::rational: {
            long long n = static_cast<long long>(rng() % 5) - 2;
            long long d = 1 + static_cast<long long>(rng() % 2);
            return k.from_rational(Rational(n, d));
        }
        case SemiringId::max_plus:
            return rng() % 4 == 0 ? k.neg_infinity()
                                  : k.from_int(static_cast<long long>(rng() % 7) - 3);
        case SemiringId::completed_positive:
            return k.from_rational(Rational(static_cast<long long>(rng() % 4),
                                            1 + static_cast<long long>(rng() % 2)));
    }
    return k.zero();
}

// Localization with letter 0 pinned to zero so star repairs always have
// a constant-free letter to multiply with.
inline Localization random_localization(std::mt19937_64& rng, const Semiring& k,
                                        const AlphabetPtr& alphabet) {
    std::vector<Value> vals;
    for (uint32_t x = 0; x < alphabet->size(); ++x)
        vals.push_back(x == 0 ? k.zero() : random_scalar(rng, k));
    return Localization(k, alphabet, std::move(vals));
}

// Completely free random tree, star operands repaired to constant-free
// form by appending a zero-localized letter.
inline ExprPtr random_rational_expr(std::mt19937_64& rng, const Localization& lambda,
                                    size_t budget) {
    const Semiring& k = lambda.ring();
    const AlphabetPtr& alphabet = lambda.alphabet();
    auto letter = [&] {
        return RatExpr::letter(static_cast<uint32_t>(rng() % alphabet->size()));
    };
    if (budget <= 1) {
        return rng() % 8 == 0 ? RatExpr::zero() : letter();
    }
    switch (rng() % 7) {
        case 0:
            return RatExpr::zero();
        case 1:
            return letter();
        case 2: {
            size_t left = 1 + rng() % (budget - 1);
            return RatExpr::sum(random_rational_expr(rng, lambda, left),
                                random_rational_expr(rng, lambda, budget - left));
        }
        case 3: {
            size_t left = 1 + rng() % (budget - 1);
            return RatExpr::product(random_rational_expr(rng, lambda, left),
                                    random_rational_expr(rng, lambda, budget - left));
        }
        case 4:
            return RatExpr::left_scalar(random_scalar(rng, k),
                                        random_rational_expr(rng, lambda, budget - 1));
        case 5:
            return RatExpr::right_scalar(random_rational_expr(rng, lambda, budget - 1),
                                         random_scalar(rng, k));
        default: {
            ExprPtr body = random_rational_expr(rng, lambda, budget - 1);
            if (!k.is_zero(const_term(body, lambda)))
                body = RatExpr::product(body, RatExpr::letter(0)); // lambda(letter 0) = 0
            return RatExpr::star(body);
        }
    }
}

// Random representation, one third of the entries zero, boundary
// vectors never entirely zero.
inline LinRep random_rep(std::mt19937_64& rng, const Semiring& k, const AlphabetPtr& alphabet,
                         size_t max_dim) {
    const size_t n = 1 + rng() % max_dim;
    auto nonzero = [&] {
        Value v = k.zero();
        while (k.is_zero(v)) v = random_scalar(rng, k);
        return v;
    };
    auto entry = [&] { return rng() % 3 == 0 ? k.zero() : nonzero(); };
    Matrix lambda(k, 1, n);
    for (size_t j = 0; j < n; ++j) lambda.at(0, j) = entry();
    lambda.at(0, rng() % n) = nonzero();
    Matrix gamma(k, n, 1);
    for (size_t i = 0; i < n; ++i) gamma.at(i, 0) = entry();
    gamma.at(rng() % n, 0) = nonzero();
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < alphabet->size(); ++x) {
        Matrix m(k, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = entry();
        mu.push_back(std::move(m));
    }
    return LinRep(k, alphabet, std::move(lambda), std::move(mu), std::move(gamma));
}

// Random proper truncated series with sparse support.
inline TruncatedSeries random_proper_series(std::mt19937_64& rng, const Semiring& k,
                                            const AlphabetPtr& alphabet, size_t max_len) {
    TruncatedSeries s(k, alphabet, max_len);
    for (const Word& w : words_up_to(alphabet, max_len)) {
        if (w.empty()) continue;
        if (rng() % 3 == 0) s.set_coeff(w, random_scalar(rng, k));
    }
    return s;
}

} // namespace oracle
