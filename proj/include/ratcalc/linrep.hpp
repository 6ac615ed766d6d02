#pragma once

#include "ratcalc/matrix.hpp"
#include "ratcalc/ratexpr.hpp"
#include "ratcalc/series.hpp"

#include <functional>

namespace ratcalc {

// Linear representation (lambda, mu, gamma) of a series: a row vector,
// one square matrix per letter extended multiplicatively to words with
// mu(empty) = I, and a column vector. Realizes f(w) = lambda mu(w) gamma.
class LinRep {
public:
    LinRep(const Semiring& ring, AlphabetPtr alphabet, Matrix lambda, std::vector<Matrix> mu,
           Matrix gamma);

    const Semiring& ring() const { return *ring_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    size_t dim() const { return dim_; }

    const Matrix& lambda() const { return lambda_; }
    const Matrix& mu(uint32_t letter) const { return mu_.at(letter); }
    const Matrix& gamma() const { return gamma_; }

private:
    const Semiring* ring_;
    AlphabetPtr alphabet_;
    size_t dim_;
    Matrix lambda_; // 1 x n
    std::vector<Matrix> mu_;
    Matrix gamma_; // n x 1
};

Value eval_word(const LinRep& r, const Word& w);
TruncatedSeries rep_to_series(const LinRep& r, size_t max_len);

// Atoms of the compositional construction.
LinRep rep_zero(const Semiring& ring, AlphabetPtr alphabet); // dim 0, the zero series
LinRep rep_one(const Semiring& ring, AlphabetPtr alphabet);  // the empty-word series
// c.1 + x : the canonical image of a letter at constant term c
LinRep rep_letter(const Semiring& ring, AlphabetPtr alphabet, uint32_t letter, const Value& c);

LinRep rep_sum(const LinRep& a, const LinRep& b);
LinRep rep_product(const LinRep& a, const LinRep& b);
LinRep rep_star(const LinRep& a); // requires eval_word(a, empty) = 0
LinRep rep_scalar_left(const Value& c, const LinRep& a);
LinRep rep_scalar_right(const LinRep& a, const Value& c);

struct ExprToRepOptions {
    // Over a field, reduce after every construction step. Keeps the
    // dimension at the Hankel rank of each subexpression; essential when
    // compiling the large shared trees that state elimination emits.
    bool reduce_intermediates = false;
};

// Compile a rational expression into a representation of the same series
// (the letter x maps to lambda(x).1 + x). Throws on non-rational input.
LinRep expr_to_rep(const ExprPtr& e, const Localization& lambda, ExprToRepOptions opts = {});

// State elimination via the star of the transition matrix over
// expressions. The result is rational for the zero localization and
// evaluates to the same series.
ExprPtr rep_to_expr(const LinRep& r);

enum class ShiftSide { prefix, suffix };

// Shift of the realized function: prefix gives w -> f(uw) (lambda picks
// up mu(u)), suffix gives w -> f(wu) (gamma does).
LinRep shift_rep(const LinRep& r, const Word& u, ShiftSide side);

// Schutzenberger reduction, field scalars only: prefix-shift orbit of
// lambda, then suffix-shift orbit of gamma, exact Gaussian elimination
// with first-nonzero pivots. Result dimension is the Hankel rank.
LinRep reduce_rep(const LinRep& r);

// Exact equivalence over a field: reduce(a (-) b) has dimension 0.
bool equiv(const LinRep& a, const LinRep& b);

// Rank of [f(uv)] over all |u|,|v| <= max_len; field scalars only.
size_t hankel_rank(const LinRep& r, size_t max_len);

// The double family splitting f(uv) = sum_i g_i(u) h_i(v), with
// g_i(u) = (lambda mu(u))_i and h_i(v) = (mu(v) gamma)_i.
struct Factorization {
    LinRep rep;
    size_t size() const { return rep.dim(); }
    Value g(size_t i, const Word& u) const;
    Value h(size_t i, const Word& v) const;
};

Factorization factorize_rep(const LinRep& r);

// Pointwise (Hadamard) product: Kronecker on every component.
LinRep hadamard_rep(const LinRep& a, const LinRep& b);

// The letterwise dual-law interpolation
//   mu(x) = mu1(x) (x) I + I (x) mu2(x) + q . mu1(x) (x) mu2(x):
// q = 0 is the shuffle product, q = 1 the infiltration product.
LinRep qshuffle_rep(const LinRep& a, const LinRep& b, const Value& q);

} // namespace ratcalc
