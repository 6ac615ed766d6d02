#pragma once

#include "ratcalc/semiring.hpp"
#include "ratcalc/words.hpp"

#include <map>

namespace ratcalc {

// Finitely supported coefficient map Word -> Value. Zero coefficients
// are never stored.
class Polynomial {
public:
    Polynomial(const Semiring& ring, AlphabetPtr alphabet);

    const Semiring& ring() const { return *ring_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }

    Value coeff(const Word& w) const;
    void add_term(const Word& w, const Value& c); // accumulates
    size_t support_size() const { return coeffs_.size(); }
    const std::map<Word, Value, WordOrder>& terms() const { return coeffs_; }

private:
    const Semiring* ring_;
    AlphabetPtr alphabet_;
    std::map<Word, Value, WordOrder> coeffs_;
};

// A series known exactly on the window of words of length <= max_len.
// Access beyond the window is an error, never a silent zero.
class TruncatedSeries {
public:
    TruncatedSeries(const Semiring& ring, AlphabetPtr alphabet, size_t max_len);

    const Semiring& ring() const { return *ring_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    size_t max_len() const { return max_len_; }

    Value coeff(const Word& w) const; // OutOfWindowError beyond the bound
    void set_coeff(const Word& w, const Value& c);
    void add_coeff(const Word& w, const Value& c);

    bool is_proper() const; // zero constant term
    size_t support_size() const { return coeffs_.size(); }
    // nonzero stored terms, in length-lex order
    const std::map<Word, Value, WordOrder>& terms() const { return coeffs_; }

    // restrict to a smaller window
    TruncatedSeries truncated(size_t new_max_len) const;

private:
    const Semiring* ring_;
    AlphabetPtr alphabet_;
    size_t max_len_;
    std::map<Word, Value, WordOrder> coeffs_;
};

// Series constructors.
TruncatedSeries zero_series(const Semiring& ring, AlphabetPtr alphabet, size_t max_len);
TruncatedSeries one_series(const Semiring& ring, AlphabetPtr alphabet, size_t max_len);
TruncatedSeries char_series(const Semiring& ring, const Word& w, size_t max_len);
TruncatedSeries letter_series(const Semiring& ring, AlphabetPtr alphabet, uint32_t letter, size_t max_len);
TruncatedSeries from_polynomial(const Polynomial& p, size_t max_len); // support must fit the window

// Coefficientwise sum; result window is the smaller of the two.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scalar_left(const Value& c, const TruncatedSeries& f);
TruncatedSeries scalar_right(const TruncatedSeries& f, const Value& c);

// coeff(fg, w) = sum over uv = w of coeff(f,u) coeff(g,v).
TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g);

// Sum of convolutional powers of a proper series; throws NotProperError.
TruncatedSeries series_star(const TruncatedSeries& f);

// w -> f(uw); window shrinks by |u|.
TruncatedSeries left_shift(const TruncatedSeries& f, const Word& u);
// w -> f(wu)
TruncatedSeries right_shift(const TruncatedSeries& f, const Word& u);

// Hadamard product on the shared window.
TruncatedSeries pointwise_product(const TruncatedSeries& f, const TruncatedSeries& g);

// Exact equality on the shared window.
bool window_equal(const TruncatedSeries& f, const TruncatedSeries& g);

} // namespace ratcalc
