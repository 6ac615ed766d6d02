#pragma once

#include "ratcalc/series.hpp"

#include <optional>

namespace ratcalc {

class RatExpr;
using ExprPtr = std::shared_ptr<const RatExpr>;

// Node of a completely free expression: letters and the null expression
// combined by sum, product, two-sided scalar actions and star. Nodes are
// immutable and shared; letters are indices into an ambient alphabet.
class RatExpr {
public:
    enum class Kind : uint8_t { zero, letter, sum, product, left_scalar, right_scalar, star };

    static ExprPtr zero();
    static ExprPtr letter(uint32_t index);
    static ExprPtr sum(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr product(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr left_scalar(Value scalar, ExprPtr e);
    static ExprPtr right_scalar(ExprPtr e, Value scalar);
    static ExprPtr star(ExprPtr e);

    Kind kind() const { return kind_; }
    uint32_t letter_index() const { return letter_; }
    const Value& scalar() const { return *scalar_; }
    const ExprPtr& lhs() const { return lhs_; }
    const ExprPtr& rhs() const { return rhs_; }
    const ExprPtr& operand() const { return lhs_; } // star / scalar child

    size_t node_count() const;

private:
    RatExpr(Kind kind) : kind_(kind) {}

    Kind kind_;
    uint32_t letter_ = 0;
    std::optional<Value> scalar_;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

// Total assignment of a constant-term scalar to every letter.
class Localization {
public:
    Localization(const Semiring& ring, AlphabetPtr alphabet, std::vector<Value> values);
    static Localization zero(const Semiring& ring, AlphabetPtr alphabet);

    const Semiring& ring() const { return *ring_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Value& at(uint32_t letter) const { return values_.at(letter); }

private:
    const Semiring* ring_;
    AlphabetPtr alphabet_;
    std::vector<Value> values_;
};

// Assignment of a truncated series to every letter; the induced
// localization reads off the constant terms.
class LetterAssignment {
public:
    LetterAssignment(const Semiring& ring, AlphabetPtr source, std::vector<TruncatedSeries> images);
    // theta(x) = x over the same alphabet
    static LetterAssignment identity(const Semiring& ring, AlphabetPtr alphabet, size_t max_len);
    // theta(x) = lambda(x).1 + x, the canonical embedding at a localization
    static LetterAssignment localized_identity(const Localization& lambda, size_t max_len);

    const Semiring& ring() const { return *ring_; }
    const AlphabetPtr& source_alphabet() const { return source_; }
    const AlphabetPtr& target_alphabet() const { return images_.front().alphabet(); }
    size_t max_len() const { return images_.front().max_len(); }
    const TruncatedSeries& image(uint32_t letter) const { return images_.at(letter); }
    Localization induced() const;

private:
    const Semiring* ring_;
    AlphabetPtr source_;
    std::vector<TruncatedSeries> images_;
};

// Parses the expression grammar:
//   expr   := term ('+' term)*
//   term   := factor (('.' | juxtaposition) factor)*
//   factor := scalar ('<' | '.')? factor | atom postfix*
//   postfix:= '*' | '>' scalar
//   atom   := letter | '0' | '(' expr ')'
// A scalar literal in factor position acts on the next factor from the
// left ("2 a b" means (2<a).b). Star binds tighter than scalar actions.
ExprPtr parse_expr(std::string_view text, const AlphabetPtr& alphabet, const Semiring& ring);

// Canonical text form; parses back to the same tree for parser-normal
// expressions.
std::string format_expr(const ExprPtr& e, const AlphabetPtr& alphabet, const Semiring& ring);

// The partial constant-term character: letters read from the
// localization, homomorphic over +, ., scalars, star defined only on
// constant-free operands. Throws UndefinedConstTermError otherwise.
Value const_term(const ExprPtr& e, const Localization& lambda);

// True iff const_term is defined on every subtree.
bool is_rational(const ExprPtr& e, const Localization& lambda);

// The evaluation polymorphism: morphism for both internal laws, both
// external laws and star. Requires the expression to be rational for the
// assignment's induced localization.
TruncatedSeries eval_expr(const ExprPtr& e, const LetterAssignment& theta, size_t max_len);

} // namespace ratcalc
