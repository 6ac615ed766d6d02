#include "ratcalc/ratexpr.hpp"

#include <cctype>
#include <unordered_map>

namespace ratcalc {

ExprPtr RatExpr::zero() {
    return ExprPtr(new RatExpr(Kind::zero));
}

ExprPtr RatExpr::letter(uint32_t index) {
    auto e = new RatExpr(Kind::letter);
    e->letter_ = index;
    return ExprPtr(e);
}

ExprPtr RatExpr::sum(ExprPtr lhs, ExprPtr rhs) {
    auto e = new RatExpr(Kind::sum);
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return ExprPtr(e);
}

ExprPtr RatExpr::product(ExprPtr lhs, ExprPtr rhs) {
    auto e = new RatExpr(Kind::product);
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return ExprPtr(e);
}

ExprPtr RatExpr::left_scalar(Value scalar, ExprPtr e) {
    auto n = new RatExpr(Kind::left_scalar);
    n->scalar_ = std::move(scalar);
    n->lhs_ = std::move(e);
    return ExprPtr(n);
}

ExprPtr RatExpr::right_scalar(ExprPtr e, Value scalar) {
    auto n = new RatExpr(Kind::right_scalar);
    n->scalar_ = std::move(scalar);
    n->lhs_ = std::move(e);
    return ExprPtr(n);
}

ExprPtr RatExpr::star(ExprPtr e) {
    auto n = new RatExpr(Kind::star);
    n->lhs_ = std::move(e);
    return ExprPtr(n);
}

size_t RatExpr::node_count() const {
    size_t n = 1;
    if (lhs_) n += lhs_->node_count();
    if (rhs_) n += rhs_->node_count();
    return n;
}

Localization::Localization(const Semiring& ring, AlphabetPtr alphabet, std::vector<Value> values)
    : ring_(&ring), alphabet_(std::move(alphabet)), values_(std::move(values)) {
    if (values_.size() != alphabet_->size())
        throw Error("localization must assign exactly one scalar per letter");
    for (const Value& v : values_) {
        if (v.ring() != ring.id())
            throw DomainMismatchError("localization scalar from a different semiring");
    }
}

Localization Localization::zero(const Semiring& ring, AlphabetPtr alphabet) {
    std::vector<Value> vs(alphabet->size(), ring.zero());
    return Localization(ring, std::move(alphabet), std::move(vs));
}

LetterAssignment::LetterAssignment(const Semiring& ring, AlphabetPtr source,
                                   std::vector<TruncatedSeries> images)
    : ring_(&ring), source_(std::move(source)), images_(std::move(images)) {
    if (images_.size() != source_->size())
        throw Error("letter assignment must give one series per letter");
    for (const TruncatedSeries& s : images_) {
        if (s.ring().id() != ring.id())
            throw DomainMismatchError("assignment image over a different semiring");
        if (!same_alphabet(s.alphabet(), images_.front().alphabet()))
            throw DomainMismatchError("assignment images over different target alphabets");
        if (s.max_len() != images_.front().max_len())
            throw Error("assignment images must share one window");
    }
}

LetterAssignment LetterAssignment::identity(const Semiring& ring, AlphabetPtr alphabet, size_t max_len) {
    std::vector<TruncatedSeries> images;
    for (uint32_t x = 0; x < alphabet->size(); ++x)
        images.push_back(letter_series(ring, alphabet, x, max_len));
    return LetterAssignment(ring, alphabet, std::move(images));
}

LetterAssignment LetterAssignment::localized_identity(const Localization& lambda, size_t max_len) {
    const Semiring& k = lambda.ring();
    std::vector<TruncatedSeries> images;
    for (uint32_t x = 0; x < lambda.alphabet()->size(); ++x) {
        TruncatedSeries s = letter_series(k, lambda.alphabet(), x, max_len);
        s.set_coeff(Word(), lambda.at(x));
        images.push_back(std::move(s));
    }
    return LetterAssignment(k, lambda.alphabet(), std::move(images));
}

Localization LetterAssignment::induced() const {
    std::vector<Value> vs;
    for (const TruncatedSeries& s : images_) vs.push_back(s.coeff(Word()));
    return Localization(*ring_, source_, std::move(vs));
}

// ---------------------------------------------------------------------
// const / rationality

namespace {

// nullopt marks "undefined"; the offending star node is reported through
// `offender` for the error message.
std::optional<Value> try_const(const ExprPtr& e, const Localization& lambda,
                               const RatExpr** offender) {
    const Semiring& k = lambda.ring();
    switch (e->kind()) {
        case RatExpr::Kind::zero:
            return k.zero();
        case RatExpr::Kind::letter:
            if (e->letter_index() >= lambda.alphabet()->size()) {
                throw Error("expression letter outside the localization's alphabet");
            }
            return lambda.at(e->letter_index());
        case RatExpr::Kind::sum: {
            auto a = try_const(e->lhs(), lambda, offender);
            if (!a) return std::nullopt;
            auto b = try_const(e->rhs(), lambda, offender);
            if (!b) return std::nullopt;
            return k.add(*a, *b);
        }
        case RatExpr::Kind::product: {
            auto a = try_const(e->lhs(), lambda, offender);
            if (!a) return std::nullopt;
            auto b = try_const(e->rhs(), lambda, offender);
            if (!b) return std::nullopt;
            return k.mul(*a, *b);
        }
        case RatExpr::Kind::left_scalar: {
            auto a = try_const(e->operand(), lambda, offender);
            if (!a) return std::nullopt;
            return k.mul(e->scalar(), *a);
        }
        case RatExpr::Kind::right_scalar: {
            auto a = try_const(e->operand(), lambda, offender);
            if (!a) return std::nullopt;
            return k.mul(*a, e->scalar());
        }
        case RatExpr::Kind::star: {
            auto a = try_const(e->operand(), lambda, offender);
            if (!a) return std::nullopt;
            if (!k.is_zero(*a)) {
                if (*offender == nullptr) *offender = e.get();
                return std::nullopt;
            }
            return k.one();
        }
    }
    throw Error("unreachable");
}

} // namespace

Value const_term(const ExprPtr& e, const Localization& lambda) {
    const RatExpr* offender = nullptr;
    auto v = try_const(e, lambda, &offender);
    if (v) return *v;
    std::string where = offender
        ? format_expr(ExprPtr(offender, [](const RatExpr*) {}), lambda.alphabet(), lambda.ring())
        : "?";
    throw UndefinedConstTermError("const is undefined: starred subexpression " + where +
                                  " has nonzero constant term");
}

bool is_rational(const ExprPtr& e, const Localization& lambda) {
    const RatExpr* offender = nullptr;
    return try_const(e, lambda, &offender).has_value();
}

// ---------------------------------------------------------------------
// evaluation

namespace {

const TruncatedSeries& eval_memo(const ExprPtr& e, const LetterAssignment& theta, size_t max_len,
                                 std::unordered_map<const RatExpr*, TruncatedSeries>& memo) {
    auto hit = memo.find(e.get());
    if (hit != memo.end()) return hit->second;
    const Semiring& k = theta.ring();
    TruncatedSeries out = zero_series(k, theta.target_alphabet(), max_len);
    switch (e->kind()) {
        case RatExpr::Kind::zero:
            break;
        case RatExpr::Kind::letter:
            out = theta.image(e->letter_index()).truncated(max_len);
            break;
        case RatExpr::Kind::sum:
            out = add(eval_memo(e->lhs(), theta, max_len, memo),
                      eval_memo(e->rhs(), theta, max_len, memo));
            break;
        case RatExpr::Kind::product:
            out = cauchy_product(eval_memo(e->lhs(), theta, max_len, memo),
                                 eval_memo(e->rhs(), theta, max_len, memo));
            break;
        case RatExpr::Kind::left_scalar:
            out = scalar_left(e->scalar(), eval_memo(e->operand(), theta, max_len, memo));
            break;
        case RatExpr::Kind::right_scalar:
            out = scalar_right(eval_memo(e->operand(), theta, max_len, memo), e->scalar());
            break;
        case RatExpr::Kind::star:
            out = series_star(eval_memo(e->operand(), theta, max_len, memo));
            break;
    }
    return memo.emplace(e.get(), std::move(out)).first->second;
}

} // namespace

TruncatedSeries eval_expr(const ExprPtr& e, const LetterAssignment& theta, size_t max_len) {
    if (max_len > theta.max_len())
        throw OutOfWindowError("assignment images are truncated below the requested window");
    if (!is_rational(e, theta.induced()))
        const_term(e, theta.induced()); // throws with the offending subtree named
    std::unordered_map<const RatExpr*, TruncatedSeries> memo;
    return eval_memo(e, theta, max_len, memo);
}

// ---------------------------------------------------------------------
// parsing / printing

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;
    const AlphabetPtr& alphabet;
    const Semiring& ring;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" +
                         std::string(text) + "'");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // '.' or the UTF-8 middle dot
    bool eat_product_dot() {
        skip_ws();
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            return true;
        }
        if (text.compare(pos, 2, "\xc2\xb7") == 0) {
            pos += 2;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string read_ident() {
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    // scalar literal: signed number, "p/q", or the named constants the
    // instance accepts (true/false/inf/-inf)
    std::optional<Value> try_scalar() {
        skip_ws();
        size_t save = pos;
        if (pos >= text.size()) return std::nullopt;
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            size_t end = pos + (c == '-' ? 1 : 0);
            if (end < text.size() && !std::isdigit(static_cast<unsigned char>(text[end])) &&
                text.compare(end, 3, "inf") != 0)
                return std::nullopt;
            while (end < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
                ++end;
            if (text.compare(pos, 4, "-inf") == 0) end = pos + 4;
            std::string lit(text.substr(pos, end - pos));
            // bare "0" in expression position is the null expression,
            // unless an explicit '<' marks it as an acting scalar
            if (lit == "0" && (end >= text.size() || text[end] != '<')) return std::nullopt;
            pos = end;
            try {
                return ring.parse(lit);
            } catch (const ParseError&) {
                pos = save;
                fail("bad scalar literal '" + lit + "'");
            }
        }
        if (ident_start(c)) {
            size_t save_ident = pos;
            std::string name = read_ident();
            if (!alphabet->contains(name) &&
                (name == "true" || name == "false" || name == "inf")) {
                try {
                    return ring.parse(name);
                } catch (const ParseError&) {
                    pos = save_ident;
                    return std::nullopt;
                }
            }
            pos = save_ident;
        }
        return std::nullopt;
    }

    bool at_factor_start() {
        char c = peek();
        if (c == '(' || c == '0') return true;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return true;
        return ident_start(c);
    }

    ExprPtr parse_factor() {
        skip_ws();
        if (auto scalar = try_scalar()) {
            // explicit '<' or sugar: the scalar acts on the next factor
            if (!eat('<')) eat_product_dot();
            skip_ws();
            if (!at_factor_start()) fail("scalar must act on an expression");
            return RatExpr::left_scalar(*scalar, parse_factor());
        }
        ExprPtr base;
        char c = peek();
        if (c == '(') {
            ++pos;
            base = parse_sum();
            if (!eat(')')) fail("expected ')'");
        } else if (c == '0') {
            ++pos;
            base = RatExpr::zero();
        } else if (ident_start(c)) {
            std::string name = read_ident();
            if (!alphabet->contains(name)) fail("unknown letter '" + name + "'");
            base = RatExpr::letter(alphabet->index_of(name));
        } else {
            fail("expected a letter, '0', a scalar or '('");
        }
        while (true) {
            skip_ws();
            if (eat('*')) {
                base = RatExpr::star(std::move(base));
            } else if (eat('>')) {
                auto scalar = try_scalar();
                if (!scalar) {
                    // "0" is a fine scalar here even though it is an
                    // expression atom elsewhere
                    if (peek() == '0') {
                        ++pos;
                        scalar = ring.zero();
                    } else {
                        fail("expected a scalar after '>'");
                    }
                }
                base = RatExpr::right_scalar(std::move(base), *scalar);
            } else {
                break;
            }
        }
        return base;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (true) {
            bool dotted = eat_product_dot();
            skip_ws();
            if (!dotted && !at_factor_start()) break;
            if (dotted && !at_factor_start()) fail("expected a factor after product dot");
            // expressions are free terms; no rewriting happens here
            e = RatExpr::product(std::move(e), parse_factor());
        }
        return e;
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_term();
        while (eat('+')) e = RatExpr::sum(std::move(e), parse_term());
        return e;
    }
};

int precedence_level(RatExpr::Kind k) {
    switch (k) {
        case RatExpr::Kind::sum: return 0;
        case RatExpr::Kind::product: return 1;
        case RatExpr::Kind::left_scalar:
        case RatExpr::Kind::right_scalar: return 2;
        case RatExpr::Kind::star: return 3;
        default: return 4;
    }
}

void format_into(const ExprPtr& e, const AlphabetPtr& alphabet, const Semiring& ring,
                 int parent_level, std::string& out) {
    const int level = precedence_level(e->kind());
    const bool parens = level < parent_level;
    if (parens) out += '(';
    switch (e->kind()) {
        case RatExpr::Kind::zero:
            out += '0';
            break;
        case RatExpr::Kind::letter:
            out += alphabet->letter(e->letter_index());
            break;
        case RatExpr::Kind::sum:
            format_into(e->lhs(), alphabet, ring, level, out);
            out += '+';
            format_into(e->rhs(), alphabet, ring, level + 1, out);
            break;
        case RatExpr::Kind::product:
            format_into(e->lhs(), alphabet, ring, level, out);
            out += '.';
            // right child needs parens at equal level to keep the tree shape
            format_into(e->rhs(), alphabet, ring, level + 1, out);
            break;
        case RatExpr::Kind::left_scalar:
            out += ring.to_string(e->scalar());
            out += '<';
            format_into(e->operand(), alphabet, ring, level, out);
            break;
        case RatExpr::Kind::right_scalar:
            format_into(e->operand(), alphabet, ring, level + 1, out);
            out += '>';
            out += ring.to_string(e->scalar());
            break;
        case RatExpr::Kind::star:
            format_into(e->operand(), alphabet, ring, level + 1, out);
            out += '*';
            break;
    }
    if (parens) out += ')';
}

} // namespace

ExprPtr parse_expr(std::string_view text, const AlphabetPtr& alphabet, const Semiring& ring) {
    Parser p{text, 0, alphabet, ring};
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::string format_expr(const ExprPtr& e, const AlphabetPtr& alphabet, const Semiring& ring) {
    std::string out;
    format_into(e, alphabet, ring, 0, out);
    return out;
}

} // namespace ratcalc
