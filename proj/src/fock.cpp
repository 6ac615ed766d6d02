#include "ratcalc/fock.hpp"

#include <algorithm>
#include <cctype>

namespace ratcalc {

LadderWord parse_ladder_word(std::string_view text) {
    LadderWord w;
    for (char c : text) {
        if (c == '-') {
            w.push_back(Step::down);
        } else if (c == '+') {
            w.push_back(Step::up);
        } else if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
            continue;
        } else {
            throw ParseError(std::string("bad ladder letter '") + c + "' (expected '+' or '-')");
        }
    }
    return w;
}

std::string format_ladder_word(const LadderWord& w) {
    if (w.empty()) return "_";
    std::string s;
    for (Step x : w) s += (x == Step::up ? '+' : '-');
    return s;
}

int excess(const LadderWord& w) {
    int e = 0;
    for (Step x : w) e += (x == Step::up ? 1 : -1);
    return e;
}

int min_prefix_excess(const LadderWord& w) {
    int e = 0, lo = 0;
    for (Step x : w) {
        e += (x == Step::up ? 1 : -1);
        lo = std::min(lo, e);
    }
    return lo;
}

bool in_transporter(const LadderWord& w, size_t n, size_t m) {
    return excess(w) == static_cast<int>(m) - static_cast<int>(n) &&
           min_prefix_excess(w) >= -static_cast<int>(n);
}

namespace {

// All 2^length words in length-lex order ('-' before '+'), filtered.
template <typename Pred>
std::vector<LadderWord> filter_words(size_t length, Pred keep) {
    std::vector<LadderWord> out;
    for (uint64_t bits = 0; bits < (1ull << length); ++bits) {
        LadderWord w(length);
        for (size_t i = 0; i < length; ++i)
            w[i] = ((bits >> (length - 1 - i)) & 1) ? Step::up : Step::down;
        if (keep(w)) out.push_back(std::move(w));
    }
    return out;
}

} // namespace

std::vector<LadderWord> enumerate_transporter(size_t n, size_t m, size_t length) {
    return filter_words(length, [&](const LadderWord& w) { return in_transporter(w, n, m); });
}

WeightSystem WeightSystem::unit() {
    WeightSystem w;
    w.name_ = "unit";
    return w; // tails default to the constant 1
}

WeightSystem WeightSystem::boson() {
    WeightSystem w;
    w.name_ = "boson";
    w.alpha_tail_.index_linear = true;
    return w;
}

WeightSystem WeightSystem::custom(std::vector<Rational> alpha_head, Tail alpha_tail,
                                  std::vector<Rational> beta_head, Tail beta_tail,
                                  std::string name) {
    WeightSystem w;
    w.name_ = std::move(name);
    w.alpha_head_ = std::move(alpha_head);
    w.alpha_tail_ = alpha_tail;
    w.beta_head_ = std::move(beta_head);
    w.beta_tail_ = beta_tail;
    return w;
}

namespace {

Rational weight_at(const std::vector<Rational>& head, const WeightSystem::Tail& tail, size_t k) {
    if (k == 0) throw Error("weight indices start at 1");
    if (k <= head.size()) return head[k - 1];
    if (tail.index_linear) return Rational(static_cast<long long>(k));
    return tail.constant;
}

} // namespace

Rational WeightSystem::alpha(size_t k) const { return weight_at(alpha_head_, alpha_tail_, k); }
Rational WeightSystem::beta(size_t k) const { return weight_at(beta_head_, beta_tail_, k); }

namespace {

// Weight of one path: e_level . w, zero when 'down' hits the vacuum.
// Returns the end level through `end`.
Rational path_weight(const LadderWord& w, size_t start, const WeightSystem& ws, size_t& end) {
    Rational acc(1);
    size_t level = start;
    for (Step x : w) {
        if (x == Step::down) {
            if (level == 0) {
                end = 0;
                return Rational(0);
            }
            acc = acc * ws.alpha(level);
            --level;
        } else {
            acc = acc * ws.beta(level + 1);
            ++level;
        }
    }
    end = level;
    return acc;
}

} // namespace

Rational brute_force_omega(size_t n, size_t m, size_t length, const WeightSystem& weights) {
    Rational total(0);
    for (uint64_t bits = 0; bits < (1ull << length); ++bits) {
        LadderWord w(length);
        for (size_t i = 0; i < length; ++i)
            w[i] = ((bits >> (length - 1 - i)) & 1) ? Step::up : Step::down;
        size_t end = 0;
        Rational p = path_weight(w, n, weights, end);
        if (end == m) total = total + p;
    }
    return total;
}

std::vector<LadderWord> nonzero_weight_words(size_t n, size_t m, size_t length,
                                             const WeightSystem& weights) {
    return filter_words(length, [&](const LadderWord& w) {
        size_t end = 0;
        Rational p = path_weight(w, n, weights, end);
        return end == m && !p.is_zero();
    });
}

// ---------------------------------------------------------------------
// Dyck codes

namespace {

bool indecomposable_zero_excess(const LadderWord& w) {
    if (w.empty() || excess(w) != 0) return false;
    int e = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        e += (w[i] == Step::up ? 1 : -1);
        if (e == 0) return false; // proper nonempty prefix returned to zero
    }
    return true;
}

bool all_proper_prefixes_positive(const LadderWord& w) {
    int e = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        e += (w[i] == Step::up ? 1 : -1);
        if (e <= 0) return false;
    }
    return true;
}

bool all_proper_prefixes_negative(const LadderWord& w) {
    int e = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        e += (w[i] == Step::up ? 1 : -1);
        if (e >= 0) return false;
    }
    return true;
}

bool in_family(DyckTag tag, const LadderWord& w) {
    if (!indecomposable_zero_excess(w)) return false;
    switch (tag.family) {
        case DyckTag::Family::dyck:
            return true;
        case DyckTag::Family::positive:
            return all_proper_prefixes_positive(w);
        case DyckTag::Family::negative_depth:
            // mirror of D+, dipping at most `depth` below the axis
            return all_proper_prefixes_negative(w) &&
                   min_prefix_excess(w) >= -static_cast<int>(tag.depth);
    }
    return false;
}

using WordSet = std::set<LadderWord>;

WordSet concat_sets(const WordSet& a, const WordSet& b, size_t max_len) {
    WordSet out;
    for (const auto& u : a) {
        if (u.size() > max_len) continue;
        for (const auto& v : b) {
            if (u.size() + v.size() > max_len) continue;
            LadderWord w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.insert(std::move(w));
        }
    }
    return out;
}

// Kleene star truncated to the bound; members are nonempty so the
// iteration settles after at most max_len rounds.
WordSet star_set(const WordSet& a, size_t max_len) {
    WordSet out;
    out.insert(LadderWord{});
    while (true) {
        WordSet next = out;
        for (const auto& w : concat_sets(out, a, max_len)) next.insert(w);
        if (next.size() == out.size()) return out;
        out = std::move(next);
    }
}

WordSet family_set(DyckTag tag, size_t max_len) {
    WordSet out;
    for (size_t len = 0; len <= max_len; ++len)
        for (auto& w : filter_words(len, [&](const LadderWord& u) { return in_family(tag, u); }))
            out.insert(std::move(w));
    return out;
}

WordSet single(Step x) {
    return WordSet{LadderWord{x}};
}

// Least fixpoint of the self-reproducing equations, truncated.
WordSet generated_set(DyckTag tag, size_t max_len) {
    if (tag.family == DyckTag::Family::dyck) {
        // D = D+ union D-, with unrestricted negative depth
        WordSet plus = generated_set(DyckTag::plus(), max_len);
        WordSet minus = generated_set(DyckTag::minus(max_len), max_len);
        for (const auto& w : minus) plus.insert(w);
        return plus;
    }
    if (tag.family == DyckTag::Family::positive) {
        WordSet x; // starts empty, iterate X = b+ X* b-
        while (true) {
            WordSet next = concat_sets(concat_sets(single(Step::up), star_set(x, max_len), max_len),
                                       single(Step::down), max_len);
            if (next == x) return x;
            x = std::move(next);
        }
    }
    // D-(n) = b- (D-(n-1))* b+ from D-(0) = {}
    WordSet x;
    for (size_t depth = 1; depth <= tag.depth; ++depth) {
        x = concat_sets(concat_sets(single(Step::down), star_set(x, max_len), max_len),
                        single(Step::up), max_len);
    }
    return x;
}

std::vector<LadderWord> sorted_by_length_lex(const WordSet& s) {
    std::vector<LadderWord> v(s.begin(), s.end());
    std::stable_sort(v.begin(), v.end(), [](const LadderWord& a, const LadderWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return v;
}

} // namespace

DyckFamily dyck_enumerate(DyckTag tag, size_t max_len) {
    return DyckFamily{tag, max_len, sorted_by_length_lex(family_set(tag, max_len))};
}

bool check_dyck_fixpoint(DyckTag tag, size_t max_len) {
    return family_set(tag, max_len) == generated_set(tag, max_len);
}

bool check_factorization(size_t n, long long k, size_t max_len) {
    if (static_cast<long long>(n) + k < 0)
        throw Error("level underflow: n + k must be >= 0");
    const size_t target = static_cast<size_t>(static_cast<long long>(n) + k);
    const WordSet dplus = family_set(DyckTag::plus(), max_len);
    auto dminus = [&](size_t depth) { return family_set(DyckTag::minus(depth), max_len); };
    auto unions = [](WordSet a, const WordSet& b) {
        for (const auto& w : b) a.insert(w);
        return a;
    };

    WordSet lhs, rhs;
    if (k >= 0) {
        // (D+ + D-(n))* (b+ D+*)^k
        lhs = star_set(unions(dplus, dminus(n)), max_len);
        for (long long i = 0; i < k; ++i) {
            lhs = concat_sets(lhs, single(Step::up), max_len);
            lhs = concat_sets(lhs, star_set(dplus, max_len), max_len);
        }
        // [prod_{i=0}^{k-1} (D-(n+i))* b+] (D+ + D-(n+k))*
        rhs.insert(LadderWord{});
        for (long long i = 0; i < k; ++i) {
            rhs = concat_sets(rhs, star_set(dminus(n + static_cast<size_t>(i)), max_len), max_len);
            rhs = concat_sets(rhs, single(Step::up), max_len);
        }
        rhs = concat_sets(rhs, star_set(unions(dplus, dminus(target)), max_len), max_len);
    } else {
        const size_t down = static_cast<size_t>(-k);
        // (D+* b-)^{-k} (D+ + D-(n+k))*
        lhs.insert(LadderWord{});
        for (size_t i = 0; i < down; ++i) {
            lhs = concat_sets(lhs, star_set(dplus, max_len), max_len);
            lhs = concat_sets(lhs, single(Step::down), max_len);
        }
        lhs = concat_sets(lhs, star_set(unions(dplus, dminus(target)), max_len), max_len);
        // (D+ + D-(n))* [prod_{i=1}^{-k} b- (D-(n-i))*]
        rhs = star_set(unions(dplus, dminus(n)), max_len);
        for (size_t i = 1; i <= down; ++i) {
            rhs = concat_sets(rhs, single(Step::down), max_len);
            rhs = concat_sets(rhs, star_set(dminus(n - i), max_len), max_len);
        }
    }
    if (lhs != rhs) return false;

    WordSet transporter;
    for (size_t len = 0; len <= max_len; ++len)
        for (auto& w : enumerate_transporter(n, n + k, len)) transporter.insert(std::move(w));
    return lhs == transporter;
}

// ---------------------------------------------------------------------
// transfer series

const Rational& TransferSeries::coeff(size_t i) const {
    if (i >= coeffs_.size())
        throw OutOfWindowError("coefficient of t^" + std::to_string(i) +
                               " requested from a series of order " + std::to_string(order()));
    return coeffs_[i];
}

void TransferSeries::set_coeff(size_t i, Rational v) {
    if (i >= coeffs_.size()) throw OutOfWindowError("coefficient beyond the series order");
    coeffs_[i] = std::move(v);
}

TransferSeries ts_one(size_t order) {
    TransferSeries f(order);
    f.set_coeff(0, Rational(1));
    return f;
}

TransferSeries ts_add(const TransferSeries& f, const TransferSeries& g) {
    if (f.order() != g.order()) throw Error("transfer series orders differ");
    TransferSeries r(f.order());
    for (size_t i = 0; i <= f.order(); ++i) r.set_coeff(i, f.coeff(i) + g.coeff(i));
    return r;
}

TransferSeries ts_mul(const TransferSeries& f, const TransferSeries& g) {
    if (f.order() != g.order()) throw Error("transfer series orders differ");
    TransferSeries r(f.order());
    for (size_t i = 0; i <= f.order(); ++i) {
        Rational acc(0);
        for (size_t j = 0; j <= i; ++j) acc = acc + f.coeff(j) * g.coeff(i - j);
        r.set_coeff(i, acc);
    }
    return r;
}

TransferSeries ts_scale(const Rational& c, const TransferSeries& f) {
    TransferSeries r(f.order());
    for (size_t i = 0; i <= f.order(); ++i) r.set_coeff(i, c * f.coeff(i));
    return r;
}

TransferSeries ts_shift(const TransferSeries& f, size_t k) {
    TransferSeries r(f.order());
    for (size_t i = k; i <= f.order(); ++i) r.set_coeff(i, f.coeff(i - k));
    return r;
}

TransferSeries ts_geometric(const TransferSeries& e) {
    if (!e.coeff(0).is_zero()) throw NotProperError("1/(1-e) needs a proper series");
    TransferSeries r(e.order());
    r.set_coeff(0, Rational(1));
    for (size_t i = 1; i <= e.order(); ++i) {
        Rational acc(0);
        for (size_t j = 1; j <= i; ++j) acc = acc + e.coeff(j) * r.coeff(i - j);
        r.set_coeff(i, acc);
    }
    return r;
}

namespace {

// E+_n truncated: each level contributes t^2, so levels deeper than
// order/2 + 1 cannot reach the window.
TransferSeries cf_E_plus(size_t n, const WeightSystem& ws, size_t order, size_t depth) {
    TransferSeries e(order);
    if (depth == 0 || order < 2) return e;
    TransferSeries inner = cf_E_plus(n + 1, ws, order, depth - 1);
    TransferSeries f = ts_geometric(inner);
    Rational c = ws.alpha(n + 1) * ws.beta(n + 1);
    return ts_shift(ts_scale(c, f), 2);
}

// E-_n walks down and bottoms out at the vacuum: E-_0 = 0 because no
// negative excursion exists at level 0.
TransferSeries cf_E_minus(size_t n, const WeightSystem& ws, size_t order) {
    TransferSeries e(order);
    if (n == 0 || order < 2) return e;
    TransferSeries inner = cf_E_minus(n - 1, ws, order);
    TransferSeries f = ts_geometric(inner);
    Rational c = ws.alpha(n) * ws.beta(n);
    return ts_shift(ts_scale(c, f), 2);
}

} // namespace

TransferSeries cf_F(size_t n, CfPart part, const WeightSystem& weights, size_t order) {
    const size_t depth = order / 2 + 1;
    switch (part) {
        case CfPart::plus:
            return ts_geometric(cf_E_plus(n, weights, order, depth));
        case CfPart::minus:
            return ts_geometric(cf_E_minus(n, weights, order));
        case CfPart::full:
            return ts_geometric(
                ts_add(cf_E_plus(n, weights, order, depth), cf_E_minus(n, weights, order)));
    }
    throw Error("unreachable");
}

TransferSeries transfer_series(size_t n, long long k, const WeightSystem& weights, size_t order) {
    if (static_cast<long long>(n) + k < 0)
        throw Error("level underflow: n + k must be >= 0");
    if (order < static_cast<size_t>(k >= 0 ? k : -k))
        throw Error("order must be at least |k|");
    const size_t target = static_cast<size_t>(static_cast<long long>(n) + k);
    TransferSeries first(order), second(order);
    // Each of the |k| bare climb/descent letters carries its own action
    // weight besides the factor t; equation (5) forces the prefactor.
    Rational steps(1);
    if (k >= 0) {
        for (long long i = 1; i <= k; ++i) steps = steps * weights.beta(n + static_cast<size_t>(i));
        // t^k F_{n+k} prod_{i=0}^{k-1} F-_{n+i}
        first = cf_F(target, CfPart::full, weights, order);
        for (long long i = 0; i < k; ++i)
            first = ts_mul(first, cf_F(n + static_cast<size_t>(i), CfPart::minus, weights, order));
        first = ts_shift(ts_scale(steps, first), static_cast<size_t>(k));
        // t^k F_n prod_{i=1}^{k} F+_{n+i}
        second = cf_F(n, CfPart::full, weights, order);
        for (long long i = 1; i <= k; ++i)
            second = ts_mul(second, cf_F(n + static_cast<size_t>(i), CfPart::plus, weights, order));
        second = ts_shift(ts_scale(steps, second), static_cast<size_t>(k));
    } else {
        const size_t down = static_cast<size_t>(-k);
        for (size_t i = 0; i < down; ++i) steps = steps * weights.alpha(n - i);
        // t^{-k} F_{n+k} prod_{i=0}^{-k-1} F+_{n-i}
        first = cf_F(target, CfPart::full, weights, order);
        for (size_t i = 0; i < down; ++i)
            first = ts_mul(first, cf_F(n - i, CfPart::plus, weights, order));
        first = ts_shift(ts_scale(steps, first), down);
        // t^{-k} F_n prod_{i=1}^{-k} F-_{n-i}
        second = cf_F(n, CfPart::full, weights, order);
        for (size_t i = 1; i <= down; ++i)
            second = ts_mul(second, cf_F(n - i, CfPart::minus, weights, order));
        second = ts_shift(ts_scale(steps, second), down);
    }
    if (!(first == second))
        throw Error("the two continued-fraction product forms disagree (internal inconsistency)");
    return first;
}

TransferReport verify_transfer(size_t n, long long k, const WeightSystem& weights, size_t order) {
    TransferReport report;
    report.n = n;
    report.k = k;
    report.weights = weights.name();
    report.coefficients_match = true;
    report.support_always_subset = true;
    report.support_always_equal = true;
    const size_t m = static_cast<size_t>(static_cast<long long>(n) + k);
    TransferSeries t = transfer_series(n, k, weights, order);
    for (size_t i = 0; i <= order; ++i) {
        TransferRow row;
        row.length = i;
        row.from_fraction = t.coeff(i);
        row.from_brute = brute_force_omega(n, m, i, weights);
        row.match = row.from_fraction == row.from_brute;

        auto support = nonzero_weight_words(n, m, i, weights);
        auto transporter = enumerate_transporter(n, m, i);
        row.support_is_subset = std::includes(transporter.begin(), transporter.end(),
                                              support.begin(), support.end());
        row.support_equals = support == transporter;

        report.coefficients_match &= row.match;
        report.support_always_subset &= row.support_is_subset;
        report.support_always_equal &= row.support_equals;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace ratcalc
