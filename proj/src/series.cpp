#include "ratcalc/series.hpp"

namespace ratcalc {

namespace {

void require_same_domain(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
    if (f.ring().id() != g.ring().id())
        throw DomainMismatchError(std::string(op) + ": series over different semirings");
    if (!same_alphabet(f.alphabet(), g.alphabet()))
        throw DomainMismatchError(std::string(op) + ": series over different alphabets");
}

} // namespace

Polynomial::Polynomial(const Semiring& ring, AlphabetPtr alphabet)
    : ring_(&ring), alphabet_(std::move(alphabet)) {}

Value Polynomial::coeff(const Word& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? ring_->zero() : it->second;
}

void Polynomial::add_term(const Word& w, const Value& c) {
    if (!w.empty() && !same_alphabet(w.alphabet(), alphabet_))
        throw DomainMismatchError("polynomial term over a different alphabet");
    auto it = coeffs_.find(w);
    Value next = it == coeffs_.end() ? c : ring_->add(it->second, c);
    if (ring_->is_zero(next)) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else if (it == coeffs_.end()) {
        coeffs_.emplace(w, std::move(next));
    } else {
        it->second = std::move(next);
    }
}

TruncatedSeries::TruncatedSeries(const Semiring& ring, AlphabetPtr alphabet, size_t max_len)
    : ring_(&ring), alphabet_(std::move(alphabet)), max_len_(max_len) {}

Value TruncatedSeries::coeff(const Word& w) const {
    if (w.size() > max_len_)
        throw OutOfWindowError("coefficient of a word of length " + std::to_string(w.size()) +
                               " requested from a series truncated at " + std::to_string(max_len_));
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? ring_->zero() : it->second;
}

void TruncatedSeries::set_coeff(const Word& w, const Value& c) {
    if (w.size() > max_len_)
        throw OutOfWindowError("coefficient beyond the window of a series truncated at " +
                               std::to_string(max_len_));
    if (!w.empty() && !same_alphabet(w.alphabet(), alphabet_))
        throw DomainMismatchError("series term over a different alphabet");
    if (ring_->is_zero(c)) {
        coeffs_.erase(w);
    } else {
        coeffs_.insert_or_assign(w, c);
    }
}

void TruncatedSeries::add_coeff(const Word& w, const Value& c) {
    set_coeff(w, ring_->add(coeff(w), c));
}

bool TruncatedSeries::is_proper() const {
    return coeffs_.empty() || !coeffs_.begin()->first.empty();
}

TruncatedSeries TruncatedSeries::truncated(size_t new_max_len) const {
    if (new_max_len > max_len_)
        throw OutOfWindowError("cannot widen a truncated series");
    TruncatedSeries r(*ring_, alphabet_, new_max_len);
    for (const auto& [w, c] : coeffs_) {
        if (w.size() > new_max_len) break;
        r.set_coeff(w, c);
    }
    return r;
}

TruncatedSeries zero_series(const Semiring& ring, AlphabetPtr alphabet, size_t max_len) {
    return TruncatedSeries(ring, std::move(alphabet), max_len);
}

TruncatedSeries one_series(const Semiring& ring, AlphabetPtr alphabet, size_t max_len) {
    TruncatedSeries r(ring, std::move(alphabet), max_len);
    r.set_coeff(Word(), ring.one());
    return r;
}

TruncatedSeries char_series(const Semiring& ring, const Word& w, size_t max_len) {
    TruncatedSeries r(ring, w.alphabet(), max_len);
    r.set_coeff(w, ring.one());
    return r;
}

TruncatedSeries letter_series(const Semiring& ring, AlphabetPtr alphabet, uint32_t letter, size_t max_len) {
    TruncatedSeries r(ring, alphabet, max_len);
    r.set_coeff(Word(alphabet, {letter}), ring.one());
    return r;
}

TruncatedSeries from_polynomial(const Polynomial& p, size_t max_len) {
    TruncatedSeries r(p.ring(), p.alphabet(), max_len);
    for (const auto& [w, c] : p.terms()) r.set_coeff(w, c);
    return r;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_domain(f, g, "add");
    TruncatedSeries r(f.ring(), f.alphabet(), std::min(f.max_len(), g.max_len()));
    for (const auto& [w, c] : f.terms()) {
        if (w.size() > r.max_len()) break;
        r.add_coeff(w, c);
    }
    for (const auto& [w, c] : g.terms()) {
        if (w.size() > r.max_len()) break;
        r.add_coeff(w, c);
    }
    return r;
}

TruncatedSeries scalar_left(const Value& c, const TruncatedSeries& f) {
    TruncatedSeries r(f.ring(), f.alphabet(), f.max_len());
    for (const auto& [w, v] : f.terms()) r.set_coeff(w, f.ring().mul(c, v));
    return r;
}

TruncatedSeries scalar_right(const TruncatedSeries& f, const Value& c) {
    TruncatedSeries r(f.ring(), f.alphabet(), f.max_len());
    for (const auto& [w, v] : f.terms()) r.set_coeff(w, f.ring().mul(v, c));
    return r;
}

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_domain(f, g, "cauchy_product");
    const size_t bound = std::min(f.max_len(), g.max_len());
    TruncatedSeries r(f.ring(), f.alphabet(), bound);
    for (const auto& [u, cu] : f.terms()) {
        if (u.size() > bound) break;
        const size_t room = bound - u.size();
        for (const auto& [v, cv] : g.terms()) {
            if (v.size() > room) break; // terms are length-ordered
            r.add_coeff(concat(u, v), f.ring().mul(cu, cv));
        }
    }
    return r;
}

TruncatedSeries series_star(const TruncatedSeries& f) {
    if (!f.is_proper())
        throw NotProperError("star of a series with nonzero constant term is not summable");
    const Semiring& k = f.ring();
    TruncatedSeries r(k, f.alphabet(), f.max_len());
    r.set_coeff(Word(), k.one());
    // star(f) = 1 + f.star(f): fill by increasing length, splitting each
    // word at a nonempty prefix taken from f.
    for (const Word& w : words_up_to(f.alphabet(), f.max_len())) {
        if (w.empty()) continue;
        Value acc = k.zero();
        for (size_t cut = 1; cut <= w.size(); ++cut) {
            Value head = f.coeff(w.prefix(cut));
            if (k.is_zero(head)) continue;
            Value tail = r.coeff(w.suffix(w.size() - cut));
            acc = k.add(acc, k.mul(head, tail));
        }
        r.set_coeff(w, acc);
    }
    return r;
}

TruncatedSeries left_shift(const TruncatedSeries& f, const Word& u) {
    if (u.size() > f.max_len())
        throw OutOfWindowError("shift word longer than the series window");
    if (!u.empty() && !same_alphabet(u.alphabet(), f.alphabet()))
        throw DomainMismatchError("left_shift: word over a different alphabet");
    TruncatedSeries r(f.ring(), f.alphabet(), f.max_len() - u.size());
    for (const auto& [w, c] : f.terms()) {
        if (w.size() < u.size()) continue;
        if (std::equal(u.letters().begin(), u.letters().end(), w.letters().begin()))
            r.set_coeff(w.suffix(w.size() - u.size()), c);
    }
    return r;
}

TruncatedSeries right_shift(const TruncatedSeries& f, const Word& u) {
    if (u.size() > f.max_len())
        throw OutOfWindowError("shift word longer than the series window");
    if (!u.empty() && !same_alphabet(u.alphabet(), f.alphabet()))
        throw DomainMismatchError("right_shift: word over a different alphabet");
    TruncatedSeries r(f.ring(), f.alphabet(), f.max_len() - u.size());
    for (const auto& [w, c] : f.terms()) {
        if (w.size() < u.size()) continue;
        if (std::equal(u.letters().begin(), u.letters().end(), w.letters().end() - u.size()))
            r.set_coeff(w.prefix(w.size() - u.size()), c);
    }
    return r;
}

TruncatedSeries pointwise_product(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_domain(f, g, "pointwise_product");
    TruncatedSeries r(f.ring(), f.alphabet(), std::min(f.max_len(), g.max_len()));
    for (const auto& [w, c] : f.terms()) {
        if (w.size() > r.max_len()) break;
        Value other = g.coeff(w);
        if (!g.ring().is_zero(other)) r.set_coeff(w, f.ring().mul(c, other));
    }
    return r;
}

bool window_equal(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_domain(f, g, "window_equal");
    const size_t bound = std::min(f.max_len(), g.max_len());
    for (const auto& [w, c] : f.terms()) {
        if (w.size() > bound) break;
        if (g.coeff(w) != c) return false;
    }
    for (const auto& [w, c] : g.terms()) {
        if (w.size() > bound) break;
        if (f.coeff(w) != c) return false;
    }
    return true;
}

} // namespace ratcalc
