#include "ratcalc/linrep.hpp"

#include "ratcalc/cancellation.hpp"

#include <deque>
#include <unordered_map>

namespace ratcalc {

LinRep::LinRep(const Semiring& ring, AlphabetPtr alphabet, Matrix lambda, std::vector<Matrix> mu,
               Matrix gamma)
    : ring_(&ring),
      alphabet_(std::move(alphabet)),
      dim_(lambda.cols()),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      gamma_(std::move(gamma)) {
    if (lambda_.rows() != 1 || gamma_.cols() != 1 || gamma_.rows() != dim_)
        throw Error("representation shape mismatch");
    if (mu_.size() != alphabet_->size())
        throw Error("representation needs one matrix per letter");
    for (const Matrix& m : mu_) {
        if (m.rows() != dim_ || m.cols() != dim_) throw Error("mu matrix is not dim x dim");
        if (m.ring().id() != ring.id()) throw DomainMismatchError("mu over a different semiring");
    }
    if (lambda_.ring().id() != ring.id() || gamma_.ring().id() != ring.id())
        throw DomainMismatchError("representation vectors over a different semiring");
}

Value eval_word(const LinRep& r, const Word& w) {
    if (!w.empty() && !same_alphabet(w.alphabet(), r.alphabet()))
        throw DomainMismatchError("eval_word: word over a different alphabet");
    Matrix row = r.lambda();
    for (uint32_t x : w.letters()) row = mul(row, r.mu(x));
    Matrix out = mul(row, r.gamma());
    return out.rows() == 1 && out.cols() == 1 ? out.at(0, 0) : r.ring().zero();
}

TruncatedSeries rep_to_series(const LinRep& r, size_t max_len) {
    TruncatedSeries out(r.ring(), r.alphabet(), max_len);
    // depth-first over the word tree, extending lambda mu(w) one letter
    // at a time
    std::function<void(const Word&, const Matrix&)> walk = [&](const Word& w, const Matrix& row) {
        Matrix v = mul(row, r.gamma());
        if (v.rows() == 1 && v.cols() == 1) out.set_coeff(w, v.at(0, 0));
        if (w.size() == max_len) return;
        for (uint32_t x = 0; x < r.alphabet()->size(); ++x)
            walk(w.appended(x), mul(row, r.mu(x)));
    };
    walk(Word(r.alphabet(), {}), r.lambda());
    return out;
}

LinRep rep_zero(const Semiring& ring, AlphabetPtr alphabet) {
    Matrix lambda(ring, 1, 0);
    Matrix gamma(ring, 0, 1);
    std::vector<Matrix> mu(alphabet->size(), Matrix(ring, 0, 0));
    return LinRep(ring, std::move(alphabet), std::move(lambda), std::move(mu), std::move(gamma));
}

LinRep rep_one(const Semiring& ring, AlphabetPtr alphabet) {
    Matrix lambda(ring, 1, 1);
    lambda.at(0, 0) = ring.one();
    Matrix gamma(ring, 1, 1);
    gamma.at(0, 0) = ring.one();
    std::vector<Matrix> mu(alphabet->size(), Matrix(ring, 1, 1));
    return LinRep(ring, std::move(alphabet), std::move(lambda), std::move(mu), std::move(gamma));
}

LinRep rep_letter(const Semiring& ring, AlphabetPtr alphabet, uint32_t letter, const Value& c) {
    Matrix lambda(ring, 1, 2);
    lambda.at(0, 0) = ring.one();
    Matrix gamma(ring, 2, 1);
    gamma.at(0, 0) = c;
    gamma.at(1, 0) = ring.one();
    std::vector<Matrix> mu(alphabet->size(), Matrix(ring, 2, 2));
    mu[letter].at(0, 1) = ring.one();
    return LinRep(ring, std::move(alphabet), std::move(lambda), std::move(mu), std::move(gamma));
}

namespace {

void require_compatible(const LinRep& a, const LinRep& b, const char* op) {
    if (a.ring().id() != b.ring().id())
        throw DomainMismatchError(std::string(op) + ": representations over different semirings");
    if (!same_alphabet(a.alphabet(), b.alphabet()))
        throw DomainMismatchError(std::string(op) + ": representations over different alphabets");
}

} // namespace

LinRep rep_sum(const LinRep& a, const LinRep& b) {
    require_compatible(a, b, "rep_sum");
    const Semiring& k = a.ring();
    const size_t n = a.dim(), m = b.dim();
    Matrix lambda(k, 1, n + m);
    for (size_t j = 0; j < n; ++j) lambda.at(0, j) = a.lambda().at(0, j);
    for (size_t j = 0; j < m; ++j) lambda.at(0, n + j) = b.lambda().at(0, j);
    Matrix gamma(k, n + m, 1);
    for (size_t i = 0; i < n; ++i) gamma.at(i, 0) = a.gamma().at(i, 0);
    for (size_t i = 0; i < m; ++i) gamma.at(n + i, 0) = b.gamma().at(i, 0);
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x) {
        Matrix mx(k, n + m, n + m);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) mx.at(i, j) = a.mu(x).at(i, j);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) mx.at(n + i, n + j) = b.mu(x).at(i, j);
        mu.push_back(std::move(mx));
    }
    return LinRep(k, a.alphabet(), std::move(lambda), std::move(mu), std::move(gamma));
}

// Cauchy product; sound for non-proper factors. The right block is
// entered either immediately (lambda1 gamma1 lambda2, the left factor
// taking the empty word) or after any letter consumed inside the left
// factor (mu1(x) gamma1 lambda2).
LinRep rep_product(const LinRep& a, const LinRep& b) {
    require_compatible(a, b, "rep_product");
    const Semiring& k = a.ring();
    const size_t n = a.dim(), m = b.dim();
    Matrix lambda(k, 1, n + m);
    for (size_t j = 0; j < n; ++j) lambda.at(0, j) = a.lambda().at(0, j);
    Matrix bridge_row = mul(a.lambda(), a.gamma()); // 1x1: f(empty)
    const Value f_empty = n > 0 ? bridge_row.at(0, 0) : k.zero();
    for (size_t j = 0; j < m; ++j) lambda.at(0, n + j) = k.mul(f_empty, b.lambda().at(0, j));
    Matrix gamma(k, n + m, 1);
    for (size_t i = 0; i < m; ++i) gamma.at(n + i, 0) = b.gamma().at(i, 0);
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x) {
        Matrix mx(k, n + m, n + m);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) mx.at(i, j) = a.mu(x).at(i, j);
        // mu1(x) gamma1 lambda2
        Matrix hop = mul(mul(a.mu(x), a.gamma()), b.lambda());
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) mx.at(i, n + j) = hop.at(i, j);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) mx.at(n + i, n + j) = b.mu(x).at(i, j);
        mu.push_back(std::move(mx));
    }
    return LinRep(k, a.alphabet(), std::move(lambda), std::move(mu), std::move(gamma));
}

// Star of a proper representation: one fresh boundary state; a letter
// step either continues inside the body or closes a block through gamma.
LinRep rep_star(const LinRep& a) {
    const Semiring& k = a.ring();
    if (!k.is_zero(eval_word(a, Word(a.alphabet(), {}))))
        throw NotProperError("rep_star requires a representation with zero constant term");
    const size_t n = a.dim();
    Matrix lambda(k, 1, n + 1);
    lambda.at(0, 0) = k.one();
    Matrix gamma(k, n + 1, 1);
    gamma.at(0, 0) = k.one();
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x) {
        Matrix mx(k, n + 1, n + 1);
        Matrix enter = mul(a.lambda(), a.mu(x));        // 1 x n
        Matrix enter_close = mul(enter, a.gamma());     // 1 x 1
        Matrix body_close = mul(a.mu(x), a.gamma());    // n x 1
        mx.at(0, 0) = enter_close.at(0, 0);
        for (size_t j = 0; j < n; ++j) mx.at(0, 1 + j) = enter.at(0, j);
        for (size_t i = 0; i < n; ++i) {
            mx.at(1 + i, 0) = body_close.at(i, 0);
            for (size_t j = 0; j < n; ++j) mx.at(1 + i, 1 + j) = a.mu(x).at(i, j);
        }
        mu.push_back(std::move(mx));
    }
    return LinRep(k, a.alphabet(), std::move(lambda), std::move(mu), std::move(gamma));
}

LinRep rep_scalar_left(const Value& c, const LinRep& a) {
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x) mu.push_back(a.mu(x));
    return LinRep(a.ring(), a.alphabet(), scalar_mul(c, a.lambda()), std::move(mu), a.gamma());
}

LinRep rep_scalar_right(const LinRep& a, const Value& c) {
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x) mu.push_back(a.mu(x));
    return LinRep(a.ring(), a.alphabet(), a.lambda(), std::move(mu), scalar_mul(a.gamma(), c));
}

// ---------------------------------------------------------------------
// expression -> representation

namespace {

LinRep compile_node(const ExprPtr& e, const Localization& lambda, const ExprToRepOptions& opts,
                    std::unordered_map<const RatExpr*, LinRep>& memo) {
    auto hit = memo.find(e.get());
    if (hit != memo.end()) return hit->second;
    check_cancellation();
    const Semiring& k = lambda.ring();
    const AlphabetPtr& alphabet = lambda.alphabet();
    LinRep out = rep_zero(k, alphabet);
    switch (e->kind()) {
        case RatExpr::Kind::zero:
            break;
        case RatExpr::Kind::letter:
            out = rep_letter(k, alphabet, e->letter_index(), lambda.at(e->letter_index()));
            break;
        case RatExpr::Kind::sum:
            out = rep_sum(compile_node(e->lhs(), lambda, opts, memo),
                          compile_node(e->rhs(), lambda, opts, memo));
            break;
        case RatExpr::Kind::product:
            out = rep_product(compile_node(e->lhs(), lambda, opts, memo),
                              compile_node(e->rhs(), lambda, opts, memo));
            break;
        case RatExpr::Kind::left_scalar:
            out = rep_scalar_left(e->scalar(), compile_node(e->operand(), lambda, opts, memo));
            break;
        case RatExpr::Kind::right_scalar:
            out = rep_scalar_right(compile_node(e->operand(), lambda, opts, memo), e->scalar());
            break;
        case RatExpr::Kind::star:
            out = rep_star(compile_node(e->operand(), lambda, opts, memo));
            break;
    }
    if (opts.reduce_intermediates && k.is_field() && out.dim() > 0) out = reduce_rep(out);
    memo.emplace(e.get(), out);
    return out;
}

} // namespace

LinRep expr_to_rep(const ExprPtr& e, const Localization& lambda, ExprToRepOptions opts) {
    if (!is_rational(e, lambda)) const_term(e, lambda); // throws, naming the subtree
    std::unordered_map<const RatExpr*, LinRep> memo;
    return compile_node(e, lambda, opts, memo);
}

// ---------------------------------------------------------------------
// representation -> expression

namespace {

// Expression carrier for the generic block star. Zero/unit absorption
// keeps the eliminated expressions near their minimal shape; every
// rewrite preserves the denoted series exactly.
struct ExprCarrier {
    const Semiring* ring;
    using value_type = ExprPtr;

    static bool is_zero_node(const ExprPtr& e) { return e->kind() == RatExpr::Kind::zero; }
    static bool is_unit_node(const ExprPtr& e) {
        return e->kind() == RatExpr::Kind::star && is_zero_node(e->operand());
    }

    ExprPtr zero() const { return RatExpr::zero(); }
    ExprPtr one() const { return RatExpr::star(RatExpr::zero()); }

    ExprPtr add(const ExprPtr& a, const ExprPtr& b) const {
        if (is_zero_node(a)) return b;
        if (is_zero_node(b)) return a;
        return RatExpr::sum(a, b);
    }
    ExprPtr mul(const ExprPtr& a, const ExprPtr& b) const {
        if (is_zero_node(a) || is_zero_node(b)) return zero();
        if (is_unit_node(a)) return b;
        if (is_unit_node(b)) return a;
        return RatExpr::product(a, b);
    }
    ExprPtr scale(const Value& c, const ExprPtr& e) const {
        if (ring->is_zero(c) || is_zero_node(e)) return zero();
        if (ring->is_one(c)) return e;
        if (e->kind() == RatExpr::Kind::left_scalar)
            return RatExpr::left_scalar(ring->mul(c, e->scalar()), e->operand());
        return RatExpr::left_scalar(c, e);
    }
    ExprPtr scale_right(const ExprPtr& e, const Value& c) const {
        if (ring->is_zero(c) || is_zero_node(e)) return zero();
        if (ring->is_one(c)) return e;
        return RatExpr::right_scalar(e, c);
    }
    ExprPtr star(const ExprPtr& e) const {
        if (is_zero_node(e)) return one();
        return RatExpr::star(e);
    }
};

} // namespace

ExprPtr rep_to_expr(const LinRep& r) {
    const size_t n = r.dim();
    ExprCarrier c{&r.ring()};
    if (n == 0) return c.zero();
    // transition matrix over expressions: sum_x mu(x)[i][j] . x
    std::vector<std::vector<ExprPtr>> m(n, std::vector<ExprPtr>(n, c.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (uint32_t x = 0; x < r.alphabet()->size(); ++x)
                m[i][j] = c.add(m[i][j], c.scale(r.mu(x).at(i, j), RatExpr::letter(x)));
    auto mstar = block_star(c, m);
    ExprPtr out = c.zero();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out = c.add(out, c.scale(r.lambda().at(0, i),
                                     c.scale_right(mstar[i][j], r.gamma().at(j, 0))));
    return out;
}

// ---------------------------------------------------------------------
// shifts

LinRep shift_rep(const LinRep& r, const Word& u, ShiftSide side) {
    if (!u.empty() && !same_alphabet(u.alphabet(), r.alphabet()))
        throw DomainMismatchError("shift_rep: word over a different alphabet");
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < r.alphabet()->size(); ++x) mu.push_back(r.mu(x));
    if (side == ShiftSide::prefix) {
        Matrix lambda = r.lambda();
        for (uint32_t x : u.letters()) lambda = mul(lambda, r.mu(x));
        return LinRep(r.ring(), r.alphabet(), std::move(lambda), std::move(mu), r.gamma());
    }
    Matrix gamma = r.gamma();
    for (size_t i = u.size(); i-- > 0;) gamma = mul(r.mu(u[i]), gamma);
    return LinRep(r.ring(), r.alphabet(), r.lambda(), std::move(mu), std::move(gamma));
}

// ---------------------------------------------------------------------
// reduction / equivalence / rank (field scalars)

namespace {

void require_field(const LinRep& r, const char* op) {
    if (!r.ring().is_field())
        throw DomainMismatchError(std::string(op) + " requires field scalars (rat)");
}

// Row-space basis maintained in reduced echelon form, insertion order
// kept for determinism. Rows are plain Value vectors over the field.
class RowBasis {
public:
    explicit RowBasis(const Semiring& k, size_t width) : k_(&k), width_(width) {}

    size_t size() const { return rows_.size(); }
    const std::vector<Value>& row(size_t i) const { return rows_[i]; }

    // Reduces a copy of v against the basis; true iff a new independent
    // row was added.
    bool insert(const std::vector<Value>& raw) {
        std::vector<Value> v = raw;
        reduce_in_place(v);
        size_t pivot = width_;
        for (size_t j = 0; j < width_; ++j) {
            if (!k_->is_zero(v[j])) {
                pivot = j;
                break;
            }
        }
        if (pivot == width_) return false;
        // normalize pivot to 1
        Value inv = k_->star(k_->add(k_->one(), k_->negate(v[pivot]))); // 1/(1-(1-p)) = 1/p
        for (size_t j = 0; j < width_; ++j) v[j] = k_->mul(v[j], inv);
        // eliminate this column from the existing rows
        for (auto& row : rows_) {
            const Value c = row[pivot];
            if (k_->is_zero(c)) continue;
            for (size_t j = 0; j < width_; ++j)
                row[j] = k_->add(row[j], k_->negate(k_->mul(c, v[j])));
        }
        pivots_.push_back(pivot);
        rows_.push_back(std::move(v));
        return true;
    }

    // Coordinates of v in the (non-orthogonal) basis of the *original*
    // inserted rows are not tracked; coordinates in the current echelon
    // rows are enough because the representation is rebuilt over them.
    std::vector<Value> coordinates(std::vector<Value> v) const {
        std::vector<Value> coords(rows_.size(), k_->zero());
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Value c = v[pivots_[i]];
            if (k_->is_zero(c)) continue;
            coords[i] = c;
            for (size_t j = 0; j < width_; ++j)
                v[j] = k_->add(v[j], k_->negate(k_->mul(c, rows_[i][j])));
        }
        for (size_t j = 0; j < width_; ++j) {
            if (!k_->is_zero(v[j])) throw Error("vector outside the closed shift orbit");
        }
        return coords;
    }

private:
    void reduce_in_place(std::vector<Value>& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Value c = v[pivots_[i]];
            if (k_->is_zero(c)) continue;
            for (size_t j = 0; j < width_; ++j)
                v[j] = k_->add(v[j], k_->negate(k_->mul(c, rows_[i][j])));
        }
    }

    const Semiring* k_;
    size_t width_;
    std::vector<std::vector<Value>> rows_;
    std::vector<size_t> pivots_;
};

std::vector<Value> matrix_row(const Matrix& m, size_t i) {
    std::vector<Value> v;
    v.reserve(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

std::vector<Value> row_times(const std::vector<Value>& v, const Matrix& m) {
    const Semiring& k = m.ring();
    std::vector<Value> out(m.cols(), k.zero());
    for (size_t i = 0; i < v.size(); ++i) {
        if (k.is_zero(v[i])) continue;
        for (size_t j = 0; j < m.cols(); ++j)
            out[j] = k.add(out[j], k.mul(v[i], m.at(i, j)));
    }
    return out;
}

// One reduction pass on the prefix-shift orbit of lambda. The worklist
// carries raw orbit vectors; the echelon basis only answers membership,
// so later back-eliminations cannot disturb the closure argument.
LinRep reduce_left(const LinRep& r) {
    const Semiring& k = r.ring();
    const size_t n = r.dim();
    RowBasis basis(k, n);
    std::deque<std::vector<Value>> work;
    work.push_back(matrix_row(r.lambda(), 0));
    while (!work.empty()) {
        check_cancellation();
        std::vector<Value> v = std::move(work.front());
        work.pop_front();
        if (!basis.insert(v)) continue;
        for (uint32_t x = 0; x < r.alphabet()->size(); ++x)
            work.push_back(row_times(v, r.mu(x)));
    }
    const size_t d = basis.size();
    Matrix lambda(k, 1, d);
    {
        auto coords = basis.coordinates(matrix_row(r.lambda(), 0));
        for (size_t j = 0; j < d; ++j) lambda.at(0, j) = coords[j];
    }
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < r.alphabet()->size(); ++x) {
        Matrix mx(k, d, d);
        for (size_t i = 0; i < d; ++i) {
            auto coords = basis.coordinates(row_times(basis.row(i), r.mu(x)));
            for (size_t j = 0; j < d; ++j) mx.at(i, j) = coords[j];
        }
        mu.push_back(std::move(mx));
    }
    Matrix gamma(k, d, 1);
    for (size_t i = 0; i < d; ++i) {
        Value acc = k.zero();
        for (size_t j = 0; j < n; ++j) acc = k.add(acc, k.mul(basis.row(i)[j], r.gamma().at(j, 0)));
        gamma.at(i, 0) = acc;
    }
    return LinRep(k, r.alphabet(), std::move(lambda), std::move(mu), std::move(gamma));
}

LinRep reverse_rep(const LinRep& r) {
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < r.alphabet()->size(); ++x) mu.push_back(transpose(r.mu(x)));
    return LinRep(r.ring(), r.alphabet(), transpose(r.gamma()), std::move(mu),
                  transpose(r.lambda()));
}

} // namespace

LinRep reduce_rep(const LinRep& r) {
    require_field(r, "reduce_rep");
    // left (reachability) pass, then the dual pass on the reversed
    // representation: minimal over a field
    LinRep left = reduce_left(r);
    return reverse_rep(reduce_left(reverse_rep(left)));
}

bool equiv(const LinRep& a, const LinRep& b) {
    require_field(a, "equiv");
    require_field(b, "equiv");
    require_compatible(a, b, "equiv");
    LinRep diff = rep_sum(a, rep_scalar_left(a.ring().negate(a.ring().one()), b));
    return reduce_rep(diff).dim() == 0;
}

size_t hankel_rank(const LinRep& r, size_t max_len) {
    require_field(r, "hankel_rank");
    const Semiring& k = r.ring();
    const size_t n = r.dim();
    // rows lambda mu(u), columns mu(v) gamma, for all words up to the bound
    std::vector<std::vector<Value>> prefix_rows, suffix_cols;
    {
        std::function<void(size_t, const std::vector<Value>&)> walk =
            [&](size_t depth, const std::vector<Value>& row) {
                prefix_rows.push_back(row);
                if (depth == max_len) return;
                for (uint32_t x = 0; x < r.alphabet()->size(); ++x)
                    walk(depth + 1, row_times(row, r.mu(x)));
            };
        walk(0, matrix_row(r.lambda(), 0));
    }
    {
        const LinRep rev = reverse_rep(r);
        std::function<void(size_t, const std::vector<Value>&)> walk =
            [&](size_t depth, const std::vector<Value>& col) {
                suffix_cols.push_back(col);
                if (depth == max_len) return;
                for (uint32_t x = 0; x < rev.alphabet()->size(); ++x)
                    walk(depth + 1, row_times(col, rev.mu(x)));
            };
        walk(0, matrix_row(rev.lambda(), 0));
    }
    // rank of the Gram-style product [row_u . col_v]
    RowBasis basis(k, suffix_cols.size());
    for (const auto& row : prefix_rows) {
        check_cancellation();
        std::vector<Value> h(suffix_cols.size(), k.zero());
        for (size_t v = 0; v < suffix_cols.size(); ++v) {
            Value acc = k.zero();
            for (size_t i = 0; i < n; ++i) acc = k.add(acc, k.mul(row[i], suffix_cols[v][i]));
            h[v] = acc;
        }
        basis.insert(std::move(h));
    }
    return basis.size();
}

Value Factorization::g(size_t i, const Word& u) const {
    Matrix row = rep.lambda();
    for (uint32_t x : u.letters()) row = mul(row, rep.mu(x));
    return row.at(0, i);
}

Value Factorization::h(size_t i, const Word& v) const {
    Matrix col = rep.gamma();
    for (size_t j = v.size(); j-- > 0;) col = mul(rep.mu(v[j]), col);
    return col.at(i, 0);
}

Factorization factorize_rep(const LinRep& r) {
    return Factorization{r};
}

// ---------------------------------------------------------------------
// dual laws

LinRep hadamard_rep(const LinRep& a, const LinRep& b) {
    require_compatible(a, b, "hadamard_rep");
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x)
        mu.push_back(kronecker(a.mu(x), b.mu(x)));
    return LinRep(a.ring(), a.alphabet(), kronecker(a.lambda(), b.lambda()), std::move(mu),
                  kronecker(a.gamma(), b.gamma()));
}

LinRep qshuffle_rep(const LinRep& a, const LinRep& b, const Value& q) {
    require_compatible(a, b, "qshuffle_rep");
    const Semiring& k = a.ring();
    if (q.ring() != k.id()) throw DomainMismatchError("qshuffle_rep: q from a different semiring");
    const Matrix ia = Matrix::identity(k, a.dim());
    const Matrix ib = Matrix::identity(k, b.dim());
    std::vector<Matrix> mu;
    for (uint32_t x = 0; x < a.alphabet()->size(); ++x) {
        Matrix mx = add(kronecker(a.mu(x), ib), kronecker(ia, b.mu(x)));
        mx = add(std::move(mx), scalar_mul(q, kronecker(a.mu(x), b.mu(x))));
        mu.push_back(std::move(mx));
    }
    return LinRep(k, a.alphabet(), kronecker(a.lambda(), b.lambda()), std::move(mu),
                  kronecker(a.gamma(), b.gamma()));
}

} // namespace ratcalc
