#pragma once

#include "ratcalc/cancellation.hpp"
#include "ratcalc/semiring.hpp"

#include <vector>

namespace ratcalc {

// Dense matrix of semiring values. Zero-dimensional shapes are legal;
// they show up as reduced representations of the zero series.
class Matrix {
public:
    Matrix(const Semiring& ring, size_t rows, size_t cols); // zero-filled
    static Matrix identity(const Semiring& ring, size_t n);

    const Semiring& ring() const { return *ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Value& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Value& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    const Semiring* ring_;
    size_t rows_, cols_;
    std::vector<Value> entries_;
};

Matrix add(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Value& c, const Matrix& m);
Matrix scalar_mul(const Matrix& m, const Value& c);
Matrix transpose(const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);

// M* with M* = I + M M* = I + M* M, by block recursion on the leading
// 1x1 pivot; scalar stars at the base. Throws NotStarrableError when a
// pivot star does not exist.
Matrix matrix_star(const Matrix& m);

// The same recursion over any carrier with semiring-shaped operations
// (plain values, truncated series, expressions). `Carrier` provides:
//   value_type, zero(), add(a,b), mul(a,b), star(a).
template <typename Carrier>
std::vector<std::vector<typename Carrier::value_type>>
block_star(const Carrier& c, const std::vector<std::vector<typename Carrier::value_type>>& m) {
    using T = typename Carrier::value_type;
    check_cancellation();
    const size_t n = m.size();
    if (n == 0) return {};
    if (n == 1) return {{c.star(m[0][0])}};
    // m = [[a, b], [d, e]] with a the 1x1 pivot
    std::vector<std::vector<T>> e(n - 1, std::vector<T>());
    for (size_t i = 1; i < n; ++i)
        e[i - 1].assign(m[i].begin() + 1, m[i].end());
    auto estar = block_star(c, e);

    // row b.e*, column e*.d
    std::vector<T> b_estar(n - 1, c.zero());
    std::vector<T> estar_d(n - 1, c.zero());
    for (size_t j = 0; j < n - 1; ++j) {
        for (size_t l = 0; l < n - 1; ++l) {
            b_estar[j] = c.add(b_estar[j], c.mul(m[0][l + 1], estar[l][j]));
            estar_d[j] = c.add(estar_d[j], c.mul(estar[j][l], m[l + 1][0]));
        }
    }
    T pivot = m[0][0];
    for (size_t l = 0; l < n - 1; ++l) pivot = c.add(pivot, c.mul(b_estar[l], m[l + 1][0]));
    T f = c.star(pivot); // (a + b e* d)*

    std::vector<std::vector<T>> r(n, std::vector<T>(n, c.zero()));
    r[0][0] = f;
    for (size_t j = 0; j < n - 1; ++j) {
        r[0][j + 1] = c.mul(f, b_estar[j]);
        r[j + 1][0] = c.mul(estar_d[j], f);
    }
    for (size_t i = 0; i < n - 1; ++i) {
        for (size_t j = 0; j < n - 1; ++j) {
            r[i + 1][j + 1] = c.add(estar[i][j], c.mul(estar_d[i], c.mul(f, b_estar[j])));
        }
    }
    return r;
}

// Carrier over plain semiring values.
struct ValueCarrier {
    const Semiring* ring;
    using value_type = Value;
    Value zero() const { return ring->zero(); }
    Value one() const { return ring->one(); }
    Value add(const Value& a, const Value& b) const { return ring->add(a, b); }
    Value mul(const Value& a, const Value& b) const { return ring->mul(a, b); }
    Value star(const Value& a) const { return ring->star(a); }
};

} // namespace ratcalc
