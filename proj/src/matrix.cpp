#include "ratcalc/matrix.hpp"

#include "ratcalc/errors.hpp"

namespace ratcalc {

Matrix::Matrix(const Semiring& ring, size_t rows, size_t cols)
    : ring_(&ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

Matrix Matrix::identity(const Semiring& ring, size_t n) {
    Matrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_->id() == o.ring_->id() && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
}

namespace {

void require_same_ring(const Matrix& a, const Matrix& b, const char* op) {
    if (a.ring().id() != b.ring().id())
        throw DomainMismatchError(std::string(op) + ": matrices over different semirings");
}

} // namespace

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix addition shape mismatch");
    Matrix r(a.ring(), a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.ring().add(a.at(i, j), b.at(i, j));
    return r;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "mul");
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    const Semiring& k = a.ring();
    Matrix r(k, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t l = 0; l < a.cols(); ++l) {
            const Value& ail = a.at(i, l);
            if (k.is_zero(ail)) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                const Value& blj = b.at(l, j);
                if (k.is_zero(blj)) continue;
                r.at(i, j) = k.add(r.at(i, j), k.mul(ail, blj));
            }
        }
    }
    return r;
}

Matrix scalar_mul(const Value& c, const Matrix& m) {
    Matrix r(m.ring(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.ring().mul(c, m.at(i, j));
    return r;
}

Matrix scalar_mul(const Matrix& m, const Value& c) {
    Matrix r(m.ring(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.ring().mul(m.at(i, j), c);
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.ring(), m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "kronecker");
    Matrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const Value& aij = a.at(i, j);
            if (a.ring().is_zero(aij)) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.ring().mul(aij, b.at(k, l));
        }
    return r;
}

Matrix matrix_star(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("matrix_star requires a square matrix");
    std::vector<std::vector<Value>> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    ValueCarrier carrier{&m.ring()};
    auto sr = block_star(carrier, rows);
    Matrix r(m.ring(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = sr[i][j];
    return r;
}

} // namespace ratcalc
