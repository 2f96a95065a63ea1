#include "ospq/graded_matrix.hpp"

#include <stdexcept>

namespace ospq {

GradedMatrix::GradedMatrix(std::vector<int> row_parities, std::vector<int> col_parities)
    : row_par_(std::move(row_parities)), col_par_(std::move(col_parities)),
      entries_(row_par_.size() * col_par_.size()) {}

GradedMatrix GradedMatrix::identity(std::vector<int> parities) {
    GradedMatrix m(parities, parities);
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = Scalar(1);
    return m;
}

const Scalar& GradedMatrix::at(int i, int j) const {
    return entries_.at(static_cast<size_t>(i) * col_par_.size() + j);
}

Scalar& GradedMatrix::at(int i, int j) {
    return entries_.at(static_cast<size_t>(i) * col_par_.size() + j);
}

bool GradedMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool GradedMatrix::is_scalar_multiple_of_identity(Scalar* eigenvalue) const {
    if (rows() != cols() || rows() == 0) return false;
    const Scalar& v = at(0, 0);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (!((i == j ? v : Scalar(0)) == at(i, j))) return false;
    if (eigenvalue) *eigenvalue = v;
    return true;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols())
        throw std::domain_error("GradedMatrix: shape mismatch");
    GradedMatrix r = *this;
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const { return *this + (-o); }

GradedMatrix GradedMatrix::operator-() const {
    GradedMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
    if (cols() != o.rows()) throw std::domain_error("GradedMatrix: shape mismatch");
    GradedMatrix r(row_par_, o.col_par_);
    for (int i = 0; i < rows(); ++i)
        for (int k = 0; k < cols(); ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols(); ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

GradedMatrix GradedMatrix::operator*(const Scalar& c) const {
    GradedMatrix r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return row_par_ == o.row_par_ && col_par_ == o.col_par_ && entries_ == o.entries_;
}

GradedMatrix GradedMatrix::kron(const GradedMatrix& a, const GradedMatrix& b, int op_parity_b) {
    std::vector<int> rp, cp;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j)
            rp.push_back((a.row_parity(i) + b.row_parity(j)) % 2);
    for (int k = 0; k < a.cols(); ++k)
        for (int l = 0; l < b.cols(); ++l)
            cp.push_back((a.col_parity(k) + b.col_parity(l)) % 2);
    GradedMatrix r(std::move(rp), std::move(cp));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.rows(); ++j)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(j, l).is_zero()) continue;
                    Scalar v = a.at(i, k) * b.at(j, l);
                    if (op_parity_b && a.col_parity(k)) v = -v;
                    r.at(i * b.rows() + j, k * b.cols() + l) += v;
                }
        }
    return r;
}

} // namespace ospq
