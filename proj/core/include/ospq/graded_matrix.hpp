#pragma once

#include "ospq/scalar.hpp"

#include <optional>
#include <vector>

namespace ospq {

// Matrix over Scalar with a parity attached to every row/column index and an
// optional (ell, lambda) or (ell1, ell2, lambda) label.
class GradedMatrix {
public:
    struct Label {
        int ell1 = -1;   // -1 when not a tensor label
        int ell = 0;
        int lambda = 0;
    };

    GradedMatrix() = default;
    GradedMatrix(std::vector<int> row_parities, std::vector<int> col_parities);
    static GradedMatrix identity(std::vector<int> parities);

    int rows() const { return static_cast<int>(row_par_.size()); }
    int cols() const { return static_cast<int>(col_par_.size()); }
    const Scalar& at(int i, int j) const;
    Scalar& at(int i, int j);
    int row_parity(int i) const { return row_par_[i]; }
    int col_parity(int j) const { return col_par_[j]; }
    const std::vector<int>& row_parities() const { return row_par_; }
    const std::vector<int>& col_parities() const { return col_par_; }

    std::optional<Label> label;

    bool is_zero() const;
    bool is_scalar_multiple_of_identity(Scalar* eigenvalue = nullptr) const;

    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-(const GradedMatrix& o) const;
    GradedMatrix operator*(const GradedMatrix& o) const;
    GradedMatrix operator*(const Scalar& c) const;
    GradedMatrix operator-() const;
    bool operator==(const GradedMatrix& o) const;

    // Operator tensor product with Koszul sign: for an operator B of parity
    // op_parity_b, (A (x) B)(e_k (x) e_l) = (-1)^(|B| |e_k|) A e_k (x) B e_l.
    static GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b, int op_parity_b);

private:
    std::vector<int> row_par_, col_par_;
    std::vector<Scalar> entries_;
};

} // namespace ospq
