#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rimsurg/presentation.hpp"

namespace rimsurg {

using BigInt = mpz_class;

/// Dense integer matrix, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// Exact determinant (Bareiss); square matrices only.
    BigInt determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all d_i >= 0.
struct SmithDecomposition {
    IntMatrix U, D, V;
    std::vector<BigInt> diagonal() const;
};

/// Smith normal form with least-absolute-value pivoting. When with_transforms
/// is false, U and V are left empty.
SmithDecomposition smith_normal_form(const IntMatrix& a, bool with_transforms = true);

struct AbelianInvariants {
    int free_rank = 0;
    /// Torsion divisors, each > 1, each dividing the next.
    std::vector<BigInt> torsion;

    bool is_cyclic_of_order(long d) const;
    std::string to_string() const;
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relator exponent matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const GroupPresentation& p);

AbelianInvariants abelian_invariants(const GroupPresentation& p);

}  // namespace rimsurg
