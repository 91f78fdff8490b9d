#pragma once

#include "nfk/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace nfk {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<BigInt>& d);
    static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<BigInt> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<BigInt>& v);
    IntMatrix columns(std::size_t first, std::size_t count) const;
    IntMatrix hconcat(const IntMatrix& other) const;
    IntMatrix transpose() const;

    bool is_zero() const;
    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

// Column-style Hermite normal form, used for every ideal in the library:
// h = m * u with u unimodular.  The nonzero columns of h sit at the right
// and form an upper-triangular block; pivots are positive and entries to
// the right of a pivot lie in [0, pivot).  Zero columns come first.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);
/// Same h without tracking the transform.
IntMatrix hnf_basis(const IntMatrix& m);
/// The rank-many nonzero columns of the HNF (n x n for a full-rank lattice in Z^n).
IntMatrix hnf_square(const IntMatrix& m);

/// Smith normal form: d = u * m * v, diagonal, d_1 | d_2 | ..., nonnegative.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};
SnfResult snf(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant; DimensionError for non-square input.
BigInt det_int(const IntMatrix& m);

/// Inverse of a unimodular matrix (exact; throws if det != +-1).
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Reduce v modulo the lattice spanned by an n x n upper-triangular HNF basis,
/// landing in the box 0 <= v_i < h_ii.
void reduce_mod_hnf(std::vector<BigInt>& v, const IntMatrix& h);
bool in_lattice_hnf(std::vector<BigInt> v, const IntMatrix& h);

}  // namespace nfk
