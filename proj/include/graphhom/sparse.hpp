#ifndef GRAPHHOM_SPARSE_HPP
#define GRAPHHOM_SPARSE_HPP

#include <map>
#include <utility>
#include <vector>

#include "graphhom/rational.hpp"

namespace graphhom {

using Vec = std::vector<Rational>;

/// Sparse rational matrix. Entries are kept in row-major order with no
/// explicit zeros and no duplicate keys.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix scaled(const Rational& s) const;

    Vec apply(const Vec& v) const;

    /// Exact rank over Q via fraction-free (Bareiss) elimination on
    /// denominator-cleared rows; pivots chosen by numerator magnitude.
    int rank() const;

    /// Basis of the column space, in reduced column echelon form.
    /// Each basis vector is a dense length-rows() vector.
    std::vector<Vec> image_basis() const;

    /// Kernel basis (reduced), each vector dense of length cols().
    std::vector<Vec> kernel_basis() const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    bool operator==(const SparseMatrix& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// Solve B x = w where the columns of B are linearly independent and the
/// system is known to be consistent. Returns the coordinate vector x.
Vec solve_in_basis(const std::vector<Vec>& basis_cols, const Vec& w);

/// Dense row reduction used by the solvers; returns rank, reduces `m`
/// in place to reduced row echelon form.
int rref_inplace(std::vector<Vec>& m);

bool vec_is_zero(const Vec& v);

} // namespace graphhom

#endif
