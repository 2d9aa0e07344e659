#ifndef GRAPHHOM_COMPLEX_HPP
#define GRAPHHOM_COMPLEX_HPP

#include <map>
#include <string>

#include "graphhom/sparse.hpp"

namespace graphhom {

enum class Direction { chain, cochain };

/// Betti table: degree -> dimension, zero entries omitted.
using BettiTable = std::map<int, int>;

/// Integer-graded complex over Q with finite support. A chain complex has
/// differentials of degree -1, a cochain complex of degree +1. Degrees are
/// the complex's own (public) ones; internally everything is stored in one
/// uniform cohomological indexing (chain degrees negated).
class GradedComplex {
public:
    explicit GradedComplex(Direction dir = Direction::chain) : dir_(dir) {}

    Direction direction() const { return dir_; }

    void set_dim(int degree, int dim);
    int dim(int degree) const;
    const std::map<int, int>& dims() const;

    /// Differential out of `degree` (into degree-1 for chain, degree+1 for
    /// cochain). Shape must match the adjacent dims.
    void set_diff(int degree, SparseMatrix d);
    const SparseMatrix* diff(int degree) const;

    int min_degree() const;
    int max_degree() const;
    bool empty() const;

    /// Throws NotAComplex unless all composites of consecutive
    /// differentials vanish and all shapes are consistent.
    void validate() const;

    BettiTable homology_dims() const;

    /// v -> v* degreewise: chain <-> cochain with transposed differentials,
    /// dims preserved at the same public degree.
    GradedComplex dualized() const;

    long euler_characteristic() const;

    std::string to_json() const;
    static GradedComplex from_json(const std::string& text);

private:
    Direction dir_;
    // public-degree keyed
    std::map<int, int> dims_;
    std::map<int, SparseMatrix> diffs_; // keyed by source degree
};

long euler_of_table(const BettiTable& t);

} // namespace graphhom

#endif
