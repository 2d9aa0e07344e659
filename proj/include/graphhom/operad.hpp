#ifndef GRAPHHOM_OPERAD_HPP
#define GRAPHHOM_OPERAD_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "graphhom/sparse.hpp"

namespace graphhom {

/// Component key of a cyclic operad: the set of flags it is indexed by.
/// Symmetric models keep flags sorted ascending; non-sigma models keep the
/// cyclic order, rotated so the minimum flag comes first.
struct Component {
    std::vector<int> flags;

    bool operator==(const Component& o) const { return flags == o.flags; }
    bool operator<(const Component& o) const { return flags < o.flags; }
    int arity() const { return (int)flags.size(); }
    std::string key() const;

    static Component sorted(std::vector<int> flags);
    static Component cyclic(std::vector<int> flags); // canonical rotation
};

/// Flag bijection, defined on the source component's flags.
using FlagMap = std::map<int, int>;

/// Concrete model of one cyclic operad: ordered bases per component,
/// relabeling action, composition along a pair of flags, and degrees.
/// All components in scope are concentrated in degree 0 except for the
/// dg-dual models, which override `degree` and `internal_diff`.
class CyclicOperadModel {
public:
    virtual ~CyclicOperadModel() = default;

    virtual std::string name() const = 0;
    virtual bool is_nonsigma() const { return false; }

    virtual int dim(const Component& c) const = 0;
    virtual int degree(const Component& c, int basis_index) const;

    /// Matrix of the relabeling action along psi: component(c) -> the
    /// relabeled component. For non-sigma models psi must preserve the
    /// cyclic orders.
    virtual SparseMatrix relabel(const Component& c, const FlagMap& psi) const = 0;

    /// Target component of composing c along flag a0 with d along flag b0.
    Component merged_component(const Component& a, int a0, const Component& b, int b0) const;

    /// Bilinear composition O((a)) (x) O((b)) -> O((a o b)).
    virtual Vec compose(const Component& a, const Vec& x, int a0, const Component& b,
                        const Vec& y, int b0) const = 0;

    /// Differential of the component as a matrix list keyed by source
    /// degree, or empty when the internal differential vanishes.
    virtual std::map<int, SparseMatrix> internal_diff(const Component& c) const;
};

const CyclicOperadModel& comm_model();
const CyclicOperadModel& ass_model();
const CyclicOperadModel& lie_model();
const CyclicOperadModel& t_model();

/// Binary bracket word over integer letters.
struct BracketWord {
    int leaf = -1; // >= 0 for a letter
    std::vector<BracketWord> kids; // empty or exactly two

    bool is_leaf() const { return kids.empty(); }
    std::vector<int> letters() const;
    static BracketWord letter(int x);
    static BracketWord bracket(BracketWord a, BracketWord b);
    std::string str() const;
};

/// Parse "[0,[1,2]]" style bracket expressions.
BracketWord parse_bracket(const std::string& text);

/// Expansion of the normal form of a multilinear bracket word on
/// S \ {min S} in the left-normed basis of Lie((S)). Throws NotMultilinear
/// unless the word uses each letter of S \ {min S} exactly once.
Vec lie_normal_form(const BracketWord& expr, const Component& s);

/// The basis words of Lie((S)) themselves (left-normed, starting with the
/// minimal letter of S \ {min S}).
std::vector<BracketWord> lie_basis_words(const Component& s);

} // namespace graphhom

#endif
