#include "graphhom/operad.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "graphhom/errors.hpp"

namespace graphhom {

std::string Component::key() const {
    std::ostringstream os;
    for (int f : flags) os << f << ',';
    return os.str();
}

Component Component::sorted(std::vector<int> flags) {
    std::sort(flags.begin(), flags.end());
    return Component{std::move(flags)};
}

Component Component::cyclic(std::vector<int> flags) {
    if (flags.empty()) return Component{std::move(flags)};
    auto it = std::min_element(flags.begin(), flags.end());
    std::rotate(flags.begin(), it, flags.end());
    return Component{std::move(flags)};
}

int CyclicOperadModel::degree(const Component&, int) const { return 0; }

std::map<int, SparseMatrix> CyclicOperadModel::internal_diff(const Component&) const {
    return {};
}

namespace {

std::vector<int> after_flag(const std::vector<int>& cyc, int f) {
    auto it = std::find(cyc.begin(), cyc.end(), f);
    if (it == cyc.end()) throw ArityMismatch("flag not in component");
    std::vector<int> out;
    std::size_t k = (std::size_t)(it - cyc.begin());
    for (std::size_t i = 1; i < cyc.size(); ++i) out.push_back(cyc[(k + i) % cyc.size()]);
    return out;
}

} // namespace

Component CyclicOperadModel::merged_component(const Component& a, int a0, const Component& b,
                                              int b0) const {
    if (is_nonsigma()) {
        auto ua = after_flag(a.flags, a0);
        auto wb = after_flag(b.flags, b0);
        ua.insert(ua.end(), wb.begin(), wb.end());
        return Component::cyclic(std::move(ua));
    }
    std::vector<int> merged;
    for (int f : a.flags)
        if (f != a0) merged.push_back(f);
    for (int f : b.flags)
        if (f != b0) merged.push_back(f);
    for (int f : merged)
        if (std::count(merged.begin(), merged.end(), f) > 1)
            throw ArityMismatch("flag sets not disjoint");
    return Component::sorted(std::move(merged));
}

// ---------------------------------------------------------------------------
// Comm
// ---------------------------------------------------------------------------

namespace {

class CommModel final : public CyclicOperadModel {
public:
    std::string name() const override { return "comm"; }
    int dim(const Component& c) const override {
        if (c.arity() < 2) throw UnsupportedArity("comm needs arity >= 2");
        return 1;
    }
    SparseMatrix relabel(const Component& c, const FlagMap&) const override {
        (void)dim(c);
        return SparseMatrix::identity(1);
    }
    Vec compose(const Component& a, const Vec& x, int, const Component& b, const Vec& y,
                int) const override {
        (void)dim(a);
        (void)dim(b);
        return {x.at(0) * y.at(0)};
    }
};

// ---------------------------------------------------------------------------
// T: the non-sigma associative operad, one dimensional in every arity
// ---------------------------------------------------------------------------

class TModel final : public CyclicOperadModel {
public:
    std::string name() const override { return "t"; }
    bool is_nonsigma() const override { return true; }
    int dim(const Component& c) const override {
        if (c.arity() < 2) throw UnsupportedArity("t needs arity >= 2");
        return 1;
    }
    SparseMatrix relabel(const Component& c, const FlagMap& psi) const override {
        // the image of the cyclic order must be a rotation of the target's
        std::vector<int> img;
        for (int f : c.flags) img.push_back(psi.at(f));
        (void)Component::cyclic(img);
        return SparseMatrix::identity(1);
    }
    Vec compose(const Component& a, const Vec& x, int a0, const Component& b, const Vec& y,
                int b0) const override {
        (void)merged_component(a, a0, b, b0);
        return {x.at(0) * y.at(0)};
    }
};

// ---------------------------------------------------------------------------
// Ass: bases are cyclic orders, written min-first
// ---------------------------------------------------------------------------

class AssModel final : public CyclicOperadModel {
public:
    std::string name() const override { return "ass"; }

    const std::vector<std::vector<int>>& basis(const Component& c) const {
        auto it = basis_.find(c.flags);
        if (it != basis_.end()) return it->second;
        if (c.arity() < 2) throw UnsupportedArity("ass needs arity >= 2");
        std::vector<std::vector<int>> all;
        std::vector<int> rest(c.flags.begin() + 1, c.flags.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> seq{c.flags[0]};
            seq.insert(seq.end(), rest.begin(), rest.end());
            all.push_back(seq);
        } while (std::next_permutation(rest.begin(), rest.end()));
        return basis_.emplace(c.flags, std::move(all)).first->second;
    }

    int index_of(const Component& c, const std::vector<int>& cyc) const {
        auto rot = Component::cyclic(cyc).flags;
        const auto& bs = basis(c);
        auto it = std::find(bs.begin(), bs.end(), rot);
        if (it == bs.end()) throw Error("ass: cyclic order not in component basis");
        return (int)(it - bs.begin());
    }

    int dim(const Component& c) const override { return (int)basis(c).size(); }

    SparseMatrix relabel(const Component& c, const FlagMap& psi) const override {
        const auto& bs = basis(c);
        std::vector<int> timg;
        for (int f : c.flags) timg.push_back(psi.at(f));
        Component target = Component::sorted(timg);
        SparseMatrix m(dim(target), (int)bs.size());
        for (int j = 0; j < (int)bs.size(); ++j) {
            std::vector<int> img;
            for (int f : bs[j]) img.push_back(psi.at(f));
            m.set(index_of(target, img), j, Rational(1));
        }
        return m;
    }

    Vec compose(const Component& a, const Vec& x, int a0, const Component& b, const Vec& y,
                int b0) const override {
        Component m = merged_component(a, a0, b, b0);
        Vec out(dim(m), Rational(0));
        const auto& ba = basis(a);
        const auto& bb = basis(b);
        for (int i = 0; i < (int)ba.size(); ++i) {
            if (x.at(i) == 0) continue;
            auto ua = after_flag(ba[i], a0);
            for (int j = 0; j < (int)bb.size(); ++j) {
                if (y.at(j) == 0) continue;
                auto seq = ua;
                auto wb = after_flag(bb[j], b0);
                seq.insert(seq.end(), wb.begin(), wb.end());
                out[index_of(m, seq)] += x[i] * y[j];
            }
        }
        return out;
    }

private:
    mutable std::map<std::vector<int>, std::vector<std::vector<int>>> basis_;
};

} // namespace

// ---------------------------------------------------------------------------
// bracket words
// ---------------------------------------------------------------------------

BracketWord BracketWord::letter(int x) {
    BracketWord w;
    w.leaf = x;
    return w;
}

BracketWord BracketWord::bracket(BracketWord a, BracketWord b) {
    BracketWord w;
    w.kids.push_back(std::move(a));
    w.kids.push_back(std::move(b));
    return w;
}

std::vector<int> BracketWord::letters() const {
    std::vector<int> out;
    if (is_leaf()) {
        out.push_back(leaf);
        return out;
    }
    for (const auto& k : kids) {
        auto sub = k.letters();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::string BracketWord::str() const {
    if (is_leaf()) return std::to_string(leaf);
    return "[" + kids[0].str() + "," + kids[1].str() + "]";
}

namespace {

BracketWord parse_bracket_impl(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("bracket word: unexpected end");
    if (s[pos] == '[') {
        ++pos;
        BracketWord a = parse_bracket_impl(s, pos);
        if (pos >= s.size() || s[pos] != ',') throw ParseError("bracket word: expected ','");
        ++pos;
        BracketWord b = parse_bracket_impl(s, pos);
        if (pos >= s.size() || s[pos] != ']') throw ParseError("bracket word: expected ']'");
        ++pos;
        return BracketWord::bracket(std::move(a), std::move(b));
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '-')) ++pos;
    if (start == pos) throw ParseError("bracket word: expected letter");
    return BracketWord::letter(std::stoi(s.substr(start, pos - start)));
}

} // namespace

BracketWord parse_bracket(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    std::size_t pos = 0;
    BracketWord w = parse_bracket_impl(s, pos);
    if (pos != s.size()) throw ParseError("bracket word: trailing input");
    return w;
}

// ---------------------------------------------------------------------------
// Lie
// ---------------------------------------------------------------------------

namespace {

using Expansion = std::map<std::vector<int>, Rational>;

Expansion expand_word(const BracketWord& w) {
    if (w.is_leaf()) return {{{w.leaf}, Rational(1)}};
    Expansion a = expand_word(w.kids[0]);
    Expansion b = expand_word(w.kids[1]);
    Expansion out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            std::vector<int> ab = ka, ba = kb;
            ab.insert(ab.end(), kb.begin(), kb.end());
            ba.insert(ba.end(), ka.begin(), ka.end());
            out[ab] += va * vb;
            out[ba] -= va * vb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool word_contains(const BracketWord& w, int x) {
    if (w.is_leaf()) return w.leaf == x;
    return word_contains(w.kids[0], x) || word_contains(w.kids[1], x);
}

// Re-root a presentation with output `out_letter` so that the leaf `x`
// becomes the output; the old output joins as a new leaf.
std::pair<int, BracketWord> re_root(const BracketWord& w, int out_letter, int x) {
    BracketWord tail = BracketWord::letter(out_letter);
    const BracketWord* n = &w;
    int sign = 1;
    while (!n->is_leaf()) {
        const BracketWord* desc;
        const BracketWord* other;
        if (word_contains(n->kids[0], x)) {
            desc = &n->kids[0];
            other = &n->kids[1];
        } else {
            desc = &n->kids[1];
            other = &n->kids[0];
            sign = -sign;
        }
        tail = BracketWord::bracket(*other, std::move(tail));
        n = desc;
    }
    assert(n->leaf == x);
    return {sign, std::move(tail)};
}

BracketWord substitute(const BracketWord& w, int x, const BracketWord& repl) {
    if (w.is_leaf()) return w.leaf == x ? repl : w;
    return BracketWord::bracket(substitute(w.kids[0], x, repl), substitute(w.kids[1], x, repl));
}

BracketWord rename_letters(const BracketWord& w, const FlagMap& psi) {
    if (w.is_leaf()) return BracketWord::letter(psi.at(w.leaf));
    return BracketWord::bracket(rename_letters(w.kids[0], psi), rename_letters(w.kids[1], psi));
}

class LieModel final : public CyclicOperadModel {
public:
    std::string name() const override { return "lie"; }

    struct ComponentData {
        std::vector<int> letters;            // flags minus the output, sorted
        std::vector<BracketWord> basis;      // left-normed words
        std::map<std::vector<int>, int> monomial_index;
        std::vector<Vec> basis_cols;         // expansions over monomials
    };

    const ComponentData& data(const Component& c) const {
        auto it = cache_.find(c.flags);
        if (it != cache_.end()) return it->second;
        if (c.arity() < 2) throw UnsupportedArity("lie needs arity >= 2");
        ComponentData d;
        d.letters.assign(c.flags.begin() + 1, c.flags.end());
        // monomials: all orderings of the letters
        {
            std::vector<int> perm = d.letters;
            int idx = 0;
            do {
                d.monomial_index[perm] = idx++;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        // basis: left-normed words starting with the minimal letter
        if (d.letters.size() == 1) {
            d.basis.push_back(BracketWord::letter(d.letters[0]));
        } else {
            std::vector<int> rest(d.letters.begin() + 1, d.letters.end());
            do {
                BracketWord w = BracketWord::letter(d.letters[0]);
                for (int x : rest) w = BracketWord::bracket(std::move(w), BracketWord::letter(x));
                d.basis.push_back(std::move(w));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        for (const auto& w : d.basis) {
            Vec col(d.monomial_index.size(), Rational(0));
            for (const auto& [mon, coef] : expand_word(w)) col[d.monomial_index.at(mon)] = coef;
            d.basis_cols.push_back(std::move(col));
        }
        return cache_.emplace(c.flags, std::move(d)).first->second;
    }

    Vec normal_form(const Component& c, const std::vector<std::pair<Rational, BracketWord>>& expr) const {
        const auto& d = data(c);
        Vec target(d.monomial_index.size(), Rational(0));
        for (const auto& [coef, w] : expr)
            for (const auto& [mon, v] : expand_word(w)) {
                auto it = d.monomial_index.find(mon);
                if (it == d.monomial_index.end())
                    throw NotMultilinear("word letters do not match component " + c.key());
                target[it->second] += coef * v;
            }
        return solve_in_basis(d.basis_cols, target);
    }

    int dim(const Component& c) const override { return (int)data(c).basis.size(); }

    SparseMatrix relabel(const Component& c, const FlagMap& psi) const override {
        std::ostringstream ck;
        ck << c.key() << '|';
        for (auto& [k, v] : psi) ck << k << ':' << v << ',';
        auto hit = relabel_cache_.find(ck.str());
        if (hit != relabel_cache_.end()) return hit->second;

        const auto& d = data(c);
        std::vector<int> timg;
        for (int f : c.flags) timg.push_back(psi.at(f));
        Component target = Component::sorted(timg);
        const int out_old = psi.at(c.flags[0]);
        const int out_new = target.flags[0];
        SparseMatrix m(dim(target), (int)d.basis.size());
        for (int j = 0; j < (int)d.basis.size(); ++j) {
            BracketWord w = rename_letters(d.basis[j], psi);
            std::vector<std::pair<Rational, BracketWord>> expr;
            if (out_old == out_new) {
                expr.emplace_back(Rational(1), std::move(w));
            } else {
                auto [sgn, rw] = re_root(w, out_old, out_new);
                expr.emplace_back(Rational(sgn), std::move(rw));
            }
            Vec coords = normal_form(target, expr);
            for (int i = 0; i < (int)coords.size(); ++i) m.set(i, j, coords[i]);
        }
        relabel_cache_.emplace(ck.str(), m);
        return m;
    }

    Vec compose(const Component& a, const Vec& x, int a0, const Component& b, const Vec& y,
                int b0) const override {
        Component m = merged_component(a, a0, b, b0);
        const auto& da = data(a);
        const auto& db = data(b);
        const int out_a = a.flags[0], out_b = b.flags[0];
        std::vector<std::pair<Rational, BracketWord>> expr;
        for (int i = 0; i < (int)da.basis.size(); ++i) {
            if (x.at(i) == 0) continue;
            for (int j = 0; j < (int)db.basis.size(); ++j) {
                if (y.at(j) == 0) continue;
                Rational coef = x[i] * y[j];
                BracketWord res;
                if (a0 != out_a) {
                    // plug y (presented with output b0) into the leaf a0 of x
                    BracketWord yw = db.basis[j];
                    if (b0 != out_b) {
                        auto [sgn, ry] = re_root(yw, out_b, b0);
                        coef *= sgn;
                        yw = std::move(ry);
                    }
                    res = substitute(da.basis[i], a0, yw);
                } else if (b0 != out_b) {
                    res = substitute(db.basis[j], b0, da.basis[i]);
                } else {
                    // both composition flags are outputs: re-root y first
                    int ell = -1;
                    for (int f : b.flags)
                        if (f != b0) {
                            ell = f;
                            break;
                        }
                    auto [sgn, ry] = re_root(db.basis[j], out_b, ell);
                    coef *= sgn;
                    res = substitute(ry, b0, da.basis[i]);
                }
                // bring the output to min of the merged component
                int cur_out = a0 != out_a ? out_a : (b0 != out_b ? out_b : -1);
                if (cur_out == -1) {
                    for (int f : b.flags)
                        if (f != b0) {
                            cur_out = f;
                            break;
                        }
                }
                if (cur_out != m.flags[0]) {
                    auto [sgn, rr] = re_root(res, cur_out, m.flags[0]);
                    coef *= sgn;
                    res = std::move(rr);
                }
                expr.emplace_back(coef, std::move(res));
            }
        }
        if (expr.empty()) return Vec(dim(m), Rational(0));
        return normal_form(m, expr);
    }

private:
    mutable std::map<std::vector<int>, ComponentData> cache_;
    mutable std::map<std::string, SparseMatrix> relabel_cache_;
};

} // namespace

const CyclicOperadModel& comm_model() {
    static CommModel m;
    return m;
}
const CyclicOperadModel& ass_model() {
    static AssModel m;
    return m;
}
const CyclicOperadModel& lie_model() {
    static LieModel m;
    return m;
}
const CyclicOperadModel& t_model() {
    static TModel m;
    return m;
}

Vec lie_normal_form(const BracketWord& expr, const Component& s) {
    auto letters = expr.letters();
    std::sort(letters.begin(), letters.end());
    std::vector<int> expected(s.flags.begin() + 1, s.flags.end());
    if (letters != expected)
        throw NotMultilinear("expected each letter of " + s.key() + " minus its output exactly once");
    Expansion target_exp;
    for (const auto& [mon, v] : expand_word(expr)) target_exp[mon] = v;
    std::vector<BracketWord> basis = lie_basis_words(s);
    std::map<std::vector<int>, int> monomial_index;
    {
        std::vector<int> perm(s.flags.begin() + 1, s.flags.end());
        int idx = 0;
        do {
            monomial_index[perm] = idx++;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<Vec> cols;
    for (const auto& w : basis) {
        Vec col(monomial_index.size(), Rational(0));
        for (const auto& [mon, coef] : expand_word(w)) col[monomial_index.at(mon)] = coef;
        cols.push_back(std::move(col));
    }
    Vec target(monomial_index.size(), Rational(0));
    for (const auto& [mon, v] : target_exp) target[monomial_index.at(mon)] = v;
    return solve_in_basis(cols, target);
}

std::vector<BracketWord> lie_basis_words(const Component& s) {
    if (s.arity() < 2) throw UnsupportedArity("lie needs arity >= 2");
    std::vector<int> letters(s.flags.begin() + 1, s.flags.end());
    std::vector<BracketWord> out;
    if (letters.size() == 1) {
        out.push_back(BracketWord::letter(letters[0]));
        return out;
    }
    std::vector<int> rest(letters.begin() + 1, letters.end());
    do {
        BracketWord w = BracketWord::letter(letters[0]);
        for (int x : rest) w = BracketWord::bracket(std::move(w), BracketWord::letter(x));
        out.push_back(std::move(w));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

} // namespace graphhom
