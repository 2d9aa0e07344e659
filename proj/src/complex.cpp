#include "graphhom/complex.hpp"

#include <json.hpp>

#include "graphhom/errors.hpp"

namespace graphhom {

using nlohmann::json;

void GradedComplex::set_dim(int degree, int dim) {
    if (dim < 0) throw Error("negative dimension");
    if (dim == 0)
        dims_.erase(degree);
    else
        dims_[degree] = dim;
}

int GradedComplex::dim(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

const std::map<int, int>& GradedComplex::dims() const { return dims_; }

void GradedComplex::set_diff(int degree, SparseMatrix d) {
    int target = degree + (dir_ == Direction::chain ? -1 : +1);
    if (d.cols() != dim(degree) || d.rows() != dim(target))
        throw Error("differential shape mismatch at degree " + std::to_string(degree));
    if (d.is_zero())
        diffs_.erase(degree);
    else
        diffs_[degree] = std::move(d);
}

const SparseMatrix* GradedComplex::diff(int degree) const {
    auto it = diffs_.find(degree);
    return it == diffs_.end() ? nullptr : &it->second;
}

int GradedComplex::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int GradedComplex::max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }
bool GradedComplex::empty() const { return dims_.empty(); }

void GradedComplex::validate() const {
    const int step = dir_ == Direction::chain ? -1 : +1;
    for (const auto& [deg, d] : diffs_) {
        if (d.cols() != dim(deg) || d.rows() != dim(deg + step))
            throw NotAComplex("differential shape mismatch at degree " + std::to_string(deg));
        auto it = diffs_.find(deg + step);
        if (it != diffs_.end()) {
            SparseMatrix comp = it->second * d;
            if (!comp.is_zero())
                throw NotAComplex("d o d != 0 out of degree " + std::to_string(deg));
        }
    }
}

BettiTable GradedComplex::homology_dims() const {
    validate();
    const int step = dir_ == Direction::chain ? -1 : +1;
    std::map<int, int> rank_out;
    for (const auto& [deg, d] : diffs_) rank_out[deg] = d.rank();
    BettiTable out;
    for (const auto& [deg, n] : dims_) {
        auto ro = rank_out.find(deg);
        auto ri = rank_out.find(deg - step);
        int h = n - (ro == rank_out.end() ? 0 : ro->second) -
                (ri == rank_out.end() ? 0 : ri->second);
        if (h != 0) out[deg] = h;
    }
    return out;
}

GradedComplex GradedComplex::dualized() const {
    GradedComplex out(dir_ == Direction::chain ? Direction::cochain : Direction::chain);
    out.dims_ = dims_;
    // (V^dual)^i = (V_i)^*: d_dual out of degree i is the transpose of the
    // original differential into degree i.
    const int step = dir_ == Direction::chain ? -1 : +1;
    for (const auto& [deg, d] : diffs_) {
        // d: deg -> deg+step becomes d^T: deg+step -> deg in the dual
        out.diffs_[deg + step] = d.transpose();
    }
    return out;
}

long GradedComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& [deg, n] : dims_) chi += (deg % 2 == 0) ? n : -n;
    return chi;
}

long euler_of_table(const BettiTable& t) {
    long chi = 0;
    for (const auto& [deg, n] : t) chi += (deg % 2 == 0) ? n : -n;
    return chi;
}

std::string GradedComplex::to_json() const {
    json j;
    j["direction"] = dir_ == Direction::chain ? "chain" : "cochain";
    j["dims"] = json::object();
    for (const auto& [deg, n] : dims_) j["dims"][std::to_string(deg)] = n;
    j["diff"] = json::object();
    for (const auto& [deg, d] : diffs_) {
        json triples = json::array();
        for (const auto& [rc, v] : d.entries())
            triples.push_back({rc.first, rc.second, to_string(v)});
        j["diff"][std::to_string(deg)] = triples;
    }
    return j.dump();
}

GradedComplex GradedComplex::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("complex JSON: ") + e.what());
    }
    std::string dir = j.value("direction", "chain");
    GradedComplex out(dir == "cochain" ? Direction::cochain : Direction::chain);
    if (j.contains("dims"))
        for (auto& [k, v] : j["dims"].items()) out.set_dim(std::stoi(k), v.get<int>());
    const int step = out.dir_ == Direction::chain ? -1 : +1;
    if (j.contains("diff"))
        for (auto& [k, v] : j["diff"].items()) {
            int deg = std::stoi(k);
            SparseMatrix d(out.dim(deg + step), out.dim(deg));
            for (auto& t : v)
                d.set(t[0].get<int>(), t[1].get<int>(), parse_rational(t[2].get<std::string>()));
            out.set_diff(deg, std::move(d));
        }
    return out;
}

} // namespace graphhom
