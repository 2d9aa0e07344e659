#include "graphhom/sparse.hpp"

#include <algorithm>
#include <cassert>

#include "graphhom/errors.hpp"

namespace graphhom {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("matrix dimensions must be non-negative");
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    if (v == 0) return;
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

Rational SparseMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    SparseMatrix out(rows_, rhs.cols_);
    // row-major walk over lhs, scatter rhs rows
    for (const auto& [rc, v] : entries_) {
        auto it = rhs.entries_.lower_bound({rc.second, 0});
        for (; it != rhs.entries_.end() && it->first.first == rc.second; ++it)
            out.add(rc.first, it->first.second, v * it->second);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum shape mismatch");
    SparseMatrix out = *this;
    for (const auto& [rc, v] : rhs.entries_) out.add(rc.first, rc.second, v);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (const auto& [rc, v] : entries_) out.entries_[rc] = Rational(v * s);
    return out;
}

Vec SparseMatrix::apply(const Vec& v) const {
    if ((int)v.size() != cols_) throw Error("matrix apply shape mismatch");
    Vec out(rows_, Rational(0));
    for (const auto& [rc, a] : entries_) out[rc.first] += a * v[rc.second];
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

namespace {

using IRow = std::vector<std::pair<int, mpz_class>>; // sorted by column

// row <- (piv*row - coef*prow) / div   (exact division, Bareiss step)
IRow bareiss_combine(const IRow& row, const IRow& prow, const mpz_class& piv,
                     const mpz_class& coef, const mpz_class& div) {
    IRow out;
    out.reserve(row.size() + prow.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < prow.size()) {
        int ci = i < row.size() ? row[i].first : INT32_MAX;
        int cj = j < prow.size() ? prow[j].first : INT32_MAX;
        mpz_class val;
        int col;
        if (ci < cj) {
            col = ci;
            val = piv * row[i].second;
            ++i;
        } else if (cj < ci) {
            col = cj;
            val = -coef * prow[j].second;
            ++j;
        } else {
            col = ci;
            val = piv * row[i].second - coef * prow[j].second;
            ++i;
            ++j;
        }
        if (val != 0) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), val.get_mpz_t(), div.get_mpz_t());
            out.emplace_back(col, std::move(q));
        }
    }
    return out;
}

} // namespace

int SparseMatrix::rank() const {
    // Clear denominators row by row; rank is unchanged.
    std::vector<IRow> rows;
    rows.reserve(rows_);
    {
        int cur = -1;
        std::vector<std::pair<int, Rational>> pend;
        auto flush = [&] {
            if (pend.empty()) return;
            mpz_class lcm(1);
            for (auto& [c, v] : pend) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
            IRow r;
            r.reserve(pend.size());
            for (auto& [c, v] : pend) r.emplace_back(c, mpz_class(v.get_num() * (lcm / v.get_den())));
            rows.push_back(std::move(r));
            pend.clear();
        };
        for (const auto& [rc, v] : entries_) {
            if (rc.first != cur) {
                flush();
                cur = rc.first;
            }
            pend.emplace_back(rc.second, v);
        }
        flush();
    }

    int rank = 0;
    mpz_class prev_piv(1);
    while (!rows.empty()) {
        // pivot column: the minimum leading column present
        int pcol = INT32_MAX;
        for (const auto& r : rows) pcol = std::min(pcol, r.front().first);
        // among rows with an entry in pcol, pick the sparsest with the
        // smallest |numerator| to limit coefficient growth
        std::size_t best = SIZE_MAX;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].front().first != pcol) continue;
            if (best == SIZE_MAX) {
                best = k;
                continue;
            }
            const mpz_class &a = rows[k].front().second, &b = rows[best].front().second;
            int c = cmp(abs(a), abs(b));
            if (c < 0 || (c == 0 && rows[k].size() < rows[best].size())) best = k;
        }
        IRow prow = std::move(rows[best]);
        rows.erase(rows.begin() + (long)best);
        const mpz_class piv = prow.front().second;
        ++rank;
        std::vector<IRow> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            if (r.front().first == pcol) {
                IRow nr = bareiss_combine(r, prow, piv, r.front().second, prev_piv);
                // leading entry in pcol cancels by construction
                if (!nr.empty() && nr.front().first == pcol) nr.erase(nr.begin());
                if (!nr.empty()) next.push_back(std::move(nr));
            } else {
                // untouched rows still need the fraction-free rescale
                IRow nr = bareiss_combine(r, IRow{}, piv, mpz_class(0), prev_piv);
                next.push_back(std::move(nr));
            }
        }
        rows = std::move(next);
        prev_piv = piv;
    }
    return rank;
}

int rref_inplace(std::vector<Vec>& m) {
    if (m.empty()) return 0;
    const int nrows = (int)m.size();
    const int ncols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = 1 / m[rank][col];
        for (int c = col; c < ncols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<Vec> SparseMatrix::image_basis() const {
    // column space = row space of the transpose
    std::vector<Vec> rows(cols_, Vec(rows_, Rational(0)));
    for (const auto& [rc, v] : entries_) rows[rc.second][rc.first] = v;
    int r = rref_inplace(rows);
    rows.resize(r);
    return rows;
}

std::vector<Vec> SparseMatrix::kernel_basis() const {
    std::vector<Vec> m(rows_, Vec(cols_, Rational(0)));
    for (const auto& [rc, v] : entries_) m[rc.first][rc.second] = v;
    rref_inplace(m);
    // locate pivot columns
    std::vector<int> pivot_of_col(cols_, -1);
    int r = 0;
    for (int row = 0; row < (int)m.size(); ++row) {
        int lead = -1;
        for (int c = 0; c < cols_; ++c)
            if (m[row][c] != 0) {
                lead = c;
                break;
            }
        if (lead < 0) break;
        pivot_of_col[lead] = row;
        ++r;
    }
    std::vector<Vec> out;
    for (int c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec k(cols_, Rational(0));
        k[c] = 1;
        for (int c2 = 0; c2 < cols_; ++c2)
            if (pivot_of_col[c2] >= 0) k[c2] = -m[pivot_of_col[c2]][c];
        out.push_back(std::move(k));
    }
    return out;
}

Vec solve_in_basis(const std::vector<Vec>& basis_cols, const Vec& w) {
    const int k = (int)basis_cols.size();
    if (k == 0) {
        if (!vec_is_zero(w)) throw Error("solve_in_basis: inconsistent system");
        return {};
    }
    const int n = (int)basis_cols[0].size();
    // eliminate on [B | w] with columns as given
    std::vector<Vec> aug(n, Vec(k + 1, Rational(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) aug[i][j] = basis_cols[j][i];
    for (int i = 0; i < n; ++i) aug[i][k] = w[i];
    rref_inplace(aug);
    Vec x(k, Rational(0));
    for (const auto& row : aug) {
        int lead = -1;
        for (int c = 0; c <= k; ++c)
            if (row[c] != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        if (lead == k) throw Error("solve_in_basis: inconsistent system");
        x[lead] = row[k];
    }
    return x;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& a : v)
        if (a != 0) return false;
    return true;
}

} // namespace graphhom
