#include <doctest.h>

#include <random>

#include "graphhom/complex.hpp"
#include "graphhom/errors.hpp"
#include "graphhom/sparse.hpp"

using namespace graphhom;

TEST_CASE("rank of small matrices") {
    CHECK(SparseMatrix::identity(2).rank() == 2);

    SparseMatrix z(3, 5);
    CHECK(z.rank() == 0);

    SparseMatrix m(2, 2);
    m.set(0, 0, Rational(1));
    m.set(0, 1, Rational(2));
    m.set(1, 0, Rational(2));
    m.set(1, 1, Rational(4));
    CHECK(m.rank() == 1);
}

TEST_CASE("rank with rational entries") {
    SparseMatrix m(3, 3);
    m.set(0, 0, make_rational(1, 2));
    m.set(0, 1, make_rational(1, 3));
    m.set(1, 0, make_rational(3, 2));
    m.set(1, 1, Rational(1));
    m.set(2, 2, make_rational(-7, 5));
    CHECK(m.rank() == 2);
}

TEST_CASE("rank equals rank of transpose on random sparse matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        int r = 1 + (int)(rng() % 20), c = 1 + (int)(rng() % 20);
        SparseMatrix m(r, c);
        int fill = (int)(rng() % (r * c / 2 + 1));
        for (int k = 0; k < fill; ++k) {
            long num = (long)(rng() % 19) - 9;
            long den = 1 + (long)(rng() % 6);
            m.set((int)(rng() % r), (int)(rng() % c), make_rational(num, den));
        }
        CHECK(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("image basis and solve") {
    SparseMatrix m(3, 3);
    m.set(0, 0, Rational(1));
    m.set(1, 0, Rational(1));
    m.set(0, 1, Rational(2));
    m.set(1, 1, Rational(2));
    m.set(2, 2, Rational(5));
    auto basis = m.image_basis();
    CHECK(basis.size() == 2);
    Vec w = {Rational(3), Rational(3), Rational(-5)};
    Vec x = solve_in_basis(basis, w);
    REQUIRE(x.size() == 2);
    // reconstruct
    Vec rec(3, Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < 3; ++i) rec[i] += x[j] * basis[j][i];
    CHECK(rec == w);
}

namespace {

GradedComplex random_complex(std::mt19937_64& rng) {
    // random chain complex: built from a canonical exact shape conjugated by
    // random change of basis, so d^2 = 0 holds by construction
    GradedComplex c(Direction::chain);
    int lo = -2 + (int)(rng() % 3);
    int len = 2 + (int)(rng() % 4);
    std::vector<int> dims(len);
    for (auto& d : dims) d = (int)(rng() % 4);
    std::vector<int> drop(len, 0); // rank of differential out of degree i
    for (int i = 1; i < len; ++i) {
        int m = std::min(dims[i], dims[i - 1]);
        drop[i] = m == 0 ? 0 : (int)(rng() % (m + 1));
    }
    // guarantee d o d = 0: rank out of i uses the last drop[i] coordinates of
    // source, mapping onto first drop[i] of target; consecutive ones must not
    // overlap in the middle degree
    for (int i = 1; i + 1 < len; ++i)
        while (drop[i] > 0 && drop[i + 1] > 0 && drop[i + 1] + drop[i] > dims[i]) --drop[i];
    for (int i = 0; i < len; ++i) c.set_dim(lo + i, dims[i]);
    for (int i = 1; i < len; ++i) {
        SparseMatrix d(dims[i - 1], dims[i]);
        for (int k = 0; k < drop[i]; ++k) d.set(k, dims[i] - drop[i] + k, Rational(1));
        c.set_diff(lo + i, std::move(d));
    }
    return c;
}

} // namespace

TEST_CASE("homology of hand-checked complexes") {
    // 0 -> Q -> Q -> 0 with the identity map
    GradedComplex c(Direction::chain);
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_diff(1, SparseMatrix::identity(1));
    CHECK(c.homology_dims().empty());

    // 0 -> Q^2 -> Q -> 0 with (a,b) |-> b - a: kernel {(a,a)} gives dim 1 at
    // the Q^2 degree
    GradedComplex c2(Direction::chain);
    c2.set_dim(1, 2);
    c2.set_dim(0, 1);
    SparseMatrix d(1, 2);
    d.set(0, 0, Rational(-1));
    d.set(0, 1, Rational(1));
    c2.set_diff(1, std::move(d));
    auto h = c2.homology_dims();
    CHECK(h == BettiTable{{1, 1}});

    // zero differentials: homology equals dims
    GradedComplex c3(Direction::cochain);
    c3.set_dim(0, 2);
    c3.set_dim(1, 3);
    CHECK(c3.homology_dims() == BettiTable{{0, 2}, {1, 3}});
}

TEST_CASE("d o d != 0 is rejected") {
    GradedComplex c(Direction::chain);
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_dim(2, 1);
    c.set_diff(1, SparseMatrix::identity(1));
    c.set_diff(2, SparseMatrix::identity(1));
    CHECK_THROWS_AS(c.homology_dims(), NotAComplex);
}

TEST_CASE("dualize preserves dims and homology degreewise") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        GradedComplex c = random_complex(rng);
        GradedComplex d = c.dualized();
        CHECK(d.direction() != c.direction());
        CHECK(d.dims() == c.dims());
        CHECK(d.homology_dims() == c.homology_dims());
        GradedComplex dd = d.dualized();
        CHECK(dd.direction() == c.direction());
        CHECK(dd.dims() == c.dims());
        CHECK(dd.homology_dims() == c.homology_dims());
    }
}

TEST_CASE("euler characteristic matches homology") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        GradedComplex c = random_complex(rng);
        CHECK(c.euler_characteristic() == euler_of_table(c.homology_dims()));
    }
}

TEST_CASE("complex JSON round trip") {
    GradedComplex c(Direction::chain);
    c.set_dim(0, 1);
    c.set_dim(1, 2);
    SparseMatrix d(1, 2);
    d.set(0, 1, make_rational(-3, 7));
    c.set_diff(1, std::move(d));
    GradedComplex back = GradedComplex::from_json(c.to_json());
    CHECK(back.direction() == c.direction());
    CHECK(back.dims() == c.dims());
    CHECK(back.homology_dims() == c.homology_dims());
    CHECK(back.to_json() == c.to_json());
}
