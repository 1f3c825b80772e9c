#include <doctest.h>

#include <complex>

#include "qhardy/error.hpp"
#include "qhardy/splitting.hpp"
#include "support/random.hpp"

using namespace qhardy;
using qhardy::testing::max_coeff_diff;
using qhardy::testing::Rng;
using cd = std::complex<double>;

namespace {

double max_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
    REQUIRE(a.size() == b.size());
    double d = 0;
    for (std::size_t n = 0; n < a.size(); ++n) d = std::max(d, std::abs(a[n] - b[n]));
    return d;
}

}  // namespace

TEST_CASE("split examples") {
    const UnitImaginary i = UnitImaginary::i(), j = UnitImaginary::j();

    const SplitPair a = split(QSeries::monomial(1, kJ), i, j);
    CHECK(max_diff(a.F, {0, 0}) == 0.0);
    CHECK(max_diff(a.G, {0, 1}) == 0.0);

    const SplitPair b = split(QSeries{1.0, kI + kJ}, i, j);
    CHECK(max_diff(b.F, {1, cd(0, 1)}) < 1e-15);
    CHECK(max_diff(b.G, {0, 1}) < 1e-15);

    const QSeries r{0.5, -1.0, 2.0};
    const SplitPair c = split(r, i, j);
    CHECK(max_diff(c.F, {0.5, -1.0, 2.0}) == 0.0);
    CHECK(max_diff(c.G, {0, 0, 0}) == 0.0);

    // k = i j lands in G with coefficient i
    const SplitPair d = split(QSeries::constant(kK), i, j);
    CHECK(max_diff(d.G, {cd(0, 1)}) < 1e-15);

    CHECK_THROWS_AS(split(r, i, UnitImaginary::normalized(1, 1, 0)), Error);
}

TEST_CASE("recombine examples") {
    const UnitImaginary i = UnitImaginary::i(), j = UnitImaginary::j();
    CHECK(max_coeff_diff(recombine({i, j, {1}, {1}}), QSeries::constant(Quaternion(1) + kJ)) < 1e-15);
    CHECK(max_coeff_diff(recombine({i, j, {0, 1}, {0, cd(0, 1)}}), QSeries::monomial(1, Quaternion(1) + kK)) <
          1e-15);
    CHECK_THROWS_AS(recombine({i, j, {1, 2}, {1}}), Error);
}

TEST_CASE("round trip and norm compatibility for random frames") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const QSeries f = rng.series(rng.index(0, 12));
        const UnitImaginary I = rng.unit_imaginary();
        const UnitImaginary J = orthogonal_unit(I);
        const SplitPair s = split(f, I, J);
        CHECK(s.F.size() == f.degree() + 1);
        CHECK(s.G.size() == f.degree() + 1);
        CHECK(max_coeff_diff(recombine(s), f) < 1e-14);
        double lhs = 0, rhs = 0;
        for (std::size_t n = 0; n <= f.degree(); ++n) {
            lhs += f[n].norm2();
            rhs += std::norm(s.F[n]) + std::norm(s.G[n]);
        }
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + lhs));
    }
}

TEST_CASE("the restriction to L_I is F + G J") {
    Rng rng(22);
    for (int t = 0; t < 50; ++t) {
        const QSeries f = rng.series(6);
        const UnitImaginary I = rng.unit_imaginary();
        const UnitImaginary J = orthogonal_unit(I);
        const SplitPair s = split(f, I, J);
        const cd z(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
        const Quaternion expect = in_slice(eval_complex(s.F, z), I) + in_slice(eval_complex(s.G, z), I) * J.quat();
        CHECK(approx_equal(eval(f, in_slice(z, I)), expect, 1e-12));
    }
}
