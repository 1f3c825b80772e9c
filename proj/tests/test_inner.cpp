#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qhardy/error.hpp"
#include "qhardy/inner.hpp"
#include "support/random.hpp"

using namespace qhardy;
using qhardy::testing::max_coeff_diff;
using qhardy::testing::Rng;

namespace {

const double kRt2 = std::sqrt(2.0);

std::size_t splitting_nodes(const QSeries& f) { return next_pow2(2 * f.degree() + 1); }

// Degree-N Taylor coefficients of (a - z)/(1 - conj(a) z) in ℂ.
std::vector<std::complex<double>> complex_blaschke_factor(std::complex<double> a, std::size_t N) {
    std::vector<std::complex<double>> c(N + 1);
    c[0] = a;
    std::complex<double> p = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        c[n] = p * (std::norm(a) - 1.0);
        p *= std::conj(a);
    }
    return c;
}

bool contains_sphere(const ZeroSet& z, double x, double y, double tol) {
    for (const auto& s : z.spheres) {
        if (std::abs(s.x - x) < tol && std::abs(s.y - y) < tol) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("mobius") {
    CHECK(max_coeff_diff(mobius(Quaternion{}, 10), QSeries::monomial(1, Quaternion(-1)).truncated(10)) == 0.0);
    CHECK_THROWS_AS(mobius(Quaternion(0.6, 0.8, 0, 0), 10), Error);
    CHECK_THROWS_AS(mobius(Quaternion(2), 10), Error);

    const Quaternion w(0.3, 0.4, 0, 0);
    const QSeries t = mobius(w, 100);
    CHECK(t.degree() == 100);
    CHECK(approx_equal(eval(t, Quaternion{}), w));
    CHECK(eval(t, w).norm() < 1e-8);

    // a_0 = ω, a_n = ω̄^{n-1}(|ω|² - 1)
    Rng rng(41);
    for (int s = 0; s < 20; ++s) {
        const Quaternion o = rng.in_ball(0.9);
        const QSeries m = mobius(o, 25);
        Quaternion p(1);
        CHECK(approx_equal(m[0], o, 1e-15));
        for (std::size_t n = 1; n <= 25; ++n) {
            CHECK(approx_equal(m[n], p * (o.norm2() - 1), 1e-13));
            p = p * o.conj();
        }
    }
}

TEST_CASE("mobius boundary modulus") {
    Rng rng(42);
    const std::size_t N = 30;
    for (int s = 0; s < 20; ++s) {
        const Quaternion w = rng.in_ball(0.6);
        const QSeries t = mobius(w, N);
        double worst = 0;
        for (int m = 0; m < 256; ++m) {
            const Quaternion q = circle_point(rng.uniform(0, 2 * std::numbers::pi), rng.unit_imaginary());
            worst = std::max(worst, std::abs(eval(t, q).norm() - 1));
        }
        CHECK(worst < std::max(10 * std::pow(w.norm(), N - 1), 8 * 2.2e-16));  // floor at roundoff
    }
}

TEST_CASE("blaschke") {
    CHECK(blaschke({}, 10) == QSeries::constant(1));
    const Quaternion w(0.1, -0.2, 0.3, 0.4);
    const std::vector<Quaternion> one{w};
    CHECK(max_coeff_diff(blaschke(one, 40), mobius(w, 40)) == 0.0);
    const std::vector<Quaternion> bad{Quaternion(0.2), Quaternion(1)};
    CHECK_THROWS_AS(blaschke(bad, 10), Error);

    // The factors' zeros share the sphere of modulus 1/2 and i/2 ≠ conj(j/2):
    // the product vanishes only at i/2.
    const std::vector<Quaternion> same_sphere{kI * 0.5, kJ * 0.5};
    const QSeries b = blaschke(same_sphere, 60);
    CHECK(eval(b, kI * 0.5).norm() < 1e-12);
    const ZeroSet zs = zero_structure(b);
    std::vector<Quaternion> inside;
    for (const auto& z : zs.isolated) {
        if (z.norm() < 0.99) inside.push_back(z);
    }
    for (const auto& s : zs.spheres) CHECK(std::hypot(s.x, s.y) > 0.99);
    REQUIRE(inside.size() == 1);
    CHECK(approx_equal(inside[0], kI * 0.5, 1e-8));

    // zeros on two different spheres: ω_1 exactly, the second one shifted
    // within the sphere of ω_2
    const Quaternion w2(0.3, 0, 0.4, 0);
    const std::vector<Quaternion> two{kI * 0.5, w2};
    const QSeries b2 = blaschke(two, 60);
    CHECK(eval(b2, kI * 0.5).norm() < 1e-12);
    const ZeroSet z2 = zero_structure(b2);
    int on_first = 0, on_second = 0;
    for (const auto& z : z2.isolated) {
        if (z.norm() > 0.99) continue;
        CHECK(eval(b2, z).norm() < 1e-8);
        if (approx_equal(z, kI * 0.5, 1e-8)) ++on_first;
        if (std::abs(z.w - 0.3) < 1e-8 && std::abs(std::sqrt(z.imag_norm2()) - 0.4) < 1e-8) {
            ++on_second;
            CHECK_FALSE(approx_equal(z, w2, 1e-3));
        }
    }
    CHECK(on_first == 1);
    CHECK(on_second == 1);
}

TEST_CASE("is_inner_moment") {
    for (int n = 0; n < 5; ++n) {
        const InnerReport r = is_inner_moment(QSeries::monomial(n), 10);
        CHECK(r.verdict);
        CHECK(r.max_defect == 0.0);
        CHECK(r.method == InnerMethod::Moment);
    }
    const InnerReport bad = is_inner_moment(QSeries{1.0 / kRt2, kI / kRt2}, 10);
    CHECK_FALSE(bad.verdict);
    CHECK(bad.max_defect == doctest::Approx(0.5).epsilon(1e-14));

    const InnerReport m = is_inner_moment(mobius(Quaternion(0.3, 0.4, 0, 0), 100), 20);
    CHECK(m.verdict);
    CHECK(m.max_defect < 1e-8);
    CHECK_THROWS_AS(is_inner_moment(QSeries::monomial(1), 0), Error);
}

TEST_CASE("is_inner_splitting") {
    const InnerReport q = is_inner_splitting(QSeries::monomial(1), UnitImaginary::i(), 4);
    CHECK(q.verdict);
    CHECK(q.max_defect < 1e-15);

    const InnerReport h = is_inner_splitting(QSeries{1.0 / kRt2, 1.0 / kRt2}, UnitImaginary::i(), 4);
    CHECK_FALSE(h.verdict);
    CHECK(h.max_defect >= 1 - 1e-7);

    const QSeries cb = ext_from_slice(complex_blaschke_factor({0.2, -0.5}, 100), UnitImaginary::i());
    const InnerReport c = is_inner_splitting(cb, UnitImaginary::j(), splitting_nodes(cb), 1e-8);
    CHECK(c.verdict);
    CHECK_THROWS_AS(is_inner_splitting(QSeries::monomial(3), UnitImaginary::i(), 6), Error);
}

TEST_CASE("is_inner_norm") {
    const BoundaryGrid grid = BoundaryGrid::fibonacci(64, 1024);
    CHECK(is_inner_norm(QSeries::monomial(1), grid).verdict);
    const InnerReport h = is_inner_norm(QSeries{1.0 / kRt2, 1.0 / kRt2}, grid);
    CHECK_FALSE(h.verdict);
    CHECK(h.max_defect == doctest::Approx(kRt2 - 1).epsilon(1e-6));
    CHECK(is_inner_norm(QSeries::constant(Quaternion(1, 1, 1, 1) * 0.5), grid).verdict);
    CHECK(h.slices == 64);
    CHECK(h.nodes == 1024);
}

TEST_CASE("moment and splitting tests agree on a corpus") {
    Rng rng(43);
    std::vector<QSeries> corpus;
    for (int n = 0; n < 4; ++n) corpus.push_back(QSeries::monomial(n));
    corpus.push_back(QSeries::constant(Quaternion(1, -1, 1, 1) * 0.5));
    corpus.push_back(QSeries::constant(rng.unit_quaternion()));
    corpus.push_back(mobius(Quaternion(0.3, 0.4, 0, 0), 100));
    for (int s = 0; s < 3; ++s) corpus.push_back(mobius(rng.in_ball(0.7), 100));
    const std::vector<Quaternion> z1{kI * 0.5, kJ * 0.3};
    const std::vector<Quaternion> z2{Quaternion(0.1, 0.2, -0.3, 0.1), Quaternion(-0.4, 0, 0, 0.2), kK * 0.25};
    corpus.push_back(blaschke(z1, 80));
    corpus.push_back(blaschke(z2, 80));
    corpus.push_back(QSeries{1.0 / kRt2, 1.0 / kRt2});
    corpus.push_back(QSeries{1.0 / kRt2, kI / kRt2});
    for (int s = 0; s < 5; ++s) corpus.push_back(rng.series(rng.index(0, 6)));

    int inner_count = 0;
    for (const auto& f : corpus) {
        const bool moment = is_inner_moment(f, static_cast<int>(f.degree()) + 1).verdict;
        for (int s = 0; s < 5; ++s) {
            const bool splitting = is_inner_splitting(f, rng.unit_imaginary(), splitting_nodes(f)).verdict;
            CHECK(moment == splitting);
        }
        inner_count += moment ? 1 : 0;
    }
    CHECK(inner_count == 12);
}

TEST_CASE("zero_structure examples") {
    const ZeroSet a = zero_structure(QSeries{1.0, 0.0, 1.0});
    CHECK(a.isolated.empty());
    REQUIRE(a.spheres.size() == 1);
    CHECK(std::abs(a.spheres[0].x) < 1e-12);
    CHECK(std::abs(a.spheres[0].y - 1) < 1e-12);

    const ZeroSet b = zero_structure(QSeries{-kI, 1.0});
    CHECK(b.spheres.empty());
    REQUIRE(b.isolated.size() == 1);
    CHECK(approx_equal(b.isolated[0], kI, 1e-10));

    // (q - i) ⋆ (q - j) = q² - q(i + j) + k
    const ZeroSet c = zero_structure(QSeries{kK, -kI - kJ, 1.0});
    CHECK(c.spheres.empty());
    REQUIRE(c.isolated.size() == 1);
    CHECK(approx_equal(c.isolated[0], kI, 1e-8));

    const ZeroSet d = zero_structure(QSeries{-0.25, 1.0});
    REQUIRE(d.isolated.size() == 1);
    CHECK(approx_equal(d.isolated[0], Quaternion(0.25), 1e-14));
    CHECK_THROWS_AS(zero_structure(QSeries{0.0, 0.0}), Error);

    // (1 + q²)² has a double sphere
    const ZeroSet e = zero_structure(QSeries{1.0, 0.0, 2.0, 0.0, 1.0});
    CHECK(e.isolated.empty());
    REQUIRE(e.spheres.size() == 1);
    CHECK(std::abs(e.spheres[0].y - 1) < 1e-6);
}

TEST_CASE("slice-preserving polynomials vanish on whole spheres") {
    // (q² - 0.6q + 0.25)(q - 0.5): sphere 0.3 + 0.4S and the real zero 0.5
    const QSeries p = star_mul(QSeries{0.25, -0.6, 1.0}, QSeries{-0.5, 1.0});
    const ZeroSet z = zero_structure(p);
    REQUIRE(z.spheres.size() == 1);
    CHECK(contains_sphere(z, 0.3, 0.4, 1e-10));
    REQUIRE(z.isolated.size() == 1);
    CHECK(approx_equal(z.isolated[0], Quaternion(0.5), 1e-10));

    Rng rng(44);
    for (int t = 0; t < 5; ++t) {
        const UnitImaginary K = rng.unit_imaginary();
        for (int s = 0; s < 8; ++s) {
            const Quaternion q = Quaternion(0.3) + 0.4 * UnitImaginary(rng.unit_imaginary()).quat();
            CHECK(eval(p, q).norm() < 1e-14);
        }
        CHECK(eval(p, Quaternion(0.3) + 0.4 * K.quat()).norm() < 1e-14);
    }
}

TEST_CASE("every detected zero is a zero") {
    Rng rng(45);
    for (int t = 0; t < 40; ++t) {
        // prescribed zeros on distinct spheres, combined with ⋆
        const std::size_t k = rng.index(1, 4);
        QSeries p = QSeries::constant(rng.unit_quaternion());
        std::vector<Quaternion> roots;
        for (std::size_t i = 0; i < k; ++i) {
            const Quaternion r = rng.in_ball(1.0);
            roots.push_back(r);
            p = star_mul(p, QSeries{-r, 1.0});
        }
        const ZeroSet z = zero_structure(p);
        CHECK(z.isolated.size() + 2 * z.spheres.size() >= 1);
        for (const auto& q : z.isolated) CHECK(eval(p, q).norm() < 1e-8);
        for (const auto& s : z.spheres) {
            for (int m = 0; m < 8; ++m) {
                CHECK(eval(p, Quaternion(s.x) + s.y * rng.unit_imaginary().quat()).norm() < 1e-8);
            }
        }
    }
    for (int t = 0; t < 40; ++t) {
        const QSeries p = rng.series(rng.index(1, 6));
        const ZeroSet z = zero_structure(p);
        for (const auto& q : z.isolated) CHECK(eval(p, q).norm() < 1e-8);
    }
}
