#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "asym/fusion.hpp"
#include "asym/modular.hpp"

using namespace asym;

namespace {

constexpr double kPi = std::numbers::pi;

// sine-product oracle for quantum dimensions
double qdim_oracle(const Field& x) {
    const double m = x.model.shifted_level();
    if (x.model.rank == 2)
        return std::sin((x.labels[0] + 1) * kPi / m) / std::sin(kPi / m);
    const double x1 = x.labels[0] + 1, x2 = x.labels[1] + 1;
    auto s = [&](double a) { return std::sin(a * kPi / m); };
    return s(x1) * s(x2) * s(x1 + x2) / (s(1) * s(1) * s(2));
}

}  // namespace

TEST_CASE("closed-form anchors of the S-matrix") {
    const auto md = ModularData::compute({2, 2});
    CHECK(md.s(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));

    const auto md24 = ModularData::compute({2, 4});
    CHECK(md24.qdim(0) == doctest::Approx(1.0));
    CHECK(md24.qdim(2) == doctest::Approx(2.0).epsilon(1e-12));

    const auto md33 = ModularData::compute({3, 3});
    CHECK(md33.qdim(md33.table().index_of(Field{{3, 3}, {1, 1}})) ==
          doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("first row reproduces the sine-product dimensions") {
    for (Model m : {Model{2, 4}, Model{2, 7}, Model{3, 3}, Model{3, 6}}) {
        const auto md = ModularData::compute(m);
        for (std::size_t x = 0; x < md.table().size(); ++x) {
            CHECK(md.qdim(x) == doctest::Approx(qdim_oracle(md.table()[x])).epsilon(1e-9));
            CHECK(md.qdim(x) >= 1.0 - 1e-9);
            CHECK(std::abs(md.s(0, x) - md.s(0, 0) * md.qdim(x)) < 1e-9);
        }
    }
}

TEST_CASE("unitarity and symmetry to high precision") {
    for (Model m : {Model{2, 6}, Model{3, 3}, Model{3, 8}}) {
        const auto md = ModularData::compute(m);
        const std::size_t f = md.table().size();
        for (std::size_t x = 0; x < f; ++x)
            for (std::size_t y = 0; y < f; ++y) {
                std::complex<double> dot = 0;
                for (std::size_t z = 0; z < f; ++z) dot += md.s(x, z) * std::conj(md.s(y, z));
                CHECK(std::abs(dot - (x == y ? 1.0 : 0.0)) < 1e-9);
                CHECK(std::abs(md.s(x, y) - md.s(y, x)) < 1e-12);
            }
    }
}

TEST_CASE("qdim agrees with the Perron-Frobenius eigenvalue of the fusion matrix") {
    for (Model m : {Model{2, 5}, Model{3, 3}}) {
        const auto ring = FusionRing::build(m);
        const auto md = ModularData::compute(m);
        const std::size_t f = ring.table().size();
        for (std::size_t x = 0; x < f; ++x) {
            // power iteration on N_x
            std::vector<double> v(f, 1.0);
            double lambda = 0;
            for (int it = 0; it < 200; ++it) {
                std::vector<double> w(f, 0.0);
                for (std::size_t a = 0; a < f; ++a)
                    for (std::size_t b = 0; b < f; ++b)
                        w[a] += ring.mult(a, x, b) * v[b];
                double norm = 0;
                for (double t : w) norm += t * t;
                norm = std::sqrt(norm);
                for (double& t : w) t /= norm;
                lambda = norm;
                v = std::move(w);
            }
            CHECK(lambda == doctest::Approx(md.qdim(x)).epsilon(1e-6));
        }
    }
}

TEST_CASE("Verlinde numbers") {
    const auto md33 = ModularData::compute({3, 3});
    const auto& t = md33.table();
    const std::size_t f_idx = t.index_of(Field{{3, 3}, {1, 1}});
    CHECK(md33.verlinde(f_idx, f_idx, t.index_of(Field{{3, 3}, {1, 1}})) ==
          doctest::Approx(2.0).epsilon(1e-6));

    const auto md24 = ModularData::compute({2, 4});
    CHECK(md24.verlinde(2, 2, 2) == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t b = 0; b < 5; ++b)
        for (std::size_t c = 0; c < 5; ++c)
            CHECK(md24.verlinde(0, b, c) == doctest::Approx(b == c ? 1.0 : 0.0));
}

TEST_CASE("Verlinde numbers equal the folded coefficients on every triple") {
    for (Model m : {Model{2, 4}, Model{2, 5}, Model{3, 3}, Model{3, 4}}) {
        const auto ring = FusionRing::build(m);
        const auto md = ModularData::compute(m);
        const std::size_t f = ring.table().size();
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = 0; b < f; ++b)
                for (std::size_t c = 0; c < f; ++c)
                    CHECK(std::abs(md.verlinde(a, b, c) - ring.mult(a, b, c)) < 1e-6);
    }
}

TEST_CASE("columns of S are eigenvectors of every fusion matrix") {
    for (Model m : {Model{2, 4}, Model{3, 3}}) {
        const auto ring = FusionRing::build(m);
        const auto md = ModularData::compute(m);
        const std::size_t f = ring.table().size();
        for (std::size_t z = 0; z < f; ++z)
            for (std::size_t x = 0; x < f; ++x) {
                const std::complex<double> lambda = md.s(z, x) / md.s(0, x);
                for (std::size_t a = 0; a < f; ++a) {
                    std::complex<double> lhs = 0;
                    for (std::size_t b = 0; b < f; ++b)
                        lhs += double(ring.mult(z, a, b)) * md.s(b, x);
                    CHECK(std::abs(lhs - lambda * md.s(a, x)) < 1e-9);
                }
            }
    }
}

TEST_CASE("simple currents form the sigma orbit of the vacuum") {
    const auto md24 = ModularData::compute({2, 4});
    CHECK(md24.simple_currents() == std::vector<std::size_t>{0, 4});

    const auto md33 = ModularData::compute({3, 3});
    const auto& t = md33.table();
    CHECK(md33.simple_currents() ==
          std::vector<std::size_t>{0, t.index_of(Field{{3, 3}, {3, 0}}),
                                   t.index_of(Field{{3, 3}, {0, 3}})});

    const auto md25 = ModularData::compute({2, 5});
    const auto g0 = md25.table().grade_zero();
    CHECK(md25.simple_currents(g0) == std::vector<std::size_t>{0});
}

TEST_CASE("degenerate sets of the grade-0 systems") {
    const auto md24 = ModularData::compute({2, 4});
    CHECK(md24.degenerate_set(md24.table().grade_zero()) == std::vector<std::size_t>{0, 4});

    const auto md25 = ModularData::compute({2, 5});
    CHECK(md25.degenerate_set(md25.table().grade_zero()) == std::vector<std::size_t>{0});

    const auto md33 = ModularData::compute({3, 3});
    auto got = md33.degenerate_set(md33.table().grade_zero());
    std::sort(got.begin(), got.end());
    auto want = md33.simple_currents();
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("the full field system is never degenerate beyond the vacuum") {
    for (int k = 3; k <= 8; ++k) {
        const auto md = ModularData::compute({2, k});
        std::vector<std::size_t> all(md.table().size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        CHECK(md.degenerate_set(all) == std::vector<std::size_t>{0});
    }
    for (int k = 3; k <= 5; ++k) {
        const auto md = ModularData::compute({3, k});
        std::vector<std::size_t> all(md.table().size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        CHECK(md.degenerate_set(all) == std::vector<std::size_t>{0});
    }
}

TEST_CASE("sufficient criterion is contained in the necessary one") {
    const auto md = ModularData::compute({2, 4});
    const std::vector<std::size_t> sub{0, 4};  // a smaller closed subsystem
    auto nec = md.degenerate_set(sub);
    auto suf = md.degenerate_set_sufficient(sub);
    for (std::size_t x : suf) CHECK(std::find(nec.begin(), nec.end(), x) != nec.end());
}

TEST_CASE("sigma row identity on grade 0") {
    CHECK(ModularData::compute({2, 4}).sigma_row_check());
    CHECK(ModularData::compute({3, 3}).sigma_row_check());
    CHECK(ModularData::compute({3, 6}).sigma_row_check());
    CHECK_THROWS_AS(ModularData::compute({2, 5}).sigma_row_check(), error);
}
