#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asym/orbifold.hpp"

using namespace asym;

namespace {

// independent sine-formula sum over the even labels of SU(2)_k
double even_index_oracle(int k) {
    const double m = k + 2;
    double s = 0;
    for (int j = 0; j <= k; j += 2) {
        const double q = std::sin((j + 1) * std::numbers::pi / m) /
                         std::sin(std::numbers::pi / m);
        s += q * q;
    }
    return s;
}

}  // namespace

TEST_CASE("index case triple") {
    const auto c = index_cases(36.0);
    CHECK(c.strongly_outer_trivial_loi == doctest::Approx(9.0));
    CHECK(c.strongly_outer_nontrivial_loi == doctest::Approx(18.0));
    CHECK(c.not_strongly_outer == doctest::Approx(4.5));
    const auto c4 = index_cases(4.0);
    CHECK(c4.strongly_outer_trivial_loi == doctest::Approx(1.0));
    CHECK(c4.strongly_outer_nontrivial_loi == doctest::Approx(2.0));
    CHECK(c4.not_strongly_outer == doctest::Approx(0.5));
    CHECK_THROWS_AS(index_cases(-1.0), error);
}

TEST_CASE("even-label system of SU(2)_8") {
    const auto sys = su2_even_system(3);
    CHECK(sys.objects.size() == 5);
    CHECK(sys.objects[0].qdim == doctest::Approx(1.0));
    CHECK(sys.objects[sys.current].qdim == doctest::Approx(1.0));
    CHECK(sys.global_index() == doctest::Approx(even_index_oracle(8)).epsilon(1e-12));
    CHECK(sys.global_index() == doctest::Approx(15.0 + 5.0 * std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("pairs-of-evens subsystem carries half the squared index") {
    const auto sys = pairs_of_evens_subsystem(3);
    CHECK(sys.objects.size() == 14);  // 12 merged pair classes + 2 split
    CHECK(sys.objects[0].qdim == doctest::Approx(1.0));
    const double gamma = even_index_oracle(8) * even_index_oracle(8);
    CHECK(sys.global_index() == doctest::Approx(gamma / 2).epsilon(1e-9));
    CHECK(sys.objects[sys.current].qdim == doctest::Approx(1.0));
    CHECK_THROWS_AS(pairs_of_evens_subsystem(2), error);
}

TEST_CASE("order-2 quotient of the even system") {
    const auto sys = su2_even_system(3);  // {0,2,4,6,8}
    const auto q = quotient_by_current(sys);
    CHECK(q.merged.size() == 2);
    CHECK(q.split.size() == 2);
    CHECK(q.object_count() == 4);

    std::vector<double> qdims;
    for (const auto& o : q.merged) qdims.push_back(o.qdim);
    for (const auto& o : q.split) qdims.push_back(o.qdim);
    std::sort(qdims.begin(), qdims.end());
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(qdims[0] == doctest::Approx(1.0));
    CHECK(qdims[1] == doctest::Approx(phi).epsilon(1e-9));
    CHECK(qdims[2] == doctest::Approx(phi).epsilon(1e-9));
    CHECK(qdims[3] == doctest::Approx(phi * phi).epsilon(1e-9));

    // halving comes from the fold arithmetic itself
    CHECK(q.global_index() == doctest::Approx(sys.global_index() / 2).epsilon(1e-12));

    const auto q4 = quotient_by_current(su2_even_system(4));  // {0,...,12}
    CHECK(q4.object_count() == 5);
    CHECK(q4.global_index() == doctest::Approx(su2_even_system(4).global_index() / 2)
                                   .epsilon(1e-12));
}

TEST_CASE("degenerate quotient guards") {
    WeightedSystem sys;
    sys.objects = {{"0", 1.0}, {"x", 2.0}};
    sys.current = 0;  // beta = vacuum
    sys.current_action = {0, 1};
    CHECK_THROWS_AS(quotient_by_current(sys), error);

    // qdim mismatch inside an orbit
    WeightedSystem bad;
    bad.objects = {{"0", 1.0}, {"a", 2.0}, {"b", 3.0}, {"c", 1.0}};
    bad.current = 3;
    bad.current_action = {3, 2, 1, 0};
    CHECK_THROWS_AS(quotient_by_current(bad), error);
}

TEST_CASE("invertible objects") {
    const auto q = quotient_by_current(su2_even_system(3));
    CHECK(invertible_objects(q).size() == 1);
    CHECK(invertible_objects(quotient_by_current(su2_even_system(4))).size() == 1);

    // ambient sanity input: the full SU(2)_4 even system has two
    WeightedSystem amb = su2_even_system(2);  // {0,2,4} of SU(2)_4
    CHECK(invertible_objects(amb).size() == 2);
}

TEST_CASE("orbifold report ties the chain together") {
    const auto r = orbifold_report(3);
    CHECK(r.m_index == doctest::Approx(26.1803398875).epsilon(1e-9));
    CHECK(r.gamma == doctest::Approx(r.m_index * r.m_index));
    CHECK(r.n0_index == doctest::Approx(r.gamma / 2).epsilon(1e-9));
    CHECK(r.n1_index == doctest::Approx(r.gamma / 4).epsilon(1e-9));
    CHECK(r.n1_index == doctest::Approx((r.m_index / 2) * (r.m_index / 2)).epsilon(1e-9));
    CHECK(r.n1_index == doctest::Approx(r.cases.strongly_outer_trivial_loi));
    CHECK(r.quotient_objects == 4);
    CHECK(r.invertible_in_quotient == 1);

    const auto r4 = orbifold_report(4);
    CHECK(r4.n0_index == doctest::Approx(r4.gamma / 2).epsilon(1e-9));
    CHECK(r4.quotient_objects == 5);
    CHECK(r4.invertible_in_quotient == 1);

    for (int n = 5; n <= 6; ++n) {
        const auto rn = orbifold_report(n);
        CHECK(rn.quotient_objects == std::size_t(n) + 1);
        CHECK(rn.invertible_in_quotient == 1);
    }

    CHECK_THROWS_AS(orbifold_report(2), error);
}
