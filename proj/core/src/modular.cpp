#include "asym/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace asym {

namespace {

constexpr double kPi = std::numbers::pi;

// Traceless 3-vector of the shifted weight, used in the Weyl-sum formula.
std::array<double, 3> shifted_coords(const Field& x) {
    const double a1 = x.labels[0] + 1, a2 = x.labels[1] + 1;
    std::array<double, 3> t{a1 + a2, a2, 0.0};
    const double mean = (t[0] + t[1] + t[2]) / 3.0;
    for (double& v : t) v -= mean;
    return t;
}

std::vector<std::complex<double>> su3_weyl_sums(const FieldTable& table) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
    const std::size_t f = table.size();
    const double m = table.model().shifted_level();
    std::vector<std::array<double, 3>> tv(f);
    for (std::size_t i = 0; i < f; ++i) tv[i] = shifted_coords(table[i]);
    std::vector<std::complex<double>> a(f * f);
    for (std::size_t x = 0; x < f; ++x)
        for (std::size_t y = x; y < f; ++y) {
            std::complex<double> sum = 0;
            for (int w = 0; w < 6; ++w) {
                double dot = 0;
                for (int i = 0; i < 3; ++i) dot += tv[x][perms[w][i]] * tv[y][i];
                sum += double(signs[w]) *
                       std::exp(std::complex<double>(0, -2.0 * kPi * dot / m));
            }
            a[x * f + y] = sum;
            a[y * f + x] = sum;
        }
    return a;
}

}  // namespace

ModularData ModularData::compute(Model m, double tolerance) {
    m.validate();
    if (tolerance <= 0) throw error("tolerance must be positive");
    ModularData md;
    md.table_ = FieldTable::enumerate(m);
    md.tol_ = tolerance;
    const std::size_t f = md.table_.size();
    md.s_.resize(f * f);

    if (m.rank == 2) {
        const double mm = m.shifted_level();
        const double norm = std::sqrt(2.0 / mm);
        for (std::size_t x = 0; x < f; ++x)
            for (std::size_t y = 0; y < f; ++y)
                md.s_[x * f + y] = norm * std::sin(kPi * double((x + 1) * (y + 1)) / mm);
    } else {
        auto a = su3_weyl_sums(md.table_);
        // The Weyl sum is the S-matrix up to one global scalar; fix its
        // modulus by unitarity of row 0 and its phase by S_{00} > 0.
        double row0 = 0;
        for (std::size_t y = 0; y < f; ++y) row0 += std::norm(a[y]);
        const std::complex<double> scale =
            std::conj(a[0]) / (std::abs(a[0]) * std::sqrt(row0));
        for (auto& v : a) v *= scale;
        md.s_ = std::move(a);
    }

    // Construction invariants: unitarity, symmetry, positive first row.
    double worst = 0;
    for (std::size_t x = 0; x < f; ++x)
        for (std::size_t y = 0; y < f; ++y) {
            std::complex<double> dot = 0;
            for (std::size_t z = 0; z < f; ++z)
                dot += md.s(x, z) * std::conj(md.s(y, z));
            worst = std::max(worst, std::abs(dot - (x == y ? 1.0 : 0.0)));
            worst = std::max(worst, std::abs(md.s(x, y) - md.s(y, x)));
        }
    if (worst > tolerance)
        throw consistency_error("S-matrix unitarity/symmetry residual " +
                                std::to_string(worst) + " for " + m.name());
    for (std::size_t y = 0; y < f; ++y)
        if (md.s(0, y).real() <= 0 || std::abs(md.s(0, y).imag()) > tolerance)
            throw consistency_error("S-matrix first row not positive for " + m.name());
    return md;
}

double ModularData::qdim(std::size_t x) const {
    return (s(0, x) / s(0, 0)).real();
}

std::vector<double> ModularData::qdims() const {
    std::vector<double> q(table_.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = qdim(i);
    return q;
}

double ModularData::verlinde(std::size_t a, std::size_t b, std::size_t c) const {
    std::complex<double> sum = 0;
    for (std::size_t x = 0; x < table_.size(); ++x)
        sum += s(a, x) * s(b, x) * std::conj(s(c, x)) / s(0, x);
    const double rounded = std::round(sum.real());
    if (std::abs(sum.imag()) > tol_ || std::abs(sum.real() - rounded) > tol_ || rounded < 0)
        throw consistency_error("Verlinde coefficient not a non-negative integer at (" +
                                display_label(table_[a]) + "," + display_label(table_[b]) +
                                "," + display_label(table_[c]) + ") in " + model().name() +
                                ": " + std::to_string(sum.real()));
    return sum.real();
}

std::vector<std::size_t> ModularData::simple_currents() const {
    std::vector<std::size_t> numeric;
    for (std::size_t x = 0; x < table_.size(); ++x)
        if (std::abs(s(0, x) - s(0, 0)) < tol_) numeric.push_back(x);
    // The set must be the sigma orbit of the vacuum, listed in sigma powers.
    std::vector<std::size_t> orbit;
    std::size_t cur = 0;
    for (int p = 0; p < model().rank; ++p) {
        if (std::find(orbit.begin(), orbit.end(), cur) == orbit.end()) orbit.push_back(cur);
        cur = table_.sigma(cur);
    }
    std::vector<std::size_t> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != numeric)
        throw consistency_error("simple currents are not the sigma orbit of the vacuum in " +
                                model().name());
    return orbit;
}

std::vector<std::size_t> ModularData::simple_currents(
    std::span<const std::size_t> members) const {
    std::vector<std::size_t> out;
    for (std::size_t x : simple_currents())
        if (std::find(members.begin(), members.end(), x) != members.end()) out.push_back(x);
    return out;
}

std::vector<std::size_t> ModularData::degenerate_set(
    std::span<const std::size_t> members) const {
    std::vector<std::size_t> out;
    for (std::size_t x : members) {
        bool ok = true;
        for (std::size_t y : members)
            if (std::abs(s(x, y) * s(0, 0) - s(x, 0) * s(0, y)) > tol_) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    std::vector<std::size_t> g0 = table_.grade_zero();
    std::vector<std::size_t> sorted_members(members.begin(), members.end());
    std::sort(sorted_members.begin(), sorted_members.end());
    if (sorted_members == g0) {
        auto expected = simple_currents(members);
        std::sort(expected.begin(), expected.end());
        std::vector<std::size_t> got = out;
        std::sort(got.begin(), got.end());
        if (got != expected)
            throw consistency_error(
                "degenerate set of the grade-0 system differs from its simple currents in " +
                model().name());
    }
    return out;
}

std::vector<std::size_t> ModularData::degenerate_set_sufficient(
    std::span<const std::size_t> members) const {
    std::vector<std::size_t> out;
    for (std::size_t x : members) {
        bool ok = true;
        for (std::size_t y : members)
            if (std::abs(s(0, y) - s(x, y)) > tol_) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

bool ModularData::sigma_row_check() const {
    if (!model().degenerate())
        throw error("sigma row identity needs n | k, got " + model().name());
    const std::size_t sv = table_.sigma(0);
    for (std::size_t y : table_.grade_zero())
        if (std::abs(s(0, y) - s(sv, y)) > tol_) return false;
    return true;
}

}  // namespace asym
