#ifndef ASYM_MODULAR_HPP
#define ASYM_MODULAR_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "asym/alcove.hpp"

namespace asym {

/// The modular S-matrix of a model in canonical field order, with the
/// quantum-dimension, Verlinde and degeneracy queries built on it.
/// Unitarity, symmetry and positivity of the first row are verified at
/// construction; everything downstream compares against one per-instance
/// tolerance.
class ModularData {
public:
    /// SU(2): S_{jl} = sqrt(2/(k+2)) sin(pi (j+1)(l+1) / (k+2)).
    /// SU(3): alternating Weyl sum of exponentials with denominator k+3,
    /// normalized so S is unitary with S_{00} > 0.
    static ModularData compute(Model m, double tolerance = 1e-6);

    Model model() const { return table_.model(); }
    const FieldTable& table() const { return table_; }
    double tolerance() const { return tol_; }

    std::complex<double> s(std::size_t x, std::size_t y) const {
        return s_[x * table_.size() + y];
    }

    /// Perron-Frobenius weight S_{0x}/S_{00}; always >= 1.
    double qdim(std::size_t x) const;
    std::vector<double> qdims() const;

    /// sum_x S_{ax} S_{bx} conj(S_{cx}) / S_{0x}.  Must land within tolerance
    /// of a non-negative integer; anything else throws with the offending
    /// triple named, never rounds silently.
    double verlinde(std::size_t a, std::size_t b, std::size_t c) const;

    /// {x : S_{0x} = S_{00}} as the cyclic group {0, sigma 0, ...} in sigma
    /// powers of the vacuum; throws if the numeric set is not that orbit.
    std::vector<std::size_t> simple_currents() const;
    std::vector<std::size_t> simple_currents(std::span<const std::size_t> members) const;

    /// Elements x of the subsystem with S_{xy} S_{00} = S_{x0} S_{0y} for all
    /// members y (the necessary braiding-triviality criterion).  When the
    /// subsystem is the grade-0 one, the result is checked against the
    /// simple-current characterization and a mismatch throws.
    std::vector<std::size_t> degenerate_set(std::span<const std::size_t> members) const;

    /// Elements x with S_{0y} = S_{xy} for all members y (the sufficient
    /// criterion).  Always a subset of the degenerate set; reported
    /// separately for subsystems where the two are not known to coincide.
    std::vector<std::size_t> degenerate_set_sufficient(
        std::span<const std::size_t> members) const;

    /// n | k only: S_{0y} = S_{sigma(0), y} for every grade-0 y.
    bool sigma_row_check() const;

private:
    FieldTable table_;
    std::vector<std::complex<double>> s_;
    double tol_ = 1e-6;
};

}  // namespace asym

#endif
