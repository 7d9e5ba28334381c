#ifndef ASYM_FUSION_HPP
#define ASYM_FUSION_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "asym/alcove.hpp"

namespace asym {

/// Closed-form SU(2)_k fusion multiplicity:
/// 1 iff |j-l| <= m <= j+l, j+l+m even and j+l+m <= 2k; 0 otherwise.
int fusion_su2(int j, int l, int m, int k);

/// Affine fusion coefficient N_{ab}^c by Kac-Walton folding of classical
/// Littlewood-Richardson coefficients.  The classical coefficients are
/// counted by exhaustive enumeration of LR skew tableaux; each constituent is
/// then reflected into the alcove with the shifted affine Weyl action,
/// contributing with the sign of the reflection word (walls contribute 0).
int fusion_coeff(const Field& a, const Field& b, const Field& c);

class RingElement;

/// Fusion product a (x) b as a sparse row over the table, computed by folding
/// alone (no full tensor).
RingElement fuse(const FieldTable& table, std::size_t a, std::size_t b);

/// An element of the fusion ring: a finitely supported map
/// field index -> coefficient.
class RingElement {
public:
    RingElement() = default;

    void add(std::size_t field, long long amount);
    long long coeff(std::size_t field) const;
    const std::map<std::size_t, long long>& coeffs() const { return c_; }
    bool operator==(const RingElement& o) const { return c_ == o.c_; }

private:
    std::map<std::size_t, long long> c_;  // zero entries are erased
};

/// The full multiplicity tensor N_{ab}^c of a model, with an optional member
/// mask carving out a fusion-closed subsystem view (same index space).
class FusionRing {
public:
    /// Build the dense tensor over all field triples of the model.  For
    /// rank 2 every entry is cross-checked against the closed form.
    static FusionRing build(Model m);

    const FieldTable& table() const { return table_; }
    Model model() const { return table_.model(); }

    int mult(std::size_t a, std::size_t b, std::size_t c) const {
        const std::size_t f = table_.size();
        return mult_[(a * f + b) * f + c];
    }

    bool is_member(std::size_t i) const { return mask_[i] != 0; }
    const std::vector<std::size_t>& members() const { return members_; }
    bool is_subsystem_view() const { return members_.size() != table_.size(); }

    /// View masked to the grade-0 fields; closure under fusion is verified.
    FusionRing grade_zero() const;
    /// View masked to an arbitrary member set (must be fusion-closed,
    /// conjugation-closed and contain the vacuum).
    FusionRing subsystem_view(std::span<const std::size_t> members) const;

    RingElement generator(std::size_t field) const;
    /// Bilinear extension of the fusion tensor to formal sums.
    RingElement multiply(const RingElement& u, const RingElement& v) const;

private:
    FieldTable table_;
    std::vector<int> mult_;
    std::vector<char> mask_;
    std::vector<std::size_t> members_;
};

/// Every subset of the ring's members that contains the vacuum and is closed
/// under fusion support and conjugation, in canonical order (by size, then
/// lexicographically on the sorted index lists).  Refuses rings with more
/// than 32 fields.
std::vector<std::vector<std::size_t>> subsystems(const FusionRing& ring);

/// Global index: sum of qdim^2 over the given members.
double global_index(std::span<const double> qdims, std::span<const std::size_t> members);

}  // namespace asym

#endif
