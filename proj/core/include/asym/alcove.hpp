#ifndef ASYM_ALCOVE_HPP
#define ASYM_ALCOVE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asym/model.hpp"

namespace asym {

/// A primary field of SU(n)_k, identified by its Dynkin labels inside the
/// level-k alcove (sum of labels <= k).  For rank 2 only labels[0] is used.
struct Field {
    Model model;
    std::array<int, 2> labels{0, 0};

    int label(int i) const { return labels[static_cast<std::size_t>(i)]; }
    int label_sum() const { return labels[0] + (model.rank == 3 ? labels[1] : 0); }
    bool is_vacuum() const { return labels[0] == 0 && labels[1] == 0; }

    void validate() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.model == b.model && a.labels == b.labels;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
};

/// Z/nZ grading (n-ality): sum_i i*label_i mod n.
int grading(const Field& x);

/// Label reversal; an involution, and the unique c with N_{x c}^0 = 1.
Field conjugate(const Field& x);

/// Affine outer rotation sigma (the simple current action), applied
/// `power` times.  SU(2): j -> k-j.  SU(3): (l1,l2) -> (k-l1-l2, l1).
/// sigma^n is the identity.
Field sigma_act(const Field& x, int power = 1);

/// The unique field f with sigma(f) = f; exists exactly when n | k.
Field fixed_point(Model m);

/// Young-diagram display rows (r1 >= r2 >= 0): Dynkin (l1,l2) <-> (l1+l2, l2).
/// For rank 2 the single row is the Dynkin label itself.
std::array<int, 2> young_rows(const Field& x);

/// Human label: SU(2) "4"; SU(3) the Young rows, "42" when both fit in one
/// digit, "(10,2)" otherwise, "0" for the vacuum.
std::string display_label(const Field& x);

/// All primary fields of a model in canonical order: lexicographic on the
/// Dynkin labels, which puts the vacuum first.  Grading, conjugation and the
/// sigma action are tabulated as index maps.
class FieldTable {
public:
    static FieldTable enumerate(Model m);

    Model model() const { return model_; }
    std::size_t size() const { return fields_.size(); }
    const Field& operator[](std::size_t i) const { return fields_[i]; }
    const std::vector<Field>& fields() const { return fields_; }

    /// Canonical index of a field; throws asym::error for labels outside the
    /// alcove or a mismatched model.
    std::size_t index_of(const Field& x) const;

    int grade(std::size_t i) const { return grade_[i]; }
    std::size_t conj(std::size_t i) const { return conj_[i]; }
    std::size_t sigma(std::size_t i, int power = 1) const;

    /// Index of the sigma-fixed field when n | k.
    std::optional<std::size_t> fixed_point_index() const;

    /// Indices of the grade-0 fields, in canonical order.
    std::vector<std::size_t> grade_zero() const;

private:
    Model model_;
    std::vector<Field> fields_;
    std::vector<int> grade_;
    std::vector<std::size_t> conj_;
    std::vector<std::size_t> sigma_;
};

}  // namespace asym

#endif
