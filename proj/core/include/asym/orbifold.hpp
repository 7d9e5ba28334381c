#ifndef ASYM_ORBIFOLD_HPP
#define ASYM_ORBIFOLD_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "asym/model.hpp"

namespace asym {

/// The three candidate global indices of the intermediate inclusion, by the
/// strong-outerness / Loi-invariant trichotomy of the order-2 action.
struct IndexCases {
    double strongly_outer_trivial_loi;     // gamma / 4
    double strongly_outer_nontrivial_loi;  // gamma / 2
    double not_strongly_outer;             // gamma / 8
};

IndexCases index_cases(double gamma);

/// A finite list of weighted objects (vacuum first) with a designated
/// invertible current beta, beta^2 = vacuum.  `current_action` is the
/// involution x -> beta (x) x on object indices; it may be empty when the
/// ambient data does not determine it (then only index bookkeeping applies).
struct WeightedSystem {
    struct Object {
        std::string label;
        double qdim = 1;
    };
    std::vector<Object> objects;
    std::size_t current = 0;
    std::vector<std::size_t> current_action;

    double global_index() const;
};

/// Quotient by the order-2 current: free orbits {x, beta x} merge into one
/// object keeping qdim(x); fixed points split into two objects of half the
/// qdim.  The quotient global index is half the source's by construction.
struct QuotientStructure {
    struct Object {
        std::string label;
        double qdim = 0;
    };
    std::vector<Object> merged;
    std::vector<Object> split;  // two entries per fixed point

    double global_index() const;
    std::size_t object_count() const { return merged.size() + split.size(); }
};

QuotientStructure quotient_by_current(const WeightedSystem& sys);

/// Objects with qdim within tolerance of 1.
std::vector<std::string> invertible_objects(const QuotientStructure& q, double tol = 1e-6);
std::vector<std::string> invertible_objects(const WeightedSystem& sys, double tol = 1e-6);

/// The grade-0 (even-label) fields of SU(2)_{4n-4} as a weighted system with
/// beta the top field j = 4n-4 acting by j -> k-j.
WeightedSystem su2_even_system(int n_param);

/// The even vertices of the SU(2)_{4n-4} dual graph whose representatives are
/// pairs of even labels, including the two split components of the fixed
/// pair.  Its global index is verified to be half the squared global index of
/// the even-label system.  Requires n_param > 2 (below that the fusion graph
/// disconnects and group methods apply instead).
WeightedSystem pairs_of_evens_subsystem(int n_param);

/// The whole index bookkeeping for one n: gamma = [M]^2 for the even system M
/// of SU(2)_{4n-4}, the pair subsystem at gamma/2, its order-2 quotient at
/// gamma/4 = ([M]/2)^2, and the object/invertibility counts of the quotient
/// of M itself (the even D_{2n} system).
struct OrbifoldReport {
    int n_param = 0;
    double m_index = 0;        // [M]
    double gamma = 0;          // [M]^2
    double n0_index = 0;       // verified = gamma/2
    double n1_index = 0;       // n0/2 = gamma/4
    double quotient_index = 0; // [M]/2, the even D_{2n} global index
    std::size_t n0_objects = 0;
    std::size_t quotient_objects = 0;  // n_param + 1
    std::size_t invertible_in_quotient = 0;
    IndexCases cases{};
};

OrbifoldReport orbifold_report(int n_param, double tol = 1e-6);

}  // namespace asym

#endif
