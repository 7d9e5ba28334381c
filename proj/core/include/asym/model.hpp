#ifndef ASYM_MODEL_HPP
#define ASYM_MODEL_HPP

#include <stdexcept>
#include <string>

namespace asym {

/// Domain error: bad input (unsupported model, label outside the alcove, ...).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed quantity violated a structural identity the construction
/// guarantees (non-unitary S-matrix, non-integral Verlinde number, ...).
/// These indicate a bug or a model outside the supported hypotheses and are
/// never silently absorbed.
struct consistency_error : error {
    using error::error;
};

/// One WZW model SU(rank)_level.  Only rank 2 and 3 are supported; every
/// construction in this library lives there.
struct Model {
    int rank = 2;
    int level = 1;

    void validate() const {
        if (rank != 2 && rank != 3)
            throw error("unsupported rank " + std::to_string(rank) + " (must be 2 or 3)");
        if (level < 1)
            throw error("level must be positive, got " + std::to_string(level));
    }

    /// k + n, the shifted level entering every trigonometric formula.
    int shifted_level() const { return level + rank; }

    /// n | k: the grade-0 system is degenerate and the dual principal graph
    /// needs orbit merging and fixed-point splitting.
    bool degenerate() const { return level % rank == 0; }

    std::string name() const {
        return "su" + std::to_string(rank) + "_" + std::to_string(level);
    }

    friend bool operator==(const Model& a, const Model& b) {
        return a.rank == b.rank && a.level == b.level;
    }
    friend bool operator!=(const Model& a, const Model& b) { return !(a == b); }
    friend bool operator<(const Model& a, const Model& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.level < b.level;
    }
};

}  // namespace asym

#endif
