#include "asym/fusion.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace asym {

int fusion_su2(int j, int l, int m, int k) {
    if (k < 1) throw error("level must be positive");
    if (j < 0 || l < 0 || m < 0)
        throw error("negative SU(2) label");
    // labels above k need no special case: the sum bound forces 0 there
    if ((j + l + m) % 2 != 0) return 0;
    if (m < std::abs(j - l) || m > j + l) return 0;
    if (j + l + m > 2 * k) return 0;
    return 1;
}

namespace {

using P3 = std::array<int, 3>;

int psum(const P3& p) { return p[0] + p[1] + p[2]; }

P3 young_of(const Field& x) {
    auto [r1, r2] = young_rows(x);
    return {r1, r2, 0};
}

// Number of LR skew tableaux of shape nu/lam with content mu: rows weakly
// increasing, columns strictly increasing, reverse reading word a lattice
// word.  Cells are filled in reverse reading order (rows top to bottom, each
// row right to left) so the lattice property can be checked prefix by prefix.
long long lr_count(const P3& lam, const P3& mu, const P3& nu, int nrows) {
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < nrows; ++r) {
        if (nu[r] < lam[r]) return 0;
        for (int c = nu[r] - 1; c >= lam[r]; --c) cells.push_back({r, c});
    }
    const std::size_t width = static_cast<std::size_t>(nu[0]);
    std::vector<int> grid_store(3 * std::max<std::size_t>(width, 1));
    auto grid = [&](int r, int c) -> int& {
        return grid_store[static_cast<std::size_t>(r) * width + static_cast<std::size_t>(c)];
    };
    int counts[3] = {0, 0, 0};
    int mrows = 0;
    while (mrows < 3 && mu[mrows] > 0) ++mrows;

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[pos];
        for (int e = 1; e <= mrows; ++e) {
            if (counts[e - 1] >= mu[e - 1]) continue;
            if (e > 1 && counts[e - 2] < counts[e - 1] + 1) continue;  // lattice
            if (c + 1 < nu[r] && e > grid(r, c + 1)) continue;         // row weak
            if (r > 0 && c >= lam[r - 1] && e <= grid(r - 1, c)) continue;  // col strict
            grid(r, c) = e;
            ++counts[e - 1];
            self(self, pos + 1);
            --counts[e - 1];
        }
    };
    rec(rec, 0);
    return total;
}

// Classical SU(n) tensor product decomposition a (x) b as Young diagrams with
// at most n rows, via LR coefficients.
std::vector<std::pair<P3, long long>> classical_products(const Field& a, const Field& b) {
    const int nrows = a.model.rank;
    const P3 lam = young_of(a);
    const P3 mu = young_of(b);
    const int total = psum(lam) + psum(mu);

    std::vector<std::pair<P3, long long>> out;
    auto try_nu = [&](const P3& nu) {
        if (nu[1] > nu[0] || nu[2] > nu[1] || nu[2] < 0) return;
        if (nu[0] < lam[0] || nu[1] < lam[1] || nu[2] < lam[2]) return;
        long long c = lr_count(lam, mu, nu, nrows);
        if (c > 0) out.emplace_back(nu, c);
    };
    if (nrows == 2) {
        for (int n1 = lam[0]; n1 <= lam[0] + mu[0]; ++n1)
            try_nu({n1, total - n1, 0});
    } else {
        for (int n1 = lam[0]; n1 <= lam[0] + mu[0]; ++n1)
            for (int n2 = lam[1]; n2 <= std::min(n1, lam[1] + mu[0] + mu[1]); ++n2)
                try_nu({n1, n2, total - n1 - n2});
    }
    return out;
}

std::array<int, 2> dynkin_of(const P3& nu, int nrows) {
    if (nrows == 2) return {nu[0] - nu[1], 0};
    return {nu[0] - nu[1], nu[1] - nu[2]};
}

struct Folded {
    int sign;
    std::array<int, 2> labels;
};

// Shifted affine Weyl folding at level k: reflect the shifted weight until it
// is alcove-interior (returning the reflection sign) or lands on a wall
// (no contribution).
std::optional<Folded> fold_alcove(std::array<int, 2> dynkin, Model m) {
    const int mm = m.shifted_level();
    if (m.rank == 2) {
        const int period = 2 * mm;
        int r = ((dynkin[0] + 1) % period + period) % period;
        if (r == 0 || r == mm) return std::nullopt;
        if (r < mm) return Folded{1, {r - 1, 0}};
        return Folded{-1, {period - r - 1, 0}};
    }
    int x1 = dynkin[0] + 1, x2 = dynkin[1] + 1;
    int sign = 1;
    for (int depth = 0; depth < 64; ++depth) {
        if (x1 == 0 || x2 == 0 || x1 + x2 == mm) return std::nullopt;
        if (x1 < 0) {
            x2 = x1 + x2;
            x1 = -x1;
            sign = -sign;
        } else if (x2 < 0) {
            x1 = x1 + x2;
            x2 = -x2;
            sign = -sign;
        } else if (x1 + x2 > mm) {
            int t = x1;
            x1 = mm - x2;
            x2 = mm - t;
            sign = -sign;
        } else {
            return Folded{sign, {x1 - 1, x2 - 1}};
        }
    }
    throw consistency_error("affine Weyl folding exceeded depth bound 64");
}

// Fused product of a and b as a dense row over the field table.
std::vector<long long> fused_row(const FieldTable& table, const Field& a, const Field& b) {
    std::vector<long long> row(table.size(), 0);
    for (const auto& [nu, mult] : classical_products(a, b)) {
        auto folded = fold_alcove(dynkin_of(nu, a.model.rank), a.model);
        if (!folded) continue;
        Field c{a.model, folded->labels};
        row[table.index_of(c)] += folded->sign * mult;
    }
    for (long long v : row)
        if (v < 0) throw consistency_error("negative fused multiplicity for " + a.model.name());
    return row;
}

}  // namespace

int fusion_coeff(const Field& a, const Field& b, const Field& c) {
    a.validate();
    b.validate();
    c.validate();
    if (a.model != b.model || a.model != c.model)
        throw error("fusion of fields from different models");
    long long n = 0;
    for (const auto& [nu, mult] : classical_products(a, b)) {
        auto folded = fold_alcove(dynkin_of(nu, a.model.rank), a.model);
        if (folded && folded->labels == c.labels) n += folded->sign * mult;
    }
    if (n < 0) throw consistency_error("negative fusion multiplicity");
    return static_cast<int>(n);
}

void RingElement::add(std::size_t field, long long amount) {
    if (amount == 0) return;
    auto [it, inserted] = c_.try_emplace(field, 0);
    it->second += amount;
    if (it->second == 0) c_.erase(it);
}

long long RingElement::coeff(std::size_t field) const {
    auto it = c_.find(field);
    return it == c_.end() ? 0 : it->second;
}

RingElement fuse(const FieldTable& table, std::size_t a, std::size_t b) {
    const auto row = fused_row(table, table[a], table[b]);
    RingElement out;
    for (std::size_t c = 0; c < row.size(); ++c) out.add(c, row[c]);
    return out;
}

FusionRing FusionRing::build(Model m) {
    FusionRing ring;
    ring.table_ = FieldTable::enumerate(m);
    const std::size_t f = ring.table_.size();
    ring.mult_.assign(f * f * f, 0);
    for (std::size_t a = 0; a < f; ++a)
        for (std::size_t b = 0; b < f; ++b) {
            auto row = fused_row(ring.table_, ring.table_[a], ring.table_[b]);
            for (std::size_t c = 0; c < f; ++c)
                ring.mult_[(a * f + b) * f + c] = static_cast<int>(row[c]);
        }
    if (m.rank == 2) {
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = 0; b < f; ++b)
                for (std::size_t c = 0; c < f; ++c)
                    if (ring.mult(a, b, c) !=
                        fusion_su2(static_cast<int>(a), static_cast<int>(b),
                                   static_cast<int>(c), m.level))
                        throw consistency_error(
                            "Kac-Walton disagrees with the SU(2) closed form at (" +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + "), level " + std::to_string(m.level));
    }
    ring.mask_.assign(f, 1);
    ring.members_.resize(f);
    for (std::size_t i = 0; i < f; ++i) ring.members_[i] = i;
    return ring;
}

FusionRing FusionRing::grade_zero() const {
    return subsystem_view(table_.grade_zero());
}

FusionRing FusionRing::subsystem_view(std::span<const std::size_t> members) const {
    FusionRing view;
    view.table_ = table_;
    view.mult_ = mult_;
    view.mask_.assign(table_.size(), 0);
    view.members_.assign(members.begin(), members.end());
    std::sort(view.members_.begin(), view.members_.end());
    for (std::size_t i : view.members_) view.mask_[i] = 1;
    if (view.members_.empty() || view.members_[0] != 0)
        throw error("subsystem must contain the vacuum");
    for (std::size_t a : view.members_) {
        if (!view.mask_[table_.conj(a)])
            throw error("subsystem not closed under conjugation");
        for (std::size_t b : view.members_)
            for (std::size_t c = 0; c < table_.size(); ++c)
                if (mult(a, b, c) > 0 && !view.mask_[c])
                    throw error("subsystem not closed under fusion");
    }
    return view;
}

RingElement FusionRing::generator(std::size_t field) const {
    RingElement e;
    e.add(field, 1);
    return e;
}

RingElement FusionRing::multiply(const RingElement& u, const RingElement& v) const {
    const std::size_t f = table_.size();
    RingElement out;
    for (const auto& [a, ca] : u.coeffs())
        for (const auto& [b, cb] : v.coeffs())
            for (std::size_t c = 0; c < f; ++c) {
                int n = mult(a, b, c);
                if (n) out.add(c, static_cast<long long>(n) * ca * cb);
            }
    return out;
}

namespace {

std::vector<std::size_t> fusion_closure(const FusionRing& ring,
                                        std::vector<std::size_t> seed) {
    const std::size_t f = ring.table().size();
    std::vector<char> in(f, 0);
    in[0] = 1;
    for (std::size_t s : seed) {
        if (!ring.is_member(s)) throw error("closure seed outside the ring members");
        in[s] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::size_t> cur;
        for (std::size_t i = 0; i < f; ++i)
            if (in[i]) cur.push_back(i);
        for (std::size_t a : cur) {
            std::size_t ac = ring.table().conj(a);
            if (!in[ac]) {
                in[ac] = 1;
                changed = true;
            }
            for (std::size_t b : cur)
                for (std::size_t c = 0; c < f; ++c)
                    if (ring.mult(a, b, c) > 0 && !in[c]) {
                        if (!ring.is_member(c))
                            throw consistency_error("member products escape the subsystem view");
                        in[c] = 1;
                        changed = true;
                    }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> subsystems(const FusionRing& ring) {
    if (ring.members().size() > 32)
        throw error("subsystem search refused: more than 32 fields");
    // Every closed subsystem is a join of single-generator closures, so the
    // fixpoint of pairwise joins enumerates all of them.
    std::set<std::vector<std::size_t>> found;
    found.insert(fusion_closure(ring, {}));
    for (std::size_t x : ring.members()) found.insert(fusion_closure(ring, {x}));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::size_t>> cur(found.begin(), found.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<std::size_t> seed = cur[i];
                seed.insert(seed.end(), cur[j].begin(), cur[j].end());
                if (found.insert(fusion_closure(ring, std::move(seed))).second)
                    changed = true;
            }
    }
    std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

double global_index(std::span<const double> qdims, std::span<const std::size_t> members) {
    double s = 0;
    for (std::size_t i : members) s += qdims[i] * qdims[i];
    return s;
}

}  // namespace asym
