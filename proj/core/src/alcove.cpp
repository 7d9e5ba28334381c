#include "asym/alcove.hpp"

#include <algorithm>

namespace asym {

void Field::validate() const {
    model.validate();
    if (labels[0] < 0 || labels[1] < 0)
        throw error("negative Dynkin label in " + model.name());
    if (model.rank == 2 && labels[1] != 0)
        throw error("rank-2 field carries a second Dynkin label");
    if (label_sum() > model.level)
        throw error("labels outside the level-" + std::to_string(model.level) + " alcove");
}

int grading(const Field& x) {
    x.validate();
    const int n = x.model.rank;
    int g = x.labels[0] + 2 * x.labels[1];
    return ((g % n) + n) % n;
}

Field conjugate(const Field& x) {
    x.validate();
    if (x.model.rank == 2) return x;
    return Field{x.model, {x.labels[1], x.labels[0]}};
}

Field sigma_act(const Field& x, int power) {
    x.validate();
    const int n = x.model.rank;
    int p = ((power % n) + n) % n;
    Field y = x;
    for (int i = 0; i < p; ++i) {
        if (n == 2) {
            y.labels[0] = y.model.level - y.labels[0];
        } else {
            int l1 = y.labels[0], l2 = y.labels[1];
            y.labels = {y.model.level - l1 - l2, l1};
        }
    }
    return y;
}

Field fixed_point(Model m) {
    m.validate();
    if (m.level % m.rank != 0)
        throw error("no sigma-fixed field: " + std::to_string(m.rank) +
                    " does not divide the level " + std::to_string(m.level));
    if (m.rank == 2) return Field{m, {m.level / 2, 0}};
    return Field{m, {m.level / 3, m.level / 3}};
}

std::array<int, 2> young_rows(const Field& x) {
    if (x.model.rank == 2) return {x.labels[0], 0};
    return {x.labels[0] + x.labels[1], x.labels[1]};
}

std::string display_label(const Field& x) {
    if (x.model.rank == 2) return std::to_string(x.labels[0]);
    auto [r1, r2] = young_rows(x);
    if (r1 == 0) return "0";
    if (r2 == 0 && r1 <= 9) return std::to_string(r1);
    if (r1 <= 9 && r2 <= 9) return std::to_string(r1) + std::to_string(r2);
    return "(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
}

FieldTable FieldTable::enumerate(Model m) {
    m.validate();
    FieldTable t;
    t.model_ = m;
    if (m.rank == 2) {
        for (int j = 0; j <= m.level; ++j) t.fields_.push_back(Field{m, {j, 0}});
    } else {
        for (int l1 = 0; l1 <= m.level; ++l1)
            for (int l2 = 0; l1 + l2 <= m.level; ++l2)
                t.fields_.push_back(Field{m, {l1, l2}});
    }
    t.grade_.reserve(t.fields_.size());
    t.conj_.reserve(t.fields_.size());
    t.sigma_.reserve(t.fields_.size());
    for (const Field& x : t.fields_) {
        t.grade_.push_back(grading(x));
        t.conj_.push_back(t.index_of(conjugate(x)));
        t.sigma_.push_back(t.index_of(sigma_act(x)));
    }
    return t;
}

std::size_t FieldTable::index_of(const Field& x) const {
    if (x.model != model_) throw error("field belongs to a different model");
    x.validate();
    if (model_.rank == 2) return static_cast<std::size_t>(x.labels[0]);
    // lexicographic position of (l1, l2) among pairs with l1 + l2 <= k
    const int k = model_.level, l1 = x.labels[0], l2 = x.labels[1];
    int before = 0;
    for (int a = 0; a < l1; ++a) before += k + 1 - a;
    return static_cast<std::size_t>(before + l2);
}

std::size_t FieldTable::sigma(std::size_t i, int power) const {
    const int n = model_.rank;
    int p = ((power % n) + n) % n;
    std::size_t j = i;
    for (int s = 0; s < p; ++s) j = sigma_[j];
    return j;
}

std::optional<std::size_t> FieldTable::fixed_point_index() const {
    if (model_.level % model_.rank != 0) return std::nullopt;
    return index_of(fixed_point(model_));
}

std::vector<std::size_t> FieldTable::grade_zero() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (grade_[i] == 0) out.push_back(i);
    return out;
}

}  // namespace asym
