#include "polyenum/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "polyenum/errors.hpp"

namespace polyenum {

namespace {

const std::map<ClassLabel, const char*> kLabelNames = {
    {ClassLabel::ColumnConvex, "column-convex"},
    {ClassLabel::RowConvex, "row-convex"},
    {ClassLabel::Convex, "convex"},
    {ClassLabel::DirectedNE, "NE-directed"},
    {ClassLabel::DirectedNW, "NW-directed"},
    {ClassLabel::DirectedSE, "SE-directed"},
    {ClassLabel::DirectedSW, "SW-directed"},
    {ClassLabel::Bargraph, "bargraph"},
    {ClassLabel::Stack, "stack"},
    {ClassLabel::Ferrers, "ferrers"},
    {ClassLabel::Staircase, "staircase"},
    {ClassLabel::DPlusConvex, "d+-convex"},
    {ClassLabel::DMinusConvex, "d--convex"},
};

}  // namespace

std::vector<Cell> lattice_neighbours(const Cell& c, LatticeKind kind) {
    std::vector<Cell> out = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    if (kind == LatticeKind::Triangular) {
        out.push_back({c.x + 1, c.y + 1});
        out.push_back({c.x - 1, c.y - 1});
    }
    return out;
}

std::string label_name(ClassLabel label) { return kLabelNames.at(label); }

ClassLabel label_from_string(const std::string& name) {
    for (const auto& [label, text] : kLabelNames)
        if (name == text) return label;
    throw UnknownClass("unknown class label '" + name + "'");
}

std::vector<ClassLabel> all_labels() {
    std::vector<ClassLabel> out;
    for (const auto& [label, text] : kLabelNames) out.push_back(label);
    return out;
}

Animal Animal::from_cells(std::vector<Cell> cells, LatticeKind lattice) {
    if (cells.empty()) throw std::invalid_argument("animal needs at least one cell");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    int minx = std::numeric_limits<int>::max(), miny = minx;
    for (const Cell& c : cells) {
        minx = std::min(minx, c.x);
        miny = std::min(miny, c.y);
    }
    for (Cell& c : cells) {
        c.x -= minx;
        c.y -= miny;
    }

    Animal a;
    a.lattice_ = lattice;
    a.cells_ = std::move(cells);
    for (const Cell& c : a.cells_) {
        a.max_x_ = std::max(a.max_x_, c.x);
        a.max_y_ = std::max(a.max_y_, c.y);
    }

    // connectivity check (flood fill over lattice adjacency)
    std::vector<char> seen(a.cells_.size(), 0);
    std::vector<std::size_t> todo = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
        std::size_t i = todo.back();
        todo.pop_back();
        for (const Cell& n : lattice_neighbours(a.cells_[i], lattice)) {
            auto it = std::lower_bound(a.cells_.begin(), a.cells_.end(), n);
            if (it == a.cells_.end() || *it != n) continue;
            std::size_t j = static_cast<std::size_t>(it - a.cells_.begin());
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                todo.push_back(j);
            }
        }
    }
    if (reached != a.cells_.size()) throw std::invalid_argument("animal cells are not connected");
    return a;
}

bool Animal::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

AnimalStats Animal::stats() const {
    AnimalStats s;
    s.area = area();
    s.width = max_x_ + 1;
    s.height = max_y_ + 1;
    int hedges = 0, vedges = 0;
    for (const Cell& c : cells_) {
        if (!contains({c.x, c.y - 1})) ++hedges;
        if (!contains({c.x, c.y + 1})) ++hedges;
        if (!contains({c.x - 1, c.y})) ++vedges;
        if (!contains({c.x + 1, c.y})) ++vedges;
        if (c.x == max_x_) ++s.right_height;
        if (!contains({c.x + 1, c.y})) ++s.right_site_perimeter;
    }
    s.half_hp = hedges / 2;
    s.half_vp = vedges / 2;
    return s;
}

namespace {

bool runs_contiguous(const std::vector<Cell>& cells, auto key, auto pos) {
    // Cells grouped by key(c) must have consecutive pos(c) values.
    std::map<int, std::vector<int>> groups;
    for (const Cell& c : cells) groups[key(c)].push_back(pos(c));
    for (auto& [k, v] : groups) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        if (*hi - *lo + 1 != static_cast<int>(v.size())) return false;
    }
    return true;
}

// Directedness: a source cell from which the whole animal is reachable by
// steps inside the (sx, sy) quadrant. Such a source must sit at the
// extreme corner; if that corner cell is absent we still search every
// cell, which simply confirms failure.
bool directed(const Animal& a, int sx, int sy) {
    std::vector<Cell> steps;
    for (const Cell& n : lattice_neighbours({0, 0}, a.lattice())) {
        if (n.x * sx >= 0 && n.y * sy >= 0) steps.push_back(n);
    }
    auto floods_all = [&](const Cell& source) {
        std::vector<Cell> todo = {source};
        std::set<Cell> seen = {source};
        while (!todo.empty()) {
            Cell c = todo.back();
            todo.pop_back();
            for (const Cell& d : steps) {
                Cell n{c.x + d.x, c.y + d.y};
                if (a.contains(n) && seen.insert(n).second) todo.push_back(n);
            }
        }
        return static_cast<int>(seen.size()) == a.area();
    };
    Cell corner{sx > 0 ? 0 : a.max_x(), sy > 0 ? 0 : a.max_y()};
    if (a.contains(corner)) return floods_all(corner);
    for (const Cell& c : a.cells())
        if (floods_all(c)) return true;
    return false;
}

}  // namespace

bool Animal::has_label(ClassLabel label) const {
    switch (label) {
        case ClassLabel::ColumnConvex:
            return runs_contiguous(cells_, [](const Cell& c) { return c.x; },
                                   [](const Cell& c) { return c.y; });
        case ClassLabel::RowConvex:
            return runs_contiguous(cells_, [](const Cell& c) { return c.y; },
                                   [](const Cell& c) { return c.x; });
        case ClassLabel::Convex:
            return has_label(ClassLabel::ColumnConvex) && has_label(ClassLabel::RowConvex);
        case ClassLabel::DirectedNE: return directed(*this, 1, 1);
        case ClassLabel::DirectedNW: return directed(*this, -1, 1);
        case ClassLabel::DirectedSE: return directed(*this, 1, -1);
        case ClassLabel::DirectedSW: return directed(*this, -1, -1);
        case ClassLabel::Bargraph:
            return has_label(ClassLabel::ColumnConvex) && has_label(ClassLabel::DirectedNE) &&
                   has_label(ClassLabel::DirectedNW);
        case ClassLabel::Stack:
            return has_label(ClassLabel::Bargraph) && has_label(ClassLabel::RowConvex);
        case ClassLabel::Ferrers:
            return has_label(ClassLabel::Convex) && has_label(ClassLabel::DirectedNE) &&
                   has_label(ClassLabel::DirectedNW) && has_label(ClassLabel::DirectedSE);
        case ClassLabel::Staircase:
            return has_label(ClassLabel::Convex) && has_label(ClassLabel::DirectedNE) &&
                   has_label(ClassLabel::DirectedSW);
        case ClassLabel::DPlusConvex:
            return runs_contiguous(cells_, [](const Cell& c) { return c.y - c.x; },
                                   [](const Cell& c) { return c.x; });
        case ClassLabel::DMinusConvex:
            return runs_contiguous(cells_, [](const Cell& c) { return c.y + c.x; },
                                   [](const Cell& c) { return c.x; });
    }
    return false;
}

std::set<ClassLabel> Animal::classify() const {
    std::set<ClassLabel> out;
    for (ClassLabel label : all_labels())
        if (has_label(label)) out.insert(label);
    return out;
}

Animal Animal::transposed() const {
    std::vector<Cell> t;
    t.reserve(cells_.size());
    for (const Cell& c : cells_) t.push_back({c.y, c.x});
    return from_cells(std::move(t), lattice_);
}

std::string Animal::render() const {
    std::ostringstream out;
    for (int y = max_y_; y >= 0; --y) {
        for (int x = 0; x <= max_x_; ++x) out << (contains({x, y}) ? '#' : '.');
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json Animal::to_json() const {
    nlohmann::ordered_json j;
    j["lattice"] = lattice_ == LatticeKind::Square ? "square" : "triangular";
    j["cells"] = nlohmann::json::array();
    for (const Cell& c : cells_) j["cells"].push_back({c.x, c.y});
    return j;
}

TriangularMarks triangular_marked_counts(const Animal& a) {
    if (a.lattice() != LatticeKind::Triangular)
        throw WrongLattice("marked-point statistics are defined on the triangular lattice");
    TriangularMarks m;
    for (const Cell& c : a.cells()) {
        bool w = a.contains({c.x - 1, c.y});
        bool s = a.contains({c.x, c.y - 1});
        bool sw = a.contains({c.x - 1, c.y - 1});
        if (sw && !w && !s) ++m.count_sw_only;
        if (s && !sw && !w) ++m.count_s_only;
    }
    return m;
}

}  // namespace polyenum
