#include <polyenum/errors.hpp>
#include <polyenum/oracle.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace polyenum {

namespace {

// Classes whose members are necessarily column-convex; for these the
// column-by-column enumerator is exhaustive.
bool implies_column_convex(ClassLabel l) {
    switch (l) {
        case ClassLabel::ColumnConvex:
        case ClassLabel::Convex:
        case ClassLabel::Bargraph:
        case ClassLabel::Stack:
        case ClassLabel::Ferrers:
        case ClassLabel::Staircase:
            return true;
        default:
            return false;
    }
}

// Cell-growth enumeration: every translation class is produced exactly once,
// as the set of cells reachable while keeping the origin the (y,x)-smallest
// cell. A cell popped from the untried list stays excluded for the rest of
// that recursion level, which is what prevents duplicates.
struct CellGrowth {
    int max_area = 0;
    int max_box = 0;  // cap on bounding-box width+height, 0 = none
    LatticeKind lat = LatticeKind::Square;
    const std::function<void(const std::vector<Cell>&)>* emit = nullptr;

    std::vector<Cell> animal;
    std::set<Cell> seen;

    static bool in_half_plane(const Cell& c) {
        return c.y > 0 || (c.y == 0 && c.x >= 0);
    }

    bool box_ok() const {
        if (max_box == 0) return true;
        int xmin = animal[0].x, xmax = animal[0].x, ymin = animal[0].y, ymax = animal[0].y;
        for (const Cell& c : animal) {
            xmin = std::min(xmin, c.x);
            xmax = std::max(xmax, c.x);
            ymin = std::min(ymin, c.y);
            ymax = std::max(ymax, c.y);
        }
        return (xmax - xmin + 1) + (ymax - ymin + 1) <= max_box;
    }

    void extend(std::vector<Cell> untried) {
        while (!untried.empty()) {
            Cell p = untried.back();
            untried.pop_back();
            animal.push_back(p);
            if (box_ok()) {
                (*emit)(animal);
                if (static_cast<int>(animal.size()) < max_area) {
                    std::vector<Cell> next = untried;
                    std::vector<Cell> added;
                    for (const Cell& nb : lattice_neighbours(p, lat))
                        if (in_half_plane(nb) && seen.insert(nb).second) {
                            next.push_back(nb);
                            added.push_back(nb);
                        }
                    extend(std::move(next));
                    for (const Cell& nb : added) seen.erase(nb);
                }
            }
            animal.pop_back();
        }
    }

    void run() {
        seen.insert({0, 0});
        extend({{0, 0}});
        seen.clear();
    }
};

void grow_cells(int max_area, LatticeKind lat, int max_box,
                const std::function<void(const std::vector<Cell>&)>& emit) {
    if (max_area < 1) throw std::invalid_argument("enumeration needs max_area >= 1");
    CellGrowth g;
    g.max_area = max_area;
    g.max_box = max_box;
    g.lat = lat;
    g.emit = &emit;
    g.run();
}

// Column-convex animals as sequences of column intervals (bottom, height),
// first bottom fixed at 0 to pick one translate per class. The value
// w + (h_1 + sum of |top/bottom jumps| + h_w)/2 is the exact half-perimeter
// of the animal if it stopped at column w, and it grows by at least 1 per
// added column, so it prunes a half-perimeter budget.
struct ColumnGrowth {
    int max_area = 0;
    int max_hp = 0;  // 0 = none
    const std::function<void(const std::vector<Cell>&)>* emit = nullptr;

    std::vector<Cell> cells;

    void recurse(int area, int vclimb, int bottom, int height) {
        (*emit)(cells);
        int w = cells.empty() ? 0 : cells.back().x + 1;
        for (int h = 1; area + h <= max_area; ++h) {
            for (int b = bottom - h + 1; b <= bottom + height - 1; ++b) {
                int jump = std::abs(b - bottom) + std::abs((b + h) - (bottom + height));
                if (max_hp != 0 && 2 * (w + 1) + vclimb + jump + h > 2 * max_hp) continue;
                for (int y = b; y < b + h; ++y) cells.push_back({w, y});
                recurse(area + h, vclimb + jump, b, h);
                cells.resize(cells.size() - h);
            }
        }
    }

    void run() {
        for (int h = 1; h <= max_area; ++h) {
            if (max_hp != 0 && 2 + 2 * h > 2 * max_hp) break;
            for (int y = 0; y < h; ++y) cells.push_back({0, y});
            recurse(h, h, 0, h);
            cells.clear();
        }
    }
};

void grow_columns(int max_area, int max_hp,
                  const std::function<void(const std::vector<Cell>&)>& emit) {
    if (max_area < 1) throw std::invalid_argument("enumeration needs max_area >= 1");
    ColumnGrowth g;
    g.max_area = max_area;
    g.max_hp = max_hp;
    g.emit = &emit;
    g.run();
}

}  // namespace

CoeffTable::CoeffTable(std::string label, std::vector<std::string> axes, std::vector<int> bounds)
    : label_(std::move(label)), axes_(std::move(axes)), bounds_(std::move(bounds)) {}

void CoeffTable::add(const std::vector<int>& key, long long count) {
    if (key.size() != axes_.size())
        throw std::invalid_argument("key arity does not match table axes");
    if (count != 0) entries_[key] += count;
}

long long CoeffTable::at(const std::vector<int>& key) const {
    if (key.size() != axes_.size())
        throw std::invalid_argument("key arity does not match table axes");
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
}

long long CoeffTable::total() const {
    long long t = 0;
    for (const auto& [k, c] : entries_) t += c;
    return t;
}

CoeffTable CoeffTable::project(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> axes;
    std::vector<int> bounds;
    for (std::size_t i : keep) {
        axes.push_back(axes_.at(i));
        if (i < bounds_.size()) bounds.push_back(bounds_[i]);
    }
    CoeffTable out(label_, axes, bounds);
    for (const auto& [key, count] : entries_) {
        std::vector<int> sub;
        for (std::size_t i : keep) sub.push_back(key[i]);
        out.add(sub, count);
    }
    return out;
}

std::map<int, long long> CoeffTable::marginal(std::size_t axis) const {
    if (axis >= axes_.size()) throw std::invalid_argument("no such axis");
    std::map<int, long long> out;
    for (const auto& [key, count] : entries_) out[key[axis]] += count;
    return out;
}

MultiSeries CoeffTable::to_series(const std::vector<Var>& vars, const TruncOrder& order) const {
    if (vars.size() != axes_.size())
        throw std::invalid_argument("need one variable per table axis");
    MultiSeries s = MultiSeries::zero(order);
    for (const auto& [key, count] : entries_) {
        Expo e{};
        for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] += key[i];
        s.add_term(e, rat(static_cast<long>(count)));
    }
    return s;
}

std::string CoeffTable::to_csv() const {
    std::ostringstream out;
    for (const std::string& a : axes_) out << a << ',';
    out << "count\n";
    for (const auto& [key, count] : entries_) {
        for (int k : key) out << k << ',';
        out << count << '\n';
    }
    return out.str();
}

nlohmann::ordered_json CoeffTable::to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label_;
    j["axes"] = axes_;
    j["bounds"] = bounds_;
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, count] : entries_)
        j["entries"].push_back({{"key", key}, {"count", count}});
    return j;
}

void for_each_animal(int max_area, LatticeKind lattice,
                     const std::function<void(const Animal&)>& visit, int max_box) {
    grow_cells(max_area, lattice, max_box, [&](const std::vector<Cell>& cells) {
        visit(Animal::from_cells(cells, lattice));
    });
}

std::vector<long long> fixed_animal_counts(int max_area, LatticeKind lattice) {
    std::vector<long long> counts(max_area, 0);
    grow_cells(max_area, lattice, 0,
               [&](const std::vector<Cell>& cells) { ++counts[cells.size() - 1]; });
    return counts;
}

bool has_hole(const Animal& a) {
    if (a.lattice() != LatticeKind::Square)
        throw WrongLattice("hole detection is defined on the square lattice");
    // Flood the complement from outside a one-cell margin around the box.
    int xmax = a.max_x(), ymax = a.max_y();
    std::set<Cell> outside;
    std::vector<Cell> stack = {{-1, -1}};
    outside.insert({-1, -1});
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (const Cell& n : lattice_neighbours(c, LatticeKind::Square)) {
            if (n.x < -1 || n.x > xmax + 1 || n.y < -1 || n.y > ymax + 1) continue;
            if (a.contains(n) || !outside.insert(n).second) continue;
            stack.push_back(n);
        }
    }
    long long box = static_cast<long long>(xmax + 3) * (ymax + 3);
    return box - a.area() - static_cast<long long>(outside.size()) > 0;
}

CoeffTable enumerate_intersection(const std::set<ClassLabel>& labels, int max_area,
                                  int max_half_perimeter) {
    if (labels.empty()) throw std::invalid_argument("need at least one class label");
    std::string name;
    for (ClassLabel l : labels) name += (name.empty() ? "" : "+") + label_name(l);
    CoeffTable table(name, {"m", "n", "k"}, {max_area, max_half_perimeter});

    bool column_path = std::any_of(labels.begin(), labels.end(), implies_column_convex);
    auto tally = [&](const std::vector<Cell>& cells) {
        Animal a = Animal::from_cells(cells, LatticeKind::Square);
        for (ClassLabel l : labels)
            if (!a.has_label(l)) return;
        AnimalStats s = a.stats();
        if (max_half_perimeter != 0 && s.half_hp + s.half_vp > max_half_perimeter) return;
        table.add({s.half_hp, s.half_vp, s.area});
    };
    if (column_path)
        grow_columns(max_area, max_half_perimeter, tally);
    else
        grow_cells(max_area, LatticeKind::Square, max_half_perimeter, tally);
    return table;
}

CoeffTable enumerate_class(ClassLabel label, int max_area, int max_half_perimeter) {
    return enumerate_intersection({label}, max_area, max_half_perimeter);
}

namespace {

// Closed self-avoiding walks on strip vertices, canonicalized so that the
// (y,x)-smallest vertex is the origin and the first step goes East. Each
// polygon of height <= k arises from exactly one such walk.
struct SapWalk {
    int k = 0;
    int max_steps = 0;
    bool offsets = false;
    CoeffTable* table = nullptr;

    std::set<Cell> visited;  // origin stays out so the walk can close there
    int east = 0, north = 0, steps = 0, maxy = 0;

    bool vertex_ok(const Cell& v) const {
        return v.y >= 0 && v.y <= k && !(v.y == 0 && v.x < 0);
    }

    void dfs(const Cell& v) {
        if (v.x == 0 && v.y == 0) {
            if (steps >= 4)
                table->add({east, north}, offsets ? k - maxy + 1 : 1);
            return;
        }
        if (steps + std::abs(v.x) + v.y > max_steps) return;
        if (!visited.insert(v).second) return;
        static const Cell kDirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const Cell& d : kDirs) {
            Cell w{v.x + d.x, v.y + d.y};
            if (!vertex_ok(w)) continue;
            ++steps;
            east += d.x == 1;
            north += d.y == 1;
            int save_maxy = maxy;
            maxy = std::max(maxy, w.y);
            dfs(w);
            maxy = save_maxy;
            north -= d.y == 1;
            east -= d.x == 1;
            --steps;
        }
        visited.erase(v);
    }
};

}  // namespace

CoeffTable enumerate_sap_strip(int k, int max_half_perimeter, StripConvention convention) {
    if (k < 1) throw std::invalid_argument("strip height must be at least 1");
    if (max_half_perimeter < 2)
        throw std::invalid_argument("polygons need half-perimeter at least 2");
    bool offsets = convention == StripConvention::OffsetCounted;
    CoeffTable table(std::string("sap-strip-") + std::to_string(k) +
                         (offsets ? "/offsets" : "/reduced"),
                     {"m", "n"}, {k, max_half_perimeter});
    SapWalk w;
    w.k = k;
    w.max_steps = 2 * max_half_perimeter;
    w.offsets = offsets;
    w.table = &table;
    w.steps = 1;
    w.east = 1;
    w.dfs({1, 0});
    return table;
}

CoeffTable enumerate_directed_rsp(int max_area) {
    CoeffTable table("NE-directed by right site perimeter", {"k", "r"}, {max_area});
    for_each_animal(max_area, LatticeKind::Square, [&](const Animal& a) {
        if (!a.has_label(ClassLabel::DirectedNE)) return;
        AnimalStats s = a.stats();
        table.add({s.area, s.right_site_perimeter});
    });
    return table;
}

CoeffTable enumerate_triangular_directed(int max_area) {
    CoeffTable table("triangular NE-directed marked points", {"k", "sw", "s"}, {max_area});
    for_each_animal(max_area, LatticeKind::Triangular, [&](const Animal& a) {
        if (!a.has_label(ClassLabel::DirectedNE)) return;
        TriangularMarks m = triangular_marked_counts(a);
        table.add({a.area(), m.count_sw_only, m.count_s_only});
    });
    return table;
}

}  // namespace polyenum
