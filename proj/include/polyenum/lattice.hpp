#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace polyenum {

enum class LatticeKind { Square, Triangular };

struct Cell {
    int x = 0, y = 0;
    auto operator<=>(const Cell&) const = default;
};

struct AnimalStats {
    int area = 0;
    int half_hp = 0;     // horizontal border unit edges / 2
    int half_vp = 0;     // vertical border unit edges / 2
    int width = 0;       // columns spanned
    int height = 0;      // rows spanned
    int right_height = 0;         // cells in the rightmost column
    int right_site_perimeter = 0; // empty sites with an occupied West neighbour
};

// The thirteen class-membership labels. Directedness means every cell is
// reachable from a single source cell by steps in the named quadrant
// (N/E for NE, etc.; the triangular lattice adds its (1,1) diagonal to
// the quadrants containing it).
enum class ClassLabel {
    ColumnConvex,
    RowConvex,
    Convex,
    DirectedNE,
    DirectedNW,
    DirectedSE,
    DirectedSW,
    Bargraph,   // column-convex + NE- and NW-directed
    Stack,      // row-convex bargraph
    Ferrers,    // convex + NE-, NW- and SE-directed
    Staircase,  // convex + NE- and SW-directed
    DPlusConvex,   // contiguous along every slope +1 diagonal
    DMinusConvex,  // contiguous along every slope -1 diagonal
};

std::string label_name(ClassLabel label);
ClassLabel label_from_string(const std::string& name);  // throws UnknownClass
std::vector<ClassLabel> all_labels();

// The cells adjacent to c: four square-lattice neighbours, plus the two
// (±1,±1) diagonal ones on the triangular lattice.
std::vector<Cell> lattice_neighbours(const Cell& c, LatticeKind kind);

// Edge-connected cell set, stored sorted and translated so that
// min x = min y = 0. Triangular-lattice animals additionally treat
// (+1,+1)/(-1,-1) as adjacent.
class Animal {
  public:
    static Animal from_cells(std::vector<Cell> cells, LatticeKind lattice = LatticeKind::Square);

    LatticeKind lattice() const { return lattice_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int area() const { return static_cast<int>(cells_.size()); }
    bool contains(const Cell& c) const;
    int max_x() const { return max_x_; }
    int max_y() const { return max_y_; }

    AnimalStats stats() const;
    bool has_label(ClassLabel label) const;
    std::set<ClassLabel> classify() const;

    Animal transposed() const;  // reflect across the main diagonal

    std::string render() const;   // '#' cells, '.' empty, top row first
    nlohmann::ordered_json to_json() const;

    bool operator==(const Animal& o) const = default;

  private:
    Animal() = default;
    LatticeKind lattice_ = LatticeKind::Square;
    std::vector<Cell> cells_;
    int max_x_ = 0, max_y_ = 0;
};

struct TriangularMarks {
    // Points with a SW-neighbour but neither W- nor S-neighbour, and
    // points with a S-neighbour but neither SW- nor W-neighbour.
    int count_sw_only = 0;
    int count_s_only = 0;
    bool operator==(const TriangularMarks&) const = default;
};

// Defined for triangular-lattice animals only (WrongLattice otherwise).
TriangularMarks triangular_marked_counts(const Animal& a);

}  // namespace polyenum
