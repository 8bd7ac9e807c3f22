#pragma once

#include <polyenum/lattice.hpp>
#include <polyenum/rational.hpp>
#include <polyenum/series.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace polyenum {

// Exhaustive count table keyed by small integer statistics (one axis per
// statistic). Entries hold only nonzero counts; within the stated bounds a
// missing key means zero. Deterministic: iteration, CSV and JSON are sorted.
class CoeffTable {
  public:
    CoeffTable(std::string label, std::vector<std::string> axes, std::vector<int> bounds);

    const std::string& label() const { return label_; }
    const std::vector<std::string>& axes() const { return axes_; }
    const std::vector<int>& bounds() const { return bounds_; }

    void add(const std::vector<int>& key, long long count = 1);
    long long at(const std::vector<int>& key) const;  // zero when absent
    const std::map<std::vector<int>, long long>& entries() const { return entries_; }
    long long total() const;

    // Sum over all axes except the kept ones (in the given order).
    CoeffTable project(const std::vector<std::size_t>& keep) const;
    // Distribution of one axis: value -> total count.
    std::map<int, long long> marginal(std::size_t axis) const;

    // Series with axis i mapped to vars[i]; keys outside `order` are dropped.
    MultiSeries to_series(const std::vector<Var>& vars, const TruncOrder& order) const;

    std::string to_csv() const;  // header "a,b,...,count", sorted rows
    nlohmann::ordered_json to_json() const;

  private:
    std::string label_;
    std::vector<std::string> axes_;
    std::vector<int> bounds_;
    std::map<std::vector<int>, long long> entries_;
};

// Visit one canonical representative of every translation class of animals
// with area <= max_area. Optional cap on bounding-box width+height (0 = none);
// width+height never exceeds half-perimeter, so the cap is safe for pruning
// perimeter-bounded enumerations.
void for_each_animal(int max_area, LatticeKind lattice,
                     const std::function<void(const Animal&)>& visit,
                     int max_box = 0);

// Count of translation classes by area, index 0 <-> area 1.
std::vector<long long> fixed_animal_counts(int max_area, LatticeKind lattice);

// True if some empty cell is fully enclosed by the animal (square lattice).
bool has_hole(const Animal& a);

// Table keyed (m, n, k) = (half horizontal perimeter, half vertical
// perimeter, area) of the animals carrying all the given labels.
// max_half_perimeter = 0 disables the perimeter bound. Classes contained in
// the column-convex family are enumerated column by column; the rest fall
// back to general cell growth.
CoeffTable enumerate_intersection(const std::set<ClassLabel>& labels, int max_area,
                                  int max_half_perimeter = 0);
CoeffTable enumerate_class(ClassLabel label, int max_area, int max_half_perimeter = 0);

// Self-avoiding polygons of height <= k, keyed (m, n), restricted to
// m + n <= max_half_perimeter. OffsetCounted weights each polygon by the
// number of vertical positions it can occupy in the k-strip (a height-h
// polygon fits k-h+1 ways); TranslationReduced counts each polygon once.
enum class StripConvention { OffsetCounted, TranslationReduced };
CoeffTable enumerate_sap_strip(int k, int max_half_perimeter,
                               StripConvention convention = StripConvention::OffsetCounted);

// NE-directed square animals keyed (k, r) = (area, right site perimeter).
CoeffTable enumerate_directed_rsp(int max_area);

// NE-directed triangular animals keyed (k, sw, s) = (area, points with only
// a SW neighbour, points with only a S neighbour).
CoeffTable enumerate_triangular_directed(int max_area);

}  // namespace polyenum
