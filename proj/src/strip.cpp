#include "polyenum/strip.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "polyenum/errors.hpp"

namespace polyenum {

bool CutState::operator<(const CutState& o) const {
    if (rows != o.rows) return rows < o.rows;
    return arc < o.arc;
}

std::string CutState::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<std::size_t>(arc[i]) < i) continue;
        if (s.size() > 1) s += ',';
        s += std::to_string(rows[i]) + "-" + std::to_string(rows[arc[i]]);
    }
    return s + "}";
}

namespace {

using Arcs = std::vector<std::pair<int, int>>;  // (low, high) row pairs

// Non-crossing arc families on rows lo..hi-1, by the fate of row lo:
// skipped, or matched to t with the strictly-inside and after parts
// independent. Each family is produced exactly once.
std::vector<Arcs> arc_families(int lo, int hi) {
    if (lo >= hi) return {Arcs{}};
    std::vector<Arcs> out = arc_families(lo + 1, hi);
    for (int t = lo + 1; t < hi; ++t)
        for (const Arcs& inside : arc_families(lo + 1, t))
            for (const Arcs& after : arc_families(t + 1, hi)) {
                Arcs f{{lo, t}};
                f.insert(f.end(), inside.begin(), inside.end());
                f.insert(f.end(), after.begin(), after.end());
                out.push_back(std::move(f));
            }
    return out;
}

CutState state_from_arcs(const Arcs& arcs) {
    CutState s;
    for (const auto& [a, b] : arcs) {
        s.rows.push_back(a);
        s.rows.push_back(b);
    }
    std::sort(s.rows.begin(), s.rows.end());
    s.arc.assign(s.rows.size(), -1);
    auto index_of = [&s](int row) {
        return static_cast<int>(std::lower_bound(s.rows.begin(), s.rows.end(), row) -
                                s.rows.begin());
    };
    for (const auto& [a, b] : arcs) {
        int ia = index_of(a), ib = index_of(b);
        s.arc[ia] = ib;
        s.arc[ib] = ia;
    }
    return s;
}

}  // namespace

std::vector<CutState> build_states(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("cut states: height must be in 1..8");
    std::vector<CutState> states;
    for (const Arcs& f : arc_families(0, k + 1))
        if (!f.empty()) states.push_back(state_from_arcs(f));
    std::sort(states.begin(), states.end());
    return states;
}

namespace {

// One column between two cuts. Rows carrying a left stub are occ1 (with
// left-pairing partner[]), the chosen vertical unit edges are the bits of
// `mask` (bit r = edge between rows r and r+1). Everything else follows
// from the degree-0-or-2 condition: the right-stub set is forced, vertical
// runs pair up the stub rows, and tracing through the left arcs yields the
// new pairing or detects a closed cycle.
struct ColumnResult {
    bool valid = false;
    std::vector<int> occ2;
    Arcs arcs2;     // pairing of occ2
    int cycles = 0; // closed loops formed (polygons finished inside the column)
    int vert = 0;   // vertical unit edges
};

ColumnResult trace_column(int k, const std::vector<int>& occ1,
                          const std::vector<int>& partner, unsigned mask) {
    ColumnResult res;
    std::vector<int> v(k + 2, 0), left(k + 1, 0);
    for (int r = 0; r < k; ++r)
        if (mask >> r & 1u) {
            ++v[r];
            ++v[r + 1];
            ++res.vert;
        }
    for (int r : occ1) left[r] = 1;
    std::vector<int> rght(k + 1, 0);
    for (int r = 0; r <= k; ++r) {
        int deg = left[r] + v[r];
        if (deg > 2) return res;
        if (deg == 1) rght[r] = 1;
    }

    // column connections per stub: pass-throughs link the two stubs of a
    // row, maximal vertical runs link the stubs at their endpoints
    struct End {
        int row = -1;
        bool is_left = false;
    };
    std::vector<End> via_left(k + 1), via_right(k + 1);
    for (int r = 0; r <= k; ++r)
        if (left[r] && rght[r]) {
            via_left[r] = {r, false};
            via_right[r] = {r, true};
        }
    for (int r = 0; r <= k;) {
        if (!(r < k && (mask >> r & 1u))) {
            ++r;
            continue;
        }
        int j = r;
        while (j < k && (mask >> j & 1u)) ++j;  // run spans rows r..j
        End lo{r, left[r] == 1}, hi{j, left[j] == 1};
        (lo.is_left ? via_left : via_right)[r] = hi;
        (hi.is_left ? via_left : via_right)[j] = lo;
        r = j + 1;
    }

    // follow right-stub paths to their partner right stub
    std::vector<char> seen_l(k + 1, 0), seen_r(k + 1, 0);
    for (int r = 0; r <= k; ++r) {
        if (!rght[r] || seen_r[r]) continue;
        seen_r[r] = 1;
        End cur = via_right[r];
        while (cur.is_left) {
            seen_l[cur.row] = 1;
            int p = partner[cur.row];
            seen_l[p] = 1;
            cur = via_left[p];
        }
        seen_r[cur.row] = 1;
        res.arcs2.emplace_back(std::min(r, cur.row), std::max(r, cur.row));
    }
    // untouched left stubs sit on closed cycles
    for (int r = 0; r <= k; ++r) {
        if (!left[r] || seen_l[r]) continue;
        ++res.cycles;
        int cur = r;
        do {
            seen_l[cur] = 1;
            int p = partner[cur];
            seen_l[p] = 1;
            cur = via_left[p].row;
        } while (cur != r);
    }

    for (int r = 0; r <= k; ++r)
        if (rght[r]) res.occ2.push_back(r);
    res.valid = true;
    return res;
}

}  // namespace

TransferGraph build_transfer(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("transfer graph: height must be in 1..6");
    TransferGraph g;
    g.k = k;
    g.states = build_states(k);
    const int n = static_cast<int>(g.states.size());
    g.start.assign(n, Poly2{});
    g.finish.assign(n, Poly2{});
    g.step.assign(n, std::vector<Poly2>(n, Poly2{}));
    std::map<CutState, int> index;
    for (int i = 0; i < n; ++i) index[g.states[i]] = i;

    std::vector<int> no_rows, no_partner(k + 1, -1);
    for (int from = -1; from < n; ++from) {
        std::vector<int> occ1 = no_rows, partner = no_partner;
        if (from >= 0) {
            const CutState& s = g.states[from];
            occ1 = s.rows;
            for (std::size_t i = 0; i < s.rows.size(); ++i)
                partner[s.rows[i]] = s.rows[s.arc[i]];
        }
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            ColumnResult col = trace_column(k, occ1, partner, mask);
            if (!col.valid) continue;
            if (col.occ2.empty()) {
                // closing column: admissible only when the whole polygon
                // fuses into one cycle
                if (from >= 0 && col.cycles == 1)
                    g.finish[from].add_term(0, col.vert, 1);
                continue;
            }
            if (col.cycles > 0) continue;  // a loop closed with edges left over
            int to = index.at(state_from_arcs(col.arcs2));
            Poly2 w = Poly2::monomial(static_cast<int>(col.occ2.size()) / 2, col.vert);
            if (from < 0)
                g.start[to] = g.start[to] + w;
            else
                g.step[from][to] = g.step[from][to] + w;
        }
    }
    return g;
}

namespace {

CutState reflect_state(const CutState& s, int k) {
    Arcs arcs;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (static_cast<std::size_t>(s.arc[i]) < i) continue;
        int a = k - s.rows[s.arc[i]], b = k - s.rows[i];
        arcs.emplace_back(a, b);
    }
    return state_from_arcs(arcs);
}

}  // namespace

TransferGraph build_transfer_merged(int k) {
    TransferGraph raw = build_transfer(k);
    const int n = static_cast<int>(raw.states.size());

    std::map<CutState, int> raw_index;
    for (int i = 0; i < n; ++i) raw_index[raw.states[i]] = i;
    std::vector<int> rep(n);  // raw index of each state's orbit representative
    std::vector<CutState> reps;
    for (int i = 0; i < n; ++i) {
        CutState r = std::min(raw.states[i], reflect_state(raw.states[i], k));
        rep[i] = raw_index.at(r);
        if (rep[i] == i) reps.push_back(raw.states[i]);
    }

    TransferGraph g;
    g.k = k;
    g.states = reps;  // already sorted: subsequence of the sorted raw list
    const int m = static_cast<int>(reps.size());
    std::map<CutState, int> orbit_index;
    for (int i = 0; i < m; ++i) orbit_index[reps[i]] = i;
    auto orbit_of = [&](int raw_i) { return orbit_index.at(raw.states[rep[raw_i]]); };

    g.start.assign(m, Poly2{});
    g.finish.assign(m, Poly2{});
    g.step.assign(m, std::vector<Poly2>(m, Poly2{}));
    // The series attached to an orbit is the sum over its members, so a
    // merged arrow collects, from one representative source, the raw
    // arrows into every member of the target orbit; reflection symmetry
    // makes the choice of source member irrelevant.
    for (int i = 0; i < n; ++i) g.start[orbit_of(i)] = g.start[orbit_of(i)] + raw.start[i];
    for (int j = 0; j < m; ++j) {
        int src = raw_index.at(reps[j]);
        g.finish[j] = raw.finish[src];
        for (int i = 0; i < n; ++i)
            g.step[j][orbit_of(i)] = g.step[j][orbit_of(i)] + raw.step[src][i];
    }
    return g;
}

namespace {

// var B evaluated at a number, leaving a dense polynomial in var A
PolyU eval_b(const Poly2& p, const Rational& z) {
    PolyU out;
    for (const auto& [e, c] : p.terms()) {
        Rational v = c;
        for (int i = 0; i < e[1]; ++i) v = v * z;
        if (static_cast<int>(out.size()) <= e[0]) out.resize(e[0] + 1, Rational(0));
        out[e[0]] = out[e[0]] + v;
    }
    return pu_trim(std::move(out));
}

// fraction-free determinant (Bareiss) of a univariate-polynomial matrix
PolyU pu_det(std::vector<std::vector<PolyU>> M) {
    const int n = static_cast<int>(M.size());
    PolyU prev{Rational(1)};
    int sign = 1;
    for (int c = 0; c + 1 < n; ++c) {
        int piv = -1;
        for (int r = c; r < n && piv < 0; ++r)
            if (pu_deg(M[r][c]) >= 0) piv = r;
        if (piv < 0) return {};
        if (piv != c) {
            std::swap(M[piv], M[c]);
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j)
                M[r][j] = pu_divexact(pu_sub(pu_mul(M[r][j], M[c][c]), pu_mul(M[r][c], M[c][j])),
                                      prev);
            M[r][c] = {};
        }
        prev = M[c][c];
    }
    return sign < 0 ? pu_scale(M[n - 1][n - 1], -1) : M[n - 1][n - 1];
}

// Determinant of a bivariate-polynomial matrix: sample var B at enough
// integers to pin the answer down (row-wise degree sums bound its B
// degree), take univariate determinants, and rebuild the B dependence of
// each A coefficient by Newton interpolation.
Poly2 p2_det(const std::vector<std::vector<Poly2>>& M) {
    const int n = static_cast<int>(M.size());
    int bound = 0;
    for (int r = 0; r < n; ++r) {
        int mx = 0;
        for (int c = 0; c < n; ++c) mx = std::max(mx, M[r][c].deg(1));
        bound += mx;
    }

    std::vector<Rational> nodes;
    std::vector<PolyU> vals;
    int xmax = -1;
    for (int j = 0; j <= bound; ++j) {
        nodes.push_back(rat(j));
        std::vector<std::vector<PolyU>> A(n, std::vector<PolyU>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) A[r][c] = eval_b(M[r][c], nodes.back());
        vals.push_back(pu_det(std::move(A)));
        xmax = std::max(xmax, pu_deg(vals.back()));
    }

    Poly2 out;
    const int m = bound;
    for (int d = 0; d <= xmax; ++d) {
        std::vector<Rational> f(m + 1);
        for (int j = 0; j <= m; ++j)
            f[j] = pu_deg(vals[j]) >= d ? vals[j][d] : Rational(0);
        for (int lvl = 1; lvl <= m; ++lvl)
            for (int i = m; i >= lvl; --i)
                f[i] = (f[i] - f[i - 1]) / (nodes[i] - nodes[i - lvl]);
        PolyU acc{f[m]};
        for (int i = m - 1; i >= 0; --i) {
            acc = pu_mul(acc, PolyU{-nodes[i], Rational(1)});
            acc = pu_add(acc, PolyU{f[i]});
        }
        for (int e = 0; e <= pu_deg(acc); ++e)
            if (acc[e] != 0) out.add_term(d, e, acc[e]);
    }
    return out;
}

Poly2 conj_b(const Poly2& p) {
    Poly2 out;
    for (const auto& [e, c] : p.terms()) out.add_term(e[0], e[1], e[1] % 2 ? -c : c);
    return out;
}

bool even_in_b(const Poly2& p) {
    for (const auto& [e, c] : p.terms())
        if (e[1] % 2) return false;
    return true;
}

}  // namespace

RatFun solve_transfer(const TransferGraph& g) {
    // The walk sum is start (I - T)^{-1} finish, so numerator and
    // denominator are two plain determinants: det(I - T), and the same
    // matrix bordered by the finish column and the negated start row.
    // Interpolated determinants sidestep Gaussian elimination over
    // Q(x, z), whose intermediate entries grow far past either answer.
    const int n = static_cast<int>(g.states.size());
    std::vector<std::vector<Poly2>> M(n, std::vector<Poly2>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[i][j] = i == j ? Poly2::constant(1) - g.step[i][j] : -g.step[i][j];
    Poly2 den = p2_det(M);

    std::vector<std::vector<Poly2>> B(n + 1, std::vector<Poly2>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) B[i][j] = M[i][j];
        B[i][n] = g.finish[i];
        B[n][i] = -g.start[i];
    }
    Poly2 num = p2_det(B);

    // z^2 = y; the polygon weight is even in z, so when the determinants
    // are not, the odd parts cancel against the denominator's conjugate
    if (!even_in_b(num) || !even_in_b(den)) {
        Poly2 c = conj_b(den);
        num = num * c;
        den = den * c;
    }
    return RatFun::from(p2_subst_b_squared(num), p2_subst_b_squared(den));
}

RatFun solve_strip(int k) { return solve_transfer(build_transfer_merged(k)); }

PolyU strip_iso_denominator(int k) {
    RatFun s = solve_strip(k);
    PolyU num = p2_collapse_iso(s.num);
    PolyU den = p2_collapse_iso(s.den);
    PolyU g = pu_gcd(num, den);
    if (pu_deg(g) > 0) den = pu_divexact(den, g);
    for (const Rational& c : den)
        if (c != 0) return pu_scale(den, 1 / c);  // lowest-order coefficient -> 1
    return den;
}

std::pair<Rational, Rational> strip_pole_enclosure(int k, const Rational& width) {
    return pu_smallest_root_unit(strip_iso_denominator(k), width);
}

std::string growth_lower_bound(int k, int digits) {
    PolyU den = strip_iso_denominator(k);
    Rational width = rat(1, 100);
    for (int round = 0; round < 64; ++round) {
        auto [lo, hi] = pu_smallest_root_unit(den, width);
        std::string out = inverse_sqrt_decimal(lo, hi, digits);
        if (!out.empty()) return out;
        width = width / 1000;  // enclosure straddled a rounding boundary
    }
    throw std::logic_error("growth bound: enclosure failed to settle");
}

}  // namespace polyenum
