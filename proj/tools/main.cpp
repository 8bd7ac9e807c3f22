#include <CLI11.hpp>
#include <json.hpp>

#include <polyenum/closedform.hpp>
#include <polyenum/errors.hpp>
#include <polyenum/lattice.hpp>
#include <polyenum/oracle.hpp>
#include <polyenum/polynomial.hpp>
#include <polyenum/series.hpp>
#include <polyenum/strip.hpp>
#include <polyenum/verify.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace polyenum;
using nlohmann::ordered_json;

namespace {

// Everything a subcommand needs. The parser validates the bounds positive;
// identifiers are checked against the catalogs before any computation.
struct RunConfig {
    std::string id;  // formula or class identifier
    int max_x = 6, max_y = 6, max_q = 12;
    bool iso = false;
    int max_t = 6;
    int max_area = 10;
    int max_hp = 0;
    bool by_area = false;
    int height = 1;
    bool growth = false;
    int digits = 2;
    std::string format = "text";
    std::string output;  // empty = stdout
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + cfg.output + "'");
    out << text;
}

// ---- series --------------------------------------------------------------

std::string series_csv(const MultiSeries& a) {
    std::ostringstream os;
    os << "x,y,q,s,coeff\n";
    for (const auto& [e, c] : a.terms())
        os << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ',' << rat_to_string(c)
           << '\n';
    return os.str();
}

int cmd_series(const RunConfig& cfg) {
    std::vector<std::string> ids = formula_ids();
    if (std::find(ids.begin(), ids.end(), cfg.id) == ids.end()) {
        std::cerr << "error: unknown formula '" << cfg.id << "'; the catalog:\n";
        for (const std::string& id : ids) std::cerr << "  " << id << '\n';
        return 1;
    }
    TruncOrder o = cfg.iso ? TruncOrder{cfg.max_t, cfg.max_t, cfg.max_q, 0}
                           : TruncOrder{cfg.max_x, cfg.max_y, cfg.max_q, 0};
    MultiSeries s = evaluate(cfg.id, o);
    if (cfg.iso) s = substitute_xy_t(s);  // t lives in the x slot
    if (cfg.format == "json")
        emit(cfg, s.to_json() + "\n");
    else if (cfg.format == "csv")
        emit(cfg, series_csv(s));
    else
        emit(cfg, s.to_string() + "\n");
    return 0;
}

// ---- count ---------------------------------------------------------------

std::string table_text(const CoeffTable& t) {
    std::vector<std::string> head = t.axes();
    head.push_back("count");
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, cnt] : t.entries()) {
        std::vector<std::string> row;
        for (int v : key) row.push_back(std::to_string(v));
        row.push_back(std::to_string(cnt));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
        os << '\n';
    };
    line(head);
    for (const auto& row : rows) line(row);
    return os.str();
}

int cmd_count(const RunConfig& cfg) {
    ClassLabel label;
    try {
        label = label_from_string(cfg.id);
    } catch (const UnknownClass&) {
        std::cerr << "error: unknown class '" << cfg.id << "'; known classes:\n";
        for (ClassLabel l : all_labels()) std::cerr << "  " << label_name(l) << '\n';
        return 1;
    }
    CoeffTable t = enumerate_class(label, cfg.max_area, cfg.max_hp);
    if (cfg.by_area) t = t.project({2});
    if (cfg.format == "json")
        emit(cfg, t.to_json().dump() + "\n");
    else if (cfg.format == "csv")
        emit(cfg, t.to_csv());
    else
        emit(cfg, table_text(t));
    return 0;
}

// ---- compare -------------------------------------------------------------

MultiSeries window_hp(const MultiSeries& a, int hp) {
    MultiSeries r(a.order());
    for (const auto& [e, c] : a.terms())
        if (e[VX] + e[VY] <= hp) r.add_term(e, c);
    return r;
}

MultiSeries area_marginal(const CoeffTable& table, std::size_t axis, TruncOrder o) {
    MultiSeries r(o);
    for (const auto& [k, cnt] : table.marginal(axis))
        r.add_term({0, 0, k, 0}, rat(static_cast<long>(cnt)));
    return r;
}

struct ComparePair {
    MultiSeries formula;
    MultiSeries oracle;
    std::string window;  // what the comparison covers, for the report
};

// Pairs a catalog formula with the enumeration that counts the same class,
// on the window where the enumeration is complete.
ComparePair compare_pair(const RunConfig& cfg) {
    const std::string& id = cfg.id;
    const int hp = cfg.max_hp > 0 ? cfg.max_hp : 8;
    const std::string area_w = "area <= " + std::to_string(cfg.max_area);
    const std::string hp_w = "half-perimeter <= " + std::to_string(hp);

    auto by_area = [&](const CoeffTable& table, std::size_t axis) {
        TruncOrder o = TruncOrder::qonly(cfg.max_area);
        return ComparePair{evaluate(id, o), area_marginal(table, axis, o), area_w};
    };
    if (id == "bargraph_area") return by_area(enumerate_class(ClassLabel::Bargraph, cfg.max_area), 2);
    if (id == "cc_area") return by_area(enumerate_class(ClassLabel::ColumnConvex, cfg.max_area), 2);
    if (id == "dcc_area")
        return by_area(enumerate_intersection(
                           {ClassLabel::ColumnConvex, ClassLabel::DirectedNE}, cfg.max_area),
                       2);
    if (id == "directed_area") return by_area(enumerate_directed_rsp(cfg.max_area), 0);

    // a polygon of half-perimeter h covers at most floor(h/2)*ceil(h/2) cells
    const int hp_area = (hp / 2) * (hp - hp / 2);
    auto by_perimeter = [&](const CoeffTable& raw) {
        TruncOrder o = TruncOrder::xy(hp - 1);
        return ComparePair{window_hp(evaluate(id, o), hp),
                           window_hp(raw.project({0, 1}).to_series({VX, VY}, o), hp), hp_w};
    };
    if (id == "bargraph_perimeter")
        return by_perimeter(enumerate_class(ClassLabel::Bargraph, hp_area, hp));
    if (id == "ferrers_perimeter")
        return by_perimeter(enumerate_class(ClassLabel::Ferrers, hp_area, hp));
    if (id == "stack_perimeter")
        return by_perimeter(enumerate_class(ClassLabel::Stack, hp_area, hp));
    if (id == "staircase_perimeter")
        return by_perimeter(enumerate_class(ClassLabel::Staircase, hp_area, hp));
    if (id == "cc_perimeter")
        return by_perimeter(enumerate_class(ClassLabel::ColumnConvex, hp_area, hp));
    if (id == "dcc_perimeter")
        return by_perimeter(enumerate_intersection(
            {ClassLabel::ColumnConvex, ClassLabel::DirectedNE}, hp_area, hp));

    auto by_complete = [&](ClassLabel l) {
        TruncOrder o = TruncOrder::full(hp - 1, hp - 1, cfg.max_area, 0);
        return ComparePair{
            window_hp(evaluate(id, o), hp),
            window_hp(enumerate_class(l, cfg.max_area, hp).to_series({VX, VY, VQ}, o), hp),
            hp_w + ", " + area_w};
    };
    if (id == "bargraph_complete") return by_complete(ClassLabel::Bargraph);
    if (id == "ferrers_complete") return by_complete(ClassLabel::Ferrers);
    if (id == "stack_complete") return by_complete(ClassLabel::Stack);
    if (id == "staircase_complete") return by_complete(ClassLabel::Staircase);
    if (id == "cc_complete") return by_complete(ClassLabel::ColumnConvex);

    if (id == "bargraph_width_area") {
        TruncOrder o = TruncOrder::xq(cfg.max_area, cfg.max_area);
        return {evaluate(id, o),
                enumerate_class(ClassLabel::Bargraph, cfg.max_area)
                    .project({0, 2})
                    .to_series({VX, VQ}, o),
                area_w};
    }
    if (id == "directed_area_rsp") {
        TruncOrder o = TruncOrder::xq(cfg.max_area, cfg.max_area);
        CoeffTable rsp = enumerate_directed_rsp(cfg.max_area);  // keys (area, site stat)
        CoeffTable flip("rsp", {"r", "k"}, {});
        for (const auto& [key, cnt] : rsp.entries()) flip.add({key[1], key[0]}, cnt);
        return {evaluate(id, o), flip.to_series({VX, VQ}, o), area_w};
    }
    if (id == "triangular_directed_corrected") {
        TruncOrder o = TruncOrder::xq(cfg.max_area, cfg.max_area);
        CoeffTable tri = enumerate_triangular_directed(cfg.max_area);
        CoeffTable sw("tri", {"m", "k"}, {});
        for (const auto& [key, cnt] : tri.entries()) sw.add({key[1], key[0]}, cnt);
        return {evaluate(id, o), sw.to_series({VX, VQ}, o), area_w};
    }
    if (id == "sap_strip2" || id == "sap_strip3") {
        int k = id.back() - '0';
        TruncOrder o = TruncOrder::xy(hp - 1);
        return {window_hp(evaluate(id, o), hp),
                window_hp(enumerate_sap_strip(k, hp).to_series({VX, VY}, o), hp), hp_w};
    }
    throw UnknownFormula("no enumeration is wired up for '" + id + "'");
}

int cmd_compare(const RunConfig& cfg) {
    std::vector<std::string> ids = formula_ids();
    if (std::find(ids.begin(), ids.end(), cfg.id) == ids.end()) {
        std::cerr << "error: unknown formula '" << cfg.id << "'; the catalog:\n";
        for (const std::string& id : ids) std::cerr << "  " << id << '\n';
        return 1;
    }
    ComparePair p = compare_pair(cfg);

    std::set<Expo> keys;
    for (const auto& [e, c] : p.formula.terms()) keys.insert(e);
    for (const auto& [e, c] : p.oracle.terms()) keys.insert(e);
    long long matched = 0;
    std::ostringstream os;
    int shown = 0;
    for (const Expo& e : keys) {
        const Rational& f = p.formula.coeff(e);
        const Rational& w = p.oracle.coeff(e);
        if (f == w) {
            ++matched;
            continue;
        }
        if (++shown <= 5)
            os << "  x^" << e[0] << " y^" << e[1] << " q^" << e[2] << ": formula "
               << rat_to_string(f) << ", enumeration " << rat_to_string(w) << '\n';
    }
    long long total = static_cast<long long>(keys.size());
    os << (matched == total ? "OK: " : "FAIL: ") << matched << "/" << total
       << " coefficients match (" << p.window << ")\n";
    emit(cfg, os.str());
    return matched == total ? 0 : 1;
}

// ---- strip and growth ----------------------------------------------------

ordered_json poly_terms_json(const Poly2& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [k, c] : p.terms()) {
        ordered_json t;
        t["e"] = {k[0], k[1]};
        t["n"] = c.get_num().get_str();
        t["d"] = c.get_den().get_str();
        arr.push_back(std::move(t));
    }
    return arr;
}

void poly_terms_csv(std::ostringstream& os, const char* part, const Poly2& p) {
    for (const auto& [k, c] : p.terms())
        os << part << ',' << k[0] << ',' << k[1] << ',' << rat_to_string(c) << '\n';
}

int cmd_strip(const RunConfig& cfg) {
    RatFun s = solve_strip(cfg.height);
    std::string display =
        "S_" + std::to_string(cfg.height) + "(x, y) = " + s.to_string("x", "y");
    std::string bound = cfg.growth ? growth_lower_bound(cfg.height, cfg.digits) : "";
    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json j;
        j["height"] = cfg.height;
        j["vars"] = {"x", "y"};
        j["numerator"] = poly_terms_json(s.num);
        j["denominator"] = poly_terms_json(s.den);
        j["display"] = display;
        if (cfg.growth) j["growth"] = {{"digits", cfg.digits}, {"bound", bound}};
        os << j.dump() << '\n';
    } else if (cfg.format == "csv") {
        os << "part,x_deg,y_deg,coeff\n";
        poly_terms_csv(os, "num", s.num);
        poly_terms_csv(os, "den", s.den);
        if (cfg.growth) os << "growth," << cfg.digits << ",," << bound << '\n';
    } else {
        os << display << '\n';
        if (cfg.growth)
            os << "growth lower bound: " << bound << " (" << cfg.digits
               << " decimal digits)\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_growth(const RunConfig& cfg) {
    std::string bound = growth_lower_bound(cfg.height, cfg.digits);
    if (cfg.format == "json") {
        ordered_json j;
        j["height"] = cfg.height;
        j["digits"] = cfg.digits;
        j["bound"] = bound;
        emit(cfg, j.dump() + "\n");
    } else {
        emit(cfg, "height " + std::to_string(cfg.height) + " growth lower bound: " + bound +
                      " (" + std::to_string(cfg.digits) + " decimal digits)\n");
    }
    return 0;
}

// ---- verify-all ----------------------------------------------------------

int cmd_verify() {
    int failures = 0;
    run_all_checks([&](const CheckResult& r) {
        std::string detail = r.detail;
        // the battery time varies run to run: report it on stderr so that
        // stdout stays byte-identical for identical inputs
        if (std::size_t cut = detail.find("; battery took"); cut != std::string::npos) {
            std::cerr << detail.substr(cut + 2) << '\n';
            detail.erase(cut);
        }
        std::printf("%s %2d %s: %s\n", r.passed ? "PASS" : "FAIL", r.number, r.name.c_str(),
                    detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    });
    if (failures == 0)
        std::printf("all 10 checks passed\n");
    else
        std::printf("%d of 10 checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}

void add_io_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", cfg.output, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{
        "exact enumeration of polyomino and polygon classes.\n"
        "Every command is deterministic: the engine uses no randomness, no\n"
        "clocks and no threads, so identical inputs give identical output."};
    app.require_subcommand(1);

    CLI::App* series = app.add_subcommand("series", "expand a catalog formula");
    series->add_option("id", cfg.id, "formula identifier (see `series --list`)");
    bool list_ids = false;
    series->add_flag("--list", list_ids, "print the catalog and exit");
    series->add_option("--max-x", cfg.max_x, "x cap (horizontal half-perimeter, or width)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    series->add_option("--max-y", cfg.max_y, "y cap (vertical half-perimeter)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    series->add_option("--max-q", cfg.max_q, "q cap (area)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    series->add_flag("--iso", cfg.iso, "set x = y = t before printing (t in the x slot)");
    series->add_option("--max-t", cfg.max_t, "t cap used with --iso")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_io_options(series, cfg);

    CLI::App* count = app.add_subcommand("count", "enumerate a class by brute force");
    count->add_option("class", cfg.id, "class label, e.g. ferrers or column-convex")
        ->required();
    count->add_option("--max-area", cfg.max_area, "largest area to enumerate")
        ->required()
        ->check(CLI::PositiveNumber);
    count->add_option("--max-hp", cfg.max_hp, "half-perimeter bound (0 = none)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    count->add_flag("--by-area", cfg.by_area, "print the area marginal instead of (m,n,k)");
    add_io_options(count, cfg);

    CLI::App* compare = app.add_subcommand(
        "compare", "check a formula's coefficients against a fresh enumeration");
    compare->add_option("id", cfg.id, "formula identifier")->required();
    compare->add_option("--max-area", cfg.max_area, "area window")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compare->add_option("--max-hp", cfg.max_hp,
                        "half-perimeter window for perimeter formulas (default 8)")
        ->check(CLI::PositiveNumber);
    add_io_options(compare, cfg);

    CLI::App* strip = app.add_subcommand(
        "strip", "solve the polygon generating function of a height-k strip");
    strip->add_option("height", cfg.height, "strip height k")
        ->required()
        ->check(CLI::Range(1, 6));
    strip->add_flag("--growth", cfg.growth, "also print the growth lower bound");
    strip->add_option("--digits", cfg.digits, "decimal digits of the bound")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    add_io_options(strip, cfg);

    CLI::App* growth =
        app.add_subcommand("growth", "lower-bound the polygon growth constant");
    growth->add_option("height", cfg.height, "strip height k")
        ->required()
        ->check(CLI::Range(1, 6));
    growth->add_option("--digits", cfg.digits, "decimal digits")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    add_io_options(growth, cfg);

    CLI::App* verify =
        app.add_subcommand("verify-all", "run the full acceptance battery (minutes)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (series->parsed()) {
            if (list_ids) {
                for (const std::string& id : formula_ids()) std::cout << id << '\n';
                return 0;
            }
            if (cfg.id.empty()) {
                std::cerr << "error: series needs a formula id (or --list)\n";
                return 1;
            }
            return cmd_series(cfg);
        }
        if (count->parsed()) return cmd_count(cfg);
        if (compare->parsed()) return cmd_compare(cfg);
        if (strip->parsed()) return cmd_strip(cfg);
        if (growth->parsed()) return cmd_growth(cfg);
        if (verify->parsed()) return cmd_verify();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
