#include "polyenum/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "polyenum/errors.hpp"

namespace polyenum {

int TruncOrder::cap(int var) const {
    switch (var) {
        case VX: return x;
        case VY: return y;
        case VQ: return q;
        default: return s;
    }
}

bool TruncOrder::admits(const Expo& e) const {
    return e[VX] <= x && e[VY] <= y && e[VQ] <= q && e[VS] <= s;
}

TruncOrder TruncOrder::meet(const TruncOrder& o) const {
    return {std::min(x, o.x), std::min(y, o.y), std::min(q, o.q), std::min(s, o.s)};
}

std::string TruncOrder::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int v = 0; v < kNumVars; ++v) {
        if (v) out << ",";
        int c = cap(v);
        if (c >= kUncapped)
            out << "*";
        else
            out << c;
    }
    out << ")";
    return out.str();
}

MultiSeries MultiSeries::constant(TruncOrder order, const Rational& c) {
    MultiSeries r(order);
    r.add_term({0, 0, 0, 0}, c);
    return r;
}

MultiSeries MultiSeries::monomial(TruncOrder order, const Expo& e, const Rational& c) {
    MultiSeries r(order);
    r.add_term(e, c);
    return r;
}

const Rational& MultiSeries::coeff(const Expo& e) const {
    if (!order_.admits(e))
        throw OutOfTruncation("coefficient " + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                              "," + std::to_string(e[2]) + "," + std::to_string(e[3]) +
                              " outside truncation order " + order_.to_string());
    static const Rational kZero = 0;
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
}

Rational MultiSeries::coeff(int ex, int ey, int eq, int es) const {
    return coeff(Expo{ex, ey, eq, es});
}

void MultiSeries::add_term(const Expo& e, const Rational& c) {
    if (c == 0 || !order_.admits(e)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSeries MultiSeries::truncated(TruncOrder order) const {
    MultiSeries r(order);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
    TruncOrder m = order_.meet(o.order_);
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    // Walk both maps in lockstep, skipping terms outside the meet.
    while (true) {
        while (it != terms_.end() && !m.admits(it->first)) ++it;
        while (jt != o.terms_.end() && !m.admits(jt->first)) ++jt;
        if (it == terms_.end() || jt == o.terms_.end()) break;
        if (it->first != jt->first || it->second != jt->second) return false;
        ++it;
        ++jt;
    }
    return it == terms_.end() && jt == o.terms_.end();
}

std::string MultiSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = e[0] || e[1] || e[2] || e[3];
        if (a != 1 || !any_var) out << rat_to_string(a);
        bool star = (a != 1 || !any_var);
        for (int v = 0; v < kNumVars; ++v) {
            if (!e[v]) continue;
            if (star) out << "*";
            star = true;
            out << kVarNames[v];
            if (e[v] > 1) out << "^" << e[v];
        }
    }
    return out.str();
}

std::string MultiSeries::to_json() const {
    nlohmann::ordered_json j;
    j["vars"] = {"x", "y", "q", "s"};
    j["order"] = nlohmann::json::array();
    for (int v = 0; v < kNumVars; ++v)
        j["order"].push_back(order_.cap(v) >= TruncOrder::kUncapped ? -1 : order_.cap(v));
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json t;
        t["e"] = {e[0], e[1], e[2], e[3]};
        t["n"] = c.get_num().get_str();
        t["d"] = c.get_den().get_str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

MultiSeries MultiSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TruncOrder o;
    auto cap_of = [&](int v) {
        int c = j.at("order").at(v).get<int>();
        return c < 0 ? TruncOrder::kUncapped : c;
    };
    o = {cap_of(0), cap_of(1), cap_of(2), cap_of(3)};
    MultiSeries r(o);
    for (const auto& t : j.at("terms")) {
        Expo e{t.at("e").at(0).get<int>(), t.at("e").at(1).get<int>(), t.at("e").at(2).get<int>(),
               t.at("e").at(3).get<int>()};
        Rational c(mpz_class(t.at("n").get<std::string>()), mpz_class(t.at("d").get<std::string>()));
        c.canonicalize();
        r.add_term(e, c);
    }
    return r;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(a.order().meet(b.order()));
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(a.order().meet(b.order()));
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

MultiSeries operator-(const MultiSeries& a) {
    MultiSeries r(a.order());
    for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
    return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    TruncOrder m = a.order().meet(b.order());
    MultiSeries r(m);
    if (a.is_zero() || b.is_zero()) return r;
    // Outer loop over the smaller operand keeps the inner early-exit cheap.
    const MultiSeries& u = a.term_count() <= b.term_count() ? a : b;
    const MultiSeries& w = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ea, ca] : u.terms()) {
        for (const auto& [eb, cb] : w.terms()) {
            Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            if (!m.admits(e)) continue;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiSeries operator*(const Rational& c, const MultiSeries& a) {
    MultiSeries r(a.order());
    if (c == 0) return r;
    for (const auto& [e, v] : a.terms()) r.add_term(e, c * v);
    return r;
}

MultiSeries operator*(const MultiSeries& a, const Rational& c) { return c * a; }

MultiSeries operator+(const MultiSeries& a, const Rational& c) {
    MultiSeries r = a;
    r.add_term({0, 0, 0, 0}, c);
    return r;
}

MultiSeries operator-(const MultiSeries& a, const Rational& c) { return a + (-c); }

MultiSeries operator-(const Rational& c, const MultiSeries& a) { return (-a) + c; }

MultiSeries shift(const MultiSeries& a, const Expo& e, const Rational& c) {
    MultiSeries r(a.order());
    for (const auto& [ea, ca] : a.terms())
        r.add_term({ea[0] + e[0], ea[1] + e[1], ea[2] + e[2], ea[3] + e[3]}, c * ca);
    return r;
}

namespace {

// Iteration cap for the Newton loops: correct total degree doubles per
// step, and no term exceeds the sum of the finite caps.
int newton_step_cap(const TruncOrder& o) {
    long total = 0;
    for (int v = 0; v < kNumVars; ++v) {
        long c = o.cap(v);
        if (c < TruncOrder::kUncapped) total += c;
    }
    int steps = 2;
    for (long reach = 1; reach <= total; reach *= 2) ++steps;
    return steps;
}

}  // namespace

MultiSeries reciprocal(const MultiSeries& a) {
    Rational c0 = a.constant_term();
    if (c0 == 0) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
    MultiSeries b = MultiSeries::constant(a.order(), 1 / c0);
    MultiSeries one = MultiSeries::one(a.order());
    int cap = newton_step_cap(a.order());
    for (int i = 0; i < cap; ++i) {
        MultiSeries r = one - a * b;
        if (r.is_zero()) return b;
        b = b + b * r;
    }
    MultiSeries r = one - a * b;
    if (!r.is_zero()) throw std::logic_error("reciprocal: Newton failed to converge");
    return b;
}

MultiSeries divide(const MultiSeries& a, const MultiSeries& b) { return a * reciprocal(b); }

MultiSeries sqrt(const MultiSeries& a) {
    Rational c0 = a.constant_term();
    auto root = rat_sqrt(c0);
    if (!root || *root == 0)
        throw NonSquareConstant("sqrt needs a constant term that is a nonzero rational square, got " +
                                rat_to_string(c0));
    MultiSeries b = MultiSeries::constant(a.order(), *root);
    int cap = newton_step_cap(a.order());
    for (int i = 0; i < cap; ++i) {
        MultiSeries r = a - b * b;
        if (r.is_zero()) return b;
        b = b + r * reciprocal(Rational(2) * b);
    }
    MultiSeries r = a - b * b;
    if (!r.is_zero()) throw std::logic_error("sqrt: Newton failed to converge");
    return b;
}

MultiSeries div_monomial(const MultiSeries& a, const Expo& e) {
    MultiSeries r(a.order());
    for (const auto& [ea, ca] : a.terms()) {
        Expo d;
        for (int v = 0; v < kNumVars; ++v) {
            d[v] = ea[v] - e[v];
            if (d[v] < 0)
                throw std::domain_error("div_monomial: term " + std::string(kVarNames[v]) + "^" +
                                        std::to_string(ea[v]) + " not divisible");
        }
        r.add_term(d, ca);
    }
    return r;
}

MultiSeries pow(const MultiSeries& a, int n) {
    MultiSeries r = MultiSeries::one(a.order());
    MultiSeries base = a;
    for (; n > 0; n >>= 1) {
        if (n & 1) r = r * base;
        if (n > 1) base = base * base;
    }
    return r;
}

MultiSeries pochhammer(const MultiSeries& a, int n) {
    MultiSeries r = MultiSeries::one(a.order());
    for (int i = 1; i <= n; ++i) {
        MultiSeries aq = shift(a, {0, 0, i, 0});
        if (aq.is_zero()) break;  // this and all later factors are 1 at this order
        r = r * (MultiSeries::one(a.order()) - aq);
    }
    return r;
}

namespace {

MultiSeries subst_var_times_q(const MultiSeries& a, Var v, int j) {
    MultiSeries r(a.order());
    for (const auto& [e, c] : a.terms()) {
        Expo m = e;
        m[VQ] += j * e[v];
        r.add_term(m, c);
    }
    return r;
}

void require_q_dominated(const MultiSeries& a, Var v, const char* op) {
    if (a.order().cap(v) < a.order().q)
        throw NotSDominated(std::string(op) + ": " + kVarNames[v] + " cap " +
                            std::to_string(a.order().cap(v)) + " below q cap " +
                            std::to_string(a.order().q) + "; truncated sum would be incomplete");
    for (const auto& [e, c] : a.terms())
        if (e[v] > e[VQ])
            throw NotSDominated(std::string(op) + ": monomial with e_" + kVarNames[v] + " = " +
                                std::to_string(e[v]) + " > e_q = " + std::to_string(e[VQ]));
}

MultiSeries eval_one_weighted(const MultiSeries& a, Var v, bool derivative, const char* op) {
    require_q_dominated(a, v, op);
    TruncOrder o = a.order();
    switch (v) {
        case VX: o.x = 0; break;
        case VY: o.y = 0; break;
        default: o.s = 0; break;
    }
    MultiSeries r(o);
    for (const auto& [e, c] : a.terms()) {
        Expo m = e;
        m[v] = 0;
        r.add_term(m, derivative ? Rational(e[v]) * c : c);
    }
    return r;
}

}  // namespace

MultiSeries subst_s_times_q(const MultiSeries& a, int j) { return subst_var_times_q(a, VS, j); }

MultiSeries subst_x_times_q(const MultiSeries& a, int j) { return subst_var_times_q(a, VX, j); }

MultiSeries eval_s_one(const MultiSeries& a) { return eval_one_weighted(a, VS, false, "eval_s_one"); }

MultiSeries d_ds_at_one(const MultiSeries& a) { return eval_one_weighted(a, VS, true, "d_ds_at_one"); }

MultiSeries eval_var_one(const MultiSeries& a, Var v) {
    if (v == VQ) throw std::invalid_argument("eval_var_one: q is the dominating variable");
    return eval_one_weighted(a, v, false, "eval_var_one");
}

MultiSeries substitute_xy_t(const MultiSeries& a) {
    TruncOrder o = a.order();
    TruncOrder ro{std::min(o.x, o.y), 0, o.q, o.s};
    MultiSeries r(ro);
    for (const auto& [e, c] : a.terms()) r.add_term({e[VX] + e[VY], 0, e[VQ], e[VS]}, c);
    return r;
}

std::vector<Rational> univariate_coeffs(const MultiSeries& a, Var v, int maxdeg) {
    std::vector<Rational> out(maxdeg + 1, Rational(0));
    for (const auto& [e, c] : a.terms()) {
        for (int w = 0; w < kNumVars; ++w)
            if (w != v && e[w] != 0)
                throw std::domain_error("univariate_coeffs: series also involves " +
                                        std::string(kVarNames[w]));
        if (e[v] <= maxdeg) out[e[v]] = c;
    }
    return out;
}

}  // namespace polyenum
