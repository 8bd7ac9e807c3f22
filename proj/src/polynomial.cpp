#include "polyenum/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polyenum/errors.hpp"

namespace polyenum {

// ---- univariate ----------------------------------------------------------

PolyU pu_trim(PolyU p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int pu_deg(const PolyU& p) { return static_cast<int>(p.size()) - 1; }

PolyU pu_add(const PolyU& a, const PolyU& b) {
    PolyU r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return pu_trim(std::move(r));
}

PolyU pu_sub(const PolyU& a, const PolyU& b) {
    PolyU r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return pu_trim(std::move(r));
}

PolyU pu_mul(const PolyU& a, const PolyU& b) {
    if (a.empty() || b.empty()) return {};
    PolyU r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return pu_trim(std::move(r));
}

PolyU pu_scale(const PolyU& a, const Rational& c) {
    if (c == 0) return {};
    PolyU r = a;
    for (auto& v : r) v *= c;
    return r;
}

Rational pu_eval(const PolyU& p, const Rational& t) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

PolyU pu_derivative(const PolyU& p) {
    if (p.size() <= 1) return {};
    PolyU r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * p[i];
    return pu_trim(std::move(r));
}

PolyU pu_rem(const PolyU& a, const PolyU& b) {
    if (b.empty()) throw std::logic_error("pu_rem: division by zero polynomial");
    PolyU r = a;
    while (pu_deg(r) >= pu_deg(b)) {
        Rational f = r.back() / b.back();
        int shift = pu_deg(r) - pu_deg(b);
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
        r = pu_trim(std::move(r));
        if (r.empty()) break;
    }
    return r;
}

PolyU pu_divexact(const PolyU& a, const PolyU& b) {
    if (b.empty()) throw std::logic_error("pu_divexact: division by zero polynomial");
    if (a.empty()) return {};
    if (pu_deg(a) < pu_deg(b)) throw std::logic_error("pu_divexact: not divisible");
    PolyU r = a;
    PolyU q(pu_deg(a) - pu_deg(b) + 1, Rational(0));
    while (pu_deg(r) >= pu_deg(b)) {
        Rational f = r.back() / b.back();
        int shift = pu_deg(r) - pu_deg(b);
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
        r = pu_trim(std::move(r));
        if (r.empty()) break;
    }
    if (!r.empty()) throw std::logic_error("pu_divexact: remainder nonzero");
    return pu_trim(std::move(q));
}

PolyU pu_gcd(PolyU a, PolyU b) {
    a = pu_trim(std::move(a));
    b = pu_trim(std::move(b));
    if (a.empty()) a.swap(b);
    if (b.empty()) {
        if (!a.empty() && a.back() != 1) {
            Rational lead = a.back();
            for (auto& v : a) v /= lead;
        }
        return a;
    }
    // Primitive pseudo-remainder sequence over the integers: rational
    // Euclid grows coefficient bit sizes exponentially with the degree,
    // while stripping the integer content each step keeps them near the
    // size of the answer.
    auto primitive = [](const PolyU& p) {
        mpz_class lcm = 1;
        for (const auto& v : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<mpz_class> z(p.size());
        mpz_class cont = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            z[i] = p[i].get_num() * (lcm / p[i].get_den());
            mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), z[i].get_mpz_t());
        }
        for (auto& v : z) v /= cont;
        return z;
    };
    std::vector<mpz_class> za = primitive(a), zb = primitive(b);
    if (za.size() < zb.size()) za.swap(zb);
    while (!zb.empty()) {
        std::vector<mpz_class> r = za;
        const mpz_class& lb = zb.back();
        while (r.size() >= zb.size()) {
            mpz_class la = r.back();
            for (auto& v : r) v *= lb;
            std::size_t shift = r.size() - zb.size();
            for (std::size_t i = 0; i < zb.size(); ++i) r[i + shift] -= la * zb[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        if (!r.empty()) {
            mpz_class cont = 0;
            for (const auto& v : r) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
            for (auto& v : r) v /= cont;
        }
        za = std::move(zb);
        zb = std::move(r);
    }
    PolyU g(za.size());
    for (std::size_t i = 0; i < za.size(); ++i) g[i] = Rational(za[i]) / Rational(za.back());
    return g;
}

std::string pu_to_string(const PolyU& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Rational c = p[i];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || i == 0) out << rat_to_string(c);
        if (i > 0) {
            if (c != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---- bivariate -----------------------------------------------------------

Poly2 Poly2::constant(const Rational& c) {
    Poly2 p;
    p.add_term(0, 0, c);
    return p;
}

Poly2 Poly2::monomial(int da, int db, const Rational& c) {
    Poly2 p;
    p.add_term(da, db, c);
    return p;
}

int Poly2::deg(int var) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k[var]);
    return d;
}

Rational Poly2::coeff(int da, int db) const {
    auto it = terms_.find({da, db});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(int da, int db, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{da, db}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string Poly2::to_string(const std::string& va, const std::string& vb) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool any = k[0] || k[1];
        if (c != 1 || !any) out << rat_to_string(c);
        bool star = (c != 1 || !any);
        for (int v = 0; v < 2; ++v) {
            if (!k[v]) continue;
            if (star) out << "*";
            star = true;
            out << (v == 0 ? va : vb);
            if (k[v] > 1) out << "^" << k[v];
        }
    }
    return out.str();
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k[0], k[1], c);
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k[0], k[1], -c);
    return r;
}

Poly2 operator-(const Poly2& a) {
    Poly2 r;
    for (const auto& [k, c] : a.terms()) r.add_term(k[0], k[1], -c);
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add_term(ka[0] + kb[0], ka[1] + kb[1], ca * cb);
    return r;
}

Poly2 operator*(const Rational& c, const Poly2& a) {
    Poly2 r;
    if (c == 0) return r;
    for (const auto& [k, v] : a.terms()) r.add_term(k[0], k[1], c * v);
    return r;
}

namespace {

// View of a bivariate polynomial as sum_j coeff_j(A) * B^j.
std::vector<PolyU> by_b_degree(const Poly2& p) {
    std::vector<PolyU> out(p.is_zero() ? 0 : p.deg(1) + 1);
    for (const auto& [k, c] : p.terms()) {
        PolyU& cf = out[k[1]];
        if (static_cast<int>(cf.size()) <= k[0]) cf.resize(k[0] + 1, Rational(0));
        cf[k[0]] = c;
    }
    return out;
}

Poly2 from_b_degree(const std::vector<PolyU>& coeffs) {
    Poly2 p;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (std::size_t i = 0; i < coeffs[j].size(); ++i)
            p.add_term(static_cast<int>(i), static_cast<int>(j), coeffs[j][i]);
    return p;
}

int top_b(const std::vector<PolyU>& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[d].empty()) --d;
    return d;
}

// gcd of all A-coefficients (the content w.r.t. B), monic.
PolyU content_b(const std::vector<PolyU>& c) {
    PolyU g;
    for (const auto& cf : c) {
        g = pu_gcd(g, cf);
        if (pu_deg(g) == 0) break;
    }
    return g;
}

std::vector<PolyU> divide_content(std::vector<PolyU> c, const PolyU& g) {
    if (pu_deg(g) == 0) return c;
    for (auto& cf : c)
        if (!cf.empty()) cf = pu_divexact(cf, g);
    return c;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in the variable B
// (coefficients in Q[A]); the fixed scaling power is what the subresultant
// division factors are calibrated against.
std::vector<PolyU> prem_b(std::vector<PolyU> a, const std::vector<PolyU>& b) {
    int db = top_b(b);
    const PolyU& lb = b[db];
    int da = top_b(a);
    int e = da - db + 1;
    while (da >= db) {
        PolyU la = a[da];
        // a <- lb * a - la * B^(da-db) * b  kills the leading B-term
        for (auto& cf : a) cf = pu_mul(cf, lb);
        --e;
        for (int j = 0; j <= db; ++j)
            a[j + da - db] = pu_sub(a[j + da - db], pu_mul(la, b[j]));
        int nd = top_b(a);
        a.resize(nd + 1);
        if (nd < 0) break;
        da = nd;
    }
    for (; e > 0; --e)
        for (auto& cf : a) cf = pu_mul(cf, lb);
    return a;
}

PolyU pu_pow(const PolyU& p, int e) {
    PolyU r{Rational(1)};
    for (int i = 0; i < e; ++i) r = pu_mul(r, p);
    return r;
}

std::vector<PolyU> divide_entries(std::vector<PolyU> c, const PolyU& d) {
    for (auto& cf : c)
        if (!cf.empty()) cf = pu_divexact(cf, d);
    return c;
}

}  // namespace

Poly2 p2_divexact(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::logic_error("p2_divexact: division by zero");
    if (a.is_zero()) return {};
    // Long division in B with exact univariate coefficient division.
    std::vector<PolyU> ra = by_b_degree(a), rb = by_b_degree(b);
    int db = top_b(rb);
    std::vector<PolyU> q(std::max(0, top_b(ra) - db + 1));
    while (true) {
        int da = top_b(ra);
        if (da < 0) break;
        if (da < db) throw std::logic_error("p2_divexact: not divisible");
        PolyU f = pu_divexact(ra[da], rb[db]);
        q[da - db] = f;
        for (int j = 0; j <= db; ++j) ra[j + da - db] = pu_sub(ra[j + da - db], pu_mul(f, rb[j]));
        ra.resize(top_b(ra) + 1);
    }
    return from_b_degree(q);
}

namespace {

Poly2 normalize_lex(const Poly2& p) {
    if (p.is_zero()) return p;
    Rational lead = p.terms().begin()->second;
    return (1 / lead) * p;
}

}  // namespace

Poly2 p2_gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return normalize_lex(b);
    if (b.is_zero()) return normalize_lex(a);
    std::vector<PolyU> ca = by_b_degree(a), cb = by_b_degree(b);
    PolyU conta = content_b(ca), contb = content_b(cb);
    std::vector<PolyU> pa = divide_content(std::move(ca), conta);
    std::vector<PolyU> pb = divide_content(std::move(cb), contb);
    if (top_b(pa) < top_b(pb)) pa.swap(pb);
    // Subresultant pseudo-remainder sequence in B: dividing each
    // pseudo-remainder by g*h^d (d the degree drop) is exact and keeps
    // the coefficient growth polynomial, where a primitive sequence pays
    // a stack of univariate gcds per step and a plain pseudo-remainder
    // sequence explodes.
    PolyU g{Rational(1)}, h{Rational(1)};
    while (top_b(pb) > 0) {
        int d = top_b(pa) - top_b(pb);
        std::vector<PolyU> r = prem_b(pa, pb);
        pa = std::move(pb);
        pb = divide_entries(std::move(r), pu_mul(g, pu_pow(h, d)));
        g = pa[top_b(pa)];
        if (d > 0) h = pu_divexact(pu_pow(g, d), pu_pow(h, d - 1));
    }
    std::vector<PolyU> prim;
    if (top_b(pb) == 0)
        prim.push_back(PolyU{Rational(1)});  // coprime in B: only content survives
    else
        prim = std::move(pa);
    PolyU contg = pu_gcd(conta, contb);
    PolyU pc = content_b(prim);
    Poly2 gp = from_b_degree(divide_content(std::move(prim), pc));
    Poly2 result;
    for (std::size_t i = 0; i < contg.size(); ++i)
        if (contg[i] != 0) result = result + Poly2::monomial(static_cast<int>(i), 0, contg[i]) * gp;
    return normalize_lex(result);
}

Poly2 p2_subst_b_squared(const Poly2& a) {
    Poly2 r;
    for (const auto& [k, c] : a.terms()) {
        if (k[1] % 2 != 0) throw std::logic_error("p2_subst_b_squared: odd B-degree present");
        r.add_term(k[0], k[1] / 2, c);
    }
    return r;
}

PolyU p2_collapse_iso(const Poly2& a) {
    PolyU r;
    for (const auto& [k, c] : a.terms()) {
        int d = k[0] + k[1];
        if (static_cast<int>(r.size()) <= d) r.resize(d + 1, Rational(0));
        r[d] += c;
    }
    return pu_trim(std::move(r));
}

PolyU p2_to_univariate(const Poly2& a, int var) {
    PolyU r;
    for (const auto& [k, c] : a.terms()) {
        if (k[1 - var] != 0) throw std::logic_error("p2_to_univariate: second variable present");
        if (static_cast<int>(r.size()) <= k[var]) r.resize(k[var] + 1, Rational(0));
        r[k[var]] = c;
    }
    return pu_trim(std::move(r));
}

Poly2 p2_swap_vars(const Poly2& a) {
    Poly2 r;
    for (const auto& [k, c] : a.terms()) r.add_term(k[1], k[0], c);
    return r;
}

MultiSeries p2_to_series(const Poly2& a, TruncOrder o, Var sa, Var sb) {
    MultiSeries r(o);
    for (const auto& [k, c] : a.terms()) {
        Expo e{0, 0, 0, 0};
        e[sa] += k[0];
        e[sb] += k[1];
        r.add_term(e, c);
    }
    return r;
}

// ---- rational functions --------------------------------------------------

RatFun RatFun::from(const Poly2& n, const Poly2& d) {
    if (d.is_zero()) throw SingularSystem("rational function with zero denominator");
    if (n.is_zero()) return {Poly2(), Poly2::constant(1)};
    Poly2 g = p2_gcd(n, d);
    Poly2 rn = p2_divexact(n, g);
    Poly2 rd = p2_divexact(d, g);
    Rational lead = rd.terms().begin()->second;  // lex-smallest term of the denominator
    return {(1 / lead) * rn, (1 / lead) * rd};
}

std::string RatFun::to_string(const std::string& va, const std::string& vb) const {
    std::string n = num.to_string(va, vb);
    if (den == Poly2::constant(1)) return n;
    return "(" + n + ") / (" + den.to_string(va, vb) + ")";
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun::from(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun::from(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun::from(a.num * b.num, a.den * b.den);
}

RatFun rf_div(const RatFun& a, const RatFun& b) {
    if (b.num.is_zero()) throw SingularSystem("division by the zero rational function");
    return RatFun::from(a.num * b.den, a.den * b.num);
}

bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }

namespace {

bool even_in_b(const Poly2& p) {
    for (const auto& [k, c] : p.terms())
        if (k[1] % 2 != 0) return false;
    return true;
}

Poly2 conj_b(const Poly2& p) {
    Poly2 r;
    for (const auto& [k, c] : p.terms()) r.add_term(k[0], k[1], k[1] % 2 ? -c : c);
    return r;
}

}  // namespace

RatFun rf_subst_b_squared(const RatFun& a) {
    Poly2 n = a.num, d = a.den;
    if (!even_in_b(n) || !even_in_b(d)) {
        Poly2 cd = conj_b(d);
        n = n * cd;
        d = d * cd;
        if (!even_in_b(n) || !even_in_b(d))
            throw std::logic_error("rf_subst_b_squared: value not even in the B variable");
    }
    return RatFun::from(p2_subst_b_squared(n), p2_subst_b_squared(d));
}

MultiSeries rf_to_series(const RatFun& a, TruncOrder o, Var sa, Var sb) {
    return p2_to_series(a.num, o, sa, sb) * reciprocal(p2_to_series(a.den, o, sa, sb));
}

// ---- linear algebra ------------------------------------------------------

std::vector<RatFun> solve_poly_system(std::vector<std::vector<Poly2>> M, std::vector<Poly2> rhs) {
    const int n = static_cast<int>(M.size());
    for (int i = 0; i < n; ++i) M[i].push_back(rhs[i]);
    Poly2 prev = Poly2::constant(1);
    for (int step = 0; step < n; ++step) {
        // Pivot: nonzero entry in this column with the fewest terms.
        int best = -1;
        std::size_t best_terms = 0;
        for (int r = step; r < n; ++r) {
            if (M[r][step].is_zero()) continue;
            std::size_t t = M[r][step].terms().size();
            if (best < 0 || t < best_terms) {
                best = r;
                best_terms = t;
            }
        }
        if (best < 0) throw SingularSystem("transfer system is singular");
        std::swap(M[step], M[best]);
        const Poly2 piv = M[step][step];
        for (int r = step + 1; r < n; ++r) {
            if (M[r][step].is_zero()) {
                // Bareiss still rescales untouched rows to keep divisions exact.
                for (int c = step + 1; c <= n; ++c)
                    if (!M[r][c].is_zero()) M[r][c] = p2_divexact(M[r][c] * piv, prev);
                continue;
            }
            const Poly2 fac = M[r][step];
            for (int c = step + 1; c <= n; ++c)
                M[r][c] = p2_divexact(M[r][c] * piv - fac * M[step][c], prev);
            M[r][step] = Poly2();
        }
        prev = piv;
    }
    std::vector<RatFun> u(n);
    for (int i = n - 1; i >= 0; --i) {
        RatFun acc = RatFun::poly(M[i][n]);
        for (int j = i + 1; j < n; ++j) acc = acc - RatFun::poly(M[i][j]) * u[j];
        u[i] = rf_div(acc, RatFun::poly(M[i][i]));
    }
    return u;
}

// ---- real roots ----------------------------------------------------------

namespace {

std::vector<PolyU> sturm_chain(const PolyU& p) {
    std::vector<PolyU> chain;
    PolyU sf = p;
    PolyU g = pu_gcd(p, pu_derivative(p));
    if (pu_deg(g) > 0) sf = pu_divexact(p, g);  // squarefree part
    chain.push_back(sf);
    chain.push_back(pu_derivative(sf));
    while (!chain.back().empty() && pu_deg(chain.back()) > 0) {
        PolyU r = pu_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(pu_scale(r, -1));
    }
    return chain;
}

int sign_variations(const std::vector<PolyU>& chain, const Rational& t) {
    int vars = 0, last = 0;
    for (const auto& p : chain) {
        Rational v = pu_eval(p, t);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

}  // namespace

int pu_count_roots(const PolyU& p, const Rational& a, const Rational& b) {
    if (p.empty()) throw std::logic_error("pu_count_roots: zero polynomial");
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::pair<Rational, Rational> pu_smallest_root_unit(const PolyU& p, const Rational& width) {
    if (pu_eval(p, 0) == 0) throw std::logic_error("pu_smallest_root_unit: root at 0");
    auto chain = sturm_chain(p);
    int v0 = sign_variations(chain, 0);
    if (v0 - sign_variations(chain, 1) <= 0)
        throw NoPositiveRoot("denominator has no root in (0, 1]");
    Rational lo = 0, hi = 1;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (v0 - sign_variations(chain, mid) >= 1)
            hi = mid;  // smallest root is at or before mid
        else
            lo = mid;
    }
    return {lo, hi};
}

std::string inverse_sqrt_decimal(const Rational& lo, const Rational& hi, int digits) {
    if (lo <= 0) throw std::logic_error("inverse_sqrt_decimal: nonpositive lower bound");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(2 * digits));
    // floor(10^d / sqrt(t)) = floor(isqrt(10^(2d) * num * den) / num) for t = num/den
    auto floor_scaled = [&](const Rational& t) {
        mpz_class v = scale * t.get_num() * t.get_den();
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
        mpz_class out;
        mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), t.get_num().get_mpz_t());
        return out;
    };
    mpz_class wlow = floor_scaled(hi);  // value decreases in t
    mpz_class whigh = floor_scaled(lo);
    if (wlow != whigh) return "";  // enclosure too loose for this many digits
    std::string s = wlow.get_str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.end() - digits, 1, '.');
    if (s.front() == '.') s.insert(s.begin(), '0');
    return s;
}

}  // namespace polyenum
