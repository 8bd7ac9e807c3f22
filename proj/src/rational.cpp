#include "polyenum/rational.hpp"

#include <stdexcept>

namespace polyenum {

Rational rat_from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    v.canonicalize();
    return v;
}

std::string rat_to_string(const Rational& v) {
    return v.get_str();
}

std::optional<Rational> rat_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    const mpz_class& num = v.get_num();
    const mpz_class& den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace polyenum
