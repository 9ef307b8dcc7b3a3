#include "iihopf/rational.hpp"

namespace iihopf {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw KernelError("BAD_RATIONAL", "empty rational literal");
    try {
        mpq_class q(s);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw KernelError("BAD_RATIONAL", "malformed rational literal '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw KernelError("DIVISION_BY_ZERO", "negative power of zero");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(num, den);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return Rational(r);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace iihopf
