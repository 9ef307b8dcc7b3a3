#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "iihopf/rational.hpp"

namespace iihopf {

/// A letter of the decoration alphabet S. Three kinds:
///
///   Zero  -- the distinguished point 0
///   Mul   -- q * x1^e1 * ... * xk^ek, a nonzero rational times a formal
///            monomial in named symbols (pure rationals have no symbols;
///            quotients of symbols are Muls with negative exponents)
///   Cyc   -- zeta_N^k, a root of unity given by its exponent k mod N
///
/// Decorations away from Zero form a commutative group under multiplication,
/// which is what the polylogarithm dictionary and the rescaling identities
/// need. Symbols never mix with roots of unity in one decoration.
class Decoration {
public:
    enum class Kind { Zero, Mul, Cyc };

    Decoration() : kind_(Kind::Zero) {}

    static Decoration zero() { return Decoration(); }
    static Decoration rational(const Rational& q);
    static Decoration integer(long n) { return rational(Rational(n)); }
    static Decoration symbol(const std::string& name);
    /// zeta_N^k; normalizes k mod N, reduces to a primitive root, and folds
    /// N <= 2 into the rationals (+1, -1).
    static Decoration root_of_unity(long k, long N);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_rational() const { return kind_ == Kind::Zero || (kind_ == Kind::Mul && powers_.empty()); }
    bool is_symbolic() const { return kind_ == Kind::Mul && !powers_.empty(); }
    bool is_root_of_unity() const;

    /// Value as an exact rational; throws unless is_rational().
    Rational as_rational() const;

    /// Exponent pair (k, N) viewing the decoration as zeta_N^k; rational +1
    /// and -1 are accepted as exponents 0 and N/2. Throws otherwise.
    std::pair<long, long> as_root_exponent(long N) const;

    const Rational& coef() const { return coef_; }
    const std::vector<std::pair<std::string, int>>& powers() const { return powers_; }
    long cyc_k() const { return k_; }
    long cyc_n() const { return n_; }

    Decoration operator*(const Decoration& o) const;
    Decoration inverse() const;
    Decoration pow(int e) const;

    friend bool operator==(const Decoration& a, const Decoration& b);
    friend bool operator!=(const Decoration& a, const Decoration& b) { return !(a == b); }
    friend bool operator<(const Decoration& a, const Decoration& b);

    std::string str() const;
    std::string latex() const;

private:
    Kind kind_;
    Rational coef_{1};                                  // Mul
    std::vector<std::pair<std::string, int>> powers_;   // Mul, sorted by name
    long k_ = 0, n_ = 1;                                // Cyc

    void normalize();
};

using DecorationList = std::vector<Decoration>;

}  // namespace iihopf
