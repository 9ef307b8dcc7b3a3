#pragma once

#include <functional>
#include <map>
#include <vector>

#include "iihopf/generator.hpp"

namespace iihopf {

/// Commutative monomial: multiset of generators as sorted (generator,
/// exponent) pairs. The empty monomial is the scalar 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Generator& g) : factors_{{g, 1}} {}
    static Monomial one() { return Monomial(); }

    const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int weight() const;
    int depth() const;
    /// Total number of generator factors counted with multiplicity.
    int degree() const;

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<Generator, int>> factors_;
};

/// Finite Q-linear combination of monomials; no zero coefficients stored.
class LinComb {
public:
    LinComb() = default;
    LinComb(const Rational& c) { if (!c.is_zero()) terms_[Monomial::one()] = c; }  // NOLINT
    explicit LinComb(const Generator& g) { terms_[Monomial(g)] = Rational(1); }
    explicit LinComb(const Monomial& m) { terms_[m] = Rational(1); }

    static LinComb zero() { return LinComb(); }
    static LinComb one() { return LinComb(Rational(1)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Monomial& m, const Rational& c);

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb operator-() const;
    LinComb operator*(const Rational& c) const;
    LinComb operator*(const LinComb& o) const;

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    /// Coefficient of the empty monomial (the counit on weight-graded algebras).
    Rational scalar_part() const;
    /// Component of the given total weight.
    LinComb weight_part(int w) const;
    int max_weight() const;

    /// Applies f to every generator and extends multiplicatively and
    /// linearly (f must be an algebra map for this to be meaningful).
    LinComb map_generators(const std::function<LinComb(const Generator&)>& f) const;

private:
    std::map<Monomial, Rational> terms_;
};

/// Q-linear combination of xs, pruning zero coefficients.
LinComb lin_combine(const std::vector<std::pair<Rational, LinComb>>& xs);

/// Product in the free commutative algebra (same as operator*).
LinComb mono_mul(const LinComb& x, const LinComb& y);

/// k-fold tensor product of monomials with rational coefficients.
class TensorK {
public:
    explicit TensorK(int arity) : k_(arity) {
        if (arity < 1) throw KernelError("BAD_ARITY", "tensor arity must be >= 1");
    }

    int arity() const { return k_; }
    const std::map<std::vector<Monomial>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const std::vector<Monomial>& slots, const Rational& c);
    /// Adds c * (x_1 (x) ... (x) x_k) for LinComb slots, fully expanded.
    void add_product(const std::vector<LinComb>& slots, const Rational& c);

    TensorK& operator+=(const TensorK& o);
    TensorK& operator-=(const TensorK& o);
    friend TensorK operator+(TensorK a, const TensorK& b) { return a += b; }
    friend TensorK operator-(TensorK a, const TensorK& b) { return a -= b; }
    TensorK operator*(const Rational& c) const;
    /// Slotwise (componentwise) product.
    TensorK operator*(const TensorK& o) const;

    friend bool operator==(const TensorK& a, const TensorK& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorK& a, const TensorK& b) { return !(a == b); }

    /// Component where slot i has total weight ws[i].
    TensorK bigraded_part(const std::vector<int>& ws) const;

private:
    int k_;
    std::map<std::vector<Monomial>, Rational> terms_;
};

/// Antisymmetrization (1/2)(x (x) y - y (x) x) of an arity-2 tensor.
TensorK wedge2(const TensorK& t);

/// Additive log symbol of a nonzero decoration: rationals decompose into
/// prime symbols (sign and torsion dropped), roots of unity die, symbols
/// expand by their exponents.
LinComb log_symbol(const Decoration& d);

/// Additive difference symbol [a - b], a != b, reduced per kind: rational
/// differences to prime support, differences of roots of unity to cyclotomic
/// units, common multiplicative content factored out, else a formal symbol.
LinComb diff_symbol(const Decoration& a, const Decoration& b);

/// The four-case weight-1 value log r~(a, b, c): [c-b] - [a-b] generically,
/// with the degenerate cases collapsing to [c-b], -[a-b], or 0.
LinComb rtilde_log(const Decoration& a, const Decoration& b, const Decoration& c);

}  // namespace iihopf
