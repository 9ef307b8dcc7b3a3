#include "iihopf/decoration.hpp"

#include <algorithm>
#include <numeric>

namespace iihopf {

Decoration Decoration::rational(const Rational& q) {
    Decoration d;
    if (q.is_zero()) return d;
    d.kind_ = Kind::Mul;
    d.coef_ = q;
    return d;
}

Decoration Decoration::symbol(const std::string& name) {
    if (name.empty()) throw KernelError("BAD_SYMBOL", "empty symbol name");
    Decoration d;
    d.kind_ = Kind::Mul;
    d.coef_ = Rational(1);
    d.powers_ = {{name, 1}};
    return d;
}

Decoration Decoration::root_of_unity(long k, long N) {
    if (N <= 0) throw KernelError("BAD_ROOT", "root of unity needs N > 0");
    Decoration d;
    d.kind_ = Kind::Cyc;
    d.k_ = ((k % N) + N) % N;
    d.n_ = N;
    d.normalize();
    return d;
}

void Decoration::normalize() {
    if (kind_ == Kind::Mul && coef_.is_zero()) {
        kind_ = Kind::Zero;
        powers_.clear();
        return;
    }
    if (kind_ != Kind::Cyc) return;
    k_ = ((k_ % n_) + n_) % n_;
    long g = std::gcd(k_, n_);
    if (g > 1) { k_ /= g; n_ /= g; }
    if (n_ == 1) { *this = rational(Rational(1)); return; }
    if (n_ == 2) { *this = rational(Rational(-1)); return; }
}

bool Decoration::is_root_of_unity() const {
    if (kind_ == Kind::Cyc) return true;
    if (kind_ == Kind::Mul && powers_.empty()) return coef_.is_one() || coef_ == Rational(-1);
    return false;
}

Rational Decoration::as_rational() const {
    if (kind_ == Kind::Zero) return Rational(0);
    if (kind_ == Kind::Mul && powers_.empty()) return coef_;
    throw KernelError("NOT_RATIONAL", "decoration '" + str() + "' is not rational");
}

std::pair<long, long> Decoration::as_root_exponent(long N) const {
    if (kind_ == Kind::Cyc) {
        if (N % n_ != 0)
            throw KernelError("MIXED_ALPHABET", "root of unity order " + std::to_string(n_) +
                                                    " does not divide " + std::to_string(N));
        return {k_ * (N / n_), N};
    }
    if (kind_ == Kind::Mul && powers_.empty()) {
        if (coef_.is_one()) return {0, N};
        if (coef_ == Rational(-1)) {
            if (N % 2 != 0) throw KernelError("MIXED_ALPHABET", "-1 is not a root of odd order");
            return {N / 2, N};
        }
    }
    throw KernelError("MIXED_ALPHABET", "decoration '" + str() + "' is not a root of unity");
}

Decoration Decoration::operator*(const Decoration& o) const {
    if (is_zero() || o.is_zero()) return zero();
    if (kind_ == Kind::Cyc || o.kind_ == Kind::Cyc) {
        if (is_symbolic() || o.is_symbolic())
            throw KernelError("MIXED_ALPHABET", "cannot mix symbols and roots of unity");
        // both are roots of unity (rational +-1 counts)
        long N = std::lcm(kind_ == Kind::Cyc ? n_ : 2L, o.kind_ == Kind::Cyc ? o.n_ : 2L);
        auto [ka, Na] = as_root_exponent(N);
        auto [kb, Nb] = o.as_root_exponent(N);
        (void)Na; (void)Nb;
        return root_of_unity(ka + kb, N);
    }
    Decoration r;
    r.kind_ = Kind::Mul;
    r.coef_ = coef_ * o.coef_;
    // merge sorted exponent lists
    auto a = powers_.begin();
    auto b = o.powers_.begin();
    while (a != powers_.end() || b != o.powers_.end()) {
        if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
            r.powers_.push_back(*a++);
        } else if (a == powers_.end() || b->first < a->first) {
            r.powers_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.powers_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    r.normalize();
    return r;
}

Decoration Decoration::inverse() const {
    if (is_zero()) throw KernelError("DIVISION_BY_ZERO", "inverse of decoration 0");
    if (kind_ == Kind::Cyc) return root_of_unity(-k_, n_);
    Decoration r;
    r.kind_ = Kind::Mul;
    r.coef_ = coef_.inverse();
    r.powers_ = powers_;
    for (auto& p : r.powers_) p.second = -p.second;
    return r;
}

Decoration Decoration::pow(int e) const {
    if (e == 0) return rational(Rational(1));
    if (is_zero()) {
        if (e < 0) throw KernelError("DIVISION_BY_ZERO", "negative power of decoration 0");
        return zero();
    }
    if (kind_ == Kind::Cyc) return root_of_unity(k_ * e, n_);
    Decoration r;
    r.kind_ = Kind::Mul;
    r.coef_ = coef_.pow(e);
    r.powers_ = powers_;
    for (auto& p : r.powers_) p.second *= e;
    return r;
}

bool operator==(const Decoration& a, const Decoration& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Decoration::Kind::Zero: return true;
        case Decoration::Kind::Mul: return a.coef_ == b.coef_ && a.powers_ == b.powers_;
        case Decoration::Kind::Cyc: return a.k_ == b.k_ && a.n_ == b.n_;
    }
    return false;
}

bool operator<(const Decoration& a, const Decoration& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    switch (a.kind_) {
        case Decoration::Kind::Zero:
            return false;
        case Decoration::Kind::Mul:
            if (a.powers_ != b.powers_) return a.powers_ < b.powers_;
            return a.coef_ < b.coef_;
        case Decoration::Kind::Cyc:
            if (a.n_ != b.n_) return a.n_ < b.n_;
            return a.k_ < b.k_;
    }
    return false;
}

std::string Decoration::str() const {
    switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::Cyc:
            return "w" + std::to_string(k_) + "/" + std::to_string(n_);
        case Kind::Mul: {
            std::string num, den;
            auto emit = [](std::string& out, const std::string& name, int e) {
                if (!out.empty()) out += "*";
                out += name;
                if (e != 1) out += "^" + std::to_string(e);
            };
            for (const auto& [name, e] : powers_) {
                if (e > 0) emit(num, name, e);
                else emit(den, name, -e);
            }
            Rational c = coef_;
            std::string prefix;
            if (c == Rational(-1) && !num.empty()) {
                prefix = "-";
            } else if (!c.is_one() || num.empty()) {
                prefix = Rational(c.numerator()).str();
                if (!num.empty()) prefix += "*";
            }
            if (c.denominator() != 1) {
                std::string d = c.denominator().get_str();
                den = den.empty() ? d : d + "*" + den;
            }
            std::string out = prefix + num;
            if (!den.empty()) out += "/" + den;
            return out;
        }
    }
    return "?";
}

std::string Decoration::latex() const {
    switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::Cyc:
            return "\\zeta_{" + std::to_string(n_) + "}^{" + std::to_string(k_) + "}";
        case Kind::Mul: {
            std::string num, den;
            auto emit = [](std::string& out, const std::string& name, int e) {
                if (!out.empty()) out += " ";
                out += name;
                if (e != 1) out += "^{" + std::to_string(e) + "}";
            };
            for (const auto& [name, e] : powers_) {
                if (e > 0) emit(num, name, e);
                else emit(den, name, -e);
            }
            std::string cn = Rational(coef_.numerator()).str();
            if (cn == "1" && !num.empty()) cn.clear();
            if (cn == "-1" && !num.empty()) cn = "-";
            std::string top = cn + num;
            if (coef_.denominator() != 1) {
                std::string d = coef_.denominator().get_str();
                den = den.empty() ? d : d + " " + den;
            }
            if (den.empty()) return top;
            return "\\frac{" + top + "}{" + den + "}";
        }
    }
    return "?";
}

}  // namespace iihopf
