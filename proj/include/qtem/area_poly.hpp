#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "qtem/rational.hpp"

namespace qtem {

// One term q * L1^i L2^j L3^k of a polynomial in the area coordinates.
struct AreaMonomial {
    int i = 0, j = 0, k = 0;
    Rational coef{0};
};

// Polynomial in the three area coordinates with rational coefficients, kept
// in a canonical form: terms sorted by exponent triple, no zero coefficients,
// no duplicate triples.
class AreaPolynomial {
  public:
    AreaPolynomial() = default;
    explicit AreaPolynomial(std::vector<AreaMonomial> terms) : terms_(std::move(terms)) {
        canonicalize();
    }

    static AreaPolynomial monomial(int i, int j, int k, Rational coef) {
        AreaPolynomial p;
        p.terms_.push_back({i, j, k, std::move(coef)});
        p.canonicalize();
        return p;
    }

    static AreaPolynomial constant(Rational c) { return monomial(0, 0, 0, std::move(c)); }

    const std::vector<AreaMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AreaPolynomial& operator+=(const AreaPolynomial& rhs) {
        terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
        canonicalize();
        return *this;
    }

    friend AreaPolynomial operator+(AreaPolynomial lhs, const AreaPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend AreaPolynomial operator*(const AreaPolynomial& lhs, const AreaPolynomial& rhs) {
        std::vector<AreaMonomial> prod;
        prod.reserve(lhs.terms_.size() * rhs.terms_.size());
        for (const auto& s : lhs.terms_) {
            for (const auto& t : rhs.terms_) {
                prod.push_back({s.i + t.i, s.j + t.j, s.k + t.k, s.coef * t.coef});
            }
        }
        return AreaPolynomial(std::move(prod));
    }

    friend AreaPolynomial operator*(AreaPolynomial p, const Rational& s) {
        for (auto& t : p.terms_) t.coef *= s;
        p.canonicalize();
        return p;
    }

    friend AreaPolynomial operator*(const Rational& s, AreaPolynomial p) {
        return std::move(p) * s;
    }

    friend bool operator==(const AreaPolynomial& a, const AreaPolynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t n = 0; n < a.terms_.size(); ++n) {
            const auto& s = a.terms_[n];
            const auto& t = b.terms_[n];
            if (s.i != t.i || s.j != t.j || s.k != t.k || s.coef != t.coef) return false;
        }
        return true;
    }

  private:
    void canonicalize() {
        auto key = [](const AreaMonomial& m) { return std::tuple(m.i, m.j, m.k); };
        std::sort(terms_.begin(), terms_.end(),
                  [&](const AreaMonomial& s, const AreaMonomial& t) { return key(s) < key(t); });
        std::vector<AreaMonomial> merged;
        for (auto& t : terms_) {
            if (!merged.empty() && key(merged.back()) == key(t)) {
                merged.back().coef += t.coef;
                if (merged.back().coef == 0) merged.pop_back();
            } else if (t.coef != 0) {
                merged.push_back(std::move(t));
            }
        }
        terms_ = std::move(merged);
    }

    std::vector<AreaMonomial> terms_;
};

// Integral of L1^i L2^j L3^k over a triangle, divided by the triangle area:
// the closed form is i! j! k! (i+j+k+2)!^-1 times twice the area.
inline Rational integrate_monomial(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0) {
        throw std::invalid_argument("integrate_monomial: negative exponent");
    }
    const Rational num(factorial(static_cast<unsigned>(i)) *
                       factorial(static_cast<unsigned>(j)) *
                       factorial(static_cast<unsigned>(k)));
    return 2 * num / Rational(factorial(static_cast<unsigned>(i + j + k + 2)));
}

// Integral of a polynomial over the triangle as a multiple of the area, i.e.
// the caller multiplies by the (rational) area to get the actual integral.
inline Rational integrate_poly(const AreaPolynomial& p) {
    Rational sum(0);
    for (const auto& t : p.terms()) {
        sum += t.coef * integrate_monomial(t.i, t.j, t.k);
    }
    return sum;
}

} // namespace qtem
