#pragma once

// Exponential polynomials  sum c * n^i * b^n  in one integer variable n,
// with integer bases b >= 1 (b = 1 is the plain polynomial part).

#include "trigcert/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trigcert {

class ExpPoly {
public:
    using Key = std::pair<unsigned long, unsigned>;  // (base, power of n)

    ExpPoly() = default;
    ExpPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    ExpPoly(long c);             // NOLINT(google-explicit-constructor)

    static ExpPoly n(unsigned power = 1);
    static ExpPoly exp(unsigned long base);
    /// sum_i coeffs[i] n^i times base^n.
    static ExpPoly poly(const std::vector<long>& coeffs, unsigned long base = 1);
    /// sum_i coeffs[i] (n - n0)^i times base^n, per base.
    static ExpPoly from_shifted(const std::map<unsigned long, std::vector<Rational>>& coeffs, long n0);

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coefficient(unsigned long base, unsigned power) const;

    ExpPoly& operator+=(const ExpPoly& b);
    ExpPoly& operator-=(const ExpPoly& b);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator-(const ExpPoly& a) { return ExpPoly() - a; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

    /// e(n + by)
    ExpPoly shift(unsigned by = 1) const;
    Rational eval(long n) const;

    /// Per base, the coefficients of the polynomial factor in powers of (n - n0).
    std::map<unsigned long, std::vector<Rational>> expand_at(long n0) const;

    std::string to_string() const;

private:
    std::map<Key, Rational> terms_;
    void add(const Key& k, const Rational& c);
};

/// Description of the first (base, power) whose coefficients differ, or
/// nullopt when a == b.
std::optional<std::string> first_difference(const ExpPoly& a, const ExpPoly& b);

}  // namespace trigcert
