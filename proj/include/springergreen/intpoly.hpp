#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "springergreen/errors.hpp"
#include "springergreen/numeric.hpp"

namespace sg {

// Univariate polynomial in t with arbitrary-precision integer coefficients.
// No trailing zero coefficients are stored; the zero polynomial has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(Int constant);                    // NOLINT: implicit by design
    IntPoly(long constant) : IntPoly(Int(constant)) {}
    IntPoly(int constant) : IntPoly(Int(constant)) {}
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly t();
    static IntPoly monomial(int k, Int coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Int& coeff(int k) const;            // zero beyond the degree
    const std::vector<Int>& coeffs() const { return c_; }

    Int evaluate(const Int& v) const;

    // t^d * p(1/t); requires degree() <= d.
    IntPoly reversed(int d) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }

    bool operator==(const IntPoly&) const = default;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> c_;
    static const Int zero_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

} // namespace sg
