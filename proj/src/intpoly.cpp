#include "springergreen/intpoly.hpp"

#include <algorithm>
#include <ostream>

namespace sg {

const Int IntPoly::zero_ = 0;

IntPoly::IntPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPoly IntPoly::t() {
    return monomial(1);
}

IntPoly IntPoly::monomial(int k, Int coeff) {
    if (k < 0) throw Error("monomial: negative exponent");
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = std::move(coeff);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero_;
    return c_[k];
}

Int IntPoly::evaluate(const Int& v) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

IntPoly IntPoly::reversed(int d) const {
    if (degree() > d)
        throw InternalError("reversed: degree " + std::to_string(degree()) +
                            " exceeds bound " + std::to_string(d));
    std::vector<Int> out(d + 1, Int(0));
    for (int k = 0; k <= degree(); ++k) out[d - k] = c_[k];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (Int& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    normalize();
    return *this;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const Int& a = c_[k];
        if (a == 0) continue;
        const bool neg = a < 0;
        Int mag = neg ? Int(-a) : a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (mag == 1 && k > 0);
        if (!unit) out += mag.get_str();
        if (k >= 1) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << p.str();
}

} // namespace sg
