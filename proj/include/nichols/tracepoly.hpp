#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

// Polynomial in the grading variable t with Scalar coefficients. Trailing
// zeros are trimmed; the zero polynomial has empty coefficient list.
class TracePoly {
public:
    TracePoly() : f_(nullptr) {}
    explicit TracePoly(Field f) : f_(f) {}
    TracePoly(Field f, std::vector<Scalar> coeffs);
    static TracePoly constant(const Scalar& c);
    static TracePoly monomial(const Scalar& c, unsigned k);
    static TracePoly one(Field f) { return constant(Scalar::one(f)); }

    Field field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    Scalar coeff(size_t i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    void set_coeff(size_t i, const Scalar& v);

    TracePoly operator+(const TracePoly& o) const;
    TracePoly operator-(const TracePoly& o) const;
    TracePoly operator*(const TracePoly& o) const;
    TracePoly& operator+=(const TracePoly& o) { return *this = *this + o; }
    TracePoly& operator*=(const TracePoly& o) { return *this = *this * o; }
    TracePoly operator*(const Scalar& s) const;
    bool operator==(const TracePoly& o) const;
    bool operator!=(const TracePoly& o) const { return !(*this == o); }

    // Quotient plus exactness flag; quotient carries the remainder-less part.
    std::pair<TracePoly, bool> exact_div(const TracePoly& d) const;

    Scalar eval(const Scalar& a) const;
    Scalar at_one() const;
    // t -> lambda * t^k applied to the variable: c_j t^j -> c_j lambda^j t^(jk)
    TracePoly substitute(const Scalar& lambda, unsigned k) const;
    // Coefficient reversal c_L..c_0; requires degree <= L.
    TracePoly reversed(unsigned L) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    Field f_;
    std::vector<Scalar> c_;
};

// (N)_{lambda t^k} = 1 + (lambda t^k) + ... + (lambda t^k)^(N-1)
TracePoly qsymbol(Field f, unsigned count, const Scalar& lambda, unsigned power);

// Integer polynomials carry layer dimensions (Hilbert series over Z).
using IntPoly = std::vector<long>;
IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
long ipoly_eval1(const IntPoly& a);
bool ipoly_palindromic(const IntPoly& a);
std::string ipoly_str(const IntPoly& a, const std::string& var = "t");
// Casts into a field (coefficients mod the characteristic).
TracePoly ipoly_to_trace(Field f, const IntPoly& a);

// Reduction of a rational-coefficient polynomial into a char-p field.
// Requires every coefficient to be an integer.
TracePoly reduce_mod(const TracePoly& p, Field target);

}  // namespace nichols
