#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nichols/util.hpp"

namespace nichols {

// The coefficient fields of the engine: Q(zeta_n) in characteristic 0,
// F_p(zeta_n) in characteristic p with gcd(p, n) = 1. All arithmetic is
// exact; there is no floating-point mode.
struct FieldSpec {
    unsigned characteristic = 0;  // 0 or a prime
    unsigned cyclotomic_order = 1;

    bool operator==(const FieldSpec&) const = default;
};

class FieldContext;
using Field = const FieldContext*;

// Interned arithmetic context: the modulus is the n-th cyclotomic polynomial
// over Q, or the lexicographically first monic irreducible factor of it over
// F_p (coefficient-tuple order, constant term first). Contexts live for the
// whole process, so Scalars may hold plain pointers.
class FieldContext {
public:
    static Field get(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    unsigned characteristic() const { return spec_.characteristic; }
    unsigned zeta_order() const { return spec_.cyclotomic_order; }
    unsigned degree() const { return degree_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }
    std::string describe() const;

    // Reduces a raw coefficient vector mod the modulus (and mod p).
    void reduce(std::vector<mpq_class>& v) const;
    void normalize_coeff(mpq_class& c) const;

private:
    FieldContext(const FieldSpec& spec);
    FieldSpec spec_;
    unsigned degree_;
    std::vector<mpz_class> modulus_;  // monic, degree = degree_
};

// Cyclotomic polynomial over Z, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(unsigned n);

class Scalar {
public:
    Scalar() : f_(nullptr) {}
    explicit Scalar(Field f) : f_(f) {}
    Scalar(Field f, long value);
    Scalar(Field f, const mpq_class& value);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    static Scalar zeta(Field f);  // class of x; equals 1 when n = 1

    Field field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_integer() const;      // lies in the prime field with denominator 1
    mpz_class to_integer() const; // requires is_integer()

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;  // throws on zero
    Scalar pow(long e) const;

    // *this -= a*b, the hot path of elimination and matrix folds.
    void sub_mul(const Scalar& a, const Scalar& b);

    // Multiplicative order, or 0 if it exceeds the cap.
    unsigned order(unsigned cap = 1024) const;

    // Crude size proxy used for pivot selection: total limb count.
    size_t height() const;

    // Human form in the adjoined root z, e.g. "1-z^2", "-1/2", "z".
    std::string str() const;
    // Machine form: comma-separated coefficient tuple, lowest degree first.
    std::string tuple() const;
    static Scalar from_tuple(Field f, const std::string& text);
    // Parses the human form (signed rational/z-power sums).
    static Scalar parse(Field f, const std::string& text);

    const std::vector<mpq_class>& coeffs() const { return c_; }

private:
    void trim();
    Field f_;
    std::vector<mpq_class> c_;  // coefficient vector, trailing zeros trimmed
};

}  // namespace nichols
