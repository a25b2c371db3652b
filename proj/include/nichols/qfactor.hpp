#pragma once

#include <string>
#include <vector>

#include "nichols/tracepoly.hpp"

namespace nichols {

// (count)_{lambda t^power}
struct QSymbol {
    unsigned count;
    Scalar lambda;
    unsigned power;
};

// lead * prod symbols^mult * remainder == the factored polynomial, exactly.
struct QFactorization {
    Scalar lead;
    std::vector<std::pair<QSymbol, unsigned>> symbols;  // canonical order, with multiplicities
    TracePoly remainder;

    TracePoly expand() const;
    bool clean() const { return remainder == TracePoly::one(remainder.field()); }
    std::string str() const;      // factored product in table notation, e.g. "(2)_{-t}^2 (3)_{t}"
    std::string machine() const;  // "c; (N,lambda,k) ...; remainder"
};

struct FactorBounds {
    unsigned max_count = 5;  // largest symbol (N)
    unsigned max_power = 0;  // 0: up to the polynomial degree
};

// Greedy extraction: powers ascending, counts descending, lambda over the
// signed powers of the adjoined root in discrete-log order; divides out
// while exact. Whatever survives lands in the remainder.
QFactorization qfactor(const TracePoly& p, const FactorBounds& bounds = {});

// Parses a product in table notation: optional leading rational, then q-symbols
// "(N)_{X}" with optional "^e", X = [scalar *] t [^k]. Example:
// "2 (2)_{t} (3)_{-z^2*t^2}^2".
TracePoly parse_qproduct(Field f, const std::string& text);

}  // namespace nichols
