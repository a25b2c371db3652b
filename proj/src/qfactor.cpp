#include "nichols/qfactor.hpp"

#include <algorithm>
#include <sstream>

namespace nichols {

TracePoly QFactorization::expand() const {
    TracePoly p = TracePoly::constant(lead);
    for (const auto& [sym, mult] : symbols) {
        TracePoly q = qsymbol(lead.field(), sym.count, sym.lambda, sym.power);
        for (unsigned i = 0; i < mult; ++i)
            p *= q;
    }
    return p * remainder;
}

namespace {

std::string symbol_inner(const QSymbol& s) {
    // scalar prefix, then t^k; the unit case wins in characteristic 2
    std::string out;
    Scalar one = Scalar::one(s.lambda.field());
    if (s.lambda == one)
        ;
    else if (s.lambda == -one)
        out += "-";
    else
        out += s.lambda.str() + "*";
    out += "t";
    if (s.power > 1)
        out += "^" + std::to_string(s.power);
    return out;
}

// Candidate lambdas: +z^j then -z^j, j ascending, deduplicated by value.
std::vector<Scalar> lambda_candidates(Field f) {
    std::vector<Scalar> out;
    Scalar z = Scalar::zeta(f);
    unsigned n = f->zeta_order();
    for (int sign = 0; sign < 2; ++sign)
        for (unsigned j = 0; j < n; ++j) {
            Scalar cand = z.pow(j);
            if (sign)
                cand = -cand;
            if (std::find(out.begin(), out.end(), cand) == out.end())
                out.push_back(cand);
        }
    return out;
}

}  // namespace

QFactorization qfactor(const TracePoly& p, const FactorBounds& bounds) {
    Field f = p.field();
    check(!p.is_zero(), "cannot factor the zero polynomial");
    QFactorization out;
    TracePoly rest = p;
    // pull out a monomial factor so the constant term is a unit
    unsigned val = 0;
    while (rest.coeff(val).is_zero())
        ++val;
    if (val > 0) {
        std::vector<Scalar> c(rest.coeffs().begin() + val, rest.coeffs().end());
        rest = TracePoly(f, std::move(c));
    }
    out.lead = rest.coeff(0);
    rest = (rest.exact_div(TracePoly::constant(out.lead))).first;

    unsigned max_k = bounds.max_power ? bounds.max_power : (unsigned)std::max(rest.degree(), 0);
    auto lambdas = lambda_candidates(f);
    for (unsigned k = 1; k <= max_k && rest.degree() > 0; ++k) {
        for (unsigned count = bounds.max_count; count >= 2 && rest.degree() > 0; --count) {
            for (const auto& lam : lambdas) {
                if ((int)(k * (count - 1)) > rest.degree())
                    continue;
                TracePoly sym = qsymbol(f, count, lam, k);
                unsigned mult = 0;
                while (true) {
                    auto [quot, exact] = rest.exact_div(sym);
                    if (!exact)
                        break;
                    rest = quot;
                    ++mult;
                }
                if (mult)
                    out.symbols.push_back({QSymbol{count, lam, k}, mult});
            }
        }
    }
    if (val > 0) {
        TracePoly shift = TracePoly::monomial(Scalar::one(f), val);
        rest = shift * rest;
    }
    out.remainder = rest;
    // canonical order: (k, N, discrete-log index of lambda)
    auto lam_index = [&](const Scalar& s) {
        for (size_t i = 0; i < lambdas.size(); ++i)
            if (lambdas[i] == s)
                return i;
        return lambdas.size();
    };
    std::sort(out.symbols.begin(), out.symbols.end(), [&](const auto& a, const auto& b) {
        if (a.first.power != b.first.power)
            return a.first.power < b.first.power;
        if (a.first.count != b.first.count)
            return a.first.count < b.first.count;
        return lam_index(a.first.lambda) < lam_index(b.first.lambda);
    });
    return out;
}

std::string QFactorization::str() const {
    std::ostringstream os;
    bool first = true;
    if (!lead.is_one()) {
        std::string ls = lead.str();
        bool needs_parens = ls.find('+') != std::string::npos || ls.find('-', 1) != std::string::npos;
        os << (needs_parens ? "(" + ls + ")" : ls);
        first = false;
    }
    for (const auto& [sym, mult] : symbols) {
        if (!first)
            os << " ";
        first = false;
        os << "(" << sym.count << ")_{" << symbol_inner(sym) << "}";
        if (mult > 1)
            os << "^" << mult;
    }
    if (!(remainder == TracePoly::one(remainder.field()))) {
        if (!first)
            os << " ";
        os << "[" << remainder.str() << "]";
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

std::string QFactorization::machine() const {
    std::ostringstream os;
    os << lead.str() << ";";
    bool first = true;
    for (const auto& [sym, mult] : symbols)
        for (unsigned i = 0; i < mult; ++i) {
            os << (first ? " " : ", ");
            first = false;
            os << "(" << sym.count << "," << sym.lambda.str() << "," << sym.power << ")";
        }
    if (first)
        os << " -";
    os << "; " << remainder.str();
    return os.str();
}

TracePoly parse_qproduct(Field f, const std::string& text) {
    TracePoly acc = TracePoly::one(f);
    std::string s = trim(text);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && (isspace((unsigned char)s[pos]) || s[pos] == '*'))
            ++pos;
    };
    skip_ws();
    // optional leading scalar up to the first '('
    if (pos < s.size() && s[pos] != '(') {
        size_t start = pos;
        while (pos < s.size() && s[pos] != '(')
            ++pos;
        std::string lead = trim(s.substr(start, pos - start));
        if (!lead.empty())
            acc = acc * Scalar::parse(f, lead);
    }
    while (true) {
        skip_ws();
        if (pos >= s.size())
            break;
        check(s[pos] == '(', "expected '(' in q-product '" + text + "'");
        size_t close = s.find(')', pos);
        check(close != std::string::npos, "unbalanced '(' in q-product");
        unsigned count = (unsigned)std::stoul(trim(s.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
        check(pos + 1 < s.size() && s[pos] == '_' && s[pos + 1] == '{',
              "expected _{...} in q-product '" + text + "'");
        size_t endb = s.find('}', pos);
        check(endb != std::string::npos, "unbalanced '{' in q-product");
        std::string inner = trim(s.substr(pos + 2, endb - pos - 2));
        pos = endb + 1;
        // inner: [scalar *] t [^k]
        size_t tpos = inner.rfind('t');
        check(tpos != std::string::npos, "missing t in q-symbol '" + inner + "'");
        std::string scal = trim(inner.substr(0, tpos));
        if (!scal.empty() && scal.back() == '*')
            scal = trim(scal.substr(0, scal.size() - 1));
        Scalar lam = Scalar::one(f);
        if (scal == "-")
            lam = -lam;
        else if (!scal.empty())
            lam = Scalar::parse(f, scal);
        unsigned k = 1;
        std::string rest = trim(inner.substr(tpos + 1));
        if (!rest.empty()) {
            check(rest[0] == '^', "bad power in q-symbol '" + inner + "'");
            k = (unsigned)std::stoul(rest.substr(1));
        }
        unsigned mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            size_t st = ++pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos]))
                ++pos;
            mult = (unsigned)std::stoul(s.substr(st, pos - st));
        }
        TracePoly sym = qsymbol(f, count, lam, k);
        for (unsigned i = 0; i < mult; ++i)
            acc *= sym;
    }
    return acc;
}

}  // namespace nichols
