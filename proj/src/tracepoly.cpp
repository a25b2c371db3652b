#include "nichols/tracepoly.hpp"

#include <sstream>

namespace nichols {

TracePoly::TracePoly(Field f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    trim();
}

TracePoly TracePoly::constant(const Scalar& c) {
    TracePoly p(c.field());
    if (!c.is_zero())
        p.c_.push_back(c);
    return p;
}

TracePoly TracePoly::monomial(const Scalar& c, unsigned k) {
    TracePoly p(c.field());
    if (!c.is_zero()) {
        p.c_.assign(k + 1, Scalar::zero(c.field()));
        p.c_[k] = c;
    }
    return p;
}

void TracePoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Scalar TracePoly::coeff(size_t i) const {
    if (i < c_.size())
        return c_[i];
    return Scalar::zero(f_);
}

void TracePoly::set_coeff(size_t i, const Scalar& v) {
    if (i >= c_.size())
        c_.resize(i + 1, Scalar::zero(f_));
    c_[i] = v;
    trim();
}

TracePoly TracePoly::operator+(const TracePoly& o) const {
    check(f_ == o.f_, "field mismatch");
    TracePoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size())
            r.c_[i] += c_[i];
        if (i < o.c_.size())
            r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

TracePoly TracePoly::operator-(const TracePoly& o) const {
    check(f_ == o.f_, "field mismatch");
    TracePoly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size())
            r.c_[i] += c_[i];
        if (i < o.c_.size())
            r.c_[i] -= o.c_[i];
    }
    r.trim();
    return r;
}

TracePoly TracePoly::operator*(const TracePoly& o) const {
    check(f_ == o.f_, "field mismatch");
    TracePoly r(f_);
    if (is_zero() || o.is_zero())
        return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero())
                continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

TracePoly TracePoly::operator*(const Scalar& s) const {
    TracePoly r(f_);
    if (s.is_zero())
        return r;
    r.c_ = c_;
    for (auto& c : r.c_)
        c *= s;
    r.trim();
    return r;
}

bool TracePoly::operator==(const TracePoly& o) const {
    if (f_ != o.f_ || c_.size() != o.c_.size())
        return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

std::pair<TracePoly, bool> TracePoly::exact_div(const TracePoly& d) const {
    check(f_ == d.f_, "field mismatch");
    check(!d.is_zero(), "division by zero polynomial");
    TracePoly quot(f_);
    if (is_zero())
        return {quot, true};
    if (degree() < d.degree())
        return {quot, false};
    std::vector<Scalar> rem = c_;
    quot.c_.assign(c_.size() - d.c_.size() + 1, Scalar::zero(f_));
    const int dd = d.degree();
    Scalar lead_inv = d.c_.back().inverse();
    for (int i = (int)rem.size() - 1; i >= dd; --i) {
        if (rem[i].is_zero())
            continue;
        Scalar q = rem[i] * lead_inv;
        int shift = i - dd;
        quot.c_[shift] = q;
        for (int j = 0; j <= dd; ++j)
            rem[shift + j] -= q * d.c_[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero())
            return {TracePoly(f_), false};
    quot.trim();
    return {quot, true};
}

Scalar TracePoly::eval(const Scalar& a) const {
    Scalar acc = Scalar::zero(f_);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= a;
        acc += c_[i];
    }
    return acc;
}

Scalar TracePoly::at_one() const {
    Scalar acc = Scalar::zero(f_);
    for (const auto& c : c_)
        acc += c;
    return acc;
}

TracePoly TracePoly::substitute(const Scalar& lambda, unsigned k) const {
    check(k >= 1, "substitute needs k >= 1");
    TracePoly r(f_);
    if (is_zero())
        return r;
    r.c_.assign((c_.size() - 1) * k + 1, Scalar::zero(f_));
    Scalar pw = Scalar::one(f_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j].is_zero())
            r.c_[j * k] = c_[j] * pw;
        pw *= lambda;
    }
    r.trim();
    return r;
}

TracePoly TracePoly::reversed(unsigned L) const {
    check(degree() <= (int)L, "reverse: degree exceeds L");
    TracePoly r(f_);
    r.c_.assign(L + 1, Scalar::zero(f_));
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[L - i] = c_[i];
    r.trim();
    return r;
}

std::string TracePoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        std::string cs = c_[i].str();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first)
            os << (negated ? "-" : "");
        else
            os << (negated ? " - " : " + ");
        first = false;
        bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") {
                os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            }
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

TracePoly qsymbol(Field f, unsigned count, const Scalar& lambda, unsigned power) {
    check(count >= 1, "qsymbol needs N >= 1");
    check(power >= 1, "qsymbol needs k >= 1");
    check(!lambda.is_zero(), "qsymbol needs lambda != 0");
    TracePoly p(f);
    std::vector<Scalar> c((count - 1) * power + 1, Scalar::zero(f));
    Scalar pw = Scalar::one(f);
    for (unsigned j = 0; j < count; ++j) {
        c[j * power] = pw;
        pw *= lambda;
    }
    return TracePoly(f, std::move(c));
}

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

long ipoly_eval1(const IntPoly& a) {
    long s = 0;
    for (long c : a)
        s += c;
    return s;
}

bool ipoly_palindromic(const IntPoly& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != a[a.size() - 1 - i])
            return false;
    return true;
}

std::string ipoly_str(const IntPoly& a, const std::string& var) {
    if (a.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!first)
            os << (a[i] < 0 ? " - " : " + ");
        else if (a[i] < 0)
            os << "-";
        first = false;
        long v = std::abs(a[i]);
        if (i == 0)
            os << v;
        else {
            if (v != 1)
                os << v << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

TracePoly ipoly_to_trace(Field f, const IntPoly& a) {
    std::vector<Scalar> c;
    c.reserve(a.size());
    for (long v : a)
        c.push_back(Scalar(f, v));
    return TracePoly(f, std::move(c));
}

TracePoly reduce_mod(const TracePoly& p, Field target) {
    check(target->characteristic() > 0, "reduce_mod needs a char-p target");
    std::vector<Scalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& s : p.coeffs()) {
        check(s.is_integer(), "reduce_mod: coefficient is not an integer");
        mpz_class v = s.to_integer();
        c.push_back(Scalar(target, mpq_class(v)));
    }
    return TracePoly(target, std::move(c));
}

}  // namespace nichols
