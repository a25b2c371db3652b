#include "nichols/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace nichols {

namespace {

bool is_prime(unsigned p) {
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact division of integer polynomials, constant term first. The divisor
// must be monic up to sign of its leading coefficient.
std::vector<mpz_class> zpoly_divide(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    check(!den.empty(), "zpoly_divide: zero divisor");
    size_t dd = den.size() - 1;
    check(num.size() >= den.size(), "zpoly_divide: degree underflow");
    std::vector<mpz_class> quot(num.size() - dd, 0);
    const mpz_class& lead = den.back();
    for (size_t i = num.size(); i-- > dd;) {
        if (num[i] == 0)
            continue;
        mpz_class q = num[i] / lead;
        check(q * lead == num[i], "zpoly_divide: not exact");
        quot[i - dd] = q;
        for (size_t j = 0; j <= dd; ++j)
            num[i - dd + j] -= q * den[j];
    }
    for (const auto& c : num)
        check(c == 0, "zpoly_divide: nonzero remainder");
    return quot;
}

// Remainder of a mod m over F_p, coefficients in [0,p), m monic.
std::vector<unsigned> fp_rem(std::vector<unsigned> a, const std::vector<unsigned>& m, unsigned p) {
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned c = a.back() % p;
        a.pop_back();
        if (c == 0)
            continue;
        // a -= c * m * x^k, computed as a += (p-c)*m piecewise
        for (size_t j = 0; j < dm; ++j) {
            unsigned long v = (a[a.size() - dm + j] + (unsigned long)(p - c) * m[j]) % p;
            a[a.size() - dm + j] = (unsigned)v;
        }
    }
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
    check(n >= 1, "cyclotomic order must be >= 1");
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, computed bottom-up.
    static std::mutex mu;
    static std::map<unsigned, std::vector<mpz_class>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    for (unsigned m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m))
            continue;
        std::vector<mpz_class> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0)
                num = zpoly_divide(std::move(num), cache.at(d));
        cache[m] = std::move(num);
    }
    return cache.at(n);
}

FieldContext::FieldContext(const FieldSpec& spec) : spec_(spec) {
    unsigned p = spec.characteristic;
    unsigned n = spec.cyclotomic_order;
    check(n >= 1, "cyclotomic order must be >= 1");
    check(p == 0 || is_prime(p), "characteristic must be 0 or prime");
    if (p == 0) {
        auto phi = cyclotomic_polynomial(n);
        modulus_ = phi;
        degree_ = phi.size() - 1;
        return;
    }
    check(gcd_u(p, n) == 1, "characteristic must not divide the cyclotomic order");
    // Multiplicative order of p mod n = degree of every irreducible factor
    // of Phi_n over F_p.
    unsigned d = 1;
    {
        unsigned long r = p % n;
        while (r != 1 % n) {
            r = r * p % n;
            ++d;
            check(d <= n, "order computation failed");
        }
    }
    double size = 1;
    for (unsigned i = 0; i < d; ++i)
        size *= p;
    check(size <= (1 << 20), "root adjunction cap exceeded (p^d too large)");
    auto phi = cyclotomic_polynomial(n);
    std::vector<unsigned> phi_p(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) {
        mpz_class r = phi[i] % p;
        if (r < 0)
            r += p;
        phi_p[i] = (unsigned)r.get_ui();
    }
    // First monic degree-d divisor in coefficient-tuple order; every such
    // divisor is irreducible since all irreducible factors have degree d.
    std::vector<unsigned> cand(d + 1, 0);
    cand[d] = 1;
    unsigned long total = 1;
    for (unsigned i = 0; i < d; ++i)
        total *= p;
    bool found = false;
    for (unsigned long code = 0; code < total && !found; ++code) {
        unsigned long c = code;
        for (unsigned i = 0; i < d; ++i) {
            cand[i] = (unsigned)(c % p);
            c /= p;
        }
        if (fp_rem(phi_p, cand, p).empty())
            found = true;
    }
    check(found, "no irreducible factor found (internal)");
    degree_ = d;
    modulus_.assign(d + 1, 0);
    for (unsigned i = 0; i <= d; ++i)
        modulus_[i] = cand[i];
}

Field FieldContext::get(const FieldSpec& spec) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, const FieldContext*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.characteristic, spec.cyclotomic_order);
    auto it = registry.find(key);
    if (it != registry.end())
        return it->second;
    const FieldContext* ctx = new FieldContext(spec);  // interned for process lifetime
    registry[key] = ctx;
    return ctx;
}

std::string FieldContext::describe() const {
    std::ostringstream os;
    if (spec_.characteristic == 0)
        os << "Q";
    else
        os << "F" << spec_.characteristic;
    if (degree_ > 1 || spec_.cyclotomic_order > 2)
        os << "(zeta_" << spec_.cyclotomic_order << ")";
    return os.str();
}

void FieldContext::normalize_coeff(mpq_class& c) const {
    if (spec_.characteristic == 0)
        return;
    check(c.get_den() == 1, "char-p coefficient with denominator (internal)");
    mpz_class r = c.get_num() % spec_.characteristic;
    if (r < 0)
        r += spec_.characteristic;
    c = r;
}

void FieldContext::reduce(std::vector<mpq_class>& v) const {
    const unsigned d = degree_;
    for (size_t i = v.size(); i-- > d;) {
        if (sgn(v[i]) == 0)
            continue;
        mpq_class c;
        swap(c, v[i]);
        normalize_coeff(c);
        if (sgn(c) == 0)
            continue;
        for (unsigned j = 0; j < d; ++j) {
            if (modulus_[j] == 0)
                continue;
            v[i - d + j] -= c * modulus_[j];
        }
    }
    if (v.size() > d)
        v.resize(d);
    for (auto& c : v)
        normalize_coeff(c);
}

Scalar::Scalar(Field f, long value) : f_(f) {
    check(f != nullptr, "scalar without field");
    mpq_class v(value);
    f->normalize_coeff(v);
    if (sgn(v) != 0)
        c_.push_back(std::move(v));
}

Scalar::Scalar(Field f, const mpq_class& value) : f_(f) {
    check(f != nullptr, "scalar without field");
    mpq_class v(value);
    v.canonicalize();
    f->normalize_coeff(v);
    if (sgn(v) != 0)
        c_.push_back(std::move(v));
}

Scalar Scalar::zeta(Field f) {
    Scalar s(f);
    if (f->degree() == 1) {
        // zeta is a prime-field element: the root of the linear modulus.
        mpq_class root = mpq_class(-f->modulus()[0]);
        f->normalize_coeff(root);
        if (sgn(root) != 0)
            s.c_.push_back(root);
        return s;
    }
    s.c_.assign(2, mpq_class(0));
    s.c_[1] = 1;
    return s;
}

void Scalar::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

bool Scalar::is_one() const {
    return c_.size() == 1 && c_[0] == 1;
}

bool Scalar::is_integer() const {
    if (c_.empty())
        return true;
    return c_.size() == 1 && c_[0].get_den() == 1;
}

mpz_class Scalar::to_integer() const {
    if (c_.empty())
        return 0;
    check(is_integer(), "scalar is not an integer");
    return c_[0].get_num();
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& c : r.c_) {
        c = -c;
        f_->normalize_coeff(c);
    }
    r.trim();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(f_ == o.f_, "field mismatch");
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
        f_->normalize_coeff(c_[i]);
    }
    trim();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check(f_ == o.f_, "field mismatch");
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
        f_->normalize_coeff(c_[i]);
    }
    trim();
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a.f_ == b.f_, "field mismatch");
    Scalar r(a.f_);
    if (a.is_zero() || b.is_zero())
        return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0)
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    a.f_->reduce(r.c_);
    r.trim();
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero())
        return;
    if (f_ == nullptr)
        f_ = a.f_;
    check(f_ == a.f_ && f_ == b.f_, "field mismatch");
    size_t need = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < need)
        c_.resize(need, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0)
                continue;
            c_[i + j] -= a.c_[i] * b.c_[j];
        }
    }
    f_->reduce(c_);
    trim();
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_)
        return false;
    if (c_.size() != o.c_.size())
        return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

Scalar Scalar::inverse() const {
    check(!is_zero(), "inversion of zero");
    // Extended Euclid in k[x] against the modulus.
    const unsigned p = f_->characteristic();
    std::vector<mpq_class> r0, r1(c_), s0, s1;
    r0.reserve(f_->degree() + 1);
    for (const auto& m : f_->modulus()) {
        mpq_class c(m);
        f_->normalize_coeff(c);
        r0.push_back(c);
    }
    s0.clear();             // coefficient of *this in r0
    s1 = {mpq_class(1)};    // coefficient of *this in r1
    auto deg = [](const std::vector<mpq_class>& v) -> int {
        for (size_t i = v.size(); i-- > 0;)
            if (sgn(v[i]) != 0)
                return (int)i;
        return -1;
    };
    auto inv_coeff = [&](const mpq_class& c) -> mpq_class {
        if (p == 0)
            return 1 / c;
        mpz_class out;
        mpz_class mod(p);
        int ok = mpz_invert(out.get_mpz_t(), c.get_num().get_mpz_t(), mod.get_mpz_t());
        check(ok != 0, "non-invertible coefficient (internal)");
        return mpq_class(out);
    };
    while (true) {
        int d1 = deg(r1);
        check(d1 >= 0, "inverse: element not invertible (modulus not coprime?)");
        if (d1 == 0)
            break;
        int d0 = deg(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= (lead0/lead1) x^(d0-d1) * r1, mirrored on s.
        mpq_class q = r0[d0] * inv_coeff(r1[d1]);
        if (p != 0)
            f_->normalize_coeff(q);
        size_t shift = d0 - d1;
        if (s0.size() < s1.size() + shift)
            s0.resize(s1.size() + shift, mpq_class(0));
        for (int i = 0; i <= d1; ++i) {
            r0[i + shift] -= q * r1[i];
            if (p != 0)
                f_->normalize_coeff(r0[i + shift]);
        }
        for (size_t i = 0; i < s1.size(); ++i) {
            s0[i + shift] -= q * s1[i];
            if (p != 0)
                f_->normalize_coeff(s0[i + shift]);
        }
        if (deg(r0) < deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    mpq_class unit = inv_coeff(r1[0]);
    Scalar out(f_);
    out.c_ = s1;
    for (auto& c : out.c_) {
        c *= unit;
        f_->normalize_coeff(c);
    }
    f_->reduce(out.c_);
    out.trim();
    check(!(out * *this != Scalar::one(f_)), "inverse verification failed (internal)");
    return out;
}

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar acc = Scalar::one(f_);
    while (e) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

unsigned Scalar::order(unsigned cap) const {
    check(!is_zero(), "order of zero");
    Scalar one = Scalar::one(f_);
    Scalar acc = *this;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc == one)
            return k;
        acc *= *this;
    }
    return 0;
}

size_t Scalar::height() const {
    size_t h = 0;
    for (const auto& c : c_)
        h += mpz_size(c.get_num().get_mpz_t()) + mpz_size(c.get_den().get_mpz_t());
    return h;
}

std::string Scalar::str() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        mpq_class a = c_[i];
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? "-" : "+");
            if (sgn(a) < 0)
                a = -a;
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1)
                os << a << "*";
            os << "z";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::string Scalar::tuple() const {
    std::ostringstream os;
    for (unsigned i = 0; i < f_->degree(); ++i) {
        if (i)
            os << ",";
        if (i < c_.size())
            os << c_[i];
        else
            os << "0";
    }
    return os.str();
}

Scalar Scalar::from_tuple(Field f, const std::string& text) {
    Scalar s(f);
    auto parts = split(text, ',');
    check(parts.size() == f->degree(), "scalar tuple has wrong length");
    s.c_.resize(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        s.c_[i] = mpq_class(nichols::trim(parts[i]));
        s.c_[i].canonicalize();
        f->normalize_coeff(s.c_[i]);
    }
    s.trim();
    return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
    // signed sum of terms: rational, z, z^k, rational*z^k
    std::string s;
    for (char ch : text)
        if (!isspace((unsigned char)ch))
            s += ch;
    check(!s.empty(), "empty scalar");
    Scalar out(f);
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        check(pos < s.size(), "dangling sign in scalar '" + text + "'");
        mpq_class coef(1);
        bool saw_num = false;
        size_t start = pos;
        while (pos < s.size() && (isdigit((unsigned char)s[pos]) || s[pos] == '/'))
            ++pos;
        if (pos > start) {
            coef = mpq_class(s.substr(start, pos - start));
            coef.canonicalize();
            saw_num = true;
        }
        unsigned power = 0;
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z')) {
            if (s[pos] == '*')
                ++pos;
            check(pos < s.size() && s[pos] == 'z', "expected z in scalar '" + text + "'");
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t st = pos;
                while (pos < s.size() && isdigit((unsigned char)s[pos]))
                    ++pos;
                check(pos > st, "bad exponent in scalar '" + text + "'");
                power = (unsigned)std::stoul(s.substr(st, pos - st));
            }
        } else {
            check(saw_num, "bad term in scalar '" + text + "'");
        }
        Scalar term = Scalar::zeta(f).pow(power) * Scalar(f, mpq_class(sign) * coef);
        out += term;
    }
    return out;
}

}  // namespace nichols
