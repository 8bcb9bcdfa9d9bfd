#include "zcenter/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace zcenter {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Dense integer polynomials, ascending coefficients.
using Poly = std::vector<Int>;

Poly x_pow_minus_one(long n) {
    Poly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials (b monic up to sign not required:
// division here is always exact by construction).
Poly divide_exact(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (a.size() >= b.size()) {
        trim(a);
        if (a.size() < b.size()) break;
        Int c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    }
    return q;
}

const Poly& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without re-entering the lock.
    std::vector<long> todo{n};
    while (!todo.empty()) {
        long m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        Poly p = x_pow_minus_one(m);
        for (long d = 1; d < m; ++d)
            if (m % d == 0) p = divide_exact(std::move(p), cache.at(d));
        trim(p);
        cache.emplace(m, std::move(p));
        todo.pop_back();
    }
    return cache.at(n);
}

// Remainder of p modulo the monic Phi_N, in place.
void reduce_mod_phi(std::vector<Int>& p, const CycloContext& ctx) {
    const auto& phi = ctx.min_poly;
    long deg = ctx.degree;
    for (long d = (long)p.size() - 1; d >= deg; --d) {
        if (p[d] == 0) continue;
        Int c = std::move(p[d]);
        p[d] = 0;
        for (long j = 0; j < deg; ++j) p[d - deg + j] -= c * phi[j];
    }
    p.resize(deg);
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

const CycloContext& cyclo_context(long n) {
    static std::map<long, std::unique_ptr<CycloContext>> cache;
    static std::mutex mtx;
    if (n < 1) throw error("conductor must be >= 1");
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto ctx = std::make_unique<CycloContext>();
    ctx->conductor = n;
    ctx->degree = euler_phi(n);
    ctx->min_poly = cyclotomic_poly(n);
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(n, std::move(ctx));
    (void)inserted;
    return *it->second;
}

CycNum::CycNum() : conductor_(1), num_(1, Int(0)), den_(1) {}

CycNum CycNum::integer(Int v) {
    CycNum r;
    r.num_[0] = std::move(v);
    return r;
}

CycNum CycNum::rational(Int num, Int den) {
    if (den == 0) throw error("zero denominator");
    CycNum r;
    r.num_[0] = std::move(num);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
}

CycNum CycNum::zeta(long n) { return zeta_power(n, 1); }

CycNum CycNum::zeta_power(long n, long k) {
    const auto& ctx = cyclo_context(n);
    k %= n;
    if (k < 0) k += n;
    std::vector<Int> p(k + 1, Int(0));
    p[k] = 1;
    reduce_mod_phi(p, ctx);
    CycNum r;
    r.conductor_ = n;
    r.num_ = std::move(p);
    r.canonicalize();
    return r;
}

CycNum CycNum::from_coeffs(long n, std::vector<Int> coeffs, Int den) {
    if (den == 0) throw error("zero denominator");
    const auto& ctx = cyclo_context(n);
    reduce_mod_phi(coeffs, ctx);
    CycNum r;
    r.conductor_ = n;
    r.num_ = std::move(coeffs);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
}

void CycNum::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Int g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        g = gcd_int(g, c);
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
    bool zero = std::all_of(num_.begin(), num_.end(),
                            [](const Int& c) { return c == 0; });
    if (zero) den_ = 1;
}

bool CycNum::is_zero() const {
    return std::all_of(num_.begin(), num_.end(),
                       [](const Int& c) { return c == 0; });
}

bool CycNum::is_one() const {
    if (den_ != 1 || num_[0] != 1) return false;
    return std::all_of(num_.begin() + 1, num_.end(),
                       [](const Int& c) { return c == 0; });
}

CycNum CycNum::embedded(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw error("embedding target is not a multiple of the conductor");
    const auto& ctx = cyclo_context(m);
    long stride = m / conductor_;
    std::vector<Int> p((num_.size() - 1) * stride + 1, Int(0));
    for (size_t k = 0; k < num_.size(); ++k) p[k * stride] = num_[k];
    reduce_mod_phi(p, ctx);
    CycNum r;
    r.conductor_ = m;
    r.num_ = std::move(p);
    r.den_ = den_;
    r.canonicalize();
    return r;
}

std::pair<CycNum, CycNum> CycNum::to_common(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return {a, b};
    long m = lcm_long(a.conductor_, b.conductor_);
    return {a.embedded(m), b.embedded(m)};
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    auto [x, y] = CycNum::to_common(a, b);
    CycNum r;
    r.conductor_ = x.conductor_;
    r.num_.resize(x.num_.size());
    for (size_t i = 0; i < r.num_.size(); ++i)
        r.num_[i] = x.num_[i] * y.den_ + y.num_[i] * x.den_;
    r.den_ = x.den_ * y.den_;
    r.canonicalize();
    return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
    auto [x, y] = CycNum::to_common(a, b);
    const auto& ctx = cyclo_context(x.conductor_);
    std::vector<Int> p(2 * ctx.degree, Int(0));
    for (size_t i = 0; i < x.num_.size(); ++i) {
        if (x.num_[i] == 0) continue;
        for (size_t j = 0; j < y.num_.size(); ++j) {
            if (y.num_[j] == 0) continue;
            p[i + j] += x.num_[i] * y.num_[j];
        }
    }
    reduce_mod_phi(p, ctx);
    CycNum r;
    r.conductor_ = x.conductor_;
    r.num_ = std::move(p);
    r.den_ = x.den_ * y.den_;
    r.canonicalize();
    return r;
}

CycNum CycNum::scaled(const Int& num, const Int& den) const {
    if (den == 0) throw error("zero denominator");
    CycNum r = *this;
    for (auto& c : r.num_) c *= num;
    r.den_ *= den;
    r.canonicalize();
    return r;
}

CycNum CycNum::pow(unsigned long e) const {
    CycNum acc = CycNum::integer(1);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycNum CycNum::conj() const {
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

CycNum CycNum::galois(long t) const {
    long tm = t % conductor_;
    if (tm < 0) tm += conductor_;
    if (gcd_long(tm == 0 ? conductor_ : tm, conductor_) != 1)
        throw not_coprime("galois exponent " + std::to_string(t) +
                          " is not coprime to conductor " + std::to_string(conductor_));
    if (conductor_ <= 2 || tm == 1) return *this;
    const auto& ctx = cyclo_context(conductor_);
    std::vector<Int> p(conductor_, Int(0));
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        p[(k * tm) % conductor_] += num_[k];
    }
    reduce_mod_phi(p, ctx);
    CycNum r;
    r.conductor_ = conductor_;
    r.num_ = std::move(p);
    r.den_ = den_;
    r.canonicalize();
    return r;
}

std::optional<Int> CycNum::as_integer() const {
    if (den_ != 1) return std::nullopt;
    for (size_t k = 1; k < num_.size(); ++k)
        if (num_[k] != 0) return std::nullopt;
    return num_[0];
}

std::optional<std::pair<Int, Int>> CycNum::as_rational() const {
    for (size_t k = 1; k < num_.size(); ++k)
        if (num_[k] != 0) return std::nullopt;
    return std::make_pair(num_[0], den_);
}

std::optional<long> CycNum::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    long limit = lcm_long(2, conductor_);
    CycNum p = *this;
    for (long k = 1; k <= limit; ++k) {
        if (p.is_one()) return k;
        p = p * *this;
    }
    return std::nullopt;
}

CycNum CycNum::abs_squared() const { return *this * conj(); }

bool CycNum::operator==(const CycNum& o) const {
    if (conductor_ == o.conductor_)
        return den_ == o.den_ && num_ == o.num_;
    auto [x, y] = to_common(*this, o);
    return x.den_ == y.den_ && x.num_ == y.num_;
}

int CycNum::cmp(const CycNum& a, const CycNum& b) {
    auto [x, y] = to_common(a, b);
    if (x.den_ != y.den_) return x.den_ < y.den_ ? -1 : 1;
    for (size_t i = 0; i < x.num_.size(); ++i)
        if (x.num_[i] != y.num_[i]) return x.num_[i] < y.num_[i] ? -1 : 1;
    return 0;
}

std::string CycNum::str() const {
    std::ostringstream out;
    if (conductor_ == 1) {
        out << num_[0];
        if (den_ != 1) out << "/" << den_;
        return out.str();
    }
    out << "(";
    bool first = true;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        Int c = num_[k];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    out << ")";
    if (den_ != 1) out << "/" << den_;
    out << "@" << conductor_;
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    Int read_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits) throw parse_error("expected integer at position " + std::to_string(start) + " in cyclotomic literal");
        return Int(s.substr(start, i - start));
    }
};

}  // namespace

CycNum CycNum::parse(const std::string& text) {
    Cursor c{text};
    if (c.peek() != '(') {
        Int num = c.read_int();
        Int den = 1;
        if (c.eat('/')) den = c.read_int();
        c.skip_ws();
        if (c.i != text.size()) throw parse_error("trailing characters in cyclotomic literal: " + text);
        return CycNum::rational(std::move(num), std::move(den));
    }
    c.eat('(');
    // Terms: [coef *] z [^k] | coef, joined by +/-.
    std::vector<std::pair<long, Int>> terms;
    bool done = false;
    int sign = 1;
    if (c.peek() == '-') {
        c.eat('-');
        sign = -1;
    }
    while (!done) {
        Int coef = 1;
        long power = 0;
        bool saw_coef = false;
        if (c.peek() != 'z') {
            coef = c.read_int();
            saw_coef = true;
        }
        c.eat('*');
        if (c.peek() == 'z') {
            c.eat('z');
            power = 1;
            if (c.eat('^')) {
                Int p = c.read_int();
                power = (long)p;
            }
        } else if (!saw_coef) {
            throw parse_error("expected term in cyclotomic literal: " + text);
        }
        terms.emplace_back(power, sign * coef);
        if (c.eat('+')) {
            sign = 1;
        } else if (c.eat('-')) {
            sign = -1;
        } else {
            done = true;
        }
    }
    if (!c.eat(')')) throw parse_error("expected ')' in cyclotomic literal: " + text);
    Int den = 1;
    if (c.eat('/')) den = c.read_int();
    if (!c.eat('@')) throw parse_error("expected '@conductor' in cyclotomic literal: " + text);
    Int n = c.read_int();
    c.skip_ws();
    if (c.i != text.size()) throw parse_error("trailing characters in cyclotomic literal: " + text);
    long conductor = (long)n;
    if (conductor < 1) throw parse_error("conductor must be positive: " + text);
    long maxp = 0;
    for (auto& [p, _] : terms) maxp = std::max(maxp, p);
    std::vector<Int> coeffs(maxp + 1, Int(0));
    for (auto& [p, v] : terms) coeffs[p] += v;
    return CycNum::from_coeffs(conductor, std::move(coeffs), std::move(den));
}

}  // namespace zcenter
