#include "dlcodes/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dlcodes::gf {

namespace {

constexpr long long kMaxTableQ = 1024;   // full add/mul tables below this
constexpr long long kMaxQ = 1LL << 16;   // hard cap; larger fields are a non-goal

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- polynomial helpers over GF(p), coefficient vectors LSF ---------------

int poly_degree(const std::vector<int>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// f mod g, g monic of positive degree.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
    const int dg = poly_degree(g);
    for (int i = poly_degree(f); i >= dg; i = poly_degree(f)) {
        const int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            int& x = f[i - dg + j];
            x = ((x - c * g[j]) % p + p) % p;
        }
    }
    f.resize(static_cast<size_t>(std::max(poly_degree(f) + 1, 1)));
    return f;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    const int m = poly_degree(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> g(static_cast<size_t>(d) + 1, 0);
            long long v = t;
            for (int i = 0; i < d; ++i) {
                g[static_cast<size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            g[static_cast<size_t>(d)] = 1;
            if (poly_degree(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> canonical_modulus(int p, int m) {
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
        std::vector<int> f(static_cast<size_t>(m) + 1, 0);
        long long v = t;
        for (int i = 0; i < m; ++i) {
            f[static_cast<size_t>(i)] = static_cast<int>(v % p);
            v /= p;
        }
        f[static_cast<size_t>(m)] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw ReducibleModulus("no irreducible modulus found");  // unreachable
}

}  // namespace

bool is_prime_power(long long q, int* p_out, int* e_out) {
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;  // q itself prime
    int e = 0;
    long long v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) return false;
    if (p_out) *p_out = static_cast<int>(p);
    if (e_out) *e_out = e;
    return true;
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    p_pow_.resize(static_cast<size_t>(m_) + 1);
    p_pow_[0] = 1;
    for (int i = 1; i <= m_; ++i) p_pow_[static_cast<size_t>(i)] = p_pow_[static_cast<size_t>(i - 1)] * p_;
    q_ = p_pow_[static_cast<size_t>(m_)];

    // Canonical order: lexicographic on (c0, ..., c_{m-1}), i.e. ascending
    // integer value with c0 as the most significant digit.
    ordinal_of_.resize(static_cast<size_t>(q_));
    code_at_.resize(static_cast<size_t>(q_));
    for (long long code = 0; code < q_; ++code) {
        long long v = code, ord = 0;
        for (int i = 0; i < m_; ++i) {
            ord = ord * p_ + v % p_;
            v /= p_;
        }
        ordinal_of_[static_cast<size_t>(code)] = static_cast<int>(ord);
        code_at_[static_cast<size_t>(ord)] = static_cast<int>(code);
    }

    if (q_ <= kMaxTableQ) {
        tables_ = true;
        add_tab_.resize(static_cast<size_t>(q_ * q_));
        mul_tab_.resize(static_cast<size_t>(q_ * q_));
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                long long s = 0;
                long long va = a, vb = b;
                for (int i = 0; i < m_; ++i) {
                    s += ((va % p_ + vb % p_) % p_) * p_pow_[static_cast<size_t>(i)];
                    va /= p_;
                    vb /= p_;
                }
                add_tab_[static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b)] =
                    static_cast<uint16_t>(s);
                mul_tab_[static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b)] =
                    static_cast<uint16_t>(mul_slow(a, b));
            }
        }
        neg_tab_.resize(static_cast<size_t>(q_));
        for (int a = 0; a < q_; ++a) {
            long long s = 0, va = a;
            for (int i = 0; i < m_; ++i) {
                s += ((p_ - va % p_) % p_) * p_pow_[static_cast<size_t>(i)];
                va /= p_;
            }
            neg_tab_[static_cast<size_t>(a)] = static_cast<uint16_t>(s);
        }
        inv_tab_.assign(static_cast<size_t>(q_), 0);
        for (int a = 1; a < q_; ++a)
            inv_tab_[static_cast<size_t>(a)] = static_cast<uint16_t>(pow(a, q_ - 2));
    }
}

FieldPtr Field::create(int p, int m, std::vector<int> modulus) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeMismatch("extension degree must be >= 1");
    if (modulus.size() != static_cast<size_t>(m) + 1)
        throw DegreeMismatch("modulus must have exactly m+1 coefficients");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1) throw DegreeMismatch("modulus must be monic of degree m");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw DegreeMismatch("field too large (q > 2^16)");
    }
    if (!is_irreducible(modulus, p))
        throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
    return FieldPtr(new Field(p, m, std::move(modulus)));
}

FieldPtr Field::canonical(long long q) {
    static std::mutex mtx;
    static std::map<long long, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    int p = 0, m = 0;
    if (!is_prime_power(q, &p, &m))
        throw NonPrimeCharacteristic("q = " + std::to_string(q) + " is not a prime power");
    FieldPtr f = create(p, m, canonical_modulus(p, m));
    cache.emplace(q, f);
    return f;
}

FieldPtr Field::parse_descriptor(std::string_view text) {
    const size_t caret = text.find('^');
    if (caret == std::string_view::npos) throw FileFormatError("bad field descriptor: missing '^'");
    const size_t slash = text.find('/');
    int p = 0, m = 0;
    try {
        p = std::stoi(std::string(text.substr(0, caret)));
        m = std::stoi(std::string(text.substr(caret + 1, slash == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : slash - caret - 1)));
    } catch (const std::exception&) {
        throw FileFormatError("bad field descriptor: " + std::string(text));
    }
    if (slash == std::string_view::npos) {
        long long q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        return canonical(q);
    }
    std::string_view digits = text.substr(slash + 1);
    if (digits.size() != static_cast<size_t>(m) + 1)
        throw FileFormatError("modulus digit count does not match degree in: " + std::string(text));
    std::vector<int> modulus(m + 1);
    for (int i = 0; i <= m; ++i) {
        const char c = digits[static_cast<size_t>(i)];
        if (c < '0' || c > '9') throw FileFormatError("bad modulus digit in: " + std::string(text));
        modulus[static_cast<size_t>(i)] = c - '0';
    }
    return create(p, m, std::move(modulus));
}

int Field::add(int a, int b) const {
    if (tables_) return add_tab_[static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b)];
    long long s = 0, va = a, vb = b;
    for (int i = 0; i < m_; ++i) {
        s += ((va % p_ + vb % p_) % p_) * p_pow_[static_cast<size_t>(i)];
        va /= p_;
        vb /= p_;
    }
    return static_cast<int>(s);
}

int Field::neg(int a) const {
    if (tables_) return neg_tab_[static_cast<size_t>(a)];
    long long s = 0, va = a;
    for (int i = 0; i < m_; ++i) {
        s += ((p_ - va % p_) % p_) * p_pow_[static_cast<size_t>(i)];
        va /= p_;
    }
    return static_cast<int>(s);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_slow(int a, int b) const {
    // Schoolbook product of the coefficient vectors, then reduction.
    std::vector<int> fa = coeffs(a), fb = coeffs(b);
    std::vector<int> prod(static_cast<size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
        if (fa[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] + fa[static_cast<size_t>(i)] * fb[static_cast<size_t>(j)]) % p_;
    }
    prod = poly_mod(std::move(prod), modulus_, p_);
    long long code = 0;
    for (size_t i = 0; i < prod.size(); ++i) code += prod[i] * p_pow_[i];
    return static_cast<int>(code);
}

int Field::mul(int a, int b) const {
    if (tables_) return mul_tab_[static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b)];
    return mul_slow(a, b);
}

int Field::pow(int a, long long e) const {
    int result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int Field::inv(int a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tables_) return inv_tab_[static_cast<size_t>(a)];
    return pow(a, q_ - 2);
}

int Field::div(int a, int b) const { return mul(a, inv(b)); }

int Field::frobenius(int a, long long q0) const {
    long long t = q0;
    while (t > 1 && t % p_ == 0) t /= p_;
    if (t != 1 || q0 < p_ || q0 > q_)
        throw InvalidFrobeniusBase("Frobenius base " + std::to_string(q0) + " is not p^j with j in [1, m]");
    return pow(a, q0);
}

int Field::from_integer(long long v) const {
    return static_cast<int>(((v % p_) + p_) % p_);
}

std::string Field::digits(int code) const {
    std::string s(static_cast<size_t>(m_), '0');
    long long v = code;
    for (int i = 0; i < m_; ++i) {
        s[static_cast<size_t>(i)] = static_cast<char>('0' + v % p_);
        v /= p_;
    }
    return s;
}

int Field::parse_digits(std::string_view text) const {
    if (text.size() != static_cast<size_t>(m_))
        throw FileFormatError("element digit string must have exactly m characters");
    long long code = 0;
    for (int i = m_ - 1; i >= 0; --i) {
        const char c = text[static_cast<size_t>(i)];
        if (c < '0' || c >= '0' + p_) throw FileFormatError("element digit out of range");
        code = code * p_ + (c - '0');
    }
    return static_cast<int>(code);
}

std::string Field::descriptor() const {
    std::string s = short_descriptor() + "/";
    for (int c : modulus_) s += static_cast<char>('0' + c);
    return s;
}

std::string Field::short_descriptor() const {
    return std::to_string(p_) + "^" + std::to_string(m_);
}

bool Field::has_canonical_modulus() const {
    return modulus_ == canonical_modulus(p_, m_);
}

bool Field::same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::vector<int> Field::coeffs(int code) const {
    std::vector<int> c(static_cast<size_t>(m_));
    long long v = code;
    for (int i = 0; i < m_; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int>(v % p_);
        v /= p_;
    }
    return c;
}

namespace {
const Field& common_field(const Felt& x, const Felt& y) {
    if (!x.field || !y.field || !x.field->same_as(*y.field))
        throw FieldMismatch("operands belong to different fields");
    return *x.field;
}
}  // namespace

Felt operator+(const Felt& x, const Felt& y) { return {common_field(x, y).add(x.code, y.code), *x.field}; }
Felt operator-(const Felt& x, const Felt& y) { return {common_field(x, y).sub(x.code, y.code), *x.field}; }
Felt operator*(const Felt& x, const Felt& y) { return {common_field(x, y).mul(x.code, y.code), *x.field}; }
Felt operator/(const Felt& x, const Felt& y) { return {common_field(x, y).div(x.code, y.code), *x.field}; }
bool operator==(const Felt& x, const Felt& y) { return common_field(x, y), x.code == y.code; }

Felt frobenius(const Felt& x, long long q0) {
    if (!x.field) throw FieldMismatch("element has no field");
    return {x.field->frobenius(x.code, q0), *x.field};
}

}  // namespace dlcodes::gf
