#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dlcodes/errors.hpp"

namespace dlcodes::gf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m) with an explicit irreducible modulus.
///
/// Elements are identified by integer codes in [0, q).  The code of the
/// element with polynomial coefficients (c0, c1, ..., c_{m-1}) is
/// sum_i c_i * p^i, least-significant coefficient first.  The canonical
/// enumeration order is lexicographic on the coefficient vector with c0
/// compared first, so zero comes first and serialized digit strings sort
/// in canonical order.  Use ordinal_of/code_at to move between the two
/// numberings.
///
/// Fields are immutable after construction and safe to share across threads;
/// all operations are pure.
class Field {
  public:
    /// Validates and builds a field.  The modulus is given as m+1
    /// coefficients, least-significant first, and must be monic and
    /// irreducible over GF(p).
    static FieldPtr create(int p, int m, std::vector<int> modulus);

    /// Field of cardinality q with the shipped canonical modulus (the first
    /// monic irreducible polynomial in ascending low-coefficient order).
    /// Instances are cached; repeated calls return the same object.
    static FieldPtr canonical(long long q);

    /// Parses "p^m" (canonical modulus) or "p^m/digits" descriptors.
    static FieldPtr parse_descriptor(std::string_view text);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;      // throws DivisionByZero on 0
    int div(int a, int b) const;
    int pow(int a, long long e) const;  // e >= 0

    /// x -> x^q0 where q0 = p^j for some 1 <= j <= m.
    int frobenius(int a, long long q0) const;

    /// Reduction of an arbitrary integer into the prime subfield.
    int from_integer(long long v) const;

    /// Canonical enumeration order (see class comment).
    int ordinal_of(int code) const { return ordinal_of_[static_cast<size_t>(code)]; }
    int code_at(int ordinal) const { return code_at_[static_cast<size_t>(ordinal)]; }

    /// Base-p digit string, least-significant first, exactly m characters.
    std::string digits(int code) const;
    int parse_digits(std::string_view text) const;

    /// "p^m/modulus-digits", e.g. "2^2/111" for GF(4) mod x^2+x+1.
    std::string descriptor() const;
    /// "p^m"; enough to reconstruct the field when the modulus is canonical.
    std::string short_descriptor() const;
    bool has_canonical_modulus() const;

    bool same_as(const Field& other) const;

    /// Digit vector (c0, ..., c_{m-1}) of an element code.
    std::vector<int> coeffs(int code) const;

  private:
    Field(int p, int m, std::vector<int> modulus);

    int mul_slow(int a, int b) const;

    int p_ = 0;
    int m_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_;
    std::vector<long long> p_pow_;  // p^0 .. p^m

    bool tables_ = false;
    std::vector<uint16_t> add_tab_, mul_tab_;
    std::vector<uint16_t> neg_tab_, inv_tab_;
    std::vector<int> ordinal_of_, code_at_;
};

/// A field element tagged with its field, for contexts where convenience
/// beats raw speed.  Mixing elements of structurally different fields throws
/// FieldMismatch.
struct Felt {
    int code = 0;
    const Field* field = nullptr;

    Felt() = default;
    Felt(int c, const Field& f) : code(c), field(&f) {}
    Felt(int c, const FieldPtr& f) : code(c), field(f.get()) {}

    bool is_zero() const { return code == 0; }

    friend Felt operator+(const Felt& x, const Felt& y);
    friend Felt operator-(const Felt& x, const Felt& y);
    friend Felt operator*(const Felt& x, const Felt& y);
    friend Felt operator/(const Felt& x, const Felt& y);
    friend bool operator==(const Felt& x, const Felt& y);
    friend bool operator!=(const Felt& x, const Felt& y) { return !(x == y); }
};

Felt frobenius(const Felt& x, long long q0);

/// True for q = p^e, p prime, e >= 1.  Sets p/e when non-null.
bool is_prime_power(long long q, int* p_out = nullptr, int* e_out = nullptr);

}  // namespace dlcodes::gf
