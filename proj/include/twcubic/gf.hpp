#pragma once

/**
 * @file gf.hpp
 * @brief Exact arithmetic in small finite fields GF(p^e).
 *
 * Elements are residues of polynomials over GF(p) modulo a monic irreducible
 * polynomial of degree e. A residue c_0 + c_1 x + ... + c_{e-1} x^{e-1} is
 * encoded by the integer sum c_i p^i, which is a bijection onto {0, ..., q-1}
 * and induces the total order used for every enumeration in this library.
 *
 * All operations are table driven. A Field owns its tables; FieldElement
 * holds a non-owning pointer to them, so a Field (or any object holding a
 * copy of it) must outlive the elements it produced.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twcubic {

inline constexpr std::uint32_t kDefaultFieldCeiling = 128;

/// Raised for invalid field parameters or illegal arithmetic (inv(0), mixed fields).
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::vector<std::uint32_t> modulus;  // low-to-high, monic, size e + 1
  std::uint32_t q = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// q = p^e if it is a prime power, else nullopt.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return std::nullopt;
    std::uint32_t e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), e};
  }
  return std::nullopt;
}

namespace detail {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b over GF(p).
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

}  // namespace detail

/// Trial division by every monic polynomial of degree 1..e/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  if (modulus.size() < 2) return false;
  if (e == 1) return true;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    detail::Poly divisor(d + 1, 0);
    divisor[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (detail::poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

/**
 * Built-in moduli. Prime fields use x; the extension moduli are the
 * documented constants from the README table.
 */
inline std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return std::vector<std::uint32_t>{0, 1};
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 1, 0, 0, 1}},
      {{5, 2}, {2, 1, 1}},
      {{5, 3}, {2, 3, 0, 1}},
      {{7, 2}, {1, 0, 1}},
      {{11, 2}, {1, 0, 1}},
  };
  if (auto it = table.find({p, e}); it != table.end()) return it->second;
  return std::nullopt;
}

inline FieldSpec make_field_spec(std::uint32_t p, std::uint32_t e,
                                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                                 std::uint32_t ceiling = kDefaultFieldCeiling) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > ceiling) break;
  }
  if (q > ceiling)
    throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(e) +
                     " exceeds the configured ceiling " + std::to_string(ceiling));
  if (!modulus) {
    modulus = default_modulus(p, e);
    if (!modulus)
      throw FieldError("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(e) +
                       "); pass one explicitly");
  }
  auto& m = *modulus;
  if (m.size() != e + 1) throw FieldError("modulus must have degree e");
  for (auto c : m)
    if (c >= p) throw FieldError("modulus coefficients must be reduced mod p");
  if (m.back() != 1) throw FieldError("modulus must be monic");
  if (!is_irreducible(m, p)) throw FieldError("modulus is reducible over GF(p)");
  return FieldSpec{p, e, std::move(m), static_cast<std::uint32_t>(q)};
}

namespace detail {

struct FieldTables {
  FieldSpec spec;
  std::vector<std::uint16_t> add;  // q*q
  std::vector<std::uint16_t> mul;  // q*q
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;  // inv[0] unused

  explicit FieldTables(FieldSpec s) : spec(std::move(s)) {
    const std::uint32_t q = spec.q, p = spec.p, e = spec.e;
    auto decode = [&](std::uint32_t v) {
      Poly c(e, 0);
      for (std::uint32_t i = 0; i < e; ++i) {
        c[i] = v % p;
        v /= p;
      }
      return c;
    };
    auto encode = [&](const Poly& c) {
      std::uint32_t v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
      return v;
    };
    add.resize(std::size_t{q} * q);
    mul.resize(std::size_t{q} * q);
    neg.resize(q);
    inv.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Poly ca = decode(a);
      Poly cn(e);
      for (std::uint32_t i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
      neg[a] = static_cast<std::uint16_t>(encode(cn));
      for (std::uint32_t b = 0; b < q; ++b) {
        const Poly cb = decode(b);
        Poly s(e);
        for (std::uint32_t i = 0; i < e; ++i) s[i] = (ca[i] + cb[i]) % p;
        add[std::size_t{a} * q + b] = static_cast<std::uint16_t>(encode(s));
        Poly prod(2 * e - 1, 0);
        for (std::uint32_t i = 0; i < e; ++i)
          for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        Poly r = poly_mod(prod, spec.modulus, p);
        r.resize(e, 0);
        mul[std::size_t{a} * q + b] = static_cast<std::uint16_t>(encode(r));
      }
    }
    // inverse as a^(q-2)
    for (std::uint32_t a = 1; a < q; ++a) {
      std::uint32_t result = 1, base = a, n = q - 2;
      while (n) {
        if (n & 1) result = mul[std::size_t{result} * q + base];
        base = mul[std::size_t{base} * q + base];
        n >>= 1;
      }
      inv[a] = static_cast<std::uint16_t>(result);
    }
  }
};

}  // namespace detail

class Field;

class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t encoding() const { return v_; }
  std::uint32_t order() const { return tables().spec.q; }
  const FieldSpec& spec() const { return tables().spec; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool valid() const { return f_ != nullptr; }

  /// Element of the same field with the given encoding.
  FieldElement sibling(std::uint32_t encoding) const {
    if (encoding >= order()) throw FieldError("encoding out of range");
    return make(encoding);
  }

  FieldElement operator+(const FieldElement& o) const { return make(lut(tables().add, o)); }
  FieldElement operator*(const FieldElement& o) const { return make(lut(tables().mul, o)); }
  FieldElement operator-(const FieldElement& o) const {
    check_same(o);
    return make(tables().add[index(o.tables().neg[o.v_])]);
  }
  FieldElement operator-() const { return make(tables().neg[v_]); }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const {
    if (v_ == 0) throw FieldError("inverse of zero");
    return make(tables().inv[v_]);
  }

  FieldElement pow(std::uint64_t n) const {
    FieldElement result = make(1), base = *this;
    while (n) {
      if (n & 1) result *= base;
      base *= base;
      n >>= 1;
    }
    return result;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.v_ <=> b.v_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.v_; }

 private:
  friend class Field;
  FieldElement(const detail::FieldTables* f, std::uint32_t v) : f_(f), v_(v) {}

  const detail::FieldTables& tables() const {
    if (!f_) throw FieldError("use of an element without a field");
    return *f_;
  }
  void check_same(const FieldElement& o) const {
    if (f_ == o.f_ && f_) return;
    if (!f_ || !o.f_ || !(f_->spec == o.f_->spec)) throw FieldError("operands from different fields");
  }
  std::size_t index(std::uint32_t other) const { return std::size_t{v_} * f_->spec.q + other; }
  std::uint32_t lut(const std::vector<std::uint16_t>& table, const FieldElement& o) const {
    check_same(o);
    return table[index(o.v_)];
  }
  FieldElement make(std::uint32_t v) const { return FieldElement(f_, v); }

  const detail::FieldTables* f_ = nullptr;
  std::uint32_t v_ = 0;
};

/// Shared, immutable arithmetic context for one GF(p^e).
class Field {
 public:
  explicit Field(FieldSpec spec) : t_(std::make_shared<const detail::FieldTables>(std::move(spec))) {}

  const FieldSpec& spec() const { return t_->spec; }
  std::uint32_t q() const { return t_->spec.q; }
  std::uint32_t characteristic() const { return t_->spec.p; }

  /// q mod 3 mapped to {-1, 0, 1}.
  int xi() const {
    const int r = static_cast<int>(q() % 3);
    return r == 2 ? -1 : r;
  }

  FieldElement zero() const { return FieldElement(t_.get(), 0); }
  FieldElement one() const { return FieldElement(t_.get(), 1); }

  FieldElement element(std::uint32_t encoding) const {
    if (encoding >= q()) throw FieldError("encoding out of range");
    return FieldElement(t_.get(), encoding);
  }

  /// Image of an integer under Z -> GF(p) -> GF(q).
  FieldElement from_int(std::int64_t n) const {
    const std::int64_t p = characteristic();
    return FieldElement(t_.get(), static_cast<std::uint32_t>(((n % p) + p) % p));
  }

  /// All q elements in encoding order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(q());
    for (std::uint32_t v = 0; v < q(); ++v) out.push_back(FieldElement(t_.get(), v));
    return out;
  }

  friend bool operator==(const Field& a, const Field& b) { return a.t_ == b.t_ || a.spec() == b.spec(); }

 private:
  std::shared_ptr<const detail::FieldTables> t_;
};

inline Field make_field(std::uint32_t p, std::uint32_t e,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                        std::uint32_t ceiling = kDefaultFieldCeiling) {
  return Field(make_field_spec(p, e, std::move(modulus), ceiling));
}

/// Field of order q with the built-in modulus.
inline Field make_field_of_order(std::uint64_t q, std::uint32_t ceiling = kDefaultFieldCeiling) {
  auto pe = prime_power(q);
  if (!pe) throw FieldError(std::to_string(q) + " is not a prime power");
  return make_field(pe->first, pe->second, std::nullopt, ceiling);
}

// Number-theoretic helpers used by the counting lemmas.

/// eta(a): 0 for zero, +1 for nonzero squares, -1 otherwise. Odd characteristic only.
inline int quadratic_character(const FieldElement& a) {
  if (a.spec().p == 2) throw FieldError("quadratic character needs odd characteristic");
  if (a.is_zero()) return 0;
  return a.pow((a.order() - 1) / 2).is_one() ? 1 : -1;
}

/// #{a : a^2 + a + 1 is a square}, for odd q = -1 mod 3; equals (q-1)/2.
inline std::uint64_t count_square_values_of_f(const Field& f) {
  if (f.characteristic() == 2 || f.q() % 3 != 2)
    throw FieldError("count_square_values_of_f requires odd q = -1 (mod 3)");
  std::uint64_t count = 0;
  for (const auto& a : f.elements())
    if (quadratic_character(a * a + a + f.one()) == 1) ++count;
  return count;
}

struct TripleProductCounts {
  std::uint64_t cubes = 0;
  std::uint64_t non_cubes = 0;
  friend bool operator==(const TripleProductCounts&, const TripleProductCounts&) = default;
};

/**
 * Cube / non-cube tally over the products of all 3-subsets of F_q^*,
 * q = 1 mod 3. Elements are bucketed by their cubic character
 * x^((q-1)/3); a product is a cube iff the character values multiply to 1.
 */
inline TripleProductCounts triple_product_class_counts(const Field& f) {
  if (f.q() % 3 != 1) throw FieldError("triple_product_class_counts requires q = 1 (mod 3)");
  const std::uint64_t third = (f.q() - 1) / 3;
  // order the three cube roots of unity as 1, w, w^2 using a primitive element
  FieldElement generator;
  for (const auto& g : f.elements()) {
    if (g.is_zero()) continue;
    bool primitive = true;
    FieldElement x = f.one();
    for (std::uint32_t k = 1; k < f.q() - 1; ++k) {
      x *= g;
      if (x.is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  const FieldElement w = generator.pow(third);
  const std::array<FieldElement, 3> roots{f.one(), w, w * w};
  std::array<std::uint64_t, 3> bucket{};
  for (const auto& a : f.elements()) {
    if (a.is_zero()) continue;
    const FieldElement chi = a.pow(third);
    for (int k = 0; k < 3; ++k)
      if (chi == roots[k]) ++bucket[k];
  }
  auto c3 = [](std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; };
  TripleProductCounts out;
  out.cubes = c3(bucket[0]) + c3(bucket[1]) + c3(bucket[2]) + bucket[0] * bucket[1] * bucket[2];
  const std::uint64_t n = f.q() - 1;
  out.non_cubes = n * (n - 1) * (n - 2) / 6 - out.cubes;
  return out;
}

}  // namespace twcubic
