#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibercone {

struct field_error : std::runtime_error {
  explicit field_error(const std::string& w) : std::runtime_error(w) {}
};

/* Prime field GF(p). Elements are canonical residues in [0, p); p is restricted
 * to < 2^31 so products fit in 64 bits without widening. */
class GFp {
 public:
  using Elem = std::uint64_t;

  explicit GFp(std::uint64_t p = 32003) : p_(p) {
    if (p < 2 || p >= (1ull << 31)) throw field_error("modulus out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw field_error("modulus is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

  Elem inv(Elem a) const {
    if (a == 0) throw field_error("division by zero in GF(p)");
    // extended Euclid on (a, p)
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p_), nr = static_cast<long long>(a);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /* Balanced-residue printing keeps small negative coefficients readable. */
  std::string to_string(Elem a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool print_as_negative(Elem a) const { return a > p_ / 2; }
  std::string magnitude_string(Elem a) const {
    return a > p_ / 2 ? std::to_string(p_ - a) : std::to_string(a);
  }
  bool is_display_one(Elem a) const { return a == 1; }

  /* Deterministic map from raw RNG output to a field element; avoids
   * distribution classes whose streams differ across standard libraries. */
  Elem sample(std::uint64_t raw) const { return raw % p_; }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint64_t p_;
};

/* Exact rational arithmetic, used for confirmation runs. */
class Rationals {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_int(long long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw field_error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  std::string to_string(const Elem& a) const { return a.str(); }
  bool print_as_negative(const Elem& a) const { return a < 0; }
  std::string magnitude_string(const Elem& a) const {
    return a < 0 ? Elem(-a).str() : a.str();
  }
  bool is_display_one(const Elem& a) const { return a == 1; }

  /* Same raw-to-coefficient reduction as the prime-field default, so a seed
   * picks the same candidate combinations in either coefficient mode. */
  Elem sample(std::uint64_t raw) const {
    return Elem(static_cast<long long>(raw % 32003));
  }

  std::string name() const { return "QQ"; }

 private:
  const Elem& inv_guard(const Elem& b) const {
    if (b == 0) throw field_error("division by zero in Q");
    return b;
  }
};

}  // namespace fibercone
