#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace sympack {

using Int = std::int64_t;

// Exact rational scalar. Always reduced, denominator > 0. All arithmetic in
// this project goes through this type or plain integers; there is no floating
// point on any result path.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(static_cast<long>(n)) {}
  Rat(long long n) { q_ = make_mpz(n); }
  explicit Rat(const mpz_class& n) : q_(n) {}
  Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
  }
  Rat(long long num, long long den) : Rat(make_mpz(num), make_mpz(den)) {}

  // Accepts "p/q" or "p".
  static Rat parse(std::string_view s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  mpz_class floor() const;

  // "p/q" with the denominator always written (`5/2`, `1/1`, `-3/1`).
  std::string str() const;
  // Decimal form; sets `exact` iff the denominator is of the form 2^a 5^b so
  // the expansion terminates. Otherwise rounds to `digits` significant digits.
  std::string decimal_str(bool& exact, int digits = 17) const;

  Rat operator-() const { Rat r; r.q_ = -q_; return r; }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.q_ == 0) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  friend Rat abs(const Rat& a) { Rat r; r.q_ = ::abs(a.q_); return r; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  static mpz_class make_mpz(long long v);
  mpq_class q_;
};

}  // namespace sympack

namespace Eigen {
template <>
struct NumTraits<sympack::Rat> : GenericNumTraits<sympack::Rat> {
  using Real = sympack::Rat;
  using NonInteger = sympack::Rat;
  using Nested = sympack::Rat;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,  // exact, but a field
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return sympack::Rat(0); }
  static inline Real dummy_precision() { return sympack::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace sympack {

using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline RVec rvec_zero(Eigen::Index n) { return RVec::Constant(n, Rat(0)); }
inline RMat rmat_zero(Eigen::Index r, Eigen::Index c) {
  return RMat::Constant(r, c, Rat(0));
}

// Exact dot product of a rational row against an integer vector.
inline Rat dot(const IVec& a, const RVec& b) {
  Rat acc(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
  return acc;
}

bool lex_less(const IVec& a, const IVec& b);

inline bool ivec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace sympack
