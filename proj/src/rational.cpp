#include "sympack/rational.hpp"

#include <ostream>
#include <sstream>

namespace sympack {

mpz_class Rat::make_mpz(long long v) {
  if (v >= std::numeric_limits<long>::min() &&
      v <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(v));
  }
  std::ostringstream os;
  os << v;
  return mpz_class(os.str());
}

Rat Rat::parse(std::string_view s) {
  auto bad = [&] {
    throw std::invalid_argument("Rat::parse: bad rational '" + std::string(s) +
                                "'");
  };
  if (s.empty()) bad();
  std::string str(s);
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(mpz_class(str));
    }
    mpz_class num(str.substr(0, slash));
    mpz_class den(str.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Rat();  // unreachable
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::string Rat::str() const {
  return num().get_str() + "/" + den().get_str();
}

std::string Rat::decimal_str(bool& exact, int digits) const {
  // Terminating expansion iff den = 2^a 5^b.
  mpz_class d = den();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  exact = (d == 1);
  if (exact) {
    if (is_integer()) return num().get_str();
    // den = 2^a 5^b; with k = max(a,b), num * 10^k / den is integral.
    int a = 0, b = 0;
    mpz_class dd = den();
    while (dd % 2 == 0) { dd /= 2; ++a; }
    while (dd % 5 == 0) { dd /= 5; ++b; }
    int k = std::max(a, b);
    mpz_class pow10(1);
    for (int i = 0; i < k; ++i) pow10 *= 10;
    mpz_class q = num() * pow10 / den();
    std::string ds = q.get_str();
    bool neg = false;
    if (!ds.empty() && ds[0] == '-') {
      neg = true;
      ds = ds.substr(1);
    }
    while ((int)ds.size() <= k) ds.insert(0, "0");
    std::string out = ds.substr(0, ds.size() - k) + "." + ds.substr(ds.size() - k);
    return (neg ? "-" : "") + out;
  }
  // Non-terminating: round to `digits` significant digits, fixed notation.
  mpf_class f(0, 256);
  f = mpq_class(num(), den());
  mp_exp_t exp;  // value = 0.mant * 10^exp
  std::string mant = f.get_str(exp, 10, digits);
  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant = mant.substr(1);
  }
  if (mant.empty()) return "0";
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else if (static_cast<size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<size_t>(exp)) + "." +
          mant.substr(static_cast<size_t>(exp));
  }
  return (neg ? "-" : "") + out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  if (r.is_integer()) return os << r.num().get_str();
  return os << r.str();
}

bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace sympack
