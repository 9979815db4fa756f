#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace akb {

// Integer Laurent polynomial in v, dense between its lowest and highest nonzero term.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  LaurentPoly(int offset, std::vector<long long> coeffs);

  static LaurentPoly monomial(int degree, long long c = 1);
  static LaurentPoly quantum_int(int k);
  static LaurentPoly quantum_factorial(int k);

  bool is_zero() const { return c_.empty(); }
  int offset() const { return off_; }
  const std::vector<long long>& coeffs() const { return c_; }
  int min_degree() const { return off_; }
  int max_degree() const { return off_ + static_cast<int>(c_.size()) - 1; }
  long long coeff(int degree) const;
  long long at_one() const;

  bool is_one() const { return off_ == 0 && c_.size() == 1 && c_[0] == 1; }
  bool is_monomial() const { return c_.size() == 1; }
  bool nonnegative() const;
  // in v*N[v]: nonnegative coefficients, no constant or negative-degree part
  bool in_v_nat() const;

  LaurentPoly shifted(int d) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    if (auto c = a.off_ <=> b.off_; c != 0) return c;
    return a.c_ <=> b.c_;
  }

  // "1", "v", "v2", "2v3+v-1" (negative powers written v^-k)
  std::string str() const;
  static LaurentPoly parse(const std::string& s);

 private:
  void normalize();
  int off_ = 0;
  std::vector<long long> c_;
};

}  // namespace akb
