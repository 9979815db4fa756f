#include "akblock/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace akb {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly::LaurentPoly(int offset, std::vector<long long> coeffs)
    : off_(offset), c_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(int degree, long long c) { return LaurentPoly(degree, {c}); }

LaurentPoly LaurentPoly::quantum_int(int k) {
  // v^{1-k} + v^{3-k} + ... + v^{k-1}
  if (k <= 0) return {};
  std::vector<long long> c(2 * k - 1, 0);
  for (int j = 0; j < k; ++j) c[2 * j] = 1;
  return LaurentPoly(1 - k, std::move(c));
}

LaurentPoly LaurentPoly::quantum_factorial(int k) {
  LaurentPoly r(1);
  for (int j = 2; j <= k; ++j) r = r * quantum_int(j);
  return r;
}

void LaurentPoly::normalize() {
  size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    off_ = 0;
    return;
  }
  size_t hi = c_.size();
  while (c_[hi - 1] == 0) --hi;
  c_ = std::vector<long long>(c_.begin() + lo, c_.begin() + hi);
  off_ += static_cast<int>(lo);
}

long long LaurentPoly::coeff(int degree) const {
  int d = degree - off_;
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (auto x : c_) s += x;
  return s;
}

bool LaurentPoly::nonnegative() const {
  for (auto x : c_)
    if (x < 0) return false;
  return true;
}

bool LaurentPoly::in_v_nat() const { return is_zero() || (off_ >= 1 && nonnegative()); }

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.off_ += d;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<long long> c(hi - lo + 1, 0);
  for (size_t j = 0; j < c_.size(); ++j) c[off_ - lo + j] += c_[j];
  for (size_t j = 0; j < o.c_.size(); ++j) c[o.off_ - lo + j] += o.c_[j];
  off_ = lo;
  c_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  LaurentPoly neg = o;
  for (auto& x : neg.c_) x = -x;
  return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t x = 0; x < a.c_.size(); ++x)
    for (size_t y = 0; y < b.c_.size(); ++y) c[x + y] += a.c_[x] * b.c_[y];
  return LaurentPoly(a.off_ + b.off_, std::move(c));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = max_degree(); d >= off_; --d) {
    long long c = coeff(d);
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'v';
    if (d < 0)
      out += "^" + std::to_string(d);
    else if (d != 1)
      out += std::to_string(d);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
  LaurentPoly r;
  size_t p = 0;
  auto fail = [&] { throw std::invalid_argument("bad polynomial: '" + s + "'"); };
  auto digits = [&](long long& out) {
    size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == st) return false;
    out = std::stoll(s.substr(st, p - st));
    return true;
  };
  if (s.empty() || s == "0") return r;
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
    }
    long long c = 1;
    bool have_c = digits(c);
    int deg = 0;
    if (p < s.size() && s[p] == 'v') {
      ++p;
      deg = 1;
      long long d;
      if (p < s.size() && s[p] == '^') {
        ++p;
        int ds = 1;
        if (p < s.size() && s[p] == '-') {
          ds = -1;
          ++p;
        }
        if (!digits(d)) fail();
        deg = ds * static_cast<int>(d);
      } else if (digits(d)) {
        deg = static_cast<int>(d);
      }
    } else if (!have_c) {
      fail();
    }
    r += monomial(deg, sign * c);
  }
  return r;
}

}  // namespace akb
