#include "tcover/alexander.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcover {

Laurent::Laurent(Int constant) : low_(0), coeffs_{std::move(constant)} { trim(); }

Laurent::Laurent(int low, std::vector<Int> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

Laurent Laurent::t_power(int k) { return Laurent(k, {Int(1)}); }

void Laurent::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) low_ = 0;
}

Laurent::Int Laurent::coeff(int e) const {
  if (e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Laurent operator+(const Laurent& x, const Laurent& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int lo = std::min(x.low(), y.low()), hi = std::max(x.high(), y.high());
  std::vector<Laurent::Int> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = x.coeff(e) + y.coeff(e);
  return Laurent(lo, std::move(c));
}

Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }

Laurent operator*(const Laurent& x, const Laurent& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Laurent::Int> c(x.coeffs().size() + y.coeffs().size() - 1);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    for (std::size_t j = 0; j < y.coeffs().size(); ++j) c[i + j] += x.coeffs()[i] * y.coeffs()[j];
  return Laurent(x.low() + y.low(), std::move(c));
}

Laurent exact_div(const Laurent& x, const Laurent& y) {
  if (y.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (x.is_zero()) return {};
  Laurent rem = x;
  const Laurent::Int& lead = y.coeffs().back();
  const int qlow = x.low() - y.low(), qhigh = x.high() - y.high();
  if (qhigh < qlow) throw std::domain_error("inexact polynomial division");
  std::vector<Laurent::Int> q(static_cast<std::size_t>(qhigh - qlow + 1));
  while (!rem.is_zero() && rem.high() - y.high() >= qlow) {
    int shift = rem.high() - y.high();
    const Laurent::Int& top = rem.coeffs().back();
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    Laurent::Int c = top / lead;
    q[static_cast<std::size_t>(shift - qlow)] = c;
    rem = rem - Laurent(shift, {c}) * y;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return Laurent(qlow, std::move(q));
}

std::string format_laurent(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.high(); e >= p.low(); --e) {
    auto c = p.coeff(e);
    if (c == 0) continue;
    bool neg = c < 0;
    Laurent::Int mag = neg ? Laurent::Int(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Laurent>>;

Matrix identity(int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<Laurent>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[i][i] = Laurent(1);
  return m;
}

// Reduced Burau generator matrix for s_i^sign on m strands (size m-1).
Matrix burau_generator(int m, int i, int sign) {
  const int n = m - 1;
  Matrix g = identity(n);
  const Laurent t = Laurent::t_power(1), ti = Laurent::t_power(-1);
  const int r = i - 1;  // row of the generator's diagonal entry
  if (sign > 0) {
    g[r][r] = -t;
    if (r > 0) g[r][r - 1] = t;
    if (r + 1 < n) g[r][r + 1] = Laurent(1);
  } else {
    g[r][r] = -ti;
    if (r > 0) g[r][r - 1] = Laurent(1);
    if (r + 1 < n) g[r][r + 1] = ti;
  }
  return g;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix out(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y[k][j].is_zero()) out[i][j] = out[i][j] + x[i][k] * y[k][j];
    }
  return out;
}

}  // namespace

Matrix reduced_burau(const BraidWord& beta) {
  const int m = beta.degree();
  Matrix acc = identity(std::max(0, m - 1));
  for (int l : beta.letters()) acc = multiply(acc, burau_generator(m, std::abs(l), l > 0 ? 1 : -1));
  return acc;
}

Laurent determinant(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return Laurent(1);
  Laurent prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = Laurent();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Laurent alexander_polynomial(const BraidWord& beta) {
  const int m = beta.degree();
  if (permutation(beta).cycle_count() != 1) throw std::invalid_argument("closure is not a knot (several components)");
  Matrix x = reduced_burau(beta);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[i][j] = (i == j ? Laurent(1) : Laurent()) - x[i][j];
  Laurent num = determinant(std::move(x));
  Laurent den(0, std::vector<Laurent::Int>(static_cast<std::size_t>(m), 1));
  Laurent p = exact_div(num, den);
  if (p.is_zero()) throw std::logic_error("zero Alexander polynomial for a knot");
  p = p * Laurent::t_power(-p.low());
  if (p.coeff(0) < 0) p = -p;
  return p;
}

}  // namespace tcover
