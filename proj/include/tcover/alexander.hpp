#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcover/braid.hpp"

namespace tcover {

// Integer Laurent polynomial sum coeffs[k] t^(low + k), kept trimmed.
class Laurent {
 public:
  using Int = boost::multiprecision::cpp_int;

  Laurent() = default;
  Laurent(Int constant);
  Laurent(int low, std::vector<Int> coeffs);
  static Laurent t_power(int k);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int exponent) const;

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& x, const Laurent& y);
  friend Laurent operator-(const Laurent& x, const Laurent& y);
  friend Laurent operator*(const Laurent& x, const Laurent& y);
  // Exact division; throws if y does not divide x.
  friend Laurent exact_div(const Laurent& x, const Laurent& y);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void trim();
  int low_ = 0;
  std::vector<Int> coeffs_;
};

std::string format_laurent(const Laurent& p);

// Reduced Burau image of beta as an (m-1)x(m-1) matrix.
std::vector<std::vector<Laurent>> reduced_burau(const BraidWord& beta);
Laurent determinant(std::vector<std::vector<Laurent>> m);

// Alexander polynomial of the closure (a knot), shifted to start at t^0 with positive constant term.
Laurent alexander_polynomial(const BraidWord& beta);

}  // namespace tcover
