#include "tcover/transforms.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tcover {

long long determinant3(const IntMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool h_membership(const IntMatrix3& m) {
  long long d = determinant3(m);
  if (d != 1 && d != -1) return false;
  if (std::llabs(m[0][0]) != 1 || m[0][1] != 0 || m[0][2] != 0) return false;
  long long s = m[1][1] + m[1][2] + m[2][1] + m[2][2];
  return s % 2 == 0;
}

IntMatrix3 multiply3(const IntMatrix3& x, const IntMatrix3& y) {
  IntMatrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

IntMatrix3 parse_matrix3(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',' || c == '[' || c == ']' || c == ';') c = ' ';
  std::istringstream is(s);
  IntMatrix3 m{};
  for (auto& row : m)
    for (auto& v : row)
      if (!(is >> v)) throw std::invalid_argument("matrix needs nine integer entries");
  std::string extra;
  if (is >> extra) throw std::invalid_argument("matrix has more than nine entries");
  return m;
}

ChartData make_chart(const BraidWord& a, const BraidWord& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("boundary braids have different degrees");
  if (!commute_check(a, b)) throw std::invalid_argument("boundary braids do not commute");
  return ChartData{a, b};
}

ChartData rho(const ChartData& c) {
  ChartData out{inverse(c.b), c.a};
  if (!commute_check(out.a, out.b)) throw std::logic_error("rho lost commutativity");
  return out;
}

ChartData tau(const ChartData& c) {
  ChartData out{c.a, product(c.b, c.a)};
  if (!commute_check(out.a, out.b)) throw std::logic_error("tau lost commutativity");
  return out;
}

std::string format_chart(const ChartData& c) {
  std::ostringstream os;
  os << "degree " << c.degree() << '\n' << "a: " << format_braid(c.a) << '\n' << "b: " << format_braid(c.b) << '\n';
  return os.str();
}

ChartData parse_chart(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int degree = 0;
  std::string a_text, b_text;
  bool have_a = false, have_b = false;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (head == "degree") {
      degree = std::atoi(rest.c_str());
    } else if (head == "a:") {
      a_text = rest;
      have_a = true;
    } else if (head == "b:") {
      b_text = rest;
      have_b = true;
    } else {
      throw std::invalid_argument("unknown chart line '" + head + "'");
    }
  }
  if (degree < 1 || !have_a || !have_b) throw std::invalid_argument("chart needs degree, a: and b: lines");
  return make_chart(parse_braid(a_text, degree), parse_braid(b_text, degree));
}

}  // namespace tcover
