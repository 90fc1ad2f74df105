#include "tcover/cocycle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace tcover {

GroupRingElement GroupRingElement::monomial(int exponent) {
  GroupRingElement x;
  x.c[((exponent % 3) + 3) % 3] = 1;
  return x;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (int i = 0; i < 3; ++i) c[i] += o.c[i];
  return *this;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.c[(i + j) % 3] += x.c[i] * y.c[j];
  return out;
}

std::string format_group_ring(const GroupRingElement& x) {
  std::string out;
  for (int e = 0; e < 3; ++e) {
    auto v = x.c[e];
    if (v == 0) continue;
    std::string coef = std::to_string(v < 0 ? -v : v);
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    if (e == 0)
      out += coef;
    else
      out += (coef == "1" ? "" : coef) + (e == 1 ? "t" : "t^2");
  }
  return out.empty() ? "0" : out;
}

std::vector<TriplePoint> triple_points(const ChartMovie& mv, const Coloring& coloring, const Quandle& q) {
  if (auto check = validate_movie(mv); !check.ok)
    throw std::invalid_argument("invalid movie at step " + std::to_string(check.step) + ": " + check.reason);
  if (braid_monodromy(mv.a, q, coloring) != coloring || braid_monodromy(mv.b, q, coloring) != coloring)
    throw std::invalid_argument("coloring is not fixed by the boundary monodromies");
  const int m = mv.degree();
  std::vector<int> w = mv.a.letters();
  w.insert(w.end(), mv.b.letters().begin(), mv.b.letters().end());
  std::vector<TriplePoint> out;
  for (const auto& s : mv.steps) {
    if (s.kind == MoveKind::R3) {
      const int p = s.position;
      const bool positive = w[p] > 0;
      BraidWord prefix(m, std::vector<int>(w.begin(), w.begin() + p + (positive ? 0 : 3)));
      auto c = braid_monodromy(prefix, q, coloring);
      int lo = std::min(std::abs(w[p]), std::abs(w[p + 1])) - 1;
      out.push_back(TriplePoint{r3_sign(w[p], w[p + 1]), {c[lo], c[lo + 1], c[lo + 2]}});
    }
    if (auto err = apply_move(w, s, m)) throw std::logic_error(*err);
  }
  return out;
}

int mochizuki_theta(std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  if (x > 2 || y > 2 || z > 2) throw std::invalid_argument("theta is defined on {0,1,2}");
  long v = (static_cast<long>(x) - y) * (static_cast<long>(y) - z) * z * (static_cast<long>(x) + z);
  return static_cast<int>(((v % 3) + 3) % 3);
}

int boltzmann_weight(const std::vector<TriplePoint>& triples) {
  int w = 0;
  for (const auto& t : triples) w += t.sign * mochizuki_theta(t.colors[0], t.colors[1], t.colors[2]);
  return ((w % 3) + 3) % 3;
}

GroupRingElement cocycle_invariant(const BraidWord& a, const BraidWord& b, const ChartMovie* movie, unsigned workers) {
  if (a.degree() != b.degree()) throw std::invalid_argument("boundary braids have different degrees");
  if (!commute_check(a, b)) throw std::invalid_argument("boundary braids do not commute");
  ChartMovie mv;
  if (movie != nullptr) {
    if (!(movie->a == a) || !(movie->b == b)) throw std::invalid_argument("movie boundary braids differ from the input");
    if (auto check = validate_movie(*movie); !check.ok)
      throw std::invalid_argument("invalid movie at step " + std::to_string(check.step) + ": " + check.reason);
    mv = *movie;
  } else {
    mv = slide_movie(a, b);
  }
  const Quandle r3 = dihedral_quandle(3);
  const auto colorings = torus_colorings(a, b, r3, workers);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, colorings.size())));

  // Per-coloring exponents are computed independently and summed in coloring order.
  std::vector<int> exponent(colorings.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) exponent[i] = boltzmann_weight(triple_points(mv, colorings[i], r3));
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = colorings.size() * w / workers, hi = colorings.size() * (w + 1) / workers;
    if (workers == 1)
      work(lo, hi);
    else
      pool.emplace_back(work, lo, hi);
  }
  for (auto& t : pool) t.join();
  GroupRingElement phi;
  for (int e : exponent) phi += GroupRingElement::monomial(e);
  return phi;
}

std::pair<BraidWord, BraidWord> mirror_chart(const BraidWord& a, const BraidWord& b) { return {inverse(a), b}; }

}  // namespace tcover
