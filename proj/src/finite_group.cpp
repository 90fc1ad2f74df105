#include "tcover/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tcover {

FiniteGroup FiniteGroup::generated_by(int points, const std::vector<std::vector<int>>& generators, std::string name) {
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, std::uint32_t> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      std::vector<int> next(points);
      for (int i = 0; i < points; ++i) next[i] = g[elems[head][i]];
      if (index.emplace(next, static_cast<std::uint32_t>(elems.size())).second) elems.push_back(next);
    }
  }
  std::sort(elems.begin(), elems.end());  // identity stays first
  index.clear();
  for (std::uint32_t k = 0; k < elems.size(); ++k) index[elems[k]] = k;

  FiniteGroup g;
  g.name_ = std::move(name);
  const auto n = static_cast<std::uint32_t>(elems.size());
  g.table_.resize(static_cast<std::size_t>(n) * n);
  g.inverse_.resize(n);
  std::vector<int> tmp(points);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (int i = 0; i < points; ++i) tmp[i] = elems[y][elems[x][i]];
      auto k = index.at(tmp);
      g.table_[x * n + y] = k;
      if (k == 0) g.inverse_[x] = y;
    }
  }
  g.elements_ = std::move(elems);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("symmetric target needs 1 <= k <= 5");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<int> t(k);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[i], t[i + 1]);
    gens.push_back(t);
  }
  return generated_by(k, gens, "S" + std::to_string(k));
}

FiniteGroup FiniteGroup::dihedral(int k) {
  if (k < 3 || k > 12) throw std::invalid_argument("dihedral target needs 3 <= k <= 12");
  std::vector<int> r(k), s(k);
  for (int i = 0; i < k; ++i) {
    r[i] = (i + 1) % k;
    s[i] = (k - i) % k;
  }
  return generated_by(k, {r, s}, "D" + std::to_string(k));
}

FiniteGroup FiniteGroup::cyclic(int k) {
  if (k < 1 || k > 256) throw std::invalid_argument("cyclic target needs 1 <= k <= 256");
  std::vector<int> r(k);
  for (int i = 0; i < k; ++i) r[i] = (i + 1) % k;
  return generated_by(k, {r}, "Z" + std::to_string(k));
}

FiniteGroup FiniteGroup::parse(std::string_view spec) {
  std::string s(spec);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s == "1" || s == "trivial") return cyclic(1);
  if (s.size() >= 2) {
    char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::string rest = s.substr(1);
    if (kind == 'Z' && !rest.empty() && rest[0] == '/') rest = rest.substr(1);
    if (!rest.empty() && rest.size() <= 4 && std::all_of(rest.begin(), rest.end(), [](unsigned char c) {
          return std::isdigit(c);
        })) {
      int k = std::stoi(rest);
      if (kind == 'S') return symmetric(k);
      if (kind == 'D') return dihedral(k);
      if (kind == 'Z' || kind == 'C') return cyclic(k);
    }
  }
  throw std::invalid_argument("unsupported target group '" + std::string(spec) + "'");
}

std::uint32_t FiniteGroup::generated_order(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<std::uint32_t> found{identity()};
  seen[identity()] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto g : gens) {
      auto y = mul(found[head], g);
      if (!seen[y]) {
        seen[y] = true;
        found.push_back(y);
      }
    }
  }
  return static_cast<std::uint32_t>(found.size());
}

}  // namespace tcover
