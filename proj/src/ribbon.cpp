#include "tcover/ribbon.hpp"

#include <algorithm>
#include <sstream>

#include "tcover/alexander.hpp"

namespace tcover {

namespace {

void check_shape(const BraidWord& a, const BraidWord& b, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("block size and block count must be positive");
  if (a.degree() != n * m || b.degree() != n * m)
    throw std::invalid_argument("braid degree must equal n*m = " + std::to_string(n * m));
}

std::vector<bool> block_mask(int n, int m, int j) {
  std::vector<bool> keep(static_cast<std::size_t>(n * m), false);
  for (int k = 0; k < n; ++k) keep[static_cast<std::size_t>(n * j + k)] = true;
  return keep;
}

bool preserves_blocks(const Permutation& p, int n) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.image[i] / n != i / n) return false;
  return true;
}

std::vector<int> free_reduced(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// The shorter of the freely reduced word and the normal-form word; ties keep the former.
BraidWord tidy(const BraidWord& w) {
  BraidWord reduced(w.degree(), free_reduced(w.letters()));
  BraidWord canonical = to_word(normal_form(w));
  return canonical.size() < reduced.size() ? canonical : reduced;
}

// Cyclic free reduction of a closed braid word.
std::vector<int> cyclic_reduced(std::vector<int> w) {
  w = free_reduced(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

}  // namespace

BraidWord block_product(const std::vector<BraidWord>& parts, int n) {
  const int m = static_cast<int>(parts.size());
  BraidWord out(std::max(1, n * m));
  for (int j = 0; j < m; ++j) {
    if (parts[j].degree() != n) throw std::invalid_argument("block braid has degree != n");
    out = product(out, iota_embed(parts[j], n * j, n * (m - j - 1)));
  }
  return out;
}

bool verify_decomposition(const BraidWord& a, const BraidWord& b, const CableDecomposition& w) {
  check_shape(a, b, w.n, w.m);
  if (w.tubular.degree() != w.m || static_cast<int>(w.interior.size()) != w.m ||
      static_cast<int>(w.vertical.size()) != w.m)
    throw std::invalid_argument("certificate dimensions are inconsistent with n, m");
  for (const auto& v : w.interior)
    if (v.degree() != w.n) throw std::invalid_argument("interior braid has degree != n");
  for (const auto& v : w.vertical)
    if (v.degree() != w.n) throw std::invalid_argument("vertical braid has degree != n");
  auto rebuilt_b = product(cable_lift(w.tubular, w.n), block_product(w.interior, w.n));
  auto rebuilt_a = block_product(w.vertical, w.n);
  return braids_equal(rebuilt_b, b) && braids_equal(rebuilt_a, a);
}

std::optional<CableDecomposition> search_decomposition(const BraidWord& a, const BraidWord& b, int n, int m,
                                                       int length_cap) {
  check_shape(a, b, n, m);
  if (!preserves_blocks(permutation(a), n)) return std::nullopt;

  CableDecomposition w;
  w.n = n;
  w.m = m;
  for (int j = 0; j < m; ++j) w.vertical.push_back(tidy(delete_strands(a, block_mask(n, m, j))));

  std::vector<bool> leaders(static_cast<std::size_t>(n * m), false);
  for (int j = 0; j < m; ++j) leaders[static_cast<std::size_t>(n * j)] = true;
  w.tubular = tidy(delete_strands(b, leaders));
  if (static_cast<int>(w.tubular.size()) > length_cap)
    throw SearchCapExceeded("tubular braid has " + std::to_string(w.tubular.size()) + " letters, over the cap of " +
                            std::to_string(length_cap));
  auto rest = product(inverse(cable_lift(w.tubular, n)), b);
  if (!preserves_blocks(permutation(rest), n)) return std::nullopt;
  for (int j = 0; j < m; ++j) w.interior.push_back(tidy(delete_strands(rest, block_mask(n, m, j))));

  if (!verify_decomposition(a, b, w)) return std::nullopt;
  return w;
}

UnknotVerdict unknot_check(const BraidWord& beta) {
  if (permutation(beta).cycle_count() != 1) throw std::invalid_argument("closure is not a knot (several components)");
  int m = beta.degree();
  std::vector<int> w = beta.letters();
  for (;;) {
    w = cyclic_reduced(w);
    if (m == 1) return {UnknotStatus::Unknot, "destabilized to the 1-braid"};
    auto top = std::count_if(w.begin(), w.end(), [&](int l) { return std::abs(l) == m - 1; });
    if (top == 1) {
      // Conjugate the single s_{m-1} to the end and remove it.
      auto it = std::find_if(w.begin(), w.end(), [&](int l) { return std::abs(l) == m - 1; });
      std::rotate(w.begin(), it + 1, w.end());
      w.pop_back();
      --m;
      continue;
    }
    auto bottom = std::count_if(w.begin(), w.end(), [](int l) { return std::abs(l) == 1; });
    if (bottom == 1 && m > 2) {
      // Conjugation by Delta relabels s_i as s_{m-i}.
      for (int& l : w) l = l > 0 ? m - l : -(m + l);
      continue;
    }
    break;
  }
  Laurent alex = alexander_polynomial(beta);
  if (!(alex == Laurent(1))) return {UnknotStatus::NotUnknot, "Alexander polynomial " + format_laurent(alex)};
  const auto& l = beta.letters();
  if (std::all_of(l.begin(), l.end(), [](int x) { return x > 0; }) ||
      std::all_of(l.begin(), l.end(), [](int x) { return x < 0; }))
    return {UnknotStatus::Unknot, "homogeneous-sign braid with trivial Alexander polynomial"};
  return {UnknotStatus::Unknown, "trivial Alexander polynomial, no destabilization found"};
}

RibbonVerdict ribbon_verdict(const BraidWord& a, const BraidWord& b, int n, int m, const CableDecomposition* witness,
                             int length_cap) {
  check_shape(a, b, n, m);
  if (!commute_check(a, b)) throw std::invalid_argument("boundary braids do not commute");
  RibbonVerdict v;
  std::optional<CableDecomposition> w;
  if (witness != nullptr) {
    if (!verify_decomposition(a, b, *witness)) {
      v.reason = "supplied certificate does not satisfy the cable decomposition identities";
      return v;
    }
    w = *witness;
  } else {
    try {
      w = search_decomposition(a, b, n, m, length_cap);
    } catch (const SearchCapExceeded& e) {
      v.reason = std::string("search cap exceeded: ") + e.what();
      return v;
    }
    if (!w) {
      v.reason = "no cable decomposition with trivial vertical tubular braid for these blocks";
      return v;
    }
  }
  for (int j = 0; j < m; ++j) {
    const auto& r = w->vertical[j];
    if (permutation(r).cycle_count() != 1) {
      v.reason = "vertical interior braid " + std::to_string(j + 1) + " closes to a link, not a knot";
      return v;
    }
    auto u = unknot_check(r);
    if (u.status != UnknotStatus::Unknot) {
      v.reason = "vertical interior braid " + std::to_string(j + 1) + ": " + u.evidence;
      return v;
    }
  }
  v.ribbon = true;
  v.certificate = std::move(w);
  v.reason = "cable decomposition verified; vertical cables close to unknots";
  return v;
}

std::string format_certificate(const CableDecomposition& w) {
  std::ostringstream os;
  os << "cable n " << w.n << " m " << w.m << '\n';
  os << "tubular: " << format_braid(w.tubular) << '\n';
  for (int j = 0; j < w.m; ++j) os << "interior " << j + 1 << ": " << format_braid(w.interior[j]) << '\n';
  for (int j = 0; j < w.m; ++j) os << "vertical " << j + 1 << ": " << format_braid(w.vertical[j]) << '\n';
  return os.str();
}

CableDecomposition parse_certificate(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  CableDecomposition w;
  bool header = false, have_tubular = false;
  std::vector<std::optional<BraidWord>> interior, vertical;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      std::istringstream hs(line);
      std::string c, nk, mk;
      if (!(hs >> c >> nk >> w.n >> mk >> w.m) || c != "cable" || nk != "n" || mk != "m" || w.n < 1 || w.m < 1)
        throw std::invalid_argument("certificate must start with 'cable n <n> m <m>'");
      header = true;
      interior.assign(static_cast<std::size_t>(w.m), std::nullopt);
      vertical.assign(static_cast<std::size_t>(w.m), std::nullopt);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("certificate line without ':'");
    std::istringstream ks(line.substr(0, colon));
    std::string key;
    ks >> key;
    std::string body = line.substr(colon + 1);
    if (key == "tubular") {
      w.tubular = parse_braid(body, w.m);
      have_tubular = true;
    } else if (key == "interior" || key == "vertical") {
      int j = 0;
      if (!(ks >> j) || j < 1 || j > w.m) throw std::invalid_argument("certificate block index out of range");
      (key == "interior" ? interior : vertical)[static_cast<std::size_t>(j - 1)] = parse_braid(body, w.n);
    } else {
      throw std::invalid_argument("unknown certificate key '" + key + "'");
    }
  }
  if (!header || !have_tubular) throw std::invalid_argument("certificate is incomplete");
  for (int j = 0; j < w.m; ++j) {
    if (!interior[j] || !vertical[j]) throw std::invalid_argument("certificate is missing a block braid");
    w.interior.push_back(*interior[j]);
    w.vertical.push_back(*vertical[j]);
  }
  return w;
}

}  // namespace tcover
