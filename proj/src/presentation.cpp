#include "tcover/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/integer/common_factor.hpp>

#include "tcover/kernels.hpp"

namespace tcover {

namespace {

void normalize_relators(std::vector<FreeWord>& rels) {
  std::vector<FreeWord> out;
  for (auto& r : rels) {
    auto c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  rels = std::move(out);
}

// Drops generator g (1-based) from a word that no longer mentions it.
FreeWord drop_generator(const FreeWord& w, int g) {
  std::vector<int> letters;
  for (int l : w.letters()) {
    int j = std::abs(l);
    if (j == g) throw std::logic_error("eliminated generator still present");
    int nj = j > g ? j - 1 : j;
    letters.push_back(l > 0 ? nj : -nj);
  }
  return FreeWord(w.rank() - 1, letters);
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

GroupPresentation torus_covering_group(const BraidWord& a, const BraidWord& b, bool allow_noncommuting) {
  if (a.degree() != b.degree()) throw std::invalid_argument("boundary braids have different degrees");
  if (!allow_noncommuting && !commute_check(a, b)) throw std::invalid_argument("boundary braids do not commute");
  const int m = a.degree();
  GroupPresentation p;
  p.names = default_names(m);
  for (const BraidWord* beta : {&a, &b}) {
    for (int j = 1; j <= m; ++j) {
      auto x = FreeWord::generator(m, j);
      auto r = inverse(x) * artin_apply(*beta, x);
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  }
  p.central = central_word(b);
  return p;
}

std::optional<FreeWord> central_word(const BraidWord& b) {
  const int m = b.degree();
  if (m < 2) return std::nullopt;
  auto nf = normal_form(b);
  if (!nf.factors.empty() || nf.infimum == 0) return std::nullopt;
  std::vector<int> boundary;
  for (int j = 1; j <= m; ++j) boundary.push_back(j);
  FreeWord p(m, boundary);
  int e = nf.infimum;
  return power(p, e % 2 == 0 ? e / 2 : e);
}

GroupPresentation tietze_eliminate(const GroupPresentation& input) {
  GroupPresentation p = input;
  normalize_relators(p.relators);
  for (;;) {
    int best_rel = -1, best_gen = 0;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (best_rel >= 0 && p.relators[r].size() >= p.relators[best_rel].size()) continue;
      std::vector<int> count(p.generator_count() + 1, 0);
      for (int l : p.relators[r].letters()) ++count[std::abs(l)];
      for (int g = p.generator_count(); g >= 1; --g) {
        if (count[g] == 1) {
          best_rel = static_cast<int>(r);
          best_gen = g;
          break;
        }
      }
    }
    if (best_rel < 0) break;

    const auto& rel = p.relators[best_rel].letters();
    const int rank = p.generator_count();
    std::size_t at = 0;
    while (std::abs(rel[at]) != best_gen) ++at;
    FreeWord u(rank, std::vector<int>(rel.begin(), rel.begin() + at));
    FreeWord v(rank, std::vector<int>(rel.begin() + at + 1, rel.end()));
    // u x v = 1 gives x = u^-1 v^-1;  u x^-1 v = 1 gives x = v u.
    FreeWord repl = rel[at] > 0 ? inverse(u) * inverse(v) : v * u;

    std::vector<FreeWord> images;
    for (int j = 1; j <= rank; ++j) images.push_back(j == best_gen ? repl : FreeWord::generator(rank, j));

    GroupPresentation next;
    next.names = p.names;
    next.names.erase(next.names.begin() + (best_gen - 1));
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (static_cast<int>(r) == best_rel) continue;
      next.relators.push_back(drop_generator(substitute(p.relators[r], images), best_gen));
    }
    if (p.central) next.central = drop_generator(substitute(*p.central, images), best_gen);
    normalize_relators(next.relators);
    p = std::move(next);
  }
  return p;
}

GroupPresentation add_relator(const GroupPresentation& p, const FreeWord& w) {
  if (w.rank() > p.generator_count()) throw std::invalid_argument("relator rank exceeds generator count");
  GroupPresentation q = p;
  if (w.empty()) return q;
  q.relators.push_back(FreeWord(p.generator_count(), w.letters()));
  return q;
}

AbelianInvariants smith_invariants(const std::vector<std::vector<BigInt>>& rows_in, int columns) {
  auto a = rows_in;
  const int rows = static_cast<int>(a.size());
  std::vector<BigInt> diag;
  int t = 0;
  for (; t < rows && t < columns; ++t) {
    for (;;) {
      // Smallest nonzero entry in the remaining block becomes the pivot.
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < columns; ++j)
          if (a[i][j] != 0 && (pr < 0 || abs_big(a[i][j]) < abs_big(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) goto done;
      std::swap(a[t], a[pr]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (int j = t; j < columns; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < columns; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs_big(a[t][t]));
  }
done:
  // Turn the diagonal into a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = boost::integer::gcd(diag[i], diag[j]);
      if (g == 0) continue;
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  AbelianInvariants inv;
  inv.free_rank = columns - static_cast<int>(diag.size());
  for (auto& d : diag)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const int g = p.generator_count();
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : p.relators) {
    std::vector<BigInt> row(g, 0);
    for (int l : r.letters()) row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    rows.push_back(std::move(row));
  }
  return smith_invariants(rows, g);
}

std::string format_abelian(const AbelianInvariants& inv) {
  std::vector<std::string> parts;
  if (inv.free_rank == 1) parts.push_back("Z");
  if (inv.free_rank > 1) parts.push_back("Z^" + std::to_string(inv.free_rank));
  for (const auto& d : inv.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

BigInt predicted_cyclic_homs(const AbelianInvariants& inv, int k) {
  BigInt out = 1;
  for (int i = 0; i < inv.free_rank; ++i) out *= k;
  for (const auto& d : inv.torsion) out *= boost::integer::gcd(d, BigInt(k));
  return out;
}

QuotientCounts finite_quotient_count(const GroupPresentation& p, const FiniteGroup& target, unsigned workers) {
  const std::uint32_t n = target.order();
  const int g = p.generator_count();
  std::uint64_t total = 1;
  for (int i = 0; i < g; ++i) {
    if (total > kQuotientTupleCap / n) throw std::length_error("finite quotient search space exceeds the 10^8 tuple cap");
    total *= n;
  }
  if (total > kQuotientTupleCap) throw std::length_error("finite quotient search space exceeds the 10^8 tuple cap");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  const auto& k = kernels::active();
  const auto& table = target.table();
  const auto& inverses = target.inverses();

  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
    constexpr std::size_t kBatch = 512;
    QuotientCounts c;
    std::vector<std::vector<std::uint32_t>> img(g, std::vector<std::uint32_t>(kBatch));
    std::vector<std::vector<std::uint32_t>> inv_img(g, std::vector<std::uint32_t>(kBatch));
    std::vector<std::uint32_t> cur(kBatch), ident(kBatch, target.identity());
    std::vector<std::uint8_t> flags(kBatch);
    std::vector<std::uint32_t> gens(g);
    for (std::uint64_t base = lo; base < hi; base += kBatch) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, hi - base));
      for (std::size_t t = 0; t < len; ++t) {
        std::uint64_t code = base + t;
        for (int j = g - 1; j >= 0; --j) {
          img[j][t] = static_cast<std::uint32_t>(code % n);
          inv_img[j][t] = inverses[img[j][t]];
          code /= n;
        }
      }
      std::fill(flags.begin(), flags.begin() + len, 1);
      for (const auto& r : p.relators) {
        std::copy(ident.begin(), ident.begin() + len, cur.begin());
        for (int l : r.letters()) {
          const auto& rhs = l > 0 ? img[l - 1] : inv_img[-l - 1];
          k.lookup(table.data(), n, cur.data(), rhs.data(), cur.data(), len);
        }
        k.and_equal_const(cur.data(), target.identity(), flags.data(), len);
      }
      for (std::size_t t = 0; t < len; ++t) {
        if (!flags[t]) continue;
        ++c.homomorphisms;
        for (int j = 0; j < g; ++j) gens[j] = img[j][t];
        bool abelian = true;
        for (int x = 0; x < g && abelian; ++x)
          for (int y = x + 1; y < g && abelian; ++y)
            abelian = target.mul(gens[x], gens[y]) == target.mul(gens[y], gens[x]);
        if (abelian) ++c.abelian_image;
        if (target.generated_order(gens) == n) ++c.epimorphisms;
      }
    }
    return c;
  };

  std::vector<QuotientCounts> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    if (workers == 1)
      parts[w] = count_range(lo, hi);
    else
      pool.emplace_back([&, w, lo, hi] { parts[w] = count_range(lo, hi); });
  }
  for (auto& t : pool) t.join();
  QuotientCounts sum;
  for (const auto& c : parts) {
    sum.homomorphisms += c.homomorphisms;
    sum.epimorphisms += c.epimorphisms;
    sum.abelian_image += c.abelian_image;
  }
  return sum;
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& n : p.names) os << ' ' << n;
  os << '\n';
  for (const auto& r : p.relators) os << "relator: " << format_free_word(r, p.names) << '\n';
  if (p.central) os << "central: " << format_free_word(*p.central, p.names) << '\n';
  return os.str();
}

GroupPresentation parse_presentation(std::string_view text) {
  GroupPresentation p;
  bool have_generators = false;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw std::invalid_argument("presentation line without ':'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (key == "generators") {
      std::istringstream vs(value);
      std::string name;
      while (vs >> name) p.names.push_back(name);
      have_generators = true;
    } else if (!have_generators) {
      throw std::invalid_argument("presentation must start with a generators line");
    } else if (key == "relator") {
      auto w = parse_free_word(value, p.names);
      if (!w.empty()) p.relators.push_back(std::move(w));
    } else if (key == "central") {
      p.central = parse_free_word(value, p.names);
    } else {
      throw std::invalid_argument("unknown presentation key '" + key + "'");
    }
  }
  if (!have_generators) throw std::invalid_argument("presentation has no generators line");
  return p;
}

}  // namespace tcover
