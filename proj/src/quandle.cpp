#include "tcover/quandle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "tcover/kernels.hpp"

namespace tcover {

std::string quandle_axiom_failure(std::uint32_t n, const std::vector<std::uint32_t>& t) {
  if (t.size() != static_cast<std::size_t>(n) * n) return "table size is not order^2";
  for (auto v : t)
    if (v >= n) return "table entry out of range";
  auto op = [&](std::uint32_t x, std::uint32_t y) { return t[x * n + y]; };
  for (std::uint32_t a = 0; a < n; ++a)
    if (op(a, a) != a) return "idempotence fails at " + std::to_string(a);
  for (std::uint32_t b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (std::uint32_t a = 0; a < n; ++a) hit[op(a, b)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      return "right translation by " + std::to_string(b) + " is not a bijection";
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(op(a, c), op(b, c)))
          return "self-distributivity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
  return {};
}

Quandle Quandle::from_table(std::uint32_t order, std::vector<std::uint32_t> table) {
  if (auto why = quandle_axiom_failure(order, table); !why.empty()) throw std::invalid_argument("not a quandle: " + why);
  Quandle q;
  q.order_ = order;
  q.table_ = std::move(table);
  q.inverse_.resize(q.table_.size());
  for (std::uint32_t z = 0; z < order; ++z)
    for (std::uint32_t y = 0; y < order; ++y) q.inverse_[q.op(z, y) * order + y] = z;
  return q;
}

Quandle dihedral_quandle(int p) {
  if (p < 3) throw std::invalid_argument("dihedral quandle needs p >= 3");
  const auto n = static_cast<std::uint32_t>(p);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a * n + b] = (2 * b + n - a) % n;
  return Quandle::from_table(n, std::move(t));
}

Coloring braid_monodromy(const BraidWord& beta, const Quandle& q, const Coloring& colors) {
  if (static_cast<int>(colors.size()) != beta.degree()) throw std::invalid_argument("coloring dimension mismatch");
  for (auto c : colors)
    if (c >= q.order()) throw std::invalid_argument("color out of range");
  Coloring c = colors;
  for (int l : beta.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    std::uint32_t x = c[i], y = c[i + 1];
    if (l > 0) {
      c[i] = y;
      c[i + 1] = q.op(x, y);
    } else {
      c[i] = q.op_inv(y, x);
      c[i + 1] = x;
    }
  }
  return c;
}

std::vector<Coloring> torus_colorings(const BraidWord& a, const BraidWord& b, const Quandle& q, unsigned workers,
                                      bool allow_noncommuting) {
  if (a.degree() != b.degree()) throw std::invalid_argument("boundary braids have different degrees");
  if (!allow_noncommuting && !commute_check(a, b)) throw std::invalid_argument("boundary braids do not commute");
  const int m = a.degree();
  const std::uint32_t n = q.order();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    total *= n;
    if (total > kColoringCandidateCap) throw std::length_error("coloring search space exceeds the 10^8 candidate cap");
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  const auto& k = kernels::active();

  // Strand colors are kept structure-of-arrays so each crossing is one batched table lookup.
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    constexpr std::size_t kBatch = 512;
    std::vector<Coloring> found;
    std::vector<std::vector<std::uint32_t>> init(m, std::vector<std::uint32_t>(kBatch));
    std::vector<std::vector<std::uint32_t>> work(m, std::vector<std::uint32_t>(kBatch));
    std::vector<std::vector<std::uint32_t>> scratch(m, std::vector<std::uint32_t>(kBatch));
    std::vector<std::uint8_t> flags(kBatch);
    for (std::uint64_t base = lo; base < hi; base += kBatch) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, hi - base));
      for (std::size_t t = 0; t < len; ++t) {
        std::uint64_t code = base + t;
        for (int s = m - 1; s >= 0; --s) {
          init[s][t] = static_cast<std::uint32_t>(code % n);
          code /= n;
        }
      }
      std::fill(flags.begin(), flags.begin() + len, 1);
      for (const BraidWord* beta : {&a, &b}) {
        std::vector<std::uint32_t*> pos(m);
        for (int s = 0; s < m; ++s) {
          std::copy(init[s].begin(), init[s].begin() + len, work[s].begin());
          pos[s] = work[s].data();
        }
        std::vector<std::uint32_t*> spare(m);
        for (int s = 0; s < m; ++s) spare[s] = scratch[s].data();
        for (int l : beta->letters()) {
          std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
          std::uint32_t* x = pos[i];
          std::uint32_t* y = pos[i + 1];
          std::uint32_t* out = spare[i];
          if (l > 0) {
            k.lookup(q.table().data(), n, x, y, out, len);  // new right strand x * y
            pos[i] = y;
            pos[i + 1] = out;
          } else {
            k.lookup(q.inverse_table().data(), n, y, x, out, len);  // new left strand y / x
            pos[i] = out;
            pos[i + 1] = x;
          }
          spare[i] = x == pos[i + 1] ? y : x;
        }
        for (int s = 0; s < m; ++s) k.and_equal(pos[s], init[s].data(), flags.data(), len);
      }
      for (std::size_t t = 0; t < len; ++t) {
        if (!flags[t]) continue;
        Coloring c(m);
        for (int s = 0; s < m; ++s) c[s] = init[s][t];
        found.push_back(std::move(c));
      }
    }
    return found;
  };

  std::vector<std::vector<Coloring>> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    if (workers == 1)
      parts[w] = scan(lo, hi);
    else
      pool.emplace_back([&, w, lo, hi] { parts[w] = scan(lo, hi); });
  }
  for (auto& t : pool) t.join();
  std::vector<Coloring> all;
  for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace tcover
