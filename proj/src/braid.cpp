#include "tcover/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tcover {

namespace {

void check_letters(int degree, const std::vector<int>& letters) {
  for (int l : letters) {
    if (l == 0 || l >= degree || -l >= degree)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for degree " +
                                  std::to_string(degree));
  }
}

void require_same_degree(const BraidWord& u, const BraidWord& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(u.degree()) + " vs " +
                                std::to_string(v.degree()));
}

class BraidParser {
 public:
  BraidParser(std::string_view text, int degree) : s_(text), degree_(degree) {}

  std::vector<int> run() {
    auto w = sequence();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected ')'");
    return w;
  }

 private:
  std::vector<int> sequence() {
    std::vector<int> out;
    for (;;) {
      skip_space();
      if (pos_ == s_.size() || s_[pos_] == ')') return out;
      auto item = atom();
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        item = raise(item, integer());
      }
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  std::vector<int> atom() {
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = sequence();
      if (pos_ == s_.size()) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == 'D') {
      ++pos_;
      if (degree_ < 2) return {};
      return garside_delta(degree_).letters();
    }
    if (c == 'e') {
      ++pos_;
      return {};
    }
    if (c == 's' || c == 'S') {
      ++pos_;
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected index after 's'");
      return {letter(integer())};
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return {letter(integer())};
    fail(std::string("unexpected character '") + c + "'");
  }

  int letter(long v) {
    if (v == 0 || v >= degree_ || -v >= degree_)
      fail("index " + std::to_string(v) + " out of range 1.." + std::to_string(degree_ - 1));
    return static_cast<int>(v);
  }

  long integer() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_ || pos_ - digits > 9) fail("malformed integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  static std::vector<int> raise(const std::vector<int>& w, long k) {
    std::vector<int> base = w;
    if (k < 0) {
      std::reverse(base.begin(), base.end());
      for (int& l : base) l = -l;
      k = -k;
    }
    std::vector<int> out;
    out.reserve(base.size() * static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("braid parse error at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  std::string_view s_;
  int degree_;
  std::size_t pos_ = 0;
};

// Simple elements are permutation braids; p.image[i] is the end position of the strand starting at i.
std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 0; i + 1 < p.degree(); ++i)
    if (p.image[i] > p.image[i + 1]) out.push_back(i);
  return out;
}

bool in_finishing_set(const Permutation& p, const std::vector<int>& inv, int i) {
  (void)p;
  return inv[i] > inv[i + 1];
}

std::vector<int> inverse_image(const Permutation& p) {
  std::vector<int> inv(p.image.size());
  for (int i = 0; i < p.degree(); ++i) inv[p.image[i]] = i;
  return inv;
}

// Rewrites (A, B) into the left-weighted pair with the same product. Returns true if anything moved.
bool left_weight(Permutation& a, Permutation& b) {
  bool moved = false;
  for (;;) {
    auto inv = inverse_image(a);
    int pick = -1;
    for (int i : starting_set(b)) {
      if (!in_finishing_set(a, inv, i)) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return moved;
    // A <- A s_i: swap the values i, i+1.  B <- s_i^-1 B: swap the entries at i, i+1.
    for (int& v : a.image) {
      if (v == pick)
        v = pick + 1;
      else if (v == pick + 1)
        v = pick;
    }
    std::swap(b.image[pick], b.image[pick + 1]);
    moved = true;
  }
}

Permutation flip(const Permutation& p) {
  int m = p.degree();
  Permutation out{std::vector<int>(m)};
  for (int k = 0; k < m; ++k) out.image[k] = m - 1 - p.image[m - 1 - k];
  return out;
}

Permutation transposition(int degree, int i) {
  auto p = Permutation::identity(degree);
  std::swap(p.image[i], p.image[i + 1]);
  return p;
}

}  // namespace

BraidWord::BraidWord(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("braid degree must be positive");
}

BraidWord::BraidWord(int degree, std::vector<int> letters) : degree_(degree), letters_(std::move(letters)) {
  if (degree < 1) throw std::invalid_argument("braid degree must be positive");
  check_letters(degree_, letters_);
}

Permutation Permutation::identity(int degree) {
  Permutation p{std::vector<int>(degree)};
  for (int i = 0; i < degree; ++i) p.image[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out{std::vector<int>(image.size())};
  for (std::size_t i = 0; i < image.size(); ++i) out.image[i] = next.image[image[i]];
  return out;
}

Permutation Permutation::inverse() const { return Permutation{inverse_image(*this)}; }

int Permutation::cycle_count() const {
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord parse_braid(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("braid degree must be positive");
  return BraidWord(degree, BraidParser(text, degree).run());
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

BraidWord product(const BraidWord& u, const BraidWord& v) {
  require_same_degree(u, v);
  auto letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.degree(), std::move(letters));
}

BraidWord inverse(const BraidWord& u) {
  std::vector<int> letters(u.letters().rbegin(), u.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(u.degree(), std::move(letters));
}

BraidWord reverse(const BraidWord& u) {
  return BraidWord(u.degree(), std::vector<int>(u.letters().rbegin(), u.letters().rend()));
}

BraidWord power(const BraidWord& u, int k) {
  BraidWord base = k < 0 ? inverse(u) : u;
  std::vector<int> letters;
  for (int i = 0; i < std::abs(k); ++i) letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(u.degree(), std::move(letters));
}

Permutation permutation(const BraidWord& u) {
  // Track which strand sits at each position, then invert.
  std::vector<int> at(u.degree());
  for (int i = 0; i < u.degree(); ++i) at[i] = i;
  for (int l : u.letters()) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  Permutation p{std::vector<int>(u.degree())};
  for (int pos = 0; pos < u.degree(); ++pos) p.image[at[pos]] = pos;
  return p;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int v : p.image) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

BraidWord garside_delta(int degree) {
  if (degree < 2) throw std::invalid_argument("garside_delta needs degree >= 2");
  std::vector<int> letters;
  for (int top = degree - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  return BraidWord(degree, std::move(letters));
}

Permutation simple_delta(int degree) {
  Permutation p{std::vector<int>(degree)};
  for (int i = 0; i < degree; ++i) p.image[i] = degree - 1 - i;
  return p;
}

BraidWord simple_to_word(const Permutation& p) {
  Permutation q = p;
  std::vector<int> letters;
  for (;;) {
    auto s = starting_set(q);
    if (s.empty()) break;
    letters.push_back(s.front() + 1);
    std::swap(q.image[s.front()], q.image[s.front() + 1]);
  }
  return BraidWord(p.degree(), std::move(letters));
}

NormalForm normal_form(const BraidWord& u) {
  const int m = u.degree();
  NormalForm nf;
  nf.degree = m;
  if (m < 2) return nf;
  const Permutation delta = simple_delta(m);
  auto& fs = nf.factors;

  for (int l : u.letters()) {
    int i = std::abs(l) - 1;
    Permutation x = transposition(m, i);
    if (l < 0) {
      // s_i^-1 = Delta^-1 (Delta s_i^-1); move Delta^-1 to the front through the existing factors.
      for (auto& f : fs) f = flip(f);
      --nf.infimum;
      x = delta.then(x);
    }
    fs.push_back(std::move(x));
    for (std::size_t j = fs.size() - 1; j > 0; --j) left_weight(fs[j - 1], fs[j]);
    while (!fs.empty() && fs.front() == delta) {
      fs.erase(fs.begin());
      ++nf.infimum;
    }
    while (!fs.empty() && fs.back().is_identity()) fs.pop_back();
  }
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  std::vector<int> letters;
  if (nf.degree >= 2) {
    auto d = power(garside_delta(nf.degree), nf.infimum);
    letters = d.letters();
    for (const auto& f : nf.factors) {
      auto w = simple_to_word(f);
      letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    }
  }
  return BraidWord(nf.degree, std::move(letters));
}

std::string format_normal_form(const NormalForm& nf) {
  std::ostringstream os;
  os << "degree " << nf.degree << " inf " << nf.infimum;
  for (const auto& f : nf.factors) os << " | " << format_permutation(f);
  return os.str();
}

NormalForm parse_normal_form(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  NormalForm nf;
  if (!(is >> tok) || tok != "degree" || !(is >> nf.degree) || !(is >> tok) || tok != "inf" || !(is >> nf.infimum))
    throw std::invalid_argument("malformed normal form header");
  while (is >> tok) {
    if (tok != "|") throw std::invalid_argument("expected '|' in normal form");
    Permutation p{std::vector<int>(nf.degree)};
    std::vector<bool> seen(nf.degree, false);
    for (int k = 0; k < nf.degree; ++k) {
      int v;
      if (!(is >> v) || v < 1 || v > nf.degree || seen[v - 1]) throw std::invalid_argument("malformed factor");
      seen[v - 1] = true;
      p.image[k] = v - 1;
    }
    nf.factors.push_back(std::move(p));
  }
  return nf;
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  require_same_degree(u, v);
  return normal_form(u) == normal_form(v);
}

bool commute_check(const BraidWord& u, const BraidWord& v) {
  require_same_degree(u, v);
  return normal_form(product(u, v)) == normal_form(product(v, u));
}

BraidWord iota_embed(const BraidWord& beta, int left_pad, int right_pad) {
  if (left_pad < 0 || right_pad < 0) throw std::invalid_argument("iota_embed pads must be non-negative");
  std::vector<int> letters = beta.letters();
  for (int& l : letters) l += l > 0 ? left_pad : -left_pad;
  return BraidWord(left_pad + beta.degree() + right_pad, std::move(letters));
}

BraidWord n_prime_sigma1(int n) {
  if (n < 1) throw std::invalid_argument("n_prime_sigma1 needs n >= 1");
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) {
    letters.push_back(n);
    for (int i = n - 1; i >= k; --i) letters.push_back(i);
    for (int i = n + 1; i <= 2 * n - k; ++i) letters.push_back(i);
  }
  return BraidWord(2 * n, std::move(letters));
}

BraidWord cable_lift(const BraidWord& beta, int n) {
  if (n < 1) throw std::invalid_argument("cable_lift needs n >= 1");
  const int m = beta.degree();
  const auto crossing = n_prime_sigma1(n);
  const auto crossing_inv = inverse(crossing);
  std::vector<int> letters;
  for (int l : beta.letters()) {
    int j = std::abs(l);
    auto lifted = iota_embed(l > 0 ? crossing : crossing_inv, n * (j - 1), n * (m - j - 1));
    letters.insert(letters.end(), lifted.letters().begin(), lifted.letters().end());
  }
  return BraidWord(n * m, std::move(letters));
}

BraidWord delete_strands(const BraidWord& u, const std::vector<bool>& keep) {
  const int m = u.degree();
  if (static_cast<int>(keep.size()) != m) throw std::invalid_argument("delete_strands: mask size mismatch");
  std::vector<int> at(m);
  for (int i = 0; i < m; ++i) at[i] = i;
  int kept = static_cast<int>(std::count(keep.begin(), keep.end(), true));
  std::vector<int> letters;
  for (int l : u.letters()) {
    int i = std::abs(l) - 1;
    if (keep[at[i]] && keep[at[i + 1]]) {
      int rank = 0;
      for (int p = 0; p < i; ++p) rank += keep[at[p]] ? 1 : 0;
      letters.push_back(l > 0 ? rank + 1 : -(rank + 1));
    }
    std::swap(at[i], at[i + 1]);
  }
  return BraidWord(std::max(kept, 1), std::move(letters));
}

}  // namespace tcover
