#include "tcover/free_group.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace tcover {

namespace {

void append_reduced(std::vector<int>& out, int l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

bool is_integer_token(std::string_view t) {
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

FreeWord::FreeWord(int rank, const std::vector<int>& letters) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("free group rank must be non-negative");
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw std::invalid_argument("free generator " + std::to_string(l) + " out of range for rank " +
                                  std::to_string(rank));
    append_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int rank, int j) { return FreeWord(rank, std::vector<int>{j}); }

FreeWord free_reduce(int rank, const std::vector<int>& letters) { return FreeWord(rank, letters); }

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("free word rank mismatch");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return FreeWord(u.rank(), letters);
}

FreeWord inverse(const FreeWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return FreeWord(w.rank(), letters);
}

FreeWord power(const FreeWord& w, int k) {
  FreeWord base = k < 0 ? inverse(w) : w;
  FreeWord out(w.rank());
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.rank(), std::vector<int>(l.begin() + lo, l.begin() + hi));
}

std::vector<std::string> default_names(int rank) {
  std::vector<std::string> names;
  for (int j = 1; j <= rank; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

FreeWord parse_free_word(std::string_view text, const std::vector<std::string>& names) {
  const int rank = static_cast<int>(names.size());
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    std::string_view base = tok;
    long exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      auto e = tok.substr(caret + 1);
      if (!is_integer_token(e)) throw std::invalid_argument("malformed exponent in '" + std::string(tok) + "'");
      exponent = std::stol(std::string(e));
    }
    int gen = 0;
    if (is_integer_token(base)) {
      gen = std::stoi(std::string(base));
      if (gen == 0 || std::abs(gen) > rank)
        throw std::invalid_argument("free generator " + std::string(base) + " out of range");
    } else {
      for (int j = 0; j < rank; ++j)
        if (names[j] == base) gen = j + 1;
      if (gen == 0) throw std::invalid_argument("unknown generator '" + std::string(base) + "'");
    }
    if (exponent < 0) {
      gen = -gen;
      exponent = -exponent;
    }
    for (long k = 0; k < exponent; ++k) letters.push_back(gen);
  }
  return FreeWord(rank, letters);
}

std::string format_free_word(const FreeWord& w, const std::vector<std::string>& names) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names.at(std::abs(l) - 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

std::string format_free_word(const FreeWord& w) { return format_free_word(w, default_names(w.rank())); }

FreeWord artin_generator(int rank, int i, int sign, int j) {
  if (i < 1 || i >= rank || j < 1 || j > rank || (sign != 1 && sign != -1))
    throw std::invalid_argument("artin_generator index out of range");
  std::vector<int> img;
  if (sign > 0) {
    if (j == i)
      img = {i, i + 1, -i};
    else if (j == i + 1)
      img = {i};
    else
      img = {j};
  } else {
    if (j == i)
      img = {i + 1};
    else if (j == i + 1)
      img = {-(i + 1), i, i + 1};
    else
      img = {j};
  }
  return FreeWord(rank, img);
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  std::vector<int> out;
  for (int l : w.letters()) {
    const auto& img = images.at(std::abs(l) - 1).letters();
    if (l > 0) {
      for (int x : img) append_reduced(out, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) append_reduced(out, -*it);
    }
  }
  int rank = images.empty() ? w.rank() : images.front().rank();
  return FreeWord(rank, out);
}

FreeWord artin_apply(const BraidWord& beta, const FreeWord& w) {
  const int m = beta.degree();
  if (m != w.rank()) throw std::invalid_argument("artin_apply: braid degree and free rank differ");
  // Substitution tables for every signed generator, built once.
  std::vector<std::vector<FreeWord>> table_pos, table_neg;
  for (int i = 1; i < m; ++i) {
    std::vector<FreeWord> pos, neg;
    for (int j = 1; j <= m; ++j) {
      pos.push_back(artin_generator(m, i, 1, j));
      neg.push_back(artin_generator(m, i, -1, j));
    }
    table_pos.push_back(std::move(pos));
    table_neg.push_back(std::move(neg));
  }
  FreeWord cur = w;
  for (int l : beta.letters()) {
    const auto& images = l > 0 ? table_pos[l - 1] : table_neg[-l - 1];
    cur = substitute(cur, images);
  }
  return cur;
}

}  // namespace tcover
