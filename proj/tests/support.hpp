#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tcover/braid.hpp"

namespace support {

inline std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TCOVER_FIXTURES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline tcover::BraidWord random_braid(std::mt19937& rng, int degree, int max_len, bool positive = false) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, degree - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (int& l : letters) l = (!positive && neg(rng)) ? -idx(rng) : idx(rng);
  return tcover::BraidWord(degree, letters);
}

// Free group words as plain vectors, reduced on the fly. Kept separate from the library on purpose.
using Word = std::vector<int>;

inline Word reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word inv(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

inline Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce(out);
}

// Images of x_1..x_m under the braid automorphism, built by composing substitutions.
inline std::vector<Word> artin_images(const tcover::BraidWord& beta) {
  const int m = beta.degree();
  std::vector<Word> img;
  for (int j = 1; j <= m; ++j) img.push_back({j});
  // Builds phi_last o ... o phi_first by precomposing one letter at a time, last letter first.
  for (auto it = beta.letters().rbegin(); it != beta.letters().rend(); ++it) {
    int l = *it, i = std::abs(l);
    std::vector<Word> gen(m);
    for (int j = 1; j <= m; ++j) gen[j - 1] = {j};
    if (l > 0) {
      gen[i - 1] = {i, i + 1, -i};
      gen[i] = {i};
    } else {
      gen[i - 1] = {i + 1};
      gen[i] = {-(i + 1), i, i + 1};
    }
    std::vector<Word> next(m);
    for (int j = 0; j < m; ++j) {
      Word w;
      for (int x : gen[j]) {
        const Word& part = x > 0 ? img[x - 1] : inv(img[-x - 1]);
        w.insert(w.end(), part.begin(), part.end());
      }
      next[j] = reduce(w);
    }
    img = std::move(next);
  }
  return img;
}

// Braid equality through the (faithful) action on the free group.
inline bool oracle_equal(const tcover::BraidWord& u, const tcover::BraidWord& v) {
  return artin_images(u) == artin_images(v);
}

}  // namespace support
