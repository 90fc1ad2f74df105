#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcover/braid.hpp"

namespace tcover {

// Freely reduced word in F_rank; letter k > 0 is x_k, k < 0 is x_|k|^-1.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}
  // Reduces the given letters.
  FreeWord(int rank, const std::vector<int>& letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  static FreeWord generator(int rank, int j);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

FreeWord free_reduce(int rank, const std::vector<int>& letters);
FreeWord operator*(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, int k);
// Conjugate cyclic rotation that is cyclically reduced.
FreeWord cyclic_reduce(const FreeWord& w);

std::vector<std::string> default_names(int rank);
// "x1 x2^-1 x1" (names) or "1 -2 1" (compact) input; output uses names.
FreeWord parse_free_word(std::string_view text, const std::vector<std::string>& names);
std::string format_free_word(const FreeWord& w, const std::vector<std::string>& names);
std::string format_free_word(const FreeWord& w);

// Image of x_j under the automorphism of s_i^sign.
FreeWord artin_generator(int rank, int i, int sign, int j);
// Replaces every x_j in w by images[j-1].
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);
// Letters of beta act in reading order: Artin(uv) = Artin(v) o Artin(u).
FreeWord artin_apply(const BraidWord& beta, const FreeWord& w);

}  // namespace tcover
