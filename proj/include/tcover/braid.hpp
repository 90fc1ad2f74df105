#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tcover {

// A word in the Artin generators of B_m. Letter k > 0 is s_k, k < 0 is s_|k|^-1.
// Words are kept letter-exact; nothing here reduces them.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int degree);
  BraidWord(int degree, std::vector<int> letters);

  int degree() const { return degree_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int degree_ = 1;
  std::vector<int> letters_;
};

// Strand starting at position i (0-based) ends at image[i].
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int degree);
  int degree() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Left normal form Delta^infimum * A_1 * ... * A_k with A_i proper simple elements.
struct NormalForm {
  int degree = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

BraidWord parse_braid(std::string_view text, int degree);
std::string format_braid(const BraidWord& w);

BraidWord product(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);
BraidWord reverse(const BraidWord& u);
BraidWord power(const BraidWord& u, int k);

Permutation permutation(const BraidWord& u);
std::string format_permutation(const Permutation& p);

BraidWord garside_delta(int degree);

NormalForm normal_form(const BraidWord& u);
BraidWord to_word(const NormalForm& nf);
std::string format_normal_form(const NormalForm& nf);
NormalForm parse_normal_form(std::string_view text);

bool braids_equal(const BraidWord& u, const BraidWord& v);
bool commute_check(const BraidWord& u, const BraidWord& v);

BraidWord iota_embed(const BraidWord& beta, int left_pad, int right_pad);
BraidWord n_prime_sigma1(int n);
BraidWord cable_lift(const BraidWord& beta, int n);

// Braid on the kept strands only; strands are selected by their starting position.
BraidWord delete_strands(const BraidWord& u, const std::vector<bool>& keep);

// Simple-element helpers shared with the normal form code and tests.
Permutation simple_delta(int degree);
BraidWord simple_to_word(const Permutation& p);

}  // namespace tcover
