#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcover/braid.hpp"

namespace tcover {

enum class MoveKind { FarSwap, R3, CancelPair, InsertPair };

// Positions are 0-based letter offsets into the current word.
struct Move {
  MoveKind kind = MoveKind::FarSwap;
  int position = 0;
  int sign = 0;   // R3: triple-point sign of the step; InsertPair: sign of the first inserted letter
  int index = 0;  // InsertPair: generator index

  friend bool operator==(const Move&, const Move&) = default;
};

struct ChartMovie {
  BraidWord a;
  BraidWord b;
  std::vector<Move> steps;

  int degree() const { return a.degree(); }
};

struct MovieCheck {
  bool ok = true;
  std::size_t step = 0;  // first illegal step (== steps.size() for a terminal mismatch)
  std::string reason;
};

class MovieGenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Triple-point sign of an R3 window s_i s_j s_i (all positive or all negative).
int r3_sign(int first, int middle);

// Applies one move in place; returns a reason string when the move is illegal.
std::optional<std::string> apply_move(std::vector<int>& word, const Move& mv, int degree);

MovieCheck validate_movie(const ChartMovie& mv);

// Slides the letters of a rightward through b, last letter first.
ChartMovie slide_movie(const BraidWord& a, const BraidWord& b);

std::string format_movie(const ChartMovie& mv);
ChartMovie parse_movie(std::string_view text);

}  // namespace tcover
