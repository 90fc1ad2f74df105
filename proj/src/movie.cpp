#include "tcover/movie.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

namespace tcover {

namespace {

constexpr std::size_t kSlideStateCap = 2'000'000;

std::vector<int> concat(const std::vector<int>& u, const std::vector<int>& v) {
  auto out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

int uniform_sign(const std::vector<int>& w) {
  int s = 0;
  for (int l : w) {
    int t = l > 0 ? 1 : -1;
    if (s != 0 && s != t) return 0;
    s = t;
  }
  return s;
}

// Shortest path in the positive word graph (FarSwap, R3), minimising (R3 count, FarSwap count).
std::optional<std::vector<Move>> positive_path(const std::vector<int>& start, const std::vector<int>& goal) {
  struct Node {
    std::vector<int> word;
    int r3, fs;
    int parent;
    Move via;
  };
  std::vector<Node> nodes{{start, 0, 0, -1, {}}};
  std::map<std::vector<int>, int> index{{start, 0}};
  using Key = std::tuple<int, int, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
  open.emplace(0, 0, 0);
  while (!open.empty()) {
    auto [r3, fs, id] = open.top();
    open.pop();
    if (nodes[id].r3 != r3 || nodes[id].fs != fs) continue;
    if (nodes[id].word == goal) {
      std::vector<Move> path;
      for (int at = id; nodes[at].parent >= 0; at = nodes[at].parent) path.push_back(nodes[at].via);
      return std::vector<Move>(path.rbegin(), path.rend());
    }
    const auto w = nodes[id].word;
    const int len = static_cast<int>(w.size());
    auto relax = [&](std::vector<int> next, Move mv, int nr3, int nfs) {
      auto [it, fresh] = index.emplace(next, static_cast<int>(nodes.size()));
      if (fresh) {
        if (nodes.size() >= kSlideStateCap) throw MovieGenerationError("slide search exceeded its state cap");
        nodes.push_back({std::move(next), nr3, nfs, id, mv});
      } else {
        Node& n = nodes[it->second];
        if (std::tie(n.r3, n.fs) <= std::tie(nr3, nfs)) return;
        n.r3 = nr3;
        n.fs = nfs;
        n.parent = id;
        n.via = mv;
      }
      open.emplace(nr3, nfs, it->second);
    };
    for (int p = 0; p + 1 < len; ++p) {
      if (std::abs(w[p] - w[p + 1]) >= 2) {
        auto next = w;
        std::swap(next[p], next[p + 1]);
        relax(std::move(next), Move{MoveKind::FarSwap, p}, r3, fs + 1);
      }
    }
    for (int p = 0; p + 2 < len; ++p) {
      if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
        auto next = w;
        std::swap(next[p], next[p + 1]);
        next[p + 2] = next[p];
        relax(std::move(next), Move{MoveKind::R3, p}, r3 + 1, fs);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> negated(std::vector<int> w) {
  for (int& l : w) l = -l;
  return w;
}

// Moves taking [x] + b to b + [x], offsets relative to the letter x. b has uniform sign sb.
std::optional<std::vector<Move>> slide_letter(int x, const std::vector<int>& b, int sb) {
  if (b.empty()) return std::vector<Move>{};
  const int sx = x > 0 ? 1 : -1;
  const int y = sx == sb ? x : -x;  // letter of b's sign
  auto pb = sb > 0 ? b : negated(b);
  int py = sb > 0 ? y : -y;
  std::vector<int> start{py}, goal = pb;
  start.insert(start.end(), pb.begin(), pb.end());
  goal.push_back(py);
  auto path = positive_path(start, goal);
  if (!path) return std::nullopt;
  if (sx == sb) return path;

  // x = y^-1: insert y x at the end, run the slide of y backwards, cancel x y at the front.
  std::vector<Move> out;
  const int blen = static_cast<int>(b.size());
  out.push_back(Move{MoveKind::InsertPair, 1 + blen, sb, std::abs(x)});
  for (auto it = path->rbegin(); it != path->rend(); ++it) {
    Move mv = *it;
    mv.position += 1;
    out.push_back(mv);
  }
  out.push_back(Move{MoveKind::CancelPair, 0});
  return out;
}

// Fills in R3 signs by replaying the moves.
void annotate(ChartMovie& mv) {
  auto w = concat(mv.a.letters(), mv.b.letters());
  for (auto& s : mv.steps) {
    if (s.kind == MoveKind::R3) s.sign = r3_sign(w[s.position], w[s.position + 1]);
    if (auto err = apply_move(w, s, mv.degree())) throw std::logic_error("generated movie is illegal: " + *err);
  }
}

std::string sign_token(int s) { return s > 0 ? "+" : "-"; }

int parse_sign(const std::string& tok) {
  if (tok == "+" || tok == "1" || tok == "+1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  throw std::invalid_argument("malformed sign '" + tok + "'");
}

}  // namespace

int r3_sign(int first, int middle) {
  int s = std::abs(middle) > std::abs(first) ? 1 : -1;
  return first > 0 ? s : -s;
}

std::optional<std::string> apply_move(std::vector<int>& w, const Move& mv, int degree) {
  const int len = static_cast<int>(w.size());
  const int p = mv.position;
  switch (mv.kind) {
    case MoveKind::FarSwap:
      if (p < 0 || p + 1 >= len) return "FarSwap position out of range";
      if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) < 2) return "FarSwap on letters with index gap < 2";
      std::swap(w[p], w[p + 1]);
      return std::nullopt;
    case MoveKind::R3: {
      if (p < 0 || p + 2 >= len) return "R3 window out of range";
      int s = w[p] > 0 ? 1 : -1;
      if ((w[p + 1] > 0 ? 1 : -1) != s || (w[p + 2] > 0 ? 1 : -1) != s) return "R3 window has mixed signs";
      if (w[p] != w[p + 2]) return "R3 window is not of the form s_i s_j s_i";
      if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) != 1) return "R3 window labels are not adjacent";
      if (mv.sign != 0 && mv.sign != r3_sign(w[p], w[p + 1])) return "R3 sign does not match the window";
      std::swap(w[p], w[p + 1]);
      w[p + 2] = w[p];
      return std::nullopt;
    }
    case MoveKind::CancelPair:
      if (p < 0 || p + 1 >= len) return "CancelPair position out of range";
      if (w[p] != -w[p + 1]) return "CancelPair on letters that are not inverse";
      w.erase(w.begin() + p, w.begin() + p + 2);
      return std::nullopt;
    case MoveKind::InsertPair:
      if (p < 0 || p > len) return "InsertPair position out of range";
      if (mv.index < 1 || mv.index >= degree) return "InsertPair index out of range";
      if (mv.sign != 1 && mv.sign != -1) return "InsertPair sign must be +1 or -1";
      w.insert(w.begin() + p, {mv.sign * mv.index, -mv.sign * mv.index});
      return std::nullopt;
  }
  return "unknown move";
}

MovieCheck validate_movie(const ChartMovie& mv) {
  MovieCheck check;
  if (mv.a.degree() != mv.b.degree()) {
    check.ok = false;
    check.reason = "boundary braids have different degrees";
    return check;
  }
  auto w = concat(mv.a.letters(), mv.b.letters());
  for (std::size_t k = 0; k < mv.steps.size(); ++k) {
    if (auto err = apply_move(w, mv.steps[k], mv.degree())) {
      check.ok = false;
      check.step = k;
      check.reason = *err;
      return check;
    }
  }
  if (w != concat(mv.b.letters(), mv.a.letters())) {
    check.ok = false;
    check.step = mv.steps.size();
    check.reason = "final word differs from b.a";
  }
  return check;
}

ChartMovie slide_movie(const BraidWord& a, const BraidWord& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("boundary braids have different degrees");
  ChartMovie mv{a, b, {}};
  if (a.empty() || b.empty()) return mv;
  const auto& al = a.letters();
  const auto& bl = b.letters();
  const int sb = uniform_sign(bl);
  if (sb == 0) throw MovieGenerationError("slide_movie needs b with letters of one sign; supply a movie instead");

  bool letterwise = true;
  std::vector<Move> steps;
  for (int k = static_cast<int>(al.size()) - 1; k >= 0; --k) {
    auto sub = slide_letter(al[k], bl, sb);
    if (!sub) {
      letterwise = false;
      break;
    }
    for (auto s : *sub) {
      s.position += k;
      steps.push_back(s);
    }
  }
  if (!letterwise) {
    // Some letter of a does not commute with b on its own; search the whole word instead.
    if (uniform_sign(al) != sb) throw MovieGenerationError("no letterwise slide exists and a, b differ in sign");
    auto pa = sb > 0 ? al : negated(al);
    auto pb = sb > 0 ? bl : negated(bl);
    auto path = positive_path(concat(pa, pb), concat(pb, pa));
    if (!path) throw MovieGenerationError("a.b and b.a are not connected by positive moves (a, b do not commute?)");
    steps = std::move(*path);
  }
  mv.steps = std::move(steps);
  annotate(mv);
  if (auto check = validate_movie(mv); !check.ok) throw std::logic_error("generated movie failed validation: " + check.reason);
  return mv;
}

std::string format_movie(const ChartMovie& mv) {
  std::ostringstream os;
  os << "degree " << mv.degree() << '\n';
  os << "a: " << format_braid(mv.a) << '\n';
  os << "b: " << format_braid(mv.b) << '\n';
  for (const auto& s : mv.steps) {
    switch (s.kind) {
      case MoveKind::FarSwap:
        os << "FS " << s.position << '\n';
        break;
      case MoveKind::R3:
        os << "R3 " << s.position << ' ' << sign_token(s.sign) << '\n';
        break;
      case MoveKind::CancelPair:
        os << "CP " << s.position << '\n';
        break;
      case MoveKind::InsertPair:
        os << "IP " << s.position << ' ' << s.index << ' ' << sign_token(s.sign) << '\n';
        break;
    }
  }
  return os.str();
}

ChartMovie parse_movie(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<int> degree;
  std::optional<BraidWord> a, b;
  std::vector<Move> steps;
  int lineno = 0;
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("movie line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "degree") {
      int m;
      if (!(ls >> m) || m < 1) fail("malformed degree");
      degree = m;
    } else if (head == "a:" || head == "b:") {
      if (!degree) fail("degree must precede the boundary braids");
      std::string rest;
      std::getline(ls, rest);
      (head == "a:" ? a : b) = parse_braid(rest, *degree);
    } else {
      if (!a || !b) fail("steps must follow the a: and b: lines");
      Move mv;
      std::string tok;
      if (!(ls >> mv.position)) fail("missing position");
      if (head == "FS") {
        mv.kind = MoveKind::FarSwap;
      } else if (head == "R3") {
        mv.kind = MoveKind::R3;
        if (!(ls >> tok)) fail("R3 needs a sign");
        mv.sign = parse_sign(tok);
      } else if (head == "CP") {
        mv.kind = MoveKind::CancelPair;
      } else if (head == "IP") {
        mv.kind = MoveKind::InsertPair;
        if (!(ls >> mv.index >> tok)) fail("IP needs index and sign");
        mv.sign = parse_sign(tok);
      } else {
        fail("unknown step '" + head + "'");
      }
      if (ls >> tok) fail("trailing token '" + tok + "'");
      steps.push_back(mv);
    }
  }
  if (!a || !b) throw std::invalid_argument("movie is missing its a: or b: line");
  return ChartMovie{*a, *b, std::move(steps)};
}

}  // namespace tcover
