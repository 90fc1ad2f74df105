#include "tcover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcover/alexander.hpp"
#include "tcover/braid.hpp"
#include "tcover/cocycle.hpp"
#include "tcover/movie.hpp"
#include "tcover/presentation.hpp"
#include "tcover/quandle.hpp"
#include "tcover/ribbon.hpp"
#include "tcover/transforms.hpp"

namespace tcover::cli {

namespace {

using nlohmann::json;

constexpr const char* kBoundary =
    "Scope: tcover computes decidable invariants (presentations, abelianizations, finite quotient counts,\n"
    "colorings, the Mochizuki cocycle invariant, ribbon certificates). It does not decide whether two\n"
    "torus-covering links are equivalent, whether a group is a classical link group, or amphicheirality;\n"
    "differing invariants distinguish, equal invariants prove nothing.";

struct Common {
  int degree = 0;
  std::string a_text, b_text;
  bool json = false;
  unsigned workers = 0;
  bool allow_noncommuting = false;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_braid_options(CLI::App* sub, Common& c, bool required = true) {
  auto* m = sub->add_option("-m,--degree", c.degree, "braid degree m");
  auto* a = sub->add_option("-a", c.a_text, "vertical boundary braid a, e.g. \"1 2 2 2 3\" or \"s1^3\"");
  auto* b = sub->add_option("-b", c.b_text, "horizontal boundary braid b, e.g. \"(1 2 3)^4\" or \"D^2\"");
  if (required) {
    m->required();
    a->required();
    b->required();
  }
  sub->add_flag("--json", c.json, "machine-readable output");
}

std::pair<BraidWord, BraidWord> braids(const Common& c) {
  if (c.degree < 1) throw PreconditionError("degree must be positive");
  return {parse_braid(c.a_text, c.degree), parse_braid(c.b_text, c.degree)};
}

void require_commuting(const BraidWord& a, const BraidWord& b, const Common& c, std::ostream& err) {
  if (commute_check(a, b)) return;
  if (!c.allow_noncommuting) throw PreconditionError("boundary braids do not commute");
  err << "warning: boundary braids do not commute; continuing as requested\n";
}

json header(const std::string& command) { return json{{"schema", kJsonSchema}, {"command", command}}; }

json words_json(const std::vector<FreeWord>& ws, const std::vector<std::string>& names) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(format_free_word(w, names));
  return arr;
}

json presentation_json(const GroupPresentation& p) {
  json j{{"generators", p.names}, {"relators", words_json(p.relators, p.names)}};
  if (p.central) j["central"] = format_free_word(*p.central, p.names);
  return j;
}

json abelian_json(const AbelianInvariants& inv) {
  json t = json::array();
  for (const auto& d : inv.torsion) t.push_back(d.str());
  return json{{"free_rank", inv.free_rank}, {"torsion", t}, {"text", format_abelian(inv)}};
}

GroupPresentation build_group(const Common& c, bool quotient_center, std::ostream& err) {
  auto [a, b] = braids(c);
  require_commuting(a, b, c, err);
  auto p = torus_covering_group(a, b, true);
  if (quotient_center) {
    if (!p.central) throw PreconditionError("--quotient-center needs b equal to a nonzero power of Delta");
    p = add_relator(p, *p.central);
  }
  return p;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string colors_text(const Coloring& c) {
  std::string s;
  for (auto v : c) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string triple_text(const TriplePoint& t) {
  return std::string(t.sign > 0 ? "+" : "-") + "(" + std::to_string(t.colors[0]) + "," + std::to_string(t.colors[1]) +
         "," + std::to_string(t.colors[2]) + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tcover: invariants of torus-covering T^2-links given by commuting boundary braids", "tcover"};
  app.footer(kBoundary);
  app.require_subcommand(1);

  Common c;
  bool quotient_center = false, simplify = false, print_movie = false, show_triples = false;
  std::vector<std::string> targets;
  int quandle_p = 3;
  std::string movie_path, witness_path, chart_path, transform_kind, matrix_text;
  int block_size = 0, length_cap = 16, times = 1;

  auto* group = app.add_subcommand("group", "link group presentation from the boundary braids");
  add_braid_options(group, c);
  group->add_flag("--quotient-center", quotient_center, "append the central word as a relator (b a power of Delta)");
  group->add_flag("--simplify", simplify, "eliminate generators by Tietze substitution");
  group->add_flag("--allow-noncommuting", c.allow_noncommuting, "warn instead of rejecting non-commuting input");

  auto* abel = app.add_subcommand("abelianization", "abelian invariants of the link group");
  add_braid_options(abel, c);
  abel->add_flag("--quotient-center", quotient_center, "append the central word as a relator (b a power of Delta)");
  abel->add_flag("--allow-noncommuting", c.allow_noncommuting, "warn instead of rejecting non-commuting input");

  auto* quot = app.add_subcommand("quotients", "count homomorphisms onto finite groups");
  add_braid_options(quot, c);
  quot->add_option("--target", targets, "target group: S<k> (k<=5), D<k> (3<=k<=12), Z<k>, 1")->required();
  quot->add_flag("--quotient-center", quotient_center, "append the central word as a relator (b a power of Delta)");
  quot->add_flag("--simplify", simplify, "Tietze-simplify first (fewer generators, smaller search)");
  quot->add_option("--workers", c.workers, "worker threads (0 = hardware concurrency)");
  quot->add_flag("--allow-noncommuting", c.allow_noncommuting, "warn instead of rejecting non-commuting input");

  auto* col = app.add_subcommand("colorings", "dihedral quandle colorings fixed by both boundary braids");
  add_braid_options(col, c);
  col->add_option("--quandle", quandle_p, "dihedral quandle order p (default 3)");
  col->add_option("--workers", c.workers, "worker threads (0 = hardware concurrency)");
  col->add_flag("--allow-noncommuting", c.allow_noncommuting, "warn instead of rejecting non-commuting input");

  auto* coc = app.add_subcommand("cocycle", "quandle cocycle invariant for Mochizuki's 3-cocycle over R3");
  add_braid_options(coc, c, false);
  coc->add_option("--movie", movie_path, "chart movie file; generated by sliding when omitted");
  coc->add_option("--quandle", quandle_p, "quandle order (only 3 is supported)");
  coc->add_flag("--print-movie", print_movie, "also print the movie used");
  coc->add_flag("--triples", show_triples, "also print the signed triple points of every coloring");
  coc->add_option("--workers", c.workers, "worker threads (0 = hardware concurrency)");

  auto* rib = app.add_subcommand("ribbon", "ribbon certificate via cable decomposition");
  add_braid_options(rib, c);
  rib->add_option("-n,--block-size", block_size, "cable width n (degree = n * blocks)")->required();
  rib->add_option("--witness", witness_path, "certificate file to verify instead of searching");
  rib->add_option("--length-cap", length_cap, "longest tubular braid word the search reports (default 16)");

  auto* tr = app.add_subcommand("transform", "chart transforms rho (quarter rotation) and tau (turning)");
  tr->add_option("kind", transform_kind, "rho or tau")->required()->check(CLI::IsMember({"rho", "tau"}));
  add_braid_options(tr, c, false);
  tr->add_option("--chart", chart_path, "chart file (degree / a: / b: lines)");
  tr->add_option("--times", times, "apply the transform this many times")->check(CLI::NonNegativeNumber);

  auto* hm = app.add_subcommand("h-member", "membership of a 3x3 integer matrix in the group H");
  hm->add_option("matrix", matrix_text, "nine integers, row major")->required();
  hm->add_flag("--json", c.json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*group) {
      auto p = build_group(c, quotient_center, err);
      if (simplify) p = tietze_eliminate(p);
      if (c.json) {
        auto j = header("group");
        j["presentation"] = presentation_json(p);
        print(out, j);
      } else {
        out << format_presentation(p);
      }
    } else if (*abel) {
      auto p = build_group(c, quotient_center, err);
      auto inv = abelianization(p);
      if (c.json) {
        auto j = header("abelianization");
        j["abelianization"] = abelian_json(inv);
        print(out, j);
      } else {
        out << format_abelian(inv) << '\n';
      }
    } else if (*quot) {
      auto p = build_group(c, quotient_center, err);
      if (simplify) p = tietze_eliminate(p);
      json results = json::array();
      std::ostringstream text;
      for (const auto& t : targets) {
        auto g = FiniteGroup::parse(t);
        auto counts = finite_quotient_count(p, g, c.workers);
        results.push_back(json{{"target", g.name()},
                               {"order", g.order()},
                               {"homomorphisms", counts.homomorphisms},
                               {"epimorphisms", counts.epimorphisms},
                               {"abelian_image", counts.abelian_image}});
        text << g.name() << ": homomorphisms " << counts.homomorphisms << ", epimorphisms " << counts.epimorphisms
             << ", abelian image " << counts.abelian_image << '\n';
      }
      if (c.json) {
        auto j = header("quotients");
        j["generators"] = p.generator_count();
        j["results"] = results;
        print(out, j);
      } else {
        out << text.str();
      }
    } else if (*col) {
      auto [a, b] = braids(c);
      require_commuting(a, b, c, err);
      auto q = dihedral_quandle(quandle_p);
      auto found = torus_colorings(a, b, q, c.workers, true);
      if (c.json) {
        auto j = header("colorings");
        j["quandle"] = "R" + std::to_string(quandle_p);
        j["count"] = found.size();
        j["colorings"] = found;
        print(out, j);
      } else {
        out << found.size() << " colorings over R" << quandle_p << '\n';
        for (const auto& f : found) out << colors_text(f) << '\n';
      }
    } else if (*coc) {
      if (quandle_p != 3) throw PreconditionError("the cocycle invariant is implemented for R3 only");
      std::optional<ChartMovie> movie;
      BraidWord a, b;
      if (!movie_path.empty()) {
        movie = parse_movie(read_file(movie_path));
        a = movie->a;
        b = movie->b;
        if (!c.a_text.empty() || !c.b_text.empty() || c.degree != 0) {
          auto given = braids(c);
          if (!(given.first == a) || !(given.second == b))
            throw PreconditionError("-a/-b differ from the boundary braids in the movie file");
        }
      } else {
        if (c.degree == 0) throw PreconditionError("cocycle needs -m, -a, -b or --movie");
        std::tie(a, b) = braids(c);
        if (!commute_check(a, b)) throw PreconditionError("boundary braids do not commute");
        movie = slide_movie(a, b);
      }
      auto phi = cocycle_invariant(a, b, &*movie, c.workers);
      const auto r3 = dihedral_quandle(3);
      if (c.json) {
        auto j = header("cocycle");
        j["coefficients"] = {phi.c[0], phi.c[1], phi.c[2]};
        j["text"] = format_group_ring(phi);
        std::size_t r3_steps = std::count_if(movie->steps.begin(), movie->steps.end(),
                                             [](const Move& s) { return s.kind == MoveKind::R3; });
        j["movie"] = {{"steps", movie->steps.size()}, {"r3_steps", r3_steps}};
        if (print_movie) j["movie"]["text"] = format_movie(*movie);
        if (show_triples) {
          json per = json::array();
          for (const auto& col_vec : torus_colorings(a, b, r3, c.workers)) {
            json ts = json::array();
            for (const auto& t : triple_points(*movie, col_vec, r3)) ts.push_back(triple_text(t));
            per.push_back(json{{"coloring", col_vec}, {"triples", ts}});
          }
          j["triples"] = per;
        }
        print(out, j);
      } else {
        out << "Phi = " << format_group_ring(phi) << '\n';
        out << "coefficients: [" << phi.c[0] << ", " << phi.c[1] << ", " << phi.c[2] << "]\n";
        if (print_movie) out << format_movie(*movie);
        if (show_triples) {
          for (const auto& col_vec : torus_colorings(a, b, r3, c.workers)) {
            auto ts = triple_points(*movie, col_vec, r3);
            out << "coloring " << colors_text(col_vec) << " weight t^" << boltzmann_weight(ts) << ':';
            for (const auto& t : ts) out << ' ' << triple_text(t);
            out << '\n';
          }
        }
      }
    } else if (*rib) {
      auto [a, b] = braids(c);
      if (block_size < 1 || c.degree % block_size != 0) throw PreconditionError("block size must divide the degree");
      const int m = c.degree / block_size;
      std::optional<CableDecomposition> witness;
      if (!witness_path.empty()) witness = parse_certificate(read_file(witness_path));
      auto v = ribbon_verdict(a, b, block_size, m, witness ? &*witness : nullptr, length_cap);
      if (c.json) {
        auto j = header("ribbon");
        j["verdict"] = v.ribbon ? "ribbon" : "unknown";
        j["reason"] = v.reason;
        j["criterion"] = "cable decomposition identity in the braid group";
        if (v.certificate) j["certificate"] = format_certificate(*v.certificate);
        print(out, j);
      } else {
        out << (v.ribbon ? "Ribbon" : "Unknown") << ": " << v.reason << '\n';
        if (v.certificate) out << format_certificate(*v.certificate);
      }
      return v.ribbon ? kOk : kUnknown;
    } else if (*tr) {
      ChartData chart;
      if (!chart_path.empty()) {
        chart = parse_chart(read_file(chart_path));
      } else {
        if (c.degree == 0) throw PreconditionError("transform needs -m, -a, -b or --chart");
        auto [a, b] = braids(c);
        chart = make_chart(a, b);
      }
      for (int k = 0; k < times; ++k) chart = transform_kind == "rho" ? rho(chart) : tau(chart);
      if (c.json) {
        auto j = header("transform");
        j["kind"] = transform_kind;
        j["degree"] = chart.degree();
        j["a"] = format_braid(chart.a);
        j["b"] = format_braid(chart.b);
        print(out, j);
      } else {
        out << format_chart(chart);
      }
    } else if (*hm) {
      auto mtx = parse_matrix3(matrix_text);
      bool member = h_membership(mtx);
      if (c.json) {
        auto j = header("h-member");
        j["member"] = member;
        j["determinant"] = determinant3(mtx);
        print(out, j);
      } else {
        out << (member ? "member" : "not a member") << '\n';
      }
    }
  } catch (const std::logic_error& e) {
    // invalid_argument, length_error and domain_error derive from logic_error.
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}

}  // namespace tcover::cli
