#pragma once

// Command-line surface: build balls, export them, answer graph and path
// queries, and run the verification suites.  All commands are deterministic
// for a fixed argument list.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "silpath/crystal.hpp"
#include "silpath/verify.hpp"

namespace silpath {
namespace cli {

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  std::vector<Int> lambda;
  int depth = 0;
  Int bound = 3;
  std::string format = "json";
  std::string seed;
  std::string suite = "all";
  std::string out_path;
  Int budget = 20000;
};

inline std::string root_str(const AffineRoot& beta) {
  std::string out = "r=[";
  for (std::size_t k = 0; k < beta.finite.coords.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(beta.finite.coords[k]);
  }
  return out + "]+" + std::to_string(beta.n) + "d";
}

namespace detail {

inline SilsContext context_from(const RunConfig& cfg) {
  require(cfg.type.size() == 1, Errc::ConfigError, "--type takes a single letter");
  require(!cfg.lambda.empty(), Errc::ConfigError, "--lambda is required");
  for (Int c : cfg.lambda)
    require(c >= 0, Errc::ConfigError, "--lambda coordinates must be nonnegative");
  require(cfg.depth >= 0, Errc::ConfigError, "--depth must be nonnegative");
  return make_context(build_cartan(cfg.type[0], cfg.rank), cfg.lambda);
}

inline CrystalNode seed_from(const SilsContext& ctx, const RunConfig& cfg) {
  if (cfg.seed.empty()) return make_node(ctx, initial_path(ctx));
  return parse_node(ctx, cfg.seed);
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  require(file.good(), Errc::ConfigError, "cannot open output file: " + cfg.out_path);
  file << text;
}

inline std::string ball_text(const SilsContext& ctx, const LabeledCrystalBall& ball) {
  std::ostringstream os;
  os << "ball type=" << ctx.cd.type_label << " rank=" << ctx.cd.rank << " shape=[";
  for (std::size_t k = 0; k < ctx.mult.size(); ++k)
    os << (k ? " " : "") << ctx.mult[k];
  os << "] depth=" << ball.depth << "\n";
  for (std::size_t id = 0; id < ball.nodes.size(); ++id) {
    os << "node " << id << " dist=" << ball.dist[id]
       << (ball.boundary[id] ? " boundary" : " interior")
       << " wt=" << weight_str(ball.nodes[id].wt) << " " << node_str(ctx, ball.nodes[id])
       << "\n";
  }
  for (const BallEdge& e : ball.edges)
    os << "edge " << e.src << " -" << e.i << "-> " << e.dst << "\n";
  return os.str();
}

inline int cmd_ball(const RunConfig& cfg, std::ostream& out) {
  SilsContext ctx = context_from(cfg);
  LabeledCrystalBall ball = generate_ball(ctx, seed_from(ctx, cfg), cfg.depth);
  if (cfg.format == "json")
    emit(cfg, ball_json(ctx, ball).dump(2) + "\n", out);
  else if (cfg.format == "dot")
    emit(cfg, ball_dot(ctx, ball), out);
  else if (cfg.format == "text")
    emit(cfg, ball_text(ctx, ball), out);
  else
    fail(Errc::ConfigError, "unknown format: " + cfg.format);
  return 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<checks::CheckReport> reports = checks::run_criteria(checks::suite_ids(cfg.suite));
  bool all = true;
  std::ostringstream os;
  for (const checks::CheckReport& r : reports) {
    os << "criterion " << r.id << " (" << r.name << "): " << (r.pass ? "PASS" : "FAIL")
       << "\n    " << r.detail << "\n";
    all = all && r.pass;
  }
  os << (all ? "all checks passed" : "some checks FAILED") << "\n";
  emit(cfg, os.str(), out);
  return all ? 0 : 1;
}

inline int cmd_query(const RunConfig& cfg, const std::string& kind,
                     const std::vector<std::string>& args, std::ostream& out) {
  SilsContext ctx = context_from(cfg);
  const AffineCartanData& cd = ctx.cd;
  std::ostringstream os;
  if (kind == "edges") {
    require(args.size() == 1, Errc::ConfigError, "query edges takes one element literal");
    AffineWeylElem x = parse_element(cd, args[0]);
    for (const SiBEdge& e : sib_out_edges(cd, ctx.ps, x))
      os << root_str(e.beta) << (e.quantum ? " (quantum) -> " : " -> ")
         << to_literal(cd, e.dst) << "\n";
  } else if (kind == "path") {
    require(args.size() == 3, Errc::ConfigError,
            "query path takes two element literals and a rational cut");
    AffineWeylElem from = parse_element(cd, args[0]);
    AffineWeylElem to = parse_element(cd, args[1]);
    Rat a = parse_rat(args[2]);
    auto path = find_path(cd, ctx.ps, ctx.lambda, a, from, to);
    if (!path) {
      os << "no path\n";
    } else {
      for (const SiBEdge& e : *path)
        os << to_literal(cd, e.src) << " -" << root_str(e.beta) << "-> "
           << to_literal(cd, e.dst) << "\n";
    }
  } else if (kind == "project") {
    require(args.size() == 1, Errc::ConfigError, "query project takes one path literal");
    PLPath q = project_path(ctx, parse_sils(ctx, args[0]));
    silpath::detail::normalize_pieces(q.dirs, q.cuts);
    os << pl_str(q) << "\n";
  } else if (kind == "char") {
    require(args.empty(), Errc::ConfigError, "query char reads the ball from the flags");
    LabeledCrystalBall ball = generate_ball(ctx, seed_from(ctx, cfg), cfg.depth);
    for (const auto& [wt, count] : weight_multiplicities(ball, false))
      os << weight_str(wt) << " : " << count << "\n";
  } else if (kind == "component") {
    require(args.size() == 1, Errc::ConfigError, "query component takes one path literal");
    SiLSPath rep = component_rep_search(ctx, parse_sils(ctx, args[0]), cfg.budget);
    os << sils_str(ctx, rep) << "\n";
  } else {
    fail(Errc::ConfigError, "unknown query: " + kind);
  }
  emit(cfg, os.str(), out);
  return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests.  args excludes the program
// name.  Returns 0 on success, 1 on a failed verification, 2 on a
// configuration error, 3 on a parse error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string query_kind;
  std::vector<std::string> query_args;

  CLI::App app{"exact level-zero path crystals"};
  app.set_config("--config");
  app.require_subcommand(1);

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan family letter");
    sub->add_option("--rank", cfg.rank, "finite rank");
    sub->add_option("--lambda", cfg.lambda, "fundamental-weight multiplicities")
        ->delimiter(',');
    sub->add_option("--out", cfg.out_path, "write the result to a file");
  };

  CLI::App* ball = app.add_subcommand("ball", "generate a crystal ball around a seed");
  add_shape(ball);
  ball->add_option("--depth", cfg.depth, "ball radius in operator steps");
  ball->add_option("--seed", cfg.seed, "seed node literal (default: initial path)");
  ball->add_option("--format", cfg.format, "json, dot, or text");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_shape(verify);
  verify->add_option("--suite", cfg.suite,
                     "edges, stability, sigma, translation, iso, components, appendix, all");
  verify->add_option("--depth", cfg.depth, "accepted for config compatibility");

  CLI::App* query = app.add_subcommand("query", "answer a graph or path question");
  add_shape(query);
  query->add_option("--depth", cfg.depth, "ball radius for char");
  query->add_option("--seed", cfg.seed, "seed node literal for char");
  query->add_option("--budget", cfg.budget, "search budget for component");
  query->add_option("kind", query_kind, "edges, path, project, char, or component")
      ->required();
  query->add_option("args", query_args, "query arguments");

  std::vector<const char*> argv{"silpath"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(ball)) return detail::cmd_ball(cfg, out);
    if (app.got_subcommand(verify)) return detail::cmd_verify(cfg, out);
    return detail::cmd_query(cfg, query_kind, query_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace silpath
