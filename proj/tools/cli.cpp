// Copyright 2026 The dicolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dicolor/edge_list.hpp"
#include "dicolor/error.hpp"
#include "dicolor/generator.hpp"
#include "dicolor/inversion.hpp"
#include "dicolor/oracle.hpp"
#include "dicolor/ordering.hpp"
#include "dicolor/ordering_condition.hpp"
#include "serialize.hpp"

namespace dicolor::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::size_t k = 0;
  std::string order;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t samples = 0;
  std::size_t cap = oracle::kDefaultCircuitCap;
  std::string coloring;

  CLI::Option* seed_option = nullptr;
  CLI::Option* order_option = nullptr;
  CLI::Option* k_option = nullptr;
  CLI::Option* p_option = nullptr;

  bool text() const { return format == "text"; }
};

class Context {
 public:
  Context(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), in_(in), out_(out) {}

  Digraph load_digraph() const {
    if (opt_.input == "-") return read_digraph(in_);
    std::ifstream file(opt_.input);
    if (!file) throw ParseError("cannot open '" + opt_.input + "'");
    return read_digraph(file);
  }

  // --order, else --seed for a random ordering, else the identity.
  Ordering ordering_for(const Digraph& d) const {
    if (opt_.order_option != nullptr && *opt_.order_option) {
      Ordering order = parse_ordering(opt_.order);
      if (order.size() != d.vertex_count()) {
        throw InvalidArgument("--order lists " + std::to_string(order.size()) +
                              " vertices, digraph has " +
                              std::to_string(d.vertex_count()));
      }
      return order;
    }
    if (opt_.seed_option != nullptr && *opt_.seed_option) {
      return Ordering::random(d.vertex_count(), opt_.seed);
    }
    return Ordering::identity(d.vertex_count());
  }

  void emit(const Json& j) const { out_ << j.dump() << '\n'; }
  std::ostream& out() const { return out_; }
  const Options& opt() const { return opt_; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

std::string join(std::span<const std::size_t> values, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::string join_signed(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

std::string describe(const Circuit& c) {
  std::string s;
  for (Vertex v : c.vertices()) s += std::to_string(v) + " -> ";
  s += std::to_string(c.vertices().front());
  return s + " (arcs " + join(c.arcs(), " ") + ")";
}

void print_witness(const Context& ctx, const Circuit& c) {
  if (ctx.opt().text()) {
    ctx.out() << "witness: " << describe(c) << '\n';
  } else {
    ctx.emit(witness_json(c));
  }
}

void print_coloring(const Context& ctx, const Coloring& col) {
  if (ctx.opt().text()) {
    ctx.out() << "k = " << col.k() << '\n'
              << "color: " << join(col.colors(), " ") << '\n';
  } else {
    ctx.emit(to_json(col));
  }
}

int cmd_check(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const Ordering order = ctx.ordering_for(d);
  const CheckOutcome outcome = check_ordering(d, order, ctx.opt().k);
  if (ctx.opt().text()) {
    ctx.out() << (outcome.feasible() ? "feasible" : "infeasible")
              << " for k = " << ctx.opt().k << '\n';
  }
  if (!outcome.feasible()) {
    print_witness(ctx, outcome.witness());
    return kNegative;
  }
  if (ctx.opt().text()) {
    ctx.out() << "potential: " << join_signed(outcome.potential().values)
              << '\n';
  } else {
    ctx.emit(to_json(outcome.potential()));
  }
  return kSuccess;
}

int cmd_color(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const Ordering order = ctx.ordering_for(d);
  const ColoringOutcome outcome = color_with_ordering(d, order, ctx.opt().k);
  if (const auto* col = std::get_if<Coloring>(&outcome)) {
    print_coloring(ctx, *col);
    return kSuccess;
  }
  print_witness(ctx, std::get<Circuit>(outcome));
  return kNegative;
}

int cmd_order_from_coloring(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const Coloring col = coloring_from_json(load_json_argument(ctx.opt().coloring));
  try {
    const Ordering order = ordering_from_coloring(d, col);
    if (ctx.opt().text()) {
      ctx.out() << format_ordering(order) << '\n';
    } else {
      ctx.emit(Json{{"order", format_ordering(order)}});
    }
    return kSuccess;
  } catch (const InvalidColoring& e) {
    print_witness(ctx, e.circuit());
    return kNegative;
  }
}

int cmd_ratio(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const Ordering order = ctx.ordering_for(d);
  const ForwardRatio r = min_forward_ratio(d, order);
  if (ctx.opt().text()) {
    ctx.out() << "ratio: " << (r.ratio ? to_string(*r.ratio) : "infinity")
              << '\n'
              << "kappa: " << r.least_k() << '\n';
  } else {
    Json j{{"ratio", nullptr}, {"kappa", r.least_k()}};
    if (r.ratio) j["ratio"] = to_string(*r.ratio);
    ctx.emit(j);
  }
  return kSuccess;
}

int cmd_invert(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const InversionTrace trace = make_two_dicolorable(d, ctx.ordering_for(d));
  ctx.out() << format_digraph(trace.final_digraph);
  if (ctx.opt().text()) {
    ctx.out() << "# forward arcs: " << trace.initial_forward;
    for (const InversionStep& step : trace.steps) {
      ctx.out() << " -> " << step.forward;
    }
    ctx.out() << '\n'
              << "# reversals: " << trace.steps.size() << '\n'
              << "# simple: " << (trace.final_simple ? "yes" : "no") << '\n'
              << "# color: " << join(trace.final_coloring.colors(), " ")
              << '\n';
  } else {
    ctx.emit(to_json(trace));
  }
  return kSuccess;
}

int cmd_exact(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  if (ctx.opt().k_option != nullptr && *ctx.opt().k_option) {
    const auto col = oracle::is_k_dicolorable_bruteforce(d, ctx.opt().k);
    if (ctx.opt().text()) {
      ctx.out() << (col ? "colorable" : "not colorable") << " with k = "
                << ctx.opt().k << '\n';
      if (col) ctx.out() << "color: " << join(col->colors(), " ") << '\n';
    } else {
      Json j{{"k", ctx.opt().k}, {"colorable", col.has_value()}};
      if (col) j["coloring"] = to_json(*col);
      ctx.emit(j);
    }
    return col ? kSuccess : kNegative;
  }
  const Coloring col = oracle::optimal_coloring(d);
  if (ctx.opt().text()) {
    ctx.out() << "dichromatic number: " << col.k() << '\n'
              << "color: " << join(col.colors(), " ") << '\n';
  } else {
    ctx.emit(Json{{"dichromatic_number", col.k()}, {"coloring", to_json(col)}});
  }
  return kSuccess;
}

int cmd_circuits(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const auto list = oracle::enumerate_circuits(d, ctx.opt().cap);
  if (ctx.opt().text()) {
    ctx.out() << list.circuits.size() << " circuits\n";
    for (const Circuit& c : list.circuits) ctx.out() << describe(c) << '\n';
  } else {
    Json circuits = Json::array();
    for (const Circuit& c : list.circuits) circuits.push_back(circuit_json(c));
    ctx.emit(Json{{"count", list.circuits.size()},
                  {"vertex_cycles", list.vertex_cycles().size()},
                  {"circuits", std::move(circuits)}});
  }
  return kSuccess;
}

int cmd_check_bf(const Context& ctx) {
  const Digraph d = ctx.load_digraph();
  const Ordering order = ctx.ordering_for(d);
  const auto bad =
      oracle::violating_circuit_bruteforce(d, order, ctx.opt().k, ctx.opt().cap);
  if (ctx.opt().text()) {
    ctx.out() << (bad ? "infeasible" : "feasible") << " for k = "
              << ctx.opt().k << '\n';
    if (bad) ctx.out() << "witness: " << describe(*bad) << '\n';
  } else {
    Json j{{"feasible", !bad.has_value()}};
    if (bad) j.update(witness_json(*bad));
    ctx.emit(j);
  }
  return bad ? kNegative : kSuccess;
}

int cmd_gen(const Context& ctx) {
  ctx.out() << format_digraph(
      random_digraph(ctx.opt().n, ctx.opt().p, ctx.opt().seed));
  return kSuccess;
}

int cmd_verify_equivalence(const Context& ctx) {
  std::optional<double> p;
  if (*ctx.opt().p_option) p = ctx.opt().p;
  const EquivalenceReport report =
      verify_equivalence(ctx.opt().n, ctx.opt().samples, ctx.opt().seed, p);
  if (ctx.opt().text()) {
    ctx.out() << report.agreements << "/" << report.samples
              << " agreements (n = " << report.n << ", seed = " << report.seed
              << ")\n";
    for (const Disagreement& bad : report.disagreements) {
      ctx.out() << "sample " << bad.sample << ": dichromatic number "
                << bad.dichromatic << ", best ordering bound " << bad.best_k
                << '\n'
                << format_digraph(bad.digraph);
    }
  } else {
    Json bad = Json::array();
    for (const Disagreement& item : report.disagreements) {
      bad.push_back({{"sample", item.sample},
                     {"digraph", format_digraph(item.digraph)},
                     {"dichromatic_number", item.dichromatic},
                     {"best_k", item.best_k}});
    }
    ctx.emit(Json{{"n", report.n},
                  {"samples", report.samples},
                  {"seed", report.seed},
                  {"agreements", report.agreements},
                  {"disagreements", std::move(bad)}});
  }
  return report.disagreements.empty() ? kSuccess : kNegative;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EquivalenceReport verify_equivalence(std::size_t n, std::size_t samples,
                                     std::uint64_t seed,
                                     std::optional<double> p) {
  if (n > oracle::kDefaultOrderingMaxVertices) {
    throw SizeGuardExceeded("verify-equivalence supports n <= " +
                            std::to_string(oracle::kDefaultOrderingMaxVertices));
  }
  EquivalenceReport report{n, samples, seed, 0, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    const double prob = p ? *p : static_cast<double>(i % 9 + 1) / 10.0;
    Digraph d = random_digraph(n, prob, sample_seed(seed, i));
    const std::size_t dic = oracle::dichromatic_number(d);
    const std::size_t best = oracle::best_k_over_orderings(d);
    if (dic == best) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({i, std::move(d), dic, best});
    }
  }
  return report;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{
      "dicolor: acyclic colorings of digraphs from vertex orderings, with "
      "certificates and brute-force cross-checks"};
  app.name("dicolor");
  app.require_subcommand(1);
  app.footer(
      "Digraphs are read as edge lists ('n m' then m lines 'tail head', "
      "'#' comments). Exit status: 0 success or feasible, 1 infeasible or "
      "not colorable (a witness is printed), 2 usage or input error.");

  Options opt;
  std::function<int(const Context&)> handler;

  const auto add = [&](const std::string& name, const std::string& summary,
                       std::function<int(const Context&)> fn) {
    CLI::App* sub = app.add_subcommand(name, summary);
    sub->callback([&handler, fn] { handler = fn; });
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    return sub;
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Edge-list file, '-' for stdin")
        ->capture_default_str();
  };
  const auto add_order = [&](CLI::App* sub, bool with_seed) {
    auto* order = sub->add_option(
        "--order", opt.order,
        "Comma-separated vertices in position order (default: identity)");
    if (with_seed) {
      auto* seed = sub->add_option("--seed", opt.seed,
                                   "Use a random ordering from this seed");
      order->excludes(seed);
      seed->excludes(order);
    }
  };

  CLI::App* check = add(
      "check",
      "Decide whether every circuit has at least |C|/k forward arcs in the "
      "ordering; prints a potential or a violating circuit",
      cmd_check);
  add_input(check);
  add_order(check, true);
  check->add_option("--k", opt.k, "Number of color classes")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* color = add(
      "color",
      "Build a k-coloring with acyclic classes from an ordering, or print the "
      "circuit that prevents it",
      cmd_color);
  add_input(color);
  add_order(color, true);
  color->add_option("--k", opt.k, "Number of color classes")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* from_coloring = add(
      "order-from-coloring",
      "Turn an acyclic coloring into an ordering that satisfies the circuit "
      "condition for the same k",
      cmd_order_from_coloring);
  add_input(from_coloring);
  from_coloring
      ->add_option("--coloring", opt.coloring,
                   "Coloring JSON {\"k\":..,\"color\":[..]} or a file holding it")
      ->required();

  CLI::App* ratio = add(
      "ratio",
      "Exact minimum over circuits of forward arcs / length, and the least k "
      "the ordering certifies",
      cmd_ratio);
  add_input(ratio);
  add_order(ratio, true);

  CLI::App* invert = add(
      "invert",
      "Reverse circuits with more backward than forward arcs until the "
      "digraph is 2-colorable; prints the final edge list and the trace",
      cmd_invert);
  add_input(invert);
  add_order(invert, true);

  CLI::App* exact = add(
      "exact",
      "Brute-force dichromatic number (n <= 12), or decide colorability for "
      "a given --k",
      cmd_exact);
  add_input(exact);
  opt.k_option = exact->add_option("--k", opt.k, "Only test this k")
                     ->check(CLI::PositiveNumber);

  CLI::App* circuits = add("circuits", "Enumerate all elementary circuits",
                           cmd_circuits);
  add_input(circuits);
  circuits->add_option("--cap", opt.cap, "Fail beyond this many circuits")
      ->capture_default_str();

  CLI::App* check_bf = add(
      "check-bf",
      "Check the circuit condition literally over every enumerated circuit",
      cmd_check_bf);
  add_input(check_bf);
  add_order(check_bf, true);
  check_bf->add_option("--k", opt.k, "Number of color classes")
      ->required()
      ->check(CLI::PositiveNumber);
  check_bf->add_option("--cap", opt.cap, "Fail beyond this many circuits")
      ->capture_default_str();

  CLI::App* gen = add(
      "gen", "Random digraph: each ordered pair is an arc with probability p",
      cmd_gen);
  gen->add_option("--n", opt.n, "Vertex count")->required();
  gen->add_option("--p", opt.p, "Arc probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", opt.seed, "Generator seed")->required();

  CLI::App* verify = add(
      "verify-equivalence",
      "Compare the brute-force dichromatic number with the best bound over "
      "all orderings on random digraphs",
      cmd_verify_equivalence);
  verify->add_option("--n", opt.n, "Vertex count (<= 8)")->required();
  verify->add_option("--samples", opt.samples, "Number of digraphs")
      ->required();
  verify->add_option("--seed", opt.seed, "Base seed")->required();
  opt.p_option = verify->add_option(
      "--p", opt.p, "Arc probability (default: cycles 0.1 .. 0.9)");
  opt.p_option->check(CLI::Range(0.0, 1.0));

  // The order/seed options are looked up through the subcommand in use.
  for (CLI::App* sub : {check, color, ratio, invert, check_bf}) {
    sub->preparse_callback([&opt, sub](std::size_t) {
      opt.order_option = sub->get_option("--order");
      opt.seed_option = sub->get_option("--seed");
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    return handler(Context(opt, in, out));
  } catch (const Error& e) {
    err << "dicolor: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "dicolor: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace dicolor::cli
