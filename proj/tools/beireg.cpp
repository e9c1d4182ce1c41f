// beireg: command-line front end for the binomial edge ideal regularity library.
//
// Exit codes: 0 success, 1 usage or parse error, 2 negative answer (not
// recognized, impossible request, failed verification).

#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "beireg/beireg.hpp"

namespace {

using beireg::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

struct Output {
  bool compact = false;

  void emit(const json& j) const { std::cout << (compact ? j.dump() : j.dump(2)) << '\n'; }
};

beireg::Graph load(const std::string& path, const std::string& format) {
  const auto fmt = beireg::parse_graph_format(format);
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return beireg::parse_graph(text, fmt);
  }
  return beireg::read_graph_file(path, fmt);
}

json report_json(const beireg::VerificationReport& r) {
  json counts = json::object();
  for (const auto& [n, c] : r.graph_counts) counts[std::to_string(n)] = c;
  json checks = json::object();
  for (const std::string& name : beireg::verification_checks()) {
    const auto& t = r.checks.at(name);
    json ce = json::array();
    for (const auto& c : t.counterexamples) ce.push_back({{"graph", beireg::graph_to_json(c.graph)}, {"message", c.message}});
    checks[name] = {{"pass", t.passed}, {"fail", t.failed}, {"counterexamples", std::move(ce)}};
  }
  return {{"nRange", r.n_range},
          {"graphCounts", std::move(counts)},
          {"totalGraphs", r.total_graphs()},
          {"checks", std::move(checks)},
          {"passed", r.all_passed()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of binomial edge ideals: invariants, recognition, witnesses, verification"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--compact", out.compact, "Single-line JSON output");

  std::string input;
  std::string format = "auto";
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file (edge list or JSON), - for stdin")->required();
    sub->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "json"}));
  };

  auto* inv = app.add_subcommand("invariants", "Graph invariants and regularity bounds");
  add_input(inv);

  std::string kind;
  auto* rec = app.add_subcommand("recognize", "Recognize CL-, WL- or strongly interval graphs");
  rec->add_option("kind", kind, "cl, wl or sig")->required()->check(CLI::IsMember({"cl", "wl", "sig"}));
  add_input(rec);

  int p1 = 0, p2 = 0, p3 = 0;
  bool verify_gen = false;
  auto* gen = app.add_subcommand("gen", "Witness graph for (ell, r, c) or (ell, r, wbar)");
  gen->add_option("kind", kind, "lrc or lrw")->required()->check(CLI::IsMember({"lrc", "lrw"}));
  gen->add_option("ell", p1)->required();
  gen->add_option("r", p2)->required();
  gen->add_option("third", p3, "c for lrc, wbar for lrw")->required();
  gen->add_flag("--verify", verify_gen, "Recheck invariants and structural regularity before emitting");

  std::string method = "auto";
  std::optional<int> oracle_max_n;
  auto* regc = app.add_subcommand("reg", "Regularity of S/J_G");
  add_input(regc);
  regc->add_option("--method", method)->check(CLI::IsMember({"auto", "structural", "oracle"}));
  regc->add_option("--oracle-max-n", oracle_max_n, "Largest component the oracle accepts")->check(CLI::Range(1, 10));

  beireg::VerifyOptions vopts;
  auto* ver = app.add_subcommand("verify", "Exhaustive check over all small graphs");
  ver->add_option("--max-n", vopts.max_n)->check(CLI::Range(1, beireg::kEnumerateMaxOrder));
  ver->add_flag("--connected-only", vopts.connected_only);
  ver->add_option("--jobs", vopts.jobs)->check(CLI::PositiveNumber);
  ver->add_flag("--inject-fault", vopts.inject_sandwich_fault, "Self-test: sandwich rule reports lo - 1");

  int r = 0, wbar = 0, max_omega = 0;
  auto* sl2 = app.add_subcommand("search-l2", "Connected graphs with ell = 2 and prescribed reg and n - omega + 1");
  sl2->add_option("--r", r)->required();
  sl2->add_option("--wbar", wbar)->required();
  sl2->add_option("--max-omega", max_omega)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    beireg::OracleOptions oracle = beireg::OracleOptions::from_environment();
    if (oracle_max_n) oracle.max_vertices = *oracle_max_n;

    if (*inv) {
      out.emit(beireg::invariants_to_json(load(input, format)));
      return kOk;
    }
    if (*rec) {
      const beireg::Graph g = load(input, format);
      if (kind == "cl") {
        const auto res = beireg::recognize_cl(g);
        out.emit(beireg::cl_recognition_to_json(res));
        return std::holds_alternative<beireg::CLCertificate>(res) ? kOk : kNegative;
      }
      if (kind == "wl") {
        const auto res = beireg::recognize_wl(g);
        out.emit(beireg::wl_recognition_to_json(res));
        return std::holds_alternative<beireg::WLDecomposition>(res) ? kOk : kNegative;
      }
      const auto res = beireg::recognize_sig(g);
      out.emit(beireg::sig_recognition_to_json(res));
      return res.recognized ? kOk : kNegative;
    }
    if (*gen) {
      const beireg::Graph g = kind == "lrc" ? beireg::gen_lrc(p1, p2, p3) : beireg::gen_lrw(p1, p2, p3);
      if (verify_gen) {
        const int l = beireg::ell(g);
        const int third = kind == "lrc" ? beireg::clique_count(g) : g.order() - beireg::clique_number(g) + 1;
        const auto rep = beireg::structural_reg(g);
        if (l != p1 || third != p3 || !rep.exact() || rep.value() != p2) {
          std::cerr << "beireg: generated graph failed verification\n";
          return kNegative;
        }
        std::cerr << "verified: ell=" << l << (kind == "lrc" ? ", c=" : ", wbar=") << third << ", reg=" << p2
                  << '\n';
      }
      out.emit(beireg::graph_to_json(g));
      return kOk;
    }
    if (*regc) {
      beireg::RegOptions ro;
      ro.oracle = oracle;
      out.emit(beireg::report_to_json(beireg::reg(load(input, format), beireg::parse_method(method), ro)));
      return kOk;
    }
    if (*ver) {
      vopts.oracle = oracle;
      const auto report = beireg::run_verification(vopts);
      out.emit(report_json(report));
      return report.all_passed() ? kOk : kNegative;
    }
    if (*sl2) {
      beireg::RegularityOracle o(oracle);
      const auto hits = beireg::search_l2(r, wbar, max_omega, &o);
      json list = json::array();
      for (const auto& g : hits) list.push_back(beireg::graph_to_json(g));
      out.emit({{"r", r},
                {"wbar", wbar},
                {"maxOmega", max_omega},
                {"searchedOrders", {2 + wbar - 1, max_omega + wbar - 1}},
                {"count", hits.size()},
                {"hits", std::move(list)}});
      return kOk;
    }
  } catch (const beireg::ParseError& e) {
    std::cerr << "beireg: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const beireg::ImpossibleRequest& e) {
    std::cerr << "beireg: " << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "beireg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "beireg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "beireg: internal error: " << e.what() << '\n';
    return 3;
  }
  return kUsage;
}
