#include "loopchain/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "loopchain/chain_model.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/json_io.h"
#include "loopchain/rank.h"
#include "loopchain/tableau.h"
#include "loopchain/theorems.h"

namespace loopchain {
namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// Bad user input: reported on one line, exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON (" + e.what() + ")");
  }
}

// Inline Martens-special family flags, or a profile file.
struct FamilyInput {
  std::string profile_path;
  int genus = 0;
  int type = 0;
  std::vector<int> positions;
  bool discrete = false;

  void attach(CLI::App* app, bool with_profile_file, bool with_discrete) {
    if (with_profile_file) {
      app->add_option("--profile", profile_path, "torsion profile JSON file");
    }
    app->add_option("--genus", genus, "genus g of a Martens-special chain");
    app->add_option("--type", type, "type k (must match --positions)");
    app->add_option("--positions", positions,
                    "exceptional cycles j_1,...,j_k")
        ->delimiter(',');
    if (with_discrete) {
      app->add_flag("--discrete", discrete,
                    "exceptional torsion g + 1 instead of 0");
    }
  }

  bool has_family() const { return genus != 0 || !positions.empty(); }

  MartensSpec spec() const {
    if (genus == 0 || positions.empty()) {
      throw InputError("need --genus and --positions");
    }
    if (type != 0 && type != static_cast<int>(positions.size())) {
      throw InputError("--type " + std::to_string(type) + " does not match " +
                       std::to_string(positions.size()) + " positions");
    }
    MartensSpec s{genus, positions};
    s.validate();
    return s;
  }

  TorsionProfile profile() const {
    const bool file = !profile_path.empty();
    if (file == has_family()) {
      throw InputError(
          "give exactly one input: --profile FILE or --genus/--positions");
    }
    if (file) return read_json_file(profile_path).get<TorsionProfile>();
    return martens_special_profile(spec(), discrete ? MartensKind::kDiscrete
                                                    : MartensKind::kMetricGeneral);
  }
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_report_text(std::ostream& out, const VerificationReport& report) {
  out << report.claim << " " << report.parameters << ": "
      << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const InstanceResult& i : report.instances) {
    out << "  " << (i.pass ? "pass" : "FAIL") << "  " << i.label;
    if (!i.detail.is_null()) out << "  " << i.detail.dump();
    out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Divisor ranks, gonality sequences and Brill-Noether data on "
               "chains of cycles",
               "loopchain"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker cap for parallel sweeps (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  std::function<int()> action;
  bool as_json = false;

  // profile
  FamilyInput profile_in;
  std::string profile_chain;
  auto* profile_cmd =
      app.add_subcommand("profile", "torsion profile of a family or a chain");
  profile_in.attach(profile_cmd, false, true);
  profile_cmd->add_option("--chain", profile_chain, "discrete chain JSON file");
  profile_cmd->callback([&] {
    action = [&] {
      TorsionProfile p;
      if (!profile_chain.empty()) {
        if (profile_in.has_family()) {
          throw InputError("give either --chain or --genus/--positions");
        }
        p = torsion_of_discrete(
            read_json_file(profile_chain).get<DiscreteChain>());
      } else {
        p = profile_in.profile();
      }
      print_json(out, p);
      return 0;
    };
  });

  // realize
  FamilyInput realize_in;
  auto* realize_cmd = app.add_subcommand(
      "realize", "minimal discrete chain with a given torsion profile");
  realize_in.attach(realize_cmd, true, false);
  realize_cmd->callback([&] {
    action = [&] {
      realize_in.discrete = true;
      print_json(out, realize_discrete_chain(realize_in.profile()));
      return 0;
    };
  });

  // tableaux
  FamilyInput tableaux_in;
  GridShape shape;
  bool list = false;
  auto* tableaux_cmd =
      app.add_subcommand("tableaux", "count or list displacement tableaux");
  tableaux_in.attach(tableaux_cmd, true, true);
  tableaux_cmd->add_option("--cols", shape.cols, "columns m")->required();
  tableaux_cmd->add_option("--rows", shape.rows, "rows n")->required();
  tableaux_cmd->add_flag("--list", list, "print every tableau");
  tableaux_cmd->add_flag("--json", as_json, "JSON output");
  tableaux_cmd->callback([&] {
    action = [&] {
      if (shape.rows < 1) throw InputError("--rows must be >= 1");
      const TorsionProfile p = tableaux_in.profile();
      if (!list) {
        const long n = count_tableaux(p, shape);
        if (as_json) {
          print_json(out, json{{"count", n}});
        } else {
          out << n << "\n";
        }
        return 0;
      }
      const auto all = enumerate_tableaux(p, shape);
      if (as_json) {
        print_json(out, json{{"count", all.size()}, {"tableaux", all}});
      } else {
        for (const DisplacementTableau& t : all) out << json(t).dump() << "\n";
      }
      return 0;
    };
  });

  // rank
  std::string rank_profile, rank_chain, rank_divisor;
  auto* rank_cmd = app.add_subcommand("rank", "rank of a divisor");
  rank_cmd->add_option("--profile", rank_profile, "torsion profile JSON file");
  rank_cmd->add_option("--chain", rank_chain, "discrete chain JSON file");
  rank_cmd->add_option("--divisor", rank_divisor,
                       "representing divisor (with --profile) or chain "
                       "divisor (with --chain) JSON file")
      ->required();
  rank_cmd->add_flag("--json", as_json, "JSON output");
  rank_cmd->callback([&] {
    action = [&] {
      if (rank_profile.empty() == rank_chain.empty()) {
        throw InputError("give exactly one of --profile or --chain");
      }
      RankResult result;
      if (!rank_profile.empty()) {
        const auto p = read_json_file(rank_profile).get<TorsionProfile>();
        const auto raw =
            read_json_file(rank_divisor).get<RepresentingDivisor>();
        result = rank_metric(
            p, make_representing_divisor(p, raw.degree, raw.positions));
      } else {
        const auto chain = read_json_file(rank_chain).get<DiscreteChain>();
        result = rank_discrete(
            chain, chain_divisor_from_json(chain, read_json_file(rank_divisor)));
      }
      if (as_json) {
        print_json(out, result);
      } else {
        out << "rank " << result.rank << "\n";
        if (result.witness) out << "witness " << json(*result.witness).dump() << "\n";
      }
      return 0;
    };
  });

  // gonseq
  FamilyInput gonseq_in;
  int r_max = 0;
  bool as_csv = false;
  auto* gonseq_cmd = app.add_subcommand("gonseq", "gonality sequence");
  gonseq_in.attach(gonseq_cmd, true, true);
  gonseq_cmd->add_option("--rmax", r_max, "last r to compute")
      ->required()
      ->check(CLI::PositiveNumber);
  gonseq_cmd->add_flag("--csv", as_csv, "CSV output");
  gonseq_cmd->add_flag("--json", as_json, "JSON output");
  gonseq_cmd->callback([&] {
    action = [&] {
      const GonalityReport report =
          gonality_sequence(gonseq_in.profile(), r_max);
      if (as_json) {
        print_json(out, report);
      } else if (as_csv) {
        out << "r,g_r\n";
        for (int r = 1; r <= r_max; ++r) out << r << "," << report.at(r) << "\n";
      } else {
        out << std::setw(4) << "r" << std::setw(6) << "g_r" << "\n";
        for (int r = 1; r <= r_max; ++r) {
          out << std::setw(4) << r << std::setw(6) << report.at(r) << "\n";
        }
        out << "gonality " << report.gonality << "\n";
      }
      return 0;
    };
  });

  // cliff
  FamilyInput cliff_in;
  auto* cliff_cmd = app.add_subcommand("cliff", "Clifford index");
  cliff_in.attach(cliff_cmd, true, true);
  cliff_cmd->add_flag("--json", as_json, "JSON output");
  cliff_cmd->callback([&] {
    action = [&] {
      const TorsionProfile p = cliff_in.profile();
      const int c = clifford_index(p);
      const int gon = gonality_entry(p, 1);
      if (as_json) {
        print_json(out, json{{"clifford", c}, {"gonality", gon}});
      } else {
        out << "clifford " << c << "\ngonality " << gon << "\n";
      }
      return 0;
    };
  });

  // divcomplete
  FamilyInput divc_in;
  auto* divc_cmd = app.add_subcommand(
      "divcomplete", "check every (degree, rank) cell for divisorial completeness");
  divc_in.attach(divc_cmd, true, true);
  divc_cmd->add_flag("--json", as_json, "JSON output");
  divc_cmd->callback([&] {
    action = [&] {
      const DivisorialReport report =
          divisorial_complete_report(divc_in.profile(), threads);
      if (as_json) {
        print_json(out, report);
      } else {
        out << "genus " << report.genus << " clifford " << report.clifford
            << "\n";
        out << std::setw(4) << "d" << std::setw(4) << "r" << std::setw(9)
            << "allowed" << std::setw(10) << "realized" << std::setw(6)
            << "pass" << "\n";
        for (const DivisorialCell& c : report.cells) {
          out << std::setw(4) << c.degree << std::setw(4) << c.rank
              << std::setw(9) << (c.allowed ? "yes" : "no") << std::setw(10)
              << (c.realized ? "yes" : "no") << std::setw(6)
              << (c.pass() ? "ok" : "FAIL") << "\n";
        }
        out << (report.all_pass() ? "PASS" : "FAIL") << "\n";
      }
      return report.all_pass() ? 0 : kExitFail;
    };
  });

  // oracle {rank, reduce, wrd}
  std::string oracle_action, oracle_graph, oracle_chain, oracle_divisor;
  int base = 0, oracle_r = -1, oracle_d = -1;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "chip-firing computations on finite graphs");
  oracle_cmd->add_option("action", oracle_action, "rank | reduce | wrd")
      ->required()
      ->check(CLI::IsMember({"rank", "reduce", "wrd"}));
  oracle_cmd->add_option("--graph", oracle_graph, "graph JSON file");
  oracle_cmd->add_option("--chain", oracle_chain, "discrete chain JSON file");
  oracle_cmd->add_option("--divisor", oracle_divisor, "divisor JSON file");
  oracle_cmd->add_option("--base", base, "base vertex q (0-based)");
  oracle_cmd->add_option("-r", oracle_r, "rank r for wrd");
  oracle_cmd->add_option("-d", oracle_d, "degree d for wrd");
  oracle_cmd->add_flag("--json", as_json, "JSON output");
  oracle_cmd->callback([&] {
    action = [&] {
      if (oracle_graph.empty() == oracle_chain.empty()) {
        throw InputError("give exactly one of --graph or --chain");
      }
      std::optional<DiscreteChain> chain;
      if (!oracle_chain.empty()) {
        chain = read_json_file(oracle_chain).get<DiscreteChain>();
      }
      const FiniteGraph graph =
          chain ? chain->to_graph() : graph_from_json(read_json_file(oracle_graph));
      auto load_divisor = [&] {
        if (oracle_divisor.empty()) throw InputError("need --divisor");
        const json j = read_json_file(oracle_divisor);
        VertexDivisor d;
        if (j.contains("entries")) {
          if (!chain) throw InputError("chain divisor entries need --chain");
          d = chain_divisor_from_json(*chain, j);
        } else {
          d = j.get<VertexDivisor>();
        }
        if (d.size() != graph.vertex_count()) {
          throw InputError("divisor has " + std::to_string(d.size()) +
                           " coefficients, graph has " +
                           std::to_string(graph.vertex_count()) + " vertices");
        }
        return d;
      };
      if (oracle_action == "rank") {
        const int r = rank_baker_norine(graph, load_divisor(), base);
        if (as_json) {
          print_json(out, json{{"rank", r}});
        } else {
          out << "rank " << r << "\n";
        }
      } else if (oracle_action == "reduce") {
        const VertexDivisor reduced = dhar_reduce(graph, load_divisor(), base);
        if (as_json) {
          json j = reduced;
          j["base"] = base;
          print_json(out, j);
        } else {
          out << json(reduced).dump() << "\n";
        }
      } else {
        if (oracle_r < 0 || oracle_d < 0) {
          throw InputError("wrd needs -r R and -d D, both >= 0");
        }
        const int w = wrd_discrete(graph, oracle_r, oracle_d);
        if (as_json) {
          print_json(out, json{{"r", oracle_r}, {"d", oracle_d}, {"w", w}});
        } else {
          out << "w " << w << "\n";
        }
      }
      return 0;
    };
  });

  // verify
  std::string claim;
  FamilyInput verify_in;
  int verify_rmax = 0, max_genus = 0, max_type = 0;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a theorem check on a Martens-special family");
  verify_cmd
      ->add_option("claim", claim,
                   "prop1 | lemmas | thm-b | thm-c | divcomplete | "
                   "thm-a-probe | sweep")
      ->required()
      ->check(CLI::IsMember({"prop1", "lemmas", "thm-b", "thm-c",
                             "divcomplete", "thm-a-probe", "sweep"}));
  verify_in.attach(verify_cmd, false, false);
  verify_cmd->add_option("--rmax", verify_rmax, "last r (default g + 2)");
  verify_cmd->add_option("--max-genus", max_genus, "sweep bound on g");
  verify_cmd->add_option("--max-type", max_type, "sweep bound on k");
  verify_cmd->add_flag("--json", as_json, "JSON output");
  verify_cmd->callback([&] {
    action = [&] {
      std::vector<VerificationReport> reports;
      if (claim == "sweep") {
        if (max_genus < 5 || max_type < 1) {
          throw InputError("sweep needs --max-genus >= 5 and --max-type >= 1");
        }
        reports = verify_sweep(max_genus, max_type, threads);
      } else {
        const MartensSpec spec = verify_in.spec();
        const int rmax = verify_rmax > 0 ? verify_rmax : spec.genus + 2;
        if (claim == "prop1") {
          reports.push_back(verify_prop1(spec));
        } else if (claim == "lemmas") {
          reports.push_back(verify_two_row_lemmas(spec));
        } else if (claim == "thm-b") {
          reports.push_back(verify_theorem_b(spec, rmax));
        } else if (claim == "thm-c") {
          reports.push_back(verify_theorem_c(spec, rmax));
        } else if (claim == "divcomplete") {
          reports.push_back(verify_divisorial_complete(spec, threads));
        } else {
          reports.push_back(probe_theorem_a_discrete(spec));
        }
      }
      const bool all = std::all_of(
          reports.begin(), reports.end(),
          [](const VerificationReport& r) { return r.passed(); });
      if (as_json) {
        print_json(out, reports.size() == 1 ? json(reports.front())
                                            : json(reports));
      } else {
        for (const VerificationReport& r : reports) print_report_text(out, r);
        out << (all ? "ALL PASS" : "FAILURES") << " (" << reports.size()
            << " reports)\n";
      }
      return all ? 0 : kExitFail;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace loopchain
