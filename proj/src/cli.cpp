#include "assoc/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "assoc/decision.hpp"
#include "assoc/errors.hpp"
#include "assoc/oracle.hpp"
#include "assoc/serialize.hpp"
#include "assoc/spectrum.hpp"

namespace assoc {

namespace {

enum class Format { Table, Json };

template <class Range, class Fn>
std::string join(const Range& r, const std::string& sep, Fn fn) {
  std::string s;
  bool first = true;
  for (const auto& x : r) {
    if (!first) s += sep;
    first = false;
    s += fn(x);
  }
  return s;
}

std::string format_set(const std::set<int>& s) {
  return "{" + join(s, ",", [](int x) { return std::to_string(x); }) + "}";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_pair(std::ostream& out, const PairParams& p) {
  out << "H " << p.H << '\n'
      << "M " << p.M << '\n'
      << "L " << p.L << '\n'
      << "Y " << p.Y << '\n'
      << "Z " << p.Z << '\n'
      << "Delta " << format_set(p.Delta) << '\n'
      << "Omega {"
      << join(p.Omega, ",", [](const auto& dh) {
           return "(" + std::to_string(dh.first) + "," + std::to_string(dh.second) + ")";
         })
      << "}\n"
      << "xi " << p.xi << '\n'
      << "omega (" << join(p.omega_prefix, ",", [](int v) { return std::to_string(v); }) << ",...)\n"
      << "Lambda " << format_set(p.Lambda) << '\n'
      << "lambda " << p.lambda << '\n';
}

void print_graph(std::ostream& out, const GraphParams& p) {
  out << "M_G " << p.M << '\n'
      << "P_G " << p.P.to_string() << '\n'
      << "E_G " << p.E.to_string() << '\n'
      << "O_G " << p.O.to_string() << '\n'
      << "Z_G " << p.Z.to_string() << '\n'
      << "B_G " << p.B.to_string() << '\n'
      << "lambda_G " << p.lambda.to_string() << '\n';
}

void print_decision(std::ostream& out, const Decision& d) {
  if (d.trivial) {
    out << "identical bracketings\nsatisfied\n";
    return;
  }
  std::size_t lw = 5, rw = 4;
  for (const auto& c : d.conditions) {
    lw = std::max(lw, c.lhs.size());
    rw = std::max(rw, c.rhs.size());
  }
  out << std::left << std::setw(7) << "cond" << std::setw(static_cast<int>(lw) + 2) << "graph" << std::setw(4) << "rel"
      << std::setw(static_cast<int>(rw) + 2) << "pair" << "result\n";
  for (const auto& c : d.conditions) {
    out << std::setw(7) << c.label << std::setw(static_cast<int>(lw) + 2) << c.lhs << std::setw(4) << c.relation
        << std::setw(static_cast<int>(rw) + 2) << c.rhs << (c.passed ? "pass" : "FAIL") << '\n';
  }
  out << std::right << (d.satisfied ? "satisfied\n" : "not satisfied\n");
}

Bracketing term_arg(const std::string& text) {
  try {
    return parse_bracketing(text);
  } catch (const ParseError& e) {
    throw std::invalid_argument("bracketing \"" + text + "\": " + e.what());
  }
}

Digraph graph_arg(const std::string& file) {
  try {
    return load_digraph(file);
  } catch (const ParseError& e) {
    throw std::invalid_argument(file + ": " + e.what());
  }
}

struct Globals {
  std::string format = "table";
  std::uint64_t max_maps = default_max_maps();
  Format fmt() const { return format == "json" ? Format::Json : Format::Table; }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bracketing identities and associative spectra of graph algebras", "assoc-spectra"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-maps", g.max_maps, "Oracle enumeration budget (maps)")->check(CLI::PositiveNumber);

  std::string file, t_text, u_text;
  int n = 0;

  auto* params_pair = app.add_subcommand("params-pair", "Parameters of a pair of bracketings");
  params_pair->add_option("T", t_text)->required();
  params_pair->add_option("U", u_text)->required();

  auto* params_graph = app.add_subcommand("params-graph", "Structural parameters of a digraph");
  params_graph->add_option("FILE", file)->required();
  std::vector<int> omega_args;
  params_graph->add_option("--omega", omega_args, "Also print omega_G(L, R)")->expected(2);

  auto* decide = app.add_subcommand("decide", "Decide t ~ t' from the graph parameters");
  decide->add_option("FILE", file)->required();
  decide->add_option("T", t_text)->required();
  decide->add_option("U", u_text)->required();

  auto* oracle_decide = app.add_subcommand("oracle-decide", "Decide t ~ t' by comparing homomorphism sets");
  oracle_decide->add_option("FILE", file)->required();
  oracle_decide->add_option("T", t_text)->required();
  oracle_decide->add_option("U", u_text)->required();
  oracle_decide->add_option("--max-maps", g.max_maps, "Oracle enumeration budget (maps)")->check(CLI::PositiveNumber);

  auto* spec = app.add_subcommand("spectrum", "Associative spectrum s_n for n up to N");
  spec->add_option("FILE", file)->required();
  spec->add_option("N", n)->required()->check(CLI::Range(1, 64));
  std::string backend = "oracle";
  bool show_classes = false;
  unsigned jobs = 1;
  int from = 0;
  spec->add_option("--backend", backend)->check(CLI::IsMember({"oracle", "theorem", "both"}));
  spec->add_flag("--classes", show_classes, "List the classes of the fine spectrum");
  spec->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  spec->add_option("--from", from, "First n (default: min(3, N))");
  spec->add_option("--max-maps", g.max_maps, "Oracle enumeration budget (maps)")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Spectrum dichotomy class");
  classify->add_option("FILE", file)->required();

  auto* classify_undir = app.add_subcommand("classify-undirected", "Identities of a symmetric digraph");
  classify_undir->add_option("FILE", file)->required();

  auto* rseq = app.add_subcommand("rseq", "|R_n| for 2 <= n <= N");
  rseq->add_option("N", n)->required()->check(CLI::Range(2, 90));

  auto* enumerate = app.add_subcommand("enumerate", "All bracketings of size N with their DFS trees");
  enumerate->add_option("N", n)->required()->check(CLI::Range(1, 16));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const Format fmt = g.fmt();
  try {
    if (*params_pair) {
      const auto p = pair_params(term_arg(t_text), term_arg(u_text));
      if (fmt == Format::Json) {
        print_json(out, p);
      } else {
        print_pair(out, p);
      }
      return kExitOk;
    }

    if (*params_graph) {
      const GraphAnalysis a(graph_arg(file));
      std::optional<ExtInt> omega;
      if (!omega_args.empty()) omega = a.omega(omega_args[0], omega_args[1]);
      if (fmt == Format::Json) {
        json j = a.params();
        j["all_whirls"] = a.all_nontrivial_sccs_are_whirls();
        j["no_path_between_nontrivial_sccs"] = a.no_path_between_nontrivial_sccs();
        if (omega) j["omega_G"] = json{{"ell", omega_args[0]}, {"r", omega_args[1]}, {"value", *omega}};
        print_json(out, j);
      } else {
        print_graph(out, a.params());
        if (omega) out << "omega_G(" << omega_args[0] << "," << omega_args[1] << ") " << omega->to_string() << '\n';
      }
      return kExitOk;
    }

    if (*decide) {
      const auto t = term_arg(t_text);
      const auto u = term_arg(u_text);
      const Decision d = decide_identity(graph_arg(file), t, u);
      if (fmt == Format::Json) {
        print_json(out, d);
      } else {
        print_decision(out, d);
      }
      return d.satisfied ? kExitOk : kExitNotSatisfied;
    }

    if (*oracle_decide) {
      const auto t = term_arg(t_text);
      const auto u = term_arg(u_text);
      if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
      const Digraph graph = graph_arg(file);
      const OracleOptions opts{g.max_maps};
      const auto st = hom_signature(graph, t, opts);
      const auto su = hom_signature(graph, u, opts);
      const bool satisfied = st == su;
      if (fmt == Format::Json) {
        print_json(out, json{{"satisfied", satisfied}, {"homomorphisms_t", st.count()}, {"homomorphisms_u", su.count()}});
      } else {
        out << "homomorphisms of G(t)  " << st.count() << '\n'
            << "homomorphisms of G(t') " << su.count() << '\n'
            << (satisfied ? "satisfied\n" : "not satisfied\n");
      }
      return satisfied ? kExitOk : kExitNotSatisfied;
    }

    if (*spec) {
      const GraphAnalysis a(graph_arg(file));
      const int first = from > 0 ? from : std::min(3, n);
      SpectrumOptions opts;
      opts.max_maps = g.max_maps;
      opts.jobs = jobs;
      json rows = json::array();
      bool agree = true;
      for (int k = first; k <= n; ++k) {
        std::vector<SpectrumReport> reports;
        if (backend != "theorem") {
          opts.backend = Backend::Oracle;
          reports.push_back(spectrum(a, k, opts));
        }
        if (backend != "oracle") {
          opts.backend = Backend::Theorem;
          reports.push_back(spectrum(a, k, opts));
        }
        const bool same = reports.size() < 2 || same_partition(reports[0], reports[1]);
        agree = agree && same;
        if (fmt == Format::Json) {
          for (const auto& r : reports) {
            json j = r;
            if (!show_classes) j.erase("classes");
            rows.push_back(j);
          }
          continue;
        }
        out << k;
        for (const auto& r : reports) out << ' ' << r.s_n;
        if (!same) out << "  (backends disagree)";
        out << '\n';
        if (show_classes) {
          for (const auto& cls : reports.front().classes) out << "  {" << join(cls, ", ", [](const auto& s) { return s; }) << "}\n";
        }
      }
      if (fmt == Format::Json) print_json(out, json{{"rows", rows}, {"backends_agree", agree}});
      if (!agree) err << "oracle and theorem backends disagree\n";
      return agree ? kExitOk : kExitNotSatisfied;
    }

    if (*classify) {
      const Digraph graph = graph_arg(file);
      const SpectrumClass c = classify_dichotomy(graph);
      const AssociativityCheck assoc_check = check_associativity(graph);
      std::vector<std::string> edgeless;
      for (Vertex v : assoc_check.edgeless_vertices) edgeless.push_back(graph.name(v));
      if (fmt == Format::Json) {
        json j = c;
        j["associative"] = assoc_check.associative;
        j["structural_associative"] = assoc_check.structural;
        j["edgeless_vertices"] = edgeless;
        print_json(out, j);
      } else {
        out << to_string(c.kind) << '\n' << c.witness << '\n';
        out << "associative " << (assoc_check.associative ? "yes" : "no") << '\n';
        if (!assoc_check.agree()) {
          out << "note: out-neighbourhood characterisation says "
              << (assoc_check.structural ? "associative" : "not associative") << "; edgeless vertices {"
              << join(edgeless, ",", [](const auto& s) { return s; }) << "}\n";
        }
      }
      return kExitOk;
    }

    if (*classify_undir) {
      const auto c = classify_undirected(graph_arg(file));
      if (fmt == Format::Json) {
        print_json(out, json{{"class", to_string(c)}});
      } else {
        out << to_string(c) << '\n';
      }
      return kExitOk;
    }

    if (*rseq) {
      json rows = json::array();
      std::uint64_t prev = 0;
      for (int k = 2; k <= n; ++k) {
        const std::uint64_t r = r_count(k);
        const double ratio = prev == 0 ? 0.0 : static_cast<double>(r) / static_cast<double>(prev);
        if (fmt == Format::Json) {
          json row{{"n", k}, {"R_n", r}};
          row["ratio"] = prev == 0 ? json(nullptr) : json(ratio);
          rows.push_back(row);
        } else {
          out << k << ' ' << r << ' ';
          if (prev == 0) {
            out << '-';
          } else {
            out << std::fixed << std::setprecision(6) << ratio << std::defaultfloat;
          }
          out << '\n';
        }
        prev = r;
      }
      if (fmt == Format::Json) print_json(out, rows);
      return kExitOk;
    }

    if (*enumerate) {
      json rows = json::array();
      for (const auto& t : enumerate_bracketings(n)) {
        const DfsTree tree = bracketing_to_dfs_tree(t);
        if (fmt == Format::Json) {
          rows.push_back(json{{"bracketing", format_bracketing(t)}, {"tree", tree}});
        } else {
          out << format_bracketing(t) << "  depths ("
              << join(tree.depth_sequence(), ",", [](int d) { return std::to_string(d); }) << ")\n";
        }
      }
      if (fmt == Format::Json) print_json(out, rows);
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace assoc
