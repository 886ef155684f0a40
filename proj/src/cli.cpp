#include "qfe/cli.hpp"

#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfe/cyclotomic.hpp"
#include "qfe/document.hpp"
#include "qfe/expr.hpp"
#include "qfe/solutions.hpp"
#include "qfe/structure.hpp"

namespace qfe {

namespace {

using Report = nlohmann::ordered_json;

// Thrown by handlers to exit with a code after printing `report`.
struct Outcome {
  int code;
  std::string kind;
  std::string message;
};

std::int64_t require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw Outcome{kExitUsage, "usage", std::string(name) + " must be a positive integer"};
  return v;
}

SolutionSpec load_spec(const std::string& path) { return parse_spec_document(read_text_file(path)); }

std::string describe(const StructureData& sd) {
  std::string out = "primes:";
  for (auto p : sd.primes) out += " " + std::to_string(p);
  out += "\nlambda:";
  for (auto p : sd.primes) out += " " + std::to_string(p) + "=" + to_string(sd.lambda.at(p));
  out += "\nt0: " + to_string(sd.t0) + "\nterms:";
  if (sd.terms.empty()) out += " (none)";
  for (auto [r, t] : sd.terms) out += " r=" + std::to_string(r) + ",t=" + std::to_string(t);
  return out + "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solutions of f_mn(q) = f_m(q) f_n(q^m) over the rationals", "qfe"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print a machine-readable JSON report on stdout");

  std::int64_t k = 0, n = 0, m = 0, r = 1;
  std::string spec_path, structure_path, expression;
  std::function<int()> run;

  auto* cyclo = app.add_subcommand("cyclo", "Print the K-th cyclotomic polynomial");
  cyclo->add_option("K", k)->required();
  cyclo->callback([&] {
    run = [&] {
      const auto text = format_expr(cyclotomic(require_positive(k, "K")));
      if (json)
        out << Report{{"command", "cyclo"}, {"k", k}, {"result", text}}.dump() << "\n";
      else
        out << text << "\n";
      return kExitOk;
    };
  });

  auto* qint = app.add_subcommand("qint", "Print the quantum integer [N]_{q^R}");
  qint->add_option("N", n)->required();
  qint->add_option("R", r, "dilation (default 1)");
  qint->callback([&] {
    run = [&] {
      const auto text = format_expr(quantum_integer(require_positive(n, "N"), require_positive(r, "R")));
      if (json)
        out << Report{{"command", "qint"}, {"n", n}, {"r", r}, {"result", text}}.dump() << "\n";
      else
        out << text << "\n";
      return kExitOk;
    };
  });

  auto* check = app.add_subcommand("check", "Check the commutativity condition of a spec");
  check->add_option("--spec", spec_path, "spec document (JSON)")->required();
  check->callback([&] {
    run = [&] {
      const auto report = check_commutativity(load_spec(spec_path));
      if (json) {
        Report v = Report::array();
        for (auto [a, b] : report.violations) v.push_back({a, b});
        out << Report{{"command", "check"}, {"commutes", report.commutes}, {"violations", v}}.dump() << "\n";
      } else if (report.commutes) {
        out << "commutative\n";
      } else {
        out << "not commutative:";
        for (auto [a, b] : report.violations) out << " (" << a << "," << b << ")";
        out << "\n";
      }
      return report.commutes ? kExitOk : kExitDomainFailure;
    };
  });

  auto* synth = app.add_subcommand("synth", "Synthesize f_N from a spec");
  synth->add_option("--spec", spec_path, "spec document (JSON)")->required();
  synth->add_option("N", n)->required();
  synth->callback([&] {
    run = [&] {
      const SolutionSpec spec = load_spec(spec_path);
      const auto f = synthesize(spec, require_positive(n, "N"));
      const auto text = format_expr(f);
      if (json) {
        Report rep{{"command", "synth"}, {"n", n}, {"in_support", support_membership(spec.primes(), n)},
                   {"result", text}, {"is_polynomial", f.is_polynomial()}};
        if (f.is_polynomial() && !f.is_zero()) rep["degree"] = f.numerator().degree();
        out << rep.dump() << "\n";
      } else {
        out << text << "\n";
      }
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Verify the functional equation at (M, N)");
  verify->add_option("--spec", spec_path, "spec document (JSON)")->required();
  verify->add_option("M", m)->required();
  verify->add_option("N", n)->required();
  verify->callback([&] {
    run = [&] {
      const bool holds = verify_fe(load_spec(spec_path), require_positive(m, "M"), require_positive(n, "N"));
      if (json)
        out << Report{{"command", "verify"}, {"m", m}, {"n", n}, {"holds", holds}}.dump() << "\n";
      else
        out << (holds ? "true" : "false") << "\n";
      return holds ? kExitOk : kExitDomainFailure;
    };
  });

  auto* decomp = app.add_subcommand("decompose", "Recover (lambda, t0, R, t_r) from a spec");
  decomp->add_option("--spec", spec_path, "spec document (JSON)")->required();
  decomp->callback([&] {
    run = [&] {
      const StructureData sd = decompose(load_spec(spec_path));
      out << (json ? write_structure_document(sd) : describe(sd));
      return kExitOk;
    };
  });

  auto* closed = app.add_subcommand("closed-form", "Evaluate the closed form f_N of structure data");
  closed->add_option("--structure", structure_path, "structure document (JSON)")->required();
  closed->add_option("N", n)->required();
  closed->callback([&] {
    run = [&] {
      const StructureData sd = parse_structure_document(read_text_file(structure_path));
      const auto text = format_expr(closed_form(sd, require_positive(n, "N")));
      if (json)
        out << Report{{"command", "closed-form"}, {"n", n}, {"result", text}}.dump() << "\n";
      else
        out << text << "\n";
      return kExitOk;
    };
  });

  auto* standard = app.add_subcommand("standard-form", "Write an expression as lambda q^e u/v");
  standard->add_option("EXPR", expression)->required();
  standard->callback([&] {
    run = [&] {
      const StandardForm s = to_standard_form(parse_function(expression));
      if (json) {
        out << Report{{"command", "standard-form"},
                      {"lambda", to_string(s.lambda)},
                      {"e", s.e},
                      {"u", format_expr(s.u)},
                      {"v", format_expr(s.v)},
                      {"degree_difference", s.degree_difference()}}
                   .dump()
            << "\n";
      } else {
        out << "lambda: " << to_string(s.lambda) << "\ne: " << s.e << "\nu: " << format_expr(s.u)
            << "\nv: " << format_expr(s.v) << "\n";
      }
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qfe: " << e.what() << "\n";
    return kExitUsage;
  }

  std::optional<Outcome> failure;
  int code = kExitOk;
  try {
    code = run();
  } catch (const Outcome& o) {
    failure = o;
  } catch (const DocumentError& e) {
    failure = Outcome{kExitUsage, "document", e.what()};
  } catch (const ParseError& e) {
    failure = Outcome{kExitUsage, "parse", e.what()};
  } catch (const NotASolution& e) {
    failure = Outcome{kExitDomainFailure, std::string(to_string(e.reason())), e.what()};
  } catch (const TooFewPrimes& e) {
    failure = Outcome{kExitDomainFailure, "too-few-primes", e.what()};
  } catch (const std::domain_error& e) {
    failure = Outcome{kExitDomainFailure, "domain", e.what()};
  } catch (const std::invalid_argument& e) {
    failure = Outcome{kExitUsage, "usage", e.what()};
  }
  if (!failure) return code;
  if (json) {
    const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    out << Report{{"command", sub ? sub->get_name() : ""},
                  {"error", {{"kind", failure->kind}, {"message", failure->message}}}}
               .dump()
        << "\n";
  }
  err << "qfe: " << failure->message << "\n";
  return failure->code;
}

}  // namespace qfe
