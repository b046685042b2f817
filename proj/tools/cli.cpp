#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "bu/bu_engine.hpp"
#include "bu/cyclic_braid.hpp"
#include "bu/errors.hpp"
#include "bu/garside.hpp"
#include "bu/json_io.hpp"
#include "bu/pure_braid.hpp"
#include "bu/sigma_examples.hpp"
#include "bu/tracer.hpp"

namespace bu::cli {
namespace {

struct Outcome {
  Json body;
  int status = 0;
  std::string human;
};

Json with_schema(Json body) {
  Json out = {{"schema", kSchemaVersion}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

Outcome report_outcome(const Report& report, Json extra, const std::string& title) {
  extra["passed"] = report.passed();
  extra["checks"] = report.size();
  extra["failures"] = report.failures();
  extra["records"] = to_json(report);
  std::ostringstream human;
  human << title << ": " << report.size() << " checks, " << report.failures() << " failures\n";
  for (const auto& r : report.records)
    if (!r.pass) human << "  FAIL " << r.relation << " " << r.lhs_word << " = " << r.rhs_word << " " << r.detail << "\n";
  return {extra, report.passed() ? 0 : 1, human.str()};
}

CyclicHom load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string describe(const Decision& d) {
  std::ostringstream s;
  s << "Borsuk-Ulam property: " << (d.has_bu_property ? "yes" : "no") << "\n";
  if (d.has_witness()) {
    const auto& psi = d.witness();
    s << "witness (" << psi.rule << "):\n";
    for (int x = 1; x <= psi.presentation.generators; ++x)
      s << "  psi(" << psi.presentation.name(x) << ") = "
        << (psi.image_labels.empty() ? psi.image(x).word().to_string() : psi.image_labels[x - 1]) << "\n";
  } else {
    s << "obstruction: " << d.obstruction().identity << " has no integer solution\n";
  }
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borsuk-Ulam decisions for free cyclic actions on surfaces, with braid certificates", "bu"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  app.add_flag("--human", human, "Print a prose summary instead of JSON");

  std::function<Outcome()> action;

  auto* braid = app.add_subcommand("braid", "Braid word calculator")->require_subcommand(1);
  std::string w1, w2;
  auto* beq = braid->add_subcommand("eq", "Decide equality of two braid words");
  beq->add_option("w1", w1, "First word, e.g. \"n=3 1 2 1\"")->required();
  beq->add_option("w2", w2, "Second word")->required();
  beq->callback([&] {
    action = [&] {
      const bool e = equal(BraidWord::parse(w1), BraidWord::parse(w2));
      return Outcome{{{"equal", e}}, 0, e ? "equal\n" : "not equal\n"};
    };
  });
  auto* bnf = braid->add_subcommand("nf", "Garside normal form");
  bnf->add_option("word", w1)->required();
  bnf->callback([&] {
    action = [&] {
      const NormalForm nf = normal_form(BraidWord::parse(w1));
      Json factors = Json::array();
      for (const auto& f : nf.factors()) factors.push_back(f.to_cycle_string());
      return Outcome{{{"normal_form", nf.to_string()}, {"inf", nf.inf()}, {"factors", factors}}, 0,
                     nf.to_string() + "\n"};
    };
  });
  auto* bperm = braid->add_subcommand("perm", "Permutation of a braid");
  bperm->add_option("word", w1)->required();
  bperm->callback([&] {
    action = [&] {
      const Permutation p = permutation(BraidWord::parse(w1));
      return Outcome{{{"permutation", p.to_cycle_string()}}, 0, p.to_cycle_string() + "\n"};
    };
  });
  auto* beps = braid->add_subcommand("eps", "Exponent sum, and epsilon for pure braids");
  beps->add_option("word", w1)->required();
  beps->callback([&] {
    action = [&] {
      const BraidWord w = BraidWord::parse(w1);
      const bool pure = permutation(w).is_identity();
      Json body = {{"exponent_sum", exponent_sum(w)}, {"pure", pure}};
      std::string text = "exponent sum " + std::to_string(exponent_sum(w));
      if (pure) {
        body["epsilon"] = epsilon(w);
        text += ", epsilon " + std::to_string(epsilon(w));
      }
      return Outcome{body, 0, text + "\n"};
    };
  });

  auto* present = app.add_subcommand("present", "Presentation of B_{Z_n}(R^2)")->require_subcommand(1);
  int present_n = 0;
  auto* pverify = present->add_subcommand("verify", "Check every relation instance by braid equality");
  pverify->add_option("--n", present_n, "Strand count")->required()->check(CLI::Range(2, 12));
  pverify->callback([&] {
    action = [&] {
      Report r = check_relations_I(present_n);
      r.append(verify_presentation(present_n));
      return report_outcome(r, {{"n", present_n}}, "relations for n=" + std::to_string(present_n));
    };
  });

  auto* bucmd = app.add_subcommand("bu", "Borsuk-Ulam decision and certificates")->require_subcommand(1);
  std::string file;
  auto* decide_cmd = bucmd->add_subcommand("decide", "Decide the property and attach a certificate");
  decide_cmd->add_option("-f,--file", file, "Instance JSON file")->required();
  decide_cmd->callback([&] {
    action = [&] {
      const Decision d = decide(load_instance(file));
      return Outcome{to_json(d), 0, describe(d)};
    };
  });
  auto* witness_cmd = bucmd->add_subcommand("witness", "Build and verify a witness homomorphism");
  witness_cmd->add_option("-f,--file", file, "Instance JSON file")->required();
  witness_cmd->callback([&] {
    action = [&] {
      const CyclicHom theta = load_instance(file);
      if (!is_valid_hom(theta)) throw InputError("invalid homomorphism");
      if (bu_criterion(theta))
        return Outcome{{{"has_witness", false}, {"reason", "the property holds; no witness exists"}}, 1,
                       "no witness: the property holds\n"};
      const WitnessHom psi = theta_of_delta(theta).is_zero()
                                 ? witness_prop1(theta)
                                 : [&] {
                                     const AlphaBeta ab = witness_pair(theta.n / 4);
                                     return witness_prop2(theta, ab.alpha, ab.beta);
                                   }();
      const Report r = verify_witness(psi, theta);
      Json body = {{"has_witness", true}, {"witness", to_json(psi)}, {"verification", to_json(r)},
                   {"passed", r.passed()}};
      return Outcome{body, r.passed() ? 0 : 1, r.passed() ? "witness verified\n" : "witness FAILED verification\n"};
    };
  });
  auto* obstruct_cmd = bucmd->add_subcommand("obstruct", "Produce the parity obstruction");
  obstruct_cmd->add_option("-f,--file", file, "Instance JSON file")->required();
  obstruct_cmd->callback([&] {
    action = [&] {
      const CyclicHom theta = load_instance(file);
      if (!is_valid_hom(theta)) throw InputError("invalid homomorphism");
      if (!bu_criterion(theta))
        return Outcome{{{"has_obstruction", false}, {"reason", "the property fails; a witness exists"}}, 1,
                       "no obstruction: the property fails\n"};
      const ParityObstruction ob = obstruction_certificate(theta);
      return Outcome{{{"has_obstruction", true}, {"obstruction", to_json(ob)}}, 0, ob.identity + " is impossible\n"};
    };
  });

  auto* trace = app.add_subcommand("trace", "Trace alpha and beta from the torus action");
  int k = 1;
  int resolution = 1024;
  double angle = kDefaultProjectionAngle;
  trace->add_option("--k", k, "Action parameter, n = 4k")->required()->check(CLI::Range(1, 16));
  trace->add_option("--resolution", resolution, "Samples per loop")->check(CLI::Range(64, 1 << 20));
  trace->add_option("--angle", angle, "Projection angle in radians");
  trace->callback([&] {
    action = [&] {
      const AlphaBeta ab = alpha_beta(k, resolution, angle);
      Json body = to_json(ab);
      const Report checks = check_alpha_beta(k, ab.alpha, ab.beta);
      body["checks"] = to_json(checks);
      std::string text = "alpha = " + ab.alpha.word().to_string() + "\nbeta = " + ab.beta.word().to_string() + "\n";
      return Outcome{body, checks.passed() ? 0 : 1, text};
    };
  });

  auto* examples = app.add_subcommand("examples", "Symmetric-group examples")->require_subcommand(1);
  auto* sigma = examples->add_subcommand("sigma", "Sigma_n examples on T^2#T^2 and RP^2#T^2");
  int sigma_n = 0;
  std::string which;
  bool allow_large = false;
  sigma->add_option("--n", sigma_n, "Degree n > 2")->required()->check(CLI::Range(3, 64));
  sigma->add_option("--case", which, "m1, m2-parity or m2-cyclic")
      ->required()
      ->check(CLI::IsMember({"m1", "m2-parity", "m2-cyclic"}));
  sigma->add_flag("--allow-large", allow_large, "Run the subgroup computation for n > 6");
  sigma->callback([&] {
    action = [&] {
      if (which == "m1") return report_outcome(witness_M1(sigma_n), {{"case", which}, {"n", sigma_n}}, "M1 witness");
      if (which == "m2-parity")
        return report_outcome(parity_obstruction_M2(sigma_n),
                              {{"case", which},
                               {"n", sigma_n},
                               {"verdict", "obstruction to the sufficient criterion: no homomorphism psi exists"}},
                              "M2 parity (obstruction to the sufficient criterion)");
      const M2CyclicResult r = decide_M2_cyclic(sigma_n, allow_large);
      Json body = to_json(r);
      body["case"] = which;
      std::ostringstream text;
      text << "M2 with Z_" << sigma_n << ": Borsuk-Ulam property " << (r.has_bu_property ? "yes" : "no") << " ("
           << r.basis << ")\n";
      if (r.theta_delta)
        text << "index " << r.index << ", H1 rank " << r.rank << ", theta_ab(delta) = " << r.theta_delta->to_string()
             << "\n";
      return Outcome{body, r.checks.passed() ? 0 : 1, text.str()};
    };
  });

  // "decide", "witness" and "obstruct" are also accepted without the "bu" group.
  std::vector<std::string> full = args;
  const auto first = std::find_if(full.begin(), full.end(), [](const std::string& a) { return !a.starts_with("-"); });
  if (first != full.end() && (*first == "decide" || *first == "witness" || *first == "obstruct"))
    full.insert(first, "bu");
  std::vector<std::string> reversed(full.rbegin(), full.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const InputError& e) {
    outcome = {{{"error", e.what()}, {"kind", "input"}}, 2, std::string("input error: ") + e.what() + "\n"};
  } catch (const UnsupportedError& e) {
    outcome = {{{"error", e.what()}, {"kind", "unsupported"}}, 2, std::string("unsupported: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    outcome = {{{"error", e.what()}, {"kind", "verification"}}, 1, std::string("failure: ") + e.what() + "\n"};
  }
  if (human)
    out << outcome.human;
  else
    out << with_schema(outcome.body).dump(2) << "\n";
  return outcome.status;
}

}  // namespace bu::cli
