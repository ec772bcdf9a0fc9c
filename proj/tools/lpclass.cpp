// Command-line front end: parses multisegment expressions and root-datum
// JSON, runs the classification machinery, and prints one JSON document per
// invocation.  Exit codes: 0 success, 1 domain error (JSON error object on
// stdout), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lpc/fuzz.hpp"
#include "lpc/json_io.hpp"

using nlohmann::json;

namespace {

struct UsageError {
  std::string message;
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json error_json(const lpc::Error& e) {
  json out{{"code", lpc::errc_name(e.code())}, {"message", e.what()}};
  if (e.pos())
    out["position"] = json{{"line", e.pos()->line}, {"column", e.pos()->column}};
  if (!e.expected().empty()) out["expected"] = e.expected();
  return out;
}

json parse_json_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw lpc::Error(lpc::errc::json_schema_error,
                     std::string("invalid JSON for ") + what);
  return j;
}

struct ParamInput {
  std::string text;
  bool as_json = false;
  std::optional<int> n;
  int d = 1;
  bool d_given = false;

  lpc::GLnLParameter read() const {
    if (as_json) {
      json j = parse_json_text(text, "parameter");
      lpc::GLnLParameter p = lpc::lparam_from_json(j);
      if (n && *n != p.n())
        lpc::fail(lpc::errc::group_mismatch,
                  "--n disagrees with the parameter JSON");
      if (d_given && d != p.d())
        lpc::fail(lpc::errc::group_mismatch,
                  "--d disagrees with the parameter JSON");
      return p;
    }
    return lpc::parse_lparam(text, n, d);
  }
};

struct DatumInput {
  std::string path;
  int gln_n = 0;

  lpc::DatumBundle read() const {
    if (!path.empty() && gln_n > 0)
      throw UsageError{"--datum and --n are mutually exclusive"};
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw UsageError{"cannot open datum file '" + path + "'"};
      std::stringstream ss;
      ss << in.rdbuf();
      return lpc::datum_from_json(parse_json_text(ss.str(), "datum"));
    }
    if (gln_n > 0) {
      lpc::BasedRootDatum d = lpc::BasedRootDatum::gln(gln_n);
      lpc::GaloisAction a = lpc::GaloisAction::trivial(d);
      return lpc::DatumBundle{std::move(d), std::move(a)};
    }
    throw UsageError{"provide --datum FILE or --n N"};
  }
};

lpc::ParabolicSubset parse_levi(const std::string& text, int ssrank) {
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      idx.push_back(v - 1);  // CLI uses 1-based root indices
    } catch (const std::exception&) {
      throw UsageError{"--levi expects comma-separated integers, got '" + item + "'"};
    }
  }
  return lpc::ParabolicSubset::make(std::move(idx), ssrank);
}

lpc::Mode parse_mode(const std::string& text) {
  if (text == "quotient") return lpc::Mode::quotient;
  if (text == "sub") return lpc::Mode::sub;
  throw UsageError{"--mode must be 'quotient' or 'sub'"};
}

json weyl_element_json(const lpc::WeylElement& w) {
  return json{{"matrix", lpc::intmat_to_json(w.matrix)},
              {"word", lpc::word_to_json(w.word)}};
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of based root data, Weyl groups and the "
               "multisegment classification of GL_n L-parameters"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every verb");

  ParamInput pin;
  std::string mode_text = "quotient";
  DatumInput din;
  std::string levi_text;
  std::string nu_text;
  std::string beta_text;
  std::string second_text;
  int fuzz_trials = 100;
  std::uint64_t seed = 0;
  int nmax = 12;

  auto add_param_opts = [&](CLI::App* cmd, bool positional = true) {
    if (positional)
      cmd->add_option("expr", pin.text, "parameter expression (or JSON with --json)")
          ->required();
    cmd->add_option("--n", pin.n, "group dimension n (default: total segment dimension)");
    cmd->add_option("--d", pin.d, "division algebra index d (default 1)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { pin.d_given = true; });
    cmd->add_flag("--json", pin.as_json, "read the parameter from JSON instead of the grammar");
  };
  auto add_datum_opts = [&](CLI::App* cmd) {
    cmd->add_option("--datum", din.path, "root datum JSON file");
    cmd->add_option("--n", din.gln_n, "use the GL_n datum")->check(CLI::PositiveNumber);
  };

  // ----- parameter verbs -----
  auto* c_classify = app.add_subcommand("classify", "decompose into a standard triple");
  add_param_opts(c_classify);
  c_classify->add_option("--mode", mode_text, "quotient or sub (default quotient)");

  auto* c_assemble = app.add_subcommand("assemble", "rebuild a parameter from a triple JSON");
  c_assemble->add_option("expr", pin.text, "triple JSON")->required();
  c_assemble->add_option("--mode", mode_text, "quotient or sub (default quotient)");

  auto* c_tempered = app.add_subcommand("tempered", "test temperedness");
  add_param_opts(c_tempered);

  auto* c_z = app.add_subcommand("z", "central hyperbolic exponents");
  add_param_opts(c_z);

  auto* c_zstar = app.add_subcommand("zstar", "exponents through the principal sl2 weights");
  add_param_opts(c_zstar);

  auto* c_twist = app.add_subcommand("twist", "shift all exponents by beta");
  add_param_opts(c_twist);
  c_twist->add_option("--beta", beta_text, "rational shift")->required();

  auto* c_relevant = app.add_subcommand("relevant", "test relevance for the inner form");
  add_param_opts(c_relevant);

  auto* c_equiv = app.add_subcommand("equiv", "test equivalence of two parameters");
  add_param_opts(c_equiv);
  c_equiv->add_option("expr2", second_text, "second parameter expression")->required();

  auto* c_centralizer = app.add_subcommand("centralizer", "centralizer shape");
  add_param_opts(c_centralizer);

  auto* c_check71 = app.add_subcommand("check71",
                                       "compare component groups across classification");
  add_param_opts(c_check71);

  // ----- datum verbs -----
  auto* c_datum = app.add_subcommand("datum", "root datum operations");
  c_datum->require_subcommand(1);
  auto* c_datum_validate = c_datum->add_subcommand("validate", "validate a datum");
  auto* c_datum_dual = c_datum->add_subcommand("dual", "swap roots and coroots");
  auto* c_datum_cartan = c_datum->add_subcommand("cartan", "Cartan matrix");
  for (auto* cmd : {c_datum_validate, c_datum_dual, c_datum_cartan}) add_datum_opts(cmd);

  // ----- weyl verbs -----
  auto* c_weyl = app.add_subcommand("weyl", "Weyl group operations");
  c_weyl->require_subcommand(1);
  auto* c_weyl_order = c_weyl->add_subcommand("order", "group order");
  auto* c_weyl_elements = c_weyl->add_subcommand("elements", "all elements, canonical order");
  auto* c_weyl_relative = c_weyl->add_subcommand("relative", "relative Weyl group of a Levi");
  for (auto* cmd : {c_weyl_order, c_weyl_elements, c_weyl_relative}) add_datum_opts(cmd);
  c_weyl_relative->add_option("--levi", levi_text, "comma-separated 1-based indices of I0");

  // ----- chamber verbs -----
  auto* c_chamber = app.add_subcommand("chamber", "chamber geometry on a*");
  c_chamber->require_subcommand(1);
  auto* c_ch_dominant = c_chamber->add_subcommand("dominant", "dominant conjugate of nu");
  auto* c_ch_maxlevi = c_chamber->add_subcommand("maxlevi", "maximal Levi of a dominant nu");
  auto* c_ch_regular = c_chamber->add_subcommand("regular", "regularity of nu");
  for (auto* cmd : {c_ch_dominant, c_ch_maxlevi, c_ch_regular}) {
    add_datum_opts(cmd);
    cmd->add_option("--levi", levi_text, "comma-separated 1-based indices of the base Levi");
    cmd->add_option("--nu", nu_text, "JSON array of rational coordinates")->required();
  }

  // ----- fuzz verb -----
  auto* c_roundtrip = app.add_subcommand("roundtrip", "fuzzed classify/assemble round trips");
  c_roundtrip->add_option("--fuzz", fuzz_trials, "number of trials (default 100)")
      ->check(CLI::PositiveNumber);
  c_roundtrip->add_option("--seed", seed, "random seed (default 0)");
  c_roundtrip->add_option("--nmax", nmax, "maximum n (default 12)")->check(CLI::PositiveNumber);
  c_roundtrip->add_option("--d", pin.d, "division algebra index d (default 1)")
      ->check(CLI::PositiveNumber);
  c_roundtrip->add_option("--mode", mode_text, "quotient or sub (default quotient)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_classify) {
      lpc::GLnLParameter p = pin.read();
      lpc::Mode mode = parse_mode(mode_text);
      json out = lpc::triple_to_json(lpc::classify(p, mode), p.n());
      out["mode"] = mode == lpc::Mode::quotient ? "quotient" : "sub";
      emit(out);
    } else if (*c_assemble) {
      lpc::GLnStandardTriple t =
          lpc::triple_from_json(parse_json_text(pin.text, "triple"));
      emit(lpc::lparam_to_json(lpc::assemble(t, parse_mode(mode_text))));
    } else if (*c_tempered) {
      emit(json{{"tempered", lpc::is_tempered(pin.read())}});
    } else if (*c_z) {
      emit(json{{"exponents", lpc::ratvec_to_json(lpc::z_of(pin.read()).exponents)}});
    } else if (*c_zstar) {
      emit(json{{"exponents", lpc::ratvec_to_json(lpc::z_star_of(pin.read()).exponents)}});
    } else if (*c_twist) {
      emit(lpc::lparam_to_json(lpc::twist(pin.read(), lpc::Rational::parse(beta_text))));
    } else if (*c_relevant) {
      emit(json{{"relevant", lpc::is_relevant(pin.read())}});
    } else if (*c_equiv) {
      lpc::GLnLParameter a = pin.read();
      ParamInput pin2 = pin;
      pin2.text = second_text;
      emit(json{{"equivalent", lpc::equivalent(a, pin2.read())}});
    } else if (*c_centralizer) {
      lpc::CentralizerShape s = lpc::centralizer_shape(pin.read());
      emit(json{{"component_group_order", s.component_group_order},
                {"gl_factors", s.gl_factors}});
    } else if (*c_check71) {
      emit(json{{"holds", lpc::check_component_group_transfer(pin.read())}});
    } else if (*c_datum_validate) {
      lpc::DatumBundle b = din.read();
      emit(json{{"rank", b.datum.rank()},
                {"semisimple_rank", b.datum.ssrank()},
                {"standard_basis", b.datum.standard_basis()},
                {"valid", true}});
    } else if (*c_datum_dual) {
      emit(lpc::datum_to_json(din.read().datum.dual()));
    } else if (*c_datum_cartan) {
      emit(json{{"cartan", lpc::intmat_to_json(din.read().datum.cartan().entries)}});
    } else if (*c_weyl_order) {
      lpc::WeylGroup W = lpc::WeylGroup::generate(din.read().datum);
      emit(json{{"order", W.order()}});
    } else if (*c_weyl_elements) {
      lpc::WeylGroup W = lpc::WeylGroup::generate(din.read().datum);
      json elems = json::array();
      for (const auto& w : W.elements()) elems.push_back(weyl_element_json(w));
      emit(json{{"elements", std::move(elems)}, {"order", W.order()}});
    } else if (*c_weyl_relative) {
      lpc::DatumBundle b = din.read();
      lpc::WeylGroup W = lpc::WeylGroup::generate(b.datum);
      lpc::ParabolicSubset I0 = parse_levi(levi_text, b.datum.ssrank());
      lpc::RelativeWeylGroup R = lpc::relative_weyl(W, I0, b.action);
      json basis = json::array();
      for (const auto& row : R.lattice.basis) basis.push_back(row);
      json reps = json::array();
      for (size_t k = 0; k < R.reps.size(); ++k) {
        json r = weyl_element_json(W.element(R.reps[k]));
        r["induced"] = lpc::intmat_to_json(R.induced[k]);
        reps.push_back(std::move(r));
      }
      emit(json{{"base", lpc::subset_to_json(I0)},
                {"invariant_basis", std::move(basis)},
                {"order", R.order()},
                {"reps", std::move(reps)}});
    } else if (*c_ch_dominant || *c_ch_maxlevi || *c_ch_regular) {
      lpc::DatumBundle b = din.read();
      lpc::ParabolicSubset I = parse_levi(levi_text, b.datum.ssrank());
      lpc::AStarSpace space = lpc::AStarSpace::create(b.datum, I);
      lpc::NuVector nu = lpc::NuVector::create(
          space, lpc::ratvec_from_json(parse_json_text(nu_text, "nu")));
      if (*c_ch_dominant) {
        lpc::WeylGroup W = lpc::WeylGroup::generate(b.datum);
        lpc::RelativeWeylGroup R = lpc::relative_weyl(W, I, b.action);
        auto [w, dom] = lpc::dominant_conjugate(nu, R, space, W);
        emit(json{{"nu", lpc::ratvec_to_json(dom.coords)},
                  {"word", lpc::word_to_json(w.word)}});
      } else if (*c_ch_maxlevi) {
        lpc::ParabolicSubset levi = lpc::maximal_levi_of(nu, space, &b.action);
        emit(json{{"levi", lpc::subset_to_json(levi)}});
      } else {
        emit(json{{"regular", lpc::is_regular(nu, space)}});
      }
    } else if (*c_roundtrip) {
      lpc::Mode mode = parse_mode(mode_text);
      lpc::Fuzzer fz(seed);
      int failures = 0;
      for (int t = 0; t < fuzz_trials; ++t) {
        lpc::GLnLParameter p = fz.parameter(nmax, pin.d);
        if (!(lpc::assemble(lpc::classify(p, mode), mode) == p)) ++failures;
        lpc::GLnStandardTriple tr = fz.triple(std::max(1, nmax / pin.d), pin.d);
        if (!(lpc::classify(lpc::assemble(tr, mode), mode) == tr)) ++failures;
      }
      emit(json{{"d", pin.d},
                {"failures", failures},
                {"mode", mode_text},
                {"nmax", nmax},
                {"seed", seed},
                {"trials", fuzz_trials}});
    }
  } catch (const UsageError& e) {
    std::cerr << e.message << "\n";
    return 2;
  } catch (const lpc::Error& e) {
    emit(error_json(e));
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"code", "InternalError"}, {"message", e.what()}});
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
