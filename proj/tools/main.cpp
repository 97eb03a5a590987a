// tdlf: JSON calculator over K((t)) and K{{t}}.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tdlf/duality.hpp"
#include "tdlf/errors.hpp"
#include "tdlf/json_io.hpp"
#include "tdlf/oracle.hpp"
#include "tdlf/parse.hpp"
#include "tdlf/seminorm.hpp"
#include "tdlf/series.hpp"
#include "tdlf/submodule.hpp"

namespace {

using tdlf::Json;

enum ExitCode : int { kOk = 0, kOther = 1, kParse = 2, kPrecision = 3, kAdmissibility = 4, kUnknownName = 5 };

struct Globals {
  std::uint64_t prime = 0;
  std::int64_t precision = 32;
  std::vector<std::int64_t> window{-20, 20};
  std::uint64_t seed = 0;
  std::string field;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<tdlf::FieldKind> field_flag(const Globals& g) {
  if (g.field == "equal") return tdlf::FieldKind::EqualChar;
  if (g.field == "mixed") return tdlf::FieldKind::MixedChar;
  return std::nullopt;
}

tdlf::FieldKind field_or_mixed(const Globals& g) { return field_flag(g).value_or(tdlf::FieldKind::MixedChar); }

tdlf::Series series(const Globals& g, const std::string& text) {
  return tdlf::parse_series(text, tdlf::ParseOptions{g.prime, g.precision, field_flag(g)});
}

Json emit_series(const tdlf::Series& s) {
  Json j = Json::object();
  j["series"] = tdlf::to_json(s);
  j["render"] = tdlf::render(s);
  return j;
}

Json pair_of(const std::pair<tdlf::ExtInt, tdlf::ExtInt>& p, const char* first, const char* second) {
  Json j = Json::object();
  j[first] = tdlf::to_json(p.first);
  j[second] = tdlf::to_json(p.second);
  return j;
}

int report(const char* kind, const std::exception& e, int code) {
  Json j = Json::object();
  j["error"] = kind;
  j["message"] = e.what();
  std::cerr << j.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tdlf: locally convex structure of two-dimensional local fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--prime", g.prime, "residue characteristic p")
      ->required()
      ->check([](const std::string& s) -> std::string {
        try {
          return is_prime(std::stoull(s)) ? std::string{} : "--prime must be a prime";
        } catch (const std::exception&) {
          return "--prime must be a prime";
        }
      });
  app.add_option("--precision", g.precision, "absolute p-adic precision of literals")
      ->envname("TDLF_PRECISION")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--window", g.window, "index window lo,hi for oracle commands")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "oracle seed")->capture_default_str();
  app.add_option("--field", g.field, "equal or mixed; default inferred from literals")
      ->check(CLI::IsMember({"equal", "mixed"}));

  Json out;

  // eval
  auto* eval = app.add_subcommand("eval", "parse a series, optionally combine it with a second one");
  std::string eval_x, eval_y, eval_op = "id";
  std::optional<std::int64_t> eval_target;
  eval->add_option("--series", eval_x)->required();
  eval->add_option("--op", eval_op)->check(CLI::IsMember({"id", "neg", "add", "sub", "mul"}))->capture_default_str();
  eval->add_option("--with", eval_y, "second operand for add/sub/mul");
  eval->add_option("--target", eval_target, "p-adic target precision for mixed products");
  eval->callback([&] {
    const tdlf::Series x = series(g, eval_x);
    if (eval_op == "id") {
      out = emit_series(x);
    } else if (eval_op == "neg") {
      out = emit_series(tdlf::neg(x));
    } else {
      if (eval_y.empty()) throw CLI::ValidationError("--with", "required for --op " + eval_op);
      const tdlf::Series y = series(g, eval_y);
      if (eval_op == "add") out = emit_series(tdlf::add(x, y));
      if (eval_op == "sub") out = emit_series(tdlf::sub(x, y));
      if (eval_op == "mul") out = emit_series(tdlf::mul(x, y, eval_target));
    }
  });

  // norm
  auto* norm = app.add_subcommand("norm", "exponent of an admissible seminorm at a series");
  std::string norm_x, norm_n;
  std::optional<std::int64_t> norm_ball;
  norm->add_option("--series", norm_x)->required();
  norm->add_option("--seminorm", norm_n, "SeminormSpec JSON")->required();
  norm->add_option("--ball", norm_ball, "also test membership in the closed ball of exponent e");
  norm->callback([&] {
    const tdlf::Series x = series(g, norm_x);
    const tdlf::SeminormSpec n = tdlf::parse_seminorm(norm_n, tdlf::kind_of(x));
    out = tdlf::to_json(tdlf::eval_exponent(n, x));
    if (norm_ball) out["ball"] = tdlf::to_string(tdlf::closed_ball_test(n, x, *norm_ball));
  });

  // classify
  auto* cls = app.add_subcommand("classify", "open lattice / bounded / compactoid flags of a submodule");
  std::string cls_m;
  bool cls_known = false;
  cls->add_option("--module", cls_m, "SubmoduleSpec JSON or a named module")->required();
  cls->add_flag("--known", cls_known, "include recorded completeness facts for named modules");
  cls->callback([&] {
    if (cls_known) {
      out = tdlf::to_json(tdlf::known_classification(cls_m));
      return;
    }
    out = tdlf::to_json(tdlf::classify(tdlf::parse_submodule(cls_m, field_or_mixed(g))));
  });

  // polar, pseudo-polar, dual-norm
  std::string polar_m, ppolar_m, dual_m;
  auto* polar = app.add_subcommand("polar", "polar of a submodule");
  polar->add_option("--module", polar_m)->required();
  polar->callback([&] { out = tdlf::to_json(tdlf::polar(tdlf::parse_submodule(polar_m, field_or_mixed(g)))); });
  auto* ppolar = app.add_subcommand("pseudo-polar", "pseudo-polar of a submodule");
  ppolar->add_option("--module", ppolar_m)->required();
  ppolar->callback(
      [&] { out = tdlf::to_json(tdlf::pseudo_polar(tdlf::parse_submodule(ppolar_m, field_or_mixed(g)))); });
  auto* dual = app.add_subcommand("dual-norm", "seminorm on the dual induced by a bounded / compactoid module");
  dual->add_option("--module", dual_m)->required();
  dual->callback(
      [&] { out = tdlf::to_json(tdlf::dual_seminorm(tdlf::parse_submodule(dual_m, field_or_mixed(g)))); });

  // pair
  auto* pair = app.add_subcommand("pair", "residue pairing: coefficient of t^0 in xy");
  std::string pair_x, pair_y;
  std::optional<std::int64_t> pair_target;
  pair->add_option("--x", pair_x)->required();
  pair->add_option("--y", pair_y)->required();
  pair->add_option("--target", pair_target, "p-adic target precision for mixed series");
  pair->callback([&] {
    const tdlf::PAdic v = tdlf::pairing(series(g, pair_x), series(g, pair_y), pair_target);
    out = Json::object();
    out["value"] = tdlf::to_json(v);
    out["abs_exponent"] = tdlf::to_json(tdlf::abs_exponent(v));
  });

  // product-bound
  auto* prod = app.add_subcommand("product-bound", "smallest spec containing the products of two modules");
  std::string prod_a, prod_b;
  prod->add_option("--a", prod_a)->required();
  prod->add_option("--b", prod_b)->required();
  prod->callback([&] {
    out = tdlf::to_json(tdlf::product_bound(tdlf::parse_submodule(prod_a, field_or_mixed(g)),
                                            tdlf::parse_submodule(prod_b, field_or_mixed(g))));
  });

  // valuation
  auto* val = app.add_subcommand("valuation", "field valuation data of a series");
  std::string val_x;
  val->add_option("--series", val_x)->required();
  val->callback([&] {
    const tdlf::Series x = series(g, val_x);
    out = Json::object();
    if (const auto* m = std::get_if<tdlf::MixedSeries>(&x)) {
      const tdlf::ValuationResult r = tdlf::vF_exponent(*m);
      out["vF"] = tdlf::to_json(r.valuation);
      out["exact"] = r.exact;
      out["rank2"] = pair_of(tdlf::rank2_mixed(*m), "valuation", "index");
    } else {
      out["rank2"] = pair_of(tdlf::rank2_equal(std::get<tdlf::EqualCharSeries>(x)), "index", "valuation");
    }
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force cross-checks");
  orc->require_subcommand(1);
  auto* orc_norm = orc->add_subcommand("seminorm", "enumerate n_i - v(x_i) over --window");
  std::string on_x, on_n;
  orc_norm->add_option("--series", on_x)->required();
  orc_norm->add_option("--seminorm", on_n)->required();
  orc_norm->callback([&] {
    const tdlf::Series x = series(g, on_x);
    const tdlf::SeminormSpec n = tdlf::parse_seminorm(on_n, tdlf::kind_of(x));
    out = Json::object();
    out["brute"] = tdlf::to_json(tdlf::oracle::brute_seminorm(n, x, g.window[0], g.window[1]));
    out["closed_form"] = tdlf::to_json(tdlf::eval_exponent(n, x));
  });
  auto* orc_mp = orc->add_subcommand("minplus", "min-plus convolution at k by enumeration over --window");
  std::string om_a, om_b;
  std::int64_t om_k = 0;
  orc_mp->add_option("--a", om_a, "SeqSpec JSON")->required();
  orc_mp->add_option("--b", om_b, "SeqSpec JSON")->required();
  orc_mp->add_option("--k", om_k)->required();
  orc_mp->callback([&] {
    const tdlf::SeqSpec a = tdlf::parse_seqspec(om_a), b = tdlf::parse_seqspec(om_b);
    out = Json::object();
    out["brute"] = tdlf::to_json(tdlf::oracle::brute_minplus(a, b, om_k, g.window[0], g.window[1]));
    out["closed_form"] = tdlf::to_json(tdlf::value_at(tdlf::minplus_convolve(a, b), om_k));
  });
  auto* orc_sample = orc->add_subcommand("sample", "seeded sample of elements of a submodule");
  std::string os_m;
  std::size_t os_count = 16;
  orc_sample->add_option("--module", os_m)->required();
  orc_sample->add_option("--count", os_count)->capture_default_str();
  orc_sample->callback([&] {
    const tdlf::SubmoduleSpec m = tdlf::parse_submodule(os_m, field_or_mixed(g));
    tdlf::oracle::SampleConfig cfg{g.seed, os_count, g.window[0], g.window[1], g.precision, g.prime};
    out = Json::array();
    for (const auto& s : tdlf::oracle::sample_elements(m, cfg)) out.push_back(tdlf::to_json(s));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  } catch (const tdlf::ParseError& e) {
    return report("parse", e, kParse);
  } catch (const tdlf::PrecisionExhausted& e) {
    return report("precision", e, kPrecision);
  } catch (const tdlf::NonAdmissibleSequence& e) {
    return report("admissibility", e, kAdmissibility);
  } catch (const tdlf::UnknownName& e) {
    return report("unknown_name", e, kUnknownName);
  } catch (const std::exception& e) {
    return report("other", e, kOther);
  }
  std::cout << out.dump() << '\n';
  return kOk;
}
