#include "gauss/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "gauss/criterion.hpp"
#include "gauss/error.hpp"
#include "gauss/kernels.hpp"
#include "gauss/modular.hpp"
#include "gauss/synthesis.hpp"
#include "gauss/tower.hpp"
#include "gauss/witness.hpp"

namespace gauss::cli {

namespace {

using json = nlohmann::ordered_json;
using num::Precision;

enum class OutFormat { Text, Latex, Sexpr, Json };
enum class Verify { None, Numeric, Exact };

struct CliConfig {
  std::uint64_t n = 0;
  unsigned precision = 128;
  OutFormat format = OutFormat::Text;
  Verify verify = Verify::None;
  bool allow_65537 = false;
  int jobs = 0;
  int level = 0;
  bool square = false;
  bool show_poly = false;
  std::uint64_t max_nodes = 2'000'000;
};

constexpr std::uint64_t kExactLimit = 257;

// A usage problem detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string factorization_text(const modular::Factorization& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& [q, k] : f) {
    if (!s.empty()) s += " * ";
    s += std::to_string(q);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

std::string obstruction_kind(criterion::ObstructionKind k) {
  return k == criterion::ObstructionKind::NonFermatPrime ? "non_fermat_prime" : "repeated_prime";
}

int cmd_constructible(const CliConfig& c, std::ostream& out) {
  const auto v = criterion::is_constructible(c.n);
  if (c.format == OutFormat::Json) {
    json j;
    j["n"] = v.n;
    j["constructible"] = v.constructible;
    j["two_power_part"] = std::uint64_t{1} << v.two_power_part;
    j["fermat_primes"] = v.fermat_prime_factors;
    j["factorization"] = json::array();
    for (const auto& [q, k] : v.factorization) j["factorization"].push_back({q, k});
    if (v.obstruction) {
      j["obstruction"] = {{"prime", v.obstruction->prime},
                          {"multiplicity", v.obstruction->multiplicity},
                          {"kind", obstruction_kind(v.obstruction->kind)}};
    } else {
      j["obstruction"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << v.n << "\n";
    out << "constructible: " << (v.constructible ? "yes" : "no") << "\n";
    out << "factorization: " << factorization_text(v.factorization) << "\n";
    out << "two-power part: 2^" << v.two_power_part << "\n";
    out << "fermat primes:";
    for (auto q : v.fermat_prime_factors) out << " " << q;
    out << "\n";
    if (v.obstruction) out << "obstruction: " << criterion::describe(*v.obstruction) << "\n";
  }
  return v.constructible ? 0 : 1;
}

radical::Format to_radical_format(OutFormat f) {
  switch (f) {
    case OutFormat::Latex: return radical::Format::Latex;
    case OutFormat::Sexpr: return radical::Format::Sexpr;
    default: return radical::Format::Text;
  }
}

void check_size(const radical::Expr& e, const CliConfig& c) {
  if (c.format == OutFormat::Json) return;
  const auto size = radical::tree_size(e, c.max_nodes + 1);
  if (size > c.max_nodes) {
    throw UsageError("expanded expression exceeds --max-nodes=" + std::to_string(c.max_nodes) +
                     " (" + std::to_string(radical::dag_size(e)) +
                     " shared nodes); use --format json for a summary or raise the limit");
  }
}

void emit_expression(const radical::Expr& e, const CliConfig& c, json& j, std::ostream& out) {
  if (c.format == OutFormat::Json) {
    const auto size = radical::tree_size(e, c.max_nodes + 1);
    j["sqrt_depth"] = radical::sqrt_depth(e);
    j["dag_size"] = radical::dag_size(e);
    if (size <= c.max_nodes) {
      j["tree_size"] = size;
      j["sexpr"] = radical::serialize(e, radical::Format::Sexpr);
      j["text"] = radical::serialize(e, radical::Format::Text);
    } else {
      j["tree_size"] = nullptr;
    }
  } else {
    out << radical::serialize(e, to_radical_format(c.format)) << "\n";
  }
}

void emit_numeric(const radical::Expr& e, std::uint64_t n, const CliConfig& c, json& j,
                  std::ostream& out) {
  const Precision prec{c.precision};
  const auto value = radical::eval_interval(e, prec);
  const auto target = num::cos_two_pi(1, n, prec);
  const bool ok = value.intersects(target);
  const unsigned digits = std::max(16u, c.precision * 3 / 10);
  if (c.format == OutFormat::Json) {
    j["numeric"] = {{"precision", c.precision},
                    {"value", num::format_interval(value, digits)},
                    {"target", num::format_interval(target, digits)},
                    {"agrees", ok}};
  } else {
    out << "value:  " << num::format_interval(value, digits) << "\n";
    out << "target: " << num::format_interval(target, digits) << "\n";
    out << "numeric check: " << (ok ? "pass" : "FAIL") << "\n";
  }
  if (!ok) throw Error(ErrorKind::VerificationFailed, "interval check failed");
}

periods::SynthesisOptions synthesis_options(const CliConfig& c) {
  periods::SynthesisOptions o;
  o.prec = Precision{c.precision};
  o.allow_65537 = c.allow_65537;
  return o;
}

int cmd_radical(const CliConfig& c, std::ostream& out) {
  const std::uint64_t p = c.n;
  cyclo::fermat_exponent(p);
  if (c.verify == Verify::Exact && p > kExactLimit) {
    throw UsageError("--verify exact is only available for p <= 257");
  }
  if (p == 65537 && !c.allow_65537) {
    throw UsageError("p = 65537 needs about 1.5 GB and half a minute; pass --allow-65537 to proceed");
  }
  const auto synth = periods::synthesize_periods(p, synthesis_options(c));
  const auto& e = synth.cos_expr;
  check_size(e, c);
  json j;
  j["p"] = p;
  emit_expression(e, c, j, out);
  if (c.verify != Verify::None) emit_numeric(e, p, c, j, out);
  if (c.verify == Verify::Exact) {
    const auto emb = tower::embed_synthesis(synth);
    const std::size_t products = synth.steps.size();
    if (c.format == OutFormat::Json) {
      j["exact"] = {{"sibling_products", products},
                    {"tower_depth", emb.context->depth()},
                    {"quadratic_checks", emb.quadratic_checks},
                    {"conjugation_checks", emb.conjugation_checks}};
    } else {
      out << "sibling products matching cyclo_mul: " << products << "\n";
      out << "tower depth: " << emb.context->depth() << "\n";
      out << "quadratic checks passed: " << emb.quadratic_checks << "\n";
      out << "conjugation checks passed: " << emb.conjugation_checks << "\n";
    }
  }
  if (c.format == OutFormat::Json) out << j.dump(2) << "\n";
  return 0;
}

int cmd_cos(const CliConfig& c, std::ostream& out) {
  const auto e = periods::synthesize_cos(c.n, synthesis_options(c));
  check_size(e, c);
  json j;
  j["n"] = c.n;
  emit_expression(e, c, j, out);
  if (c.verify != Verify::None) emit_numeric(e, c.n, c, j, out);
  if (c.format == OutFormat::Json) out << j.dump(2) << "\n";
  return 0;
}

int cmd_periods(const CliConfig& c, std::ostream& out) {
  const std::uint64_t p = c.n;
  const unsigned m = cyclo::fermat_exponent(p);
  if (p == 65537 && !c.allow_65537) {
    throw UsageError("p = 65537 needs about 1.5 GB and half a minute; pass --allow-65537 to proceed");
  }
  if (c.level < 0 || static_cast<unsigned>(c.level) + 2 > m) {
    throw Error(ErrorKind::BadLevel, "level must lie in [0, " + std::to_string(int(m) - 2) +
                                         "] for p = " + std::to_string(p));
  }
  const auto tree = periods::build_period_tree(p, modular::primitive_root(p), Precision{c.precision});
  const unsigned digits = std::max(16u, c.precision * 3 / 10);
  json j;
  j["p"] = p;
  j["g"] = tree.g();
  j["level"] = c.level;
  j["periods"] = json::array();
  for (const auto& w : tree.level(static_cast<std::size_t>(c.level) + 1)) {
    const auto& node = tree.node(w);
    if (c.format == OutFormat::Json) {
      j["periods"].push_back({{"label", w.name()},
                              {"terms", node.terms},
                              {"value", num::format_interval(node.value, digits)}});
    } else {
      out << w.name() << ": terms";
      for (auto t : node.terms) out << " " << t;
      out << "\n  value " << num::format_interval(node.value, digits) << "\n";
    }
  }
  if (c.format == OutFormat::Json) out << j.dump(2) << "\n";
  return 0;
}

int cmd_eisenstein(const CliConfig& c, std::ostream& out) {
  const std::uint64_t p = c.n;
  const auto f = witness::shift_by_one(witness::cyclotomic_poly(p, c.square));
  const bool ok = witness::eisenstein_check(f, p);
  const std::string name =
      "Phi_" + (c.square ? std::to_string(p) + "^2" : std::to_string(p)) + "(x+1)";
  if (c.format == OutFormat::Json) {
    json j;
    j["p"] = p;
    j["square"] = c.square;
    j["degree"] = f.degree();
    j["constant_term"] = f.coeffs().front().get_str();
    j["eisenstein"] = ok;
    if (c.show_poly) j["polynomial"] = f.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << name << ": degree " << f.degree() << ", constant term " << f.coeffs().front().get_str()
        << "\n";
    if (c.show_poly) out << "  = " << f.to_string() << "\n";
    out << "Eisenstein at " << p << ": " << (ok ? "pass" : "fail") << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructible regular polygons: criterion, Gaussian periods, radicals"};
  app.name(args.empty() ? "gauss" : args.front());
  app.require_subcommand(1);
  CliConfig c;

  const std::map<std::string, OutFormat> formats{{"text", OutFormat::Text},
                                                 {"latex", OutFormat::Latex},
                                                 {"sexpr", OutFormat::Sexpr},
                                                 {"json", OutFormat::Json}};
  const std::map<std::string, Verify> verifies{
      {"none", Verify::None}, {"numeric", Verify::Numeric}, {"exact", Verify::Exact}};

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "text|latex|sexpr|json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--precision", c.precision, "interval precision in bits")
        ->check(CLI::Range(16u, 1u << 15));
    sub->add_option("--jobs", c.jobs, "threads for the parallel kernels (0 = default)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* constructible = app.add_subcommand("constructible", "decide whether the n-gon is constructible");
  constructible->add_option("n", c.n)->required()->check(CLI::PositiveNumber);
  add_common(constructible);

  auto* radical_cmd = app.add_subcommand("radical", "nested radical for cos(2pi/p), p a Fermat prime");
  radical_cmd->add_option("p", c.n)->required();
  add_common(radical_cmd);
  radical_cmd->add_option("--verify", c.verify, "none|numeric|exact")
      ->transform(CLI::CheckedTransformer(verifies, CLI::ignore_case));
  radical_cmd->add_flag("--allow-65537", c.allow_65537, "permit the multi-minute p = 65537 run");
  radical_cmd->add_option("--max-nodes", c.max_nodes, "largest expanded tree to print");

  auto* cos_cmd = app.add_subcommand("cos", "nested radical for cos(2pi/n), n constructible");
  cos_cmd->add_option("n", c.n)->required()->check(CLI::PositiveNumber);
  add_common(cos_cmd);
  cos_cmd->add_option("--verify", c.verify, "none|numeric")
      ->transform(CLI::CheckedTransformer(verifies, CLI::ignore_case));
  cos_cmd->add_option("--max-nodes", c.max_nodes, "largest expanded tree to print");

  auto* root_cmd = app.add_subcommand("primitive-root", "smallest primitive root mod p");
  root_cmd->add_option("p", c.n)->required();

  auto* periods_cmd = app.add_subcommand("periods", "Gaussian periods A_w with |w| = level + 1");
  periods_cmd->add_option("p", c.n)->required();
  periods_cmd->add_option("--level", c.level)->required();
  add_common(periods_cmd);
  periods_cmd->add_flag("--allow-65537", c.allow_65537);

  auto* eis_cmd = app.add_subcommand("eisenstein", "Eisenstein test on Phi_p(x+1) or Phi_{p^2}(x+1)");
  eis_cmd->add_option("p", c.n)->required();
  eis_cmd->add_flag("--square", c.square, "use Phi_{p^2}");
  eis_cmd->add_flag("--show-poly", c.show_poly, "print the shifted polynomial");
  add_common(eis_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "Euler totient");
  phi_cmd->add_option("n", c.n)->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto usage = [&](const std::string& msg) {
    const auto* sub = app.get_subcommands().front();
    err << "error: " << msg << "\n\n" << sub->help();
    return 2;
  };

  try {
    if (c.jobs > 0) kernels::set_jobs(c.jobs);
    if (*constructible) return cmd_constructible(c, out);
    if (*radical_cmd) return cmd_radical(c, out);
    if (*cos_cmd) return cmd_cos(c, out);
    if (*periods_cmd) return cmd_periods(c, out);
    if (*eis_cmd) return cmd_eisenstein(c, out);
    if (*root_cmd) {
      out << modular::primitive_root(c.n) << "\n";
      return 0;
    }
    if (*phi_cmd) {
      out << criterion::euler_phi(c.n) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
  return 2;
}

}  // namespace gauss::cli
