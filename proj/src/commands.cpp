#include "icherednik/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "icherednik/charp.hpp"
#include "icherednik/polyring.hpp"

namespace icherednik {

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  if (b.empty() && !ctable_path) throw std::invalid_argument("--b must be nonempty");
  if (maxdeg < 3) throw std::invalid_argument("--maxdeg must be >= 3");
  if (center_bound < 0) throw std::invalid_argument("--center-bound must be >= 0");
  if (verma_depth < 1) throw std::invalid_argument("--verma-depth must be >= 1");
  if (format != "json" && format != "text") throw std::invalid_argument("--format must be json or text");
  Field check(characteristic);
  (void)check;
}

std::vector<std::vector<std::string>> weights_from_json(const json& j) {
  const json& list = j.is_object() ? j.at("weights") : j;
  std::vector<std::vector<std::string>> out;
  for (const auto& w : list) {
    std::vector<std::string> row;
    for (const auto& s : w) row.push_back(s.is_string() ? s.get<std::string>() : s.dump());
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  if (j.is_string()) {
    std::stringstream ss(j.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
  }
  for (const auto& s : j) out.push_back(s.is_string() ? s.get<std::string>() : s.dump());
  return out;
}

}  // namespace

RunConfig config_from_json(const json& j, RunConfig base) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (j.contains("n")) base.n = j.at("n").get<int>();
  if (j.contains("char")) base.characteristic = j.at("char").get<std::uint32_t>();
  if (j.contains("b")) base.b = string_list(j.at("b"));
  if (j.contains("c")) base.c = string_list(j.at("c"));
  if (j.contains("ctable")) base.ctable_path = j.at("ctable").get<std::string>();
  if (j.contains("maxdeg")) base.maxdeg = j.at("maxdeg").get<int>();
  if (j.contains("center_bound")) base.center_bound = j.at("center_bound").get<int>();
  if (j.contains("verma_depth")) base.verma_depth = j.at("verma_depth").get<int>();
  if (j.contains("format")) base.format = j.at("format").get<std::string>();
  if (j.contains("out")) base.out = j.at("out").get<std::string>();
  if (j.contains("weights")) {
    const json& w = j.at("weights");
    base.weights = w.is_string() ? weights_from_json(read_json_file(w.get<std::string>())) : weights_from_json(w);
  }
  return base;
}

AlgebraSpec spec_from_config(const RunConfig& cfg) {
  if (cfg.ctable_path) return spec_from_ctable_json(read_json_file(*cfg.ctable_path));
  DeformationParams p;
  p.n = cfg.n;
  p.field = Field(cfg.characteristic);
  for (const auto& s : cfg.b) p.b.push_back(p.field.parse(s));
  return pairing_from_params(p);
}

std::vector<Weight> weights_from_config(const RunConfig& cfg, const HcAlgebra& alg) {
  const Field f = alg.field();
  std::vector<Weight> out;
  for (const auto& row : cfg.weights) {
    if (static_cast<int>(row.size()) != alg.rank()) throw std::invalid_argument("weight has the wrong length");
    Weight w;
    for (const auto& s : row) w.push_back(f.parse(s));
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

std::vector<Weight> default_weights(int n, Field f) {
  std::vector<Weight> out;
  for (int k = 0; k < 5; ++k) {
    Weight w;
    for (int i = 1; i <= n; ++i) w.push_back(f.make(k + (i - 1) * (k + 2)));
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  if (f.p == 0) {
    Weight w;
    for (int i = 1; i <= n; ++i) w.push_back(f.make(2 * i - 1, 2 * i + 1));
    out.push_back(std::move(w));
  }
  return out;
}

std::string lines(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& l : v) s += l + "\n";
  return s;
}

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].to_string();
  return s + ")";
}

int deformation_order(const AlgebraSpec& spec) {
  for (int k = static_cast<int>(spec.params.size()) - 1; k >= 0; --k)
    if (!spec.params[k].is_zero()) return k;
  return -1;
}

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

Outcome pass(std::string d = {}) { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
Outcome skip(std::string d) { return {Status::Skip, std::move(d)}; }
Outcome check(bool ok, std::string d = {}) { return {ok ? Status::Pass : Status::Fail, std::move(d)}; }

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skipped";
  }
  return "?";
}

}  // namespace

CommandResult cmd_relations(const RunConfig& cfg) {
  cfg.validate();
  const HcAlgebra alg(spec_from_config(cfg));
  CommandResult res;
  res.report = ctable_to_json(alg);
  std::vector<std::string> out;
  for (int i = 1; i <= alg.rank(); ++i)
    for (int j = 1; j <= alg.rank(); ++j)
      out.push_back("[Y(" + std::to_string(i) + "),X(" + std::to_string(j) + ")] = " + alg.to_string(alg.spec().c(i, j)));
  res.text = lines(out);
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  const HcAlgebra alg(spec_from_config(cfg));
  const int n = alg.rank();
  const Field f = alg.field();
  const int m = deformation_order(alg.spec());
  std::vector<Weight> sample = weights_from_config(cfg, alg);
  if (sample.empty()) sample = default_weights(n, f);

  struct Entry {
    std::string name;
    Outcome outcome;
    double ms = 0;
  };
  std::vector<Entry> entries;
  auto run = [&](const std::string& name, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = fail(std::string("error: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    entries.push_back({name, o, ms});
    return o.status != Status::Fail;
  };

  const bool pbw_ok = run("pbw.consistency", [&] {
    const PbwReport r = check_pbw_consistency(alg, cfg.maxdeg);
    return check(r.consistent(), std::to_string(r.overlaps_checked) + " overlaps, " + std::to_string(r.words_checked) +
                                     " words, " + std::to_string(r.overlaps.size() + r.associativity.size()) +
                                     " failures");
  });
  run("deform.equivariance", [&] {
    const auto fails = equivariance_failures(alg);
    return check(fails.empty(), std::to_string(fails.size()) + " failing (k,l,i,j)");
  });
  run("deform.anti_involution", [&] { return check(ctable_anti_involution_compatible(alg)); });
  run("deform.sum_yx_invariant", [&] {
    NCElement s = alg.zero();
    for (int i = 1; i <= n; ++i) s += alg.multiply(alg.y(i), alg.x(i));
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        if (!alg.commutator(alg.e(k, l), s).is_zero()) return fail("fails for E(" + std::to_string(k) + "," + std::to_string(l) + ")");
    return pass();
  });

  run("polyring.hessian", [&] {
    for (int k = 1; k <= n; ++k)
      if (!hessian_identity_check(n, k, f).all_vanish()) return fail("fails for k = " + std::to_string(k));
    return pass("k = 1.." + std::to_string(n));
  });
  run("polyring.gradient", [&] {
    const auto q = char_poly_coeffs(n, f);
    for (int k = 0; k < n; ++k) {
      const PolyMatrix b = gradient_matrix(n, k, f);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Polynomial d = q[k + 1].derivative(matrix_var(n, i, j));
          if (k % 2) d = -d;
          if (!(d == b.at(j, i))) return fail("dQ/de != (-1)^k B_k^T at k = " + std::to_string(k));
        }
    }
    return pass("dQ_{k+1}/de(i,j) = (-1)^k B_k(j,i)");
  });
  run("polyring.gf_lambda_identity", [&] {
    if (m < 1) return skip("needs deformation degree >= 1");
    return check(lambda_identity_check(n, m, f), "m = " + std::to_string(m));
  });

  run("center.rais", [&] {
    if (n > 3) return skip("n > 3");
    if (f.p != 0 && f.p <= static_cast<std::uint32_t>(n + 1)) return skip("symmetrization of f_k needs p > n + 1");
    const RaisReport r = rais_elements_check(n, n - 1, f);
    std::string d = "symbol of sym(f_k) = (-1)^k symbol of t_{k+1}; exact equality ";
    d += r.exact() ? "holds for all k" : "only up to lower t_j for k >= 1";
    return check(r.up_to_lower(), d);
  });

  std::optional<CentralSet> cs;
  const bool center_ok = run("center.generators", [&] {
    if (!pbw_ok) return skip("PBW consistency failed");
    cs = central_generators(alg, cfg.center_bound);
    std::string d = "degree bounds";
    for (int db : cs->degree_bounds) d += " " + std::to_string(db);
    return pass(d);
  });
  const bool have_center = center_ok && cs.has_value();
  auto center_check = [&](const std::string& name, const std::function<Outcome()>& fn) {
    run(name, [&] { return have_center ? fn() : skip("no central set"); });
  };
  center_check("center.commuting", [&] {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!alg.commutator(cs->eta[i], cs->eta[j]).is_zero()) return fail("eta_i, eta_j do not commute");
    return pass();
  });
  center_check("center.filtration", [&] {
    for (int i = 1; i <= n; ++i)
      if (filtration_degree(cs->eta[i - 1] - t_element(i, alg), alg).value_or(0) != 0)
        return fail("eta_" + std::to_string(i) + " - t_" + std::to_string(i) + " leaves U(g)");
    return pass();
  });
  center_check("center.anti_involution", [&] {
    for (int i = 0; i < n; ++i)
      if (!(anti_involution(cs->eta[i], alg) == cs->eta[i])) return fail("j(eta_" + std::to_string(i + 1) + ") != eta");
    return pass();
  });
  center_check("center.uniqueness", [&] {
    for (int i = 1; i <= n; ++i)
      if (!uniqueness_relation_check(i, alg, *cs)) return fail("fails for i = " + std::to_string(i));
    return pass();
  });
  center_check("center.top_symbol", [&] {
    if (m < 1) return skip("needs deformation parameters with m >= 1");
    for (int i = 1; i <= n; ++i)
      if (!top_symbol_crosscheck(i, alg, *cs).matches) return fail("mismatch at i = " + std::to_string(i));
    return pass("top(c_i) = (-1)^i b_m top(sym eta_m^{n-i})");
  });
  center_check("rep.characters", [&] {
    for (const auto& w : sample) {
      const CentralCharacter ch = central_character(w, alg, *cs, cfg.verma_depth);
      if (!ch.consistent()) return fail("Verma scalar != -hc(c_i) at " + weight_string(w));
    }
    return pass(std::to_string(sample.size()) + " weights, chi_i = -hc(c_i)");
  });
  center_check("rep.finiteness", [&] {
    const FinitenessReport r = finiteness_probe(alg, *cs, sample);
    if (r.skipped) return skip("needs a deformation of degree >= 1");
    return check(r.passed(), "max fiber " + std::to_string(r.max_fiber) + ", bound " + std::to_string(r.bezout_bound));
  });

  run("charp.p_center", [&] {
    if (f.p == 0) return skip("characteristic 0");
    try {
      const PCenterReport r = p_center_check(alg);
      return check(r.passed(), std::to_string(r.entries.size()) + " elements");
    } catch (const PreconditionError& e) {
      return skip(e.what());
    }
  });
  run("charp.frobenius", [&] {
    if (f.p == 0) return skip("characteristic 0");
    std::vector<NCElement> samples;
    for (int l = 0; l < alg.alphabet().size(); ++l) samples.push_back(alg.generator(static_cast<Letter>(l)));
    return check(frobenius_identity_check(alg.y(1), samples, alg.engine()), "ad(Y(1))^p = ad(Y(1)^p)");
  });

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
  CommandResult res;
  json checks = json::array();
  std::vector<std::string> out;
  bool all = true;
  for (const auto& e : entries) {
    all = all && e.outcome.status != Status::Fail;
    checks.push_back({{"name", e.name}, {"status", status_name(e.outcome.status)}, {"detail", e.outcome.detail},
                      {"ms", e.ms}});
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << status_name(e.outcome.status) << "  " << e.name << "  (" << e.ms << " ms)";
    if (!e.outcome.detail.empty()) line << "  " << e.outcome.detail;
    out.push_back(line.str());
  }
  res.report = {{"n", n}, {"char", f.p}, {"b", scalars_to_json(alg.spec().params)}, {"passed", all}, {"checks", checks}};
  out.push_back(all ? "all checks passed" : "some checks FAILED");
  res.text = lines(out);
  res.exit_code = all ? 0 : 1;
  return res;
}

CommandResult cmd_center(const RunConfig& cfg) {
  cfg.validate();
  const HcAlgebra alg(spec_from_config(cfg));
  const CentralSet cs = central_generators(alg, cfg.center_bound);
  CommandResult res;
  res.report = central_set_to_json(cs, alg);
  std::vector<std::string> out;
  for (int i = 1; i <= cs.n; ++i) out.push_back("eta_" + std::to_string(i) + " = " + alg.to_string(cs.eta[i - 1]));
  for (int i = 1; i <= cs.n; ++i) out.push_back("c_" + std::to_string(i) + " = " + alg.to_string(cs.c[i - 1]));
  res.text = lines(out);
  return res;
}

CommandResult cmd_blocks(const RunConfig& cfg) {
  cfg.validate();
  const HcAlgebra alg(spec_from_config(cfg));
  const std::vector<Weight> sample = weights_from_config(cfg, alg);
  if (sample.empty()) throw std::invalid_argument("blocks needs a weight sample (--weights)");
  const CentralSet cs = central_generators(alg, cfg.center_bound);
  const auto blocks = block_partition(sample, alg, cs);
  CommandResult res;
  res.report = {{"n", alg.rank()}, {"char", alg.field().p}, {"blocks", blocks_to_json(blocks)}};
  std::vector<std::string> out;
  for (const auto& b : blocks) {
    std::string l = "chi = " + weight_string(b.character) + ":";
    for (const auto& w : b.weights) l += " " + weight_string(w);
    out.push_back(l);
  }
  res.text = lines(out);
  return res;
}

CommandResult cmd_charp(const RunConfig& cfg) {
  if (cfg.characteristic == 0) throw std::invalid_argument("charp needs --char p > 0");
  const Field f(cfg.characteristic);
  std::vector<Scalar> c;
  for (const auto& s : cfg.c) c.push_back(f.parse(s));
  const Gl1Algebra alg(Gl1Spec(cfg.characteristic, c));
  const PCenterReport r = gl1_p_center_check(alg);
  const Z0RankReport z = z0_rank_report(alg);
  const long p = cfg.characteristic;

  CommandResult res;
  json central = json::object();
  std::vector<std::string> out;
  for (const auto& e : r.entries) {
    central[e.name] = e.central;
    out.push_back(std::string(e.central ? "central     " : "NOT central ") + e.name + " = " + alg.engine().to_string(e.element));
  }
  json casimir_terms = json::array();
  const NCElement casimir = gl1_casimir(alg);
  for (const auto& [w, coef] : casimir.terms()) {
    json word = json::array();
    for (Letter l : w) word.push_back(alg.engine().names()[l]);
    casimir_terms.push_back(json::array({coef.to_string(), std::move(word)}));
  }
  const bool rank_ok = z.independent_small == p * p * p && z.quotient_dimension == p * p * p;
  res.report = {{"p", p},
                {"c", scalars_to_json(alg.spec().c)},
                {"central", central},
                {"pairwise_commuting", r.pairwise_commuting},
                {"casimir", casimir_terms},
                {"rank", z.independent_small},
                {"quotient_dimension", z.quotient_dimension}};
  out.push_back(std::string("pairwise commuting: ") + (r.pairwise_commuting ? "yes" : "no"));
  out.push_back("rank " + std::to_string(z.independent_small) + " (window " + std::to_string(z.window) +
                ", quotient dimension " + std::to_string(z.quotient_dimension) + ")");
  res.text = lines(out);
  res.exit_code = r.passed() && rank_ok ? 0 : 1;
  return res;
}

CommandResult run_command(const std::string& command, const RunConfig& cfg) {
  if (command == "relations") return cmd_relations(cfg);
  if (command == "verify") return cmd_verify(cfg);
  if (command == "center") return cmd_center(cfg);
  if (command == "blocks") return cmd_blocks(cfg);
  if (command == "charp") return cmd_charp(cfg);
  throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace icherednik
