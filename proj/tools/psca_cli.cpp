// Command-line front end: simulation, KKR, analysis, counting, theta
// reconstruction, Bethe data, and the verification suite.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "psca/angle.hpp"
#include "psca/automaton.hpp"
#include "psca/bethe.hpp"
#include "psca/exact.hpp"
#include "psca/fixtures.hpp"
#include "psca/rigged.hpp"
#include "psca/tropical.hpp"
#include "psca/verify.hpp"

using namespace psca;
using nlohmann::json;

namespace {

// "T[r,l]" with l a positive integer or "inf"
std::pair<int, int> parse_op(const std::string& op) {
  int r = 0, l = 0;
  char tail[8] = {0};
  if (std::sscanf(op.c_str(), "T[%d,%d]", &r, &l) == 2 && r >= 1 && l >= 1)
    return {r, l};
  if (std::sscanf(op.c_str(), "T[%d,%3s]", &r, tail) == 2 &&
      std::string(tail) == "inf" && r >= 1)
    return {r, 0};
  throw CLI::ValidationError("--op", "expected T[r,l] with l >= 1 or inf");
}

SolitonContent mu_from_arg(const std::string& text, int n, long L) {
  return content_from_json(json::parse(text), n, L);
}

json mu_json(const SolitonContent& mu) {
  json d = json::array();
  for (int a = 1; a <= mu.n; ++a) {
    json col = json::array();
    for (int i = 1; i <= mu.g(a); ++i)
      col.push_back({mu.len(a, i), mu.mult(a, i)});
    d.push_back(col);
  }
  return d;
}

json mat_json(const IMat& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    out.push_back(r);
  }
  return out;
}

json vec_json(const IVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

EvolveResult evolve_op(int r, int l, const Path& p, int n) {
  return l == 0 ? evolve_inf(r, p, n) : evolve(r, l, p, n);
}

int run_evolve(int n, const std::string& word, const std::string& op,
               long steps) {
  auto [r, l] = parse_op(op);
  Path p = parse_path(word);
  std::cout << path_text(p) << "\n";
  for (long t = 1; t <= steps; ++t) {
    auto ev = evolve_op(r, l, p, n);
    if (ev.status == EvolveStatus::NonUnique) {
      std::cerr << "NonUniqueEvolution: " << op << " has " << ev.carriers.size()
                << " inequivalent fixed-point carriers on " << path_text(p)
                << "\n";
      return 2;
    }
    if (ev.status == EvolveStatus::NoCarrier) {
      std::cerr << "NoCarrier: " << op << " has no fixed-point carrier on "
                << path_text(p) << "\n";
      return 2;
    }
    p = ev.out;
    std::cout << path_text(p) << "\n";
  }
  return 0;
}

int run_analyze(int n, const std::string& word) {
  Path p = parse_path(word);
  json rep;
  rep["n"] = n;
  rep["L"] = (long)p.size();
  rep["path"] = path_text(p);
  auto mu = soliton_content(p, n);
  if (!mu) {
    std::cerr << "path is not evolvable at every (a,l)\n";
    return 2;
  }
  rep["mu"] = mu_json(*mu);
  if (auto es = energy_spectrum(p, n)) rep["energies"] = es->values;
  json vac = json::array();
  for (int a = 1; a <= mu->n; ++a) {
    json row = json::array();
    for (int i = 1; i <= mu->g(a); ++i) row.push_back(vacancy(*mu, a, i));
    vac.push_back(row);
  }
  rep["vacancy"] = vac;
  if (g_total(*mu) > 0) {
    auto x = direct_scattering(p, n);
    auto gamma = gamma_of(x);
    rep["gamma"] = gamma;
    rep["angle_omega"] = x.omega();
    rep["angle_lambda"] = x.lambda();
    auto F = f_matrix(*mu);
    auto Fg = f_gamma(*mu, gamma);
    rep["F"] = mat_json(F);
    rep["det_F"] = det_bareiss(F).get_str();
    rep["F_gamma"] = mat_json(Fg);
    rep["det_F_gamma"] = det_bareiss(Fg).get_str();
    rep["omega_count"] = omega_count(*mu).get_str();
    IVec om;
    for (long v : x.omega()) om.push_back(v);
    rep["torus_coordinate"] = vec_json(reduce_mod_lattice(Fg, om));
    json periods = json::array();
    for (int r = 1; r <= n; ++r) {
      int top = mu->largest_part(r);
      for (int l = 1; l <= top; ++l)
        if (admissible(*mu, r, l))
          periods.push_back({{"r", r},
                             {"l", l},
                             {"N", dynamical_period(*mu, gamma, r, l).get_str()}});
    }
    rep["periods"] = periods;
  }
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int run_verify(std::vector<std::string> cases, int n, long L) {
  int failed = 0;
  if (n > 0 && L > 0) {
    auto classes = classify_words(n, (int)L);
    bool ok = true;
    for (const auto& mu : enumerate_configurations(n, L, 1)) {
      auto it = classes.find(mu);
      Int got = it == classes.end() ? Int(0) : Int((long)it->second.size());
      if (got != omega_count(mu)) {
        ok = false;
        std::printf("[FAIL] level-set-count n=%d L=%ld: |P| = %s, count = %s\n",
                    n, L, got.get_str().c_str(),
                    omega_count(mu).get_str().c_str());
      }
    }
    if (ok) std::printf("[PASS] level-set-count n=%d L=%ld\n", n, L);
    failed += ok ? 0 : 1;
  }
  if (cases.empty() && !(n > 0 && L > 0)) cases = verify_case_names();
  for (const auto& name : cases) {
    auto res = run_case(name);
    if (res.pass)
      std::printf("[PASS] %s\n", res.name.c_str());
    else
      std::printf("[FAIL] %s: %s\n", res.name.c_str(), res.detail.c_str());
    failed += res.pass ? 0 : 1;
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic A^(1)_n soliton cellular automaton toolkit"};
  app.require_subcommand(1);

  int n = 1;
  long L = 0, steps = 1;
  std::string word, op = "T[1,1]", rc_text, mu_text;
  int r = 1, l = 1, avg_l = 1;
  std::vector<std::string> shifts, case_names;
  long seed = 0;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", n, "rank"); };

  auto* c_evolve = app.add_subcommand("evolve", "apply T^(r)_l repeatedly");
  add_n(c_evolve);
  c_evolve->add_option("--path", word)->required();
  c_evolve->add_option("--op", op, "T[r,l], l integer or inf");
  c_evolve->add_option("--steps", steps);

  auto* c_kkr = app.add_subcommand("kkr", "rigged configuration of a highest path");
  add_n(c_kkr);
  c_kkr->add_option("--path", word)->required();

  auto* c_kkri = app.add_subcommand("kkr-inv", "path of a rigged configuration");
  add_n(c_kkri);
  c_kkri->add_option("--rc", rc_text, "rigged configuration JSON")->required();

  auto* c_analyze = app.add_subcommand("analyze", "full invariant report (JSON)");
  add_n(c_analyze);
  c_analyze->add_option("--path", word)->required();

  auto* c_period = app.add_subcommand("period", "dynamical period of T^(r)_l");
  add_n(c_period);
  c_period->add_option("--path", word)->required();
  c_period->add_option("--r", r);
  c_period->add_option("--l", l, "0 means infinity");

  auto* c_count = app.add_subcommand("count", "level set cardinality Omega(mu)");
  add_n(c_count);
  c_count->add_option("--path", word);
  c_count->add_option("--mu", mu_text, "content diagrams JSON");
  c_count->add_option("--L", L);

  auto* c_dec = app.add_subcommand("decompose", "level set strata by symmetry order");
  add_n(c_dec);
  c_dec->add_option("--path", word);
  c_dec->add_option("--mu", mu_text);
  c_dec->add_option("--L", L);

  auto* c_theta = app.add_subcommand("theta-path", "reconstruct a path from its angle variable");
  add_n(c_theta);
  c_theta->add_option("--path", word)->required();
  c_theta->add_option("--shift", shifts, "r,l,t applied to the angle variable")
      ->take_all();

  auto* c_avg = app.add_subcommand("averages", "time averages of carrier occupancies");
  add_n(c_avg);
  c_avg->add_option("--path", word)->required();
  c_avg->add_option("--l", avg_l, "carrier level, 0 means infinity");

  auto* c_bethe = app.add_subcommand("bethe", "string centers, phases and N'");
  add_n(c_bethe);
  c_bethe->add_option("--path", word)->required();

  auto* c_verify = app.add_subcommand("verify", "run verification cases");
  c_verify->add_option("--case", case_names, "named cases")->take_all();
  c_verify->add_option("--n", n);
  c_verify->add_option("--L", L);
  c_verify->add_option("--seed", seed, "accepted for reproducibility; results are deterministic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_evolve->parsed()) return run_evolve(n, word, op, steps);
    if (c_kkr->parsed()) {
      std::cout << kkr_forward(parse_path(word), n).json() << "\n";
      return 0;
    }
    if (c_kkri->parsed()) {
      std::cout << path_text(kkr_backward(RiggedConfig::from_json(rc_text)))
                << "\n";
      return 0;
    }
    if (c_analyze->parsed()) return run_analyze(n, word);
    if (c_period->parsed()) {
      Path p = parse_path(word);
      auto mu = soliton_content(p, n);
      if (!mu) throw std::runtime_error("path is not evolvable");
      auto gamma = gamma_of(direct_scattering(p, n));
      std::cout << dynamical_period(*mu, gamma, r, l).get_str() << "\n";
      return 0;
    }
    if (c_count->parsed() || c_dec->parsed()) {
      SolitonContent mu;
      if (!mu_text.empty()) {
        if (L <= 0) throw std::runtime_error("--mu requires --L");
        mu = mu_from_arg(mu_text, n, L);
      } else if (!word.empty()) {
        auto m = soliton_content(parse_path(word), n);
        if (!m) throw std::runtime_error("path is not evolvable");
        mu = *m;
      } else {
        throw std::runtime_error("need --path or --mu");
      }
      if (c_count->parsed()) {
        std::cout << omega_count(mu).get_str() << "\n";
      } else {
        json out = json::array();
        for (const auto& t : decompose_level_set(mu))
          out.push_back({{"gamma", t.gamma},
                         {"torus", t.torus.get_str()},
                         {"orbits", t.orbits.get_str()}});
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }
    if (c_theta->parsed()) {
      auto x = direct_scattering(parse_path(word), n);
      for (const auto& s : shifts) {
        int sr = 0, sl = 0;
        long st = 0;
        if (std::sscanf(s.c_str(), "%d,%d,%ld", &sr, &sl, &st) != 3)
          throw std::runtime_error("--shift expects r,l,t");
        x.shift_time(sr, sl, st);
      }
      std::cout << path_text(inverse_scattering(x)) << "\n";
      return 0;
    }
    if (c_avg->parsed()) {
      Path p = parse_path(word);
      auto mu = soliton_content(p, n);
      if (!mu) throw std::runtime_error("path is not evolvable");
      json out = json::array();
      for (int a = 2; a <= n + 1; ++a)
        out.push_back(time_average(*mu, avg_l, a).get_str());
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (c_bethe->parsed()) {
      Path p = parse_path(word);
      auto mu = soliton_content(p, n);
      if (!mu) throw std::runtime_error("path is not evolvable");
      auto bd = make_bethe(*mu);
      auto x = direct_scattering(p, n);
      auto u = string_centers(bd, x);
      json rep;
      json centers = json::array();
      for (const auto& v : u) centers.push_back(v.get_str());
      rep["string_centers"] = centers;
      json table = json::array();
      for (int rr = 1; rr <= n; ++rr)
        for (int ll = 1; ll <= mu->largest_part(rr); ++ll)
          table.push_back(
              {{"r", rr},
               {"l", ll},
               {"phase", eigenvalue_phase(bd, u, rr, ll).get_str()},
               {"N_prime", n_prime(bd, rr, ll).get_str()}});
      rep["evolutions"] = table;
      std::cout << rep.dump(2) << "\n";
      return 0;
    }
    if (c_verify->parsed())
      return run_verify(case_names, c_verify->count("--n") ? n : 0, L);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
