#include "psca/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "psca/angle.hpp"
#include "psca/automaton.hpp"
#include "psca/bethe.hpp"
#include "psca/exact.hpp"
#include "psca/fixtures.hpp"
#include "psca/rigged.hpp"
#include "psca/tableau.hpp"
#include "psca/tropical.hpp"

namespace psca {
namespace {

using nlohmann::json;

struct Checker {
  bool pass = true;
  std::string detail;
  void req(bool ok, const std::string& msg) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

RiggedConfig rc_from_json(const json& j, int n) {
  RiggedConfig rc;
  rc.n = n;
  rc.L = j.at("L").get<long>();
  rc.colors.resize(n);
  for (int a = 0; a < n; ++a)
    for (const auto& b : j.at("colors").at(a).at("blocks")) {
      int len = b.at("length").get<int>();
      for (const auto& r : b.at("riggings"))
        rc.colors[a].push_back({len, r.get<long>()});
    }
  rc.normalize();
  return rc;
}

Rat parse_rat(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

std::string ids(long v) { return std::to_string(v); }

// ---------------------------------------------------------------- criteria

CheckResult case_r_golden() {
  Checker c;
  auto fx = load_fixture("r-goldens.json");
  int n = fx.at("n").get<int>();
  for (const auto& cs : fx.at("cases")) {
    auto b = Tableau::parse(cs.at("tableau").get<std::string>());
    auto out = combinatorial_R(b, cs.at("letter").get<int>(), n);
    c.req(out.letter_out == cs.at("letter_out").get<int>(),
          "letter_out mismatch");
    c.req(out.carrier_out.text() == cs.at("tableau_out").get<std::string>(),
          "tableau_out mismatch");
    c.req(out.energy == cs.at("energy").get<int>(), "energy mismatch");
  }
  return {"r-golden", c.pass, c.detail};
}

CheckResult case_evolution_tables() {
  Checker c;
  auto fx = load_fixture("evolution-tables.json");
  int n = fx.at("n").get<int>();
  for (const auto& tb : fx.at("tables")) {
    int r = tb.at("r").get<int>(), l = tb.at("l").get<int>();
    const auto& rows = tb.at("rows");
    Path p = parse_path(rows.at(0).get<std::string>());
    c.req(path_text(p) == fx.at("path").get<std::string>(), "row 0 mismatch");
    for (size_t t = 1; t < rows.size(); ++t) {
      auto ev = evolve(r, l, p, n);
      c.req(ev.ok(), "evolution not defined at step " + ids(t));
      if (!ev.ok()) break;
      p = ev.out;
      c.req(path_text(p) == rows.at(t).get<std::string>(),
            "table (" + ids(r) + "," + ids(l) + ") row " + ids(t));
    }
  }
  // a rank-3 spot check and the factorized flow
  {
    auto ev = evolve(2, 2, parse_path("241123431"), 3);
    c.req(ev.ok() && path_text(ev.out) == "423141213", "rank-3 T^(2)_2");
    Path q = parse_path(fx.at("path").get<std::string>());
    auto inf = evolve_inf(1, q, n);
    c.req(inf.ok() && inf.out == t1_infinity(q, n),
          "factorized flow disagrees with carrier T^(1)_inf");
  }
  return {"evolution-tables", c.pass, c.detail};
}

CheckResult case_kkr_golden() {
  Checker c;
  auto fx = load_fixture("kkr-goldens.json");
  int n = fx.at("n").get<int>();
  for (const auto& cs : fx.at("forward")) {
    Path p = parse_path(cs.at("path").get<std::string>());
    auto want = rc_from_json(cs.at("rc"), n);
    auto got = kkr_forward(p, n);
    c.req(got == want, "forward image of " + path_text(p));
    c.req(kkr_backward(got) == p, "round trip of " + path_text(p));
  }
  {
    const auto& cs = fx.at("backward");
    auto rc = rc_from_json(cs.at("rc"), n);
    Path p = kkr_backward(rc);
    c.req(path_text(p) == cs.at("path").get<std::string>(), "backward image");
    c.req(kkr_forward(p, n) == rc, "backward round trip");
  }
  return {"kkr-golden", c.pass, c.detail};
}

CheckResult case_counting() {
  Checker c;
  auto fx = load_fixture("counting.json");
  {
    const auto& om = fx.at("omega");
    auto mu = content_from_json(om.at("mu"), 2, om.at("L").get<long>());
    c.req(omega_count(mu) == Int(om.at("value").get<long>()), "omega value");
    c.req(det_bareiss(f_matrix(mu)) == Int(om.at("det_f").get<long>()),
          "det F");
  }
  for (const auto& lc : fx.at("lambda")) {
    int m = lc.at("m").get<int>();
    long p = lc.at("p").get<long>();
    for (const auto& [g, v] : lc.at("counts").items()) {
      long gamma = std::stol(g);
      c.req(lambda_count(m, p, gamma) == Int(v.get<long>()),
            "lambda count formula (" + ids(m) + "," + ids(p) + ")");
      c.req(lambda_count_brute(m, p, gamma) == Int(v.get<long>()),
            "lambda count brute (" + ids(m) + "," + ids(p) + ")");
    }
  }
  for (const auto& row : fx.at("sum_rows")) {
    long L = row.at("L").get<long>();
    Int total = 0;
    const auto& terms = row.at("terms");
    const auto& values = row.at("values");
    for (size_t i = 0; i < terms.size(); ++i) {
      auto mu = content_from_json(terms.at(i), 2, L);
      Int v = omega_count(mu);
      c.req(v == Int(values.at(i).get<long>()), "sum row term " + ids(i));
      total += v;
    }
    c.req(total == Int(row.at("total").get<long>()), "sum row total");
  }
  // brute force: |P(mu)| = omega for every strict configuration at n=2, L=8
  {
    auto classes = classify_words(2, 8);
    for (const auto& mu : enumerate_configurations(2, 8, 1)) {
      auto it = classes.find(mu);
      Int got = it == classes.end() ? Int(0) : Int((long)it->second.size());
      c.req(got == omega_count(mu), "level set size vs omega at L=8");
    }
  }
  return {"counting", c.pass, c.detail};
}

CheckResult case_decomposition() {
  Checker c;
  auto fx = load_fixture("counting.json");
  {
    const auto& om = fx.at("omega");
    auto mu = content_from_json(om.at("mu"), 2, om.at("L").get<long>());
    auto terms = decompose_level_set(mu);
    std::map<std::vector<long>, std::pair<Int, Int>> got;
    for (const auto& t : terms) got[t.gamma] = {t.torus, t.orbits};
    c.req(got.size() == om.at("decomposition").size(), "stratum count");
    for (const auto& d : om.at("decomposition")) {
      auto gamma = d.at("gamma").get<std::vector<long>>();
      auto it = got.find(gamma);
      c.req(it != got.end() &&
                it->second.first == Int(d.at("torus").get<long>()) &&
                it->second.second == Int(d.at("orbits").get<long>()),
            "stratum values");
    }
    Int total = 0;
    for (const auto& t : terms) total += t.torus * t.orbits;
    c.req(total == omega_count(mu), "decomposition sums to omega");
  }
  {
    const auto& sl = fx.at("small_level_set");
    long L = sl.at("L").get<long>();
    auto mu = content_from_json(sl.at("mu"), 2, L);
    c.req(det_bareiss(f_matrix(mu)) == Int(sl.at("det_f").get<long>()),
          "small det F");
    auto classes = classify_words(2, (int)L);
    auto it = classes.find(mu);
    c.req(it != classes.end(), "small level set present");
    if (it == classes.end()) return {"decomposition", false, c.detail};
    std::set<Path> level(it->second.begin(), it->second.end());

    std::vector<std::pair<int, int>> gens = {{1, 1}};
    auto xs = xi_indices(mu);
    for (int a = 1; a <= mu.n; ++a)
      for (int xi : xs[a - 1])
        if (!(a == 1 && xi == 1)) gens.push_back({a, xi});

    long orbit_size = sl.at("orbit_size").get<long>();
    std::set<Path> seen;
    long orbits = 0;
    for (const Path& p : level) {
      if (seen.count(p)) continue;
      auto oc = orbit_closure(p, 2, gens);
      ++orbits;
      c.req((long)oc.paths.size() == orbit_size, "orbit size");
      for (const auto& q : oc.paths) {
        c.req(level.count(q) == 1, "orbit leaves level set");
        c.req(seen.insert(q).second, "orbits overlap");
      }
    }
    c.req(orbits == sl.at("orbit_count").get<long>(), "orbit count");
    c.req(seen.size() == level.size(), "orbits cover level set");
    auto in_orbit = [&](const std::string& w) {
      auto oc = orbit_closure(parse_path(sl.at("rep_x").get<std::string>()), 2,
                              gens);
      return std::find(oc.paths.begin(), oc.paths.end(), parse_path(w)) !=
             oc.paths.end();
    };
    c.req(!in_orbit(sl.at("rep_y").get<std::string>()),
          "representatives share an orbit");
  }
  return {"decomposition", c.pass, c.detail};
}

CheckResult case_periods() {
  Checker c;
  auto fx = load_fixture("periods.json");
  int n = fx.at("n").get<int>();
  Path p0 = parse_path(fx.at("path").get<std::string>());
  auto mu = soliton_content(p0, n);
  c.req(mu.has_value(), "soliton content");
  if (!mu) return {"periods", false, c.detail};
  auto gamma = gamma_of(direct_scattering(p0, n));
  c.req(gamma == fx.at("gamma").get<std::vector<long>>(), "gamma");
  for (const auto& row : fx.at("periods")) {
    int r = row.at("r").get<int>(), l = row.at("l").get<int>();
    long N = row.at("N").get<long>();
    c.req(dynamical_period(*mu, gamma, r, l) == Int(N),
          "period formula (" + ids(r) + "," + ids(l) + ")");
    Path p = p0;
    long first_return = -1;
    for (long t = 1; t <= N; ++t) {
      auto ev = evolve(r, l, p, n);
      c.req(ev.ok(), "evolution failed during period run");
      if (!ev.ok()) break;
      p = ev.out;
      if (p == p0) {
        first_return = t;
        break;
      }
    }
    c.req(first_return == N,
          "simulated minimal period (" + ids(r) + "," + ids(l) + ")");
  }
  return {"periods", c.pass, c.detail};
}

CheckResult case_ivp() {
  Checker c;
  auto fx = load_fixture("ivp-goldens.json");
  int n = fx.at("n").get<int>();
  for (const auto& cs : fx.at("cases")) {
    Path p0 = parse_path(cs.at("path").get<std::string>());
    int r = cs.at("r").get<int>(), l = cs.at("l").get<int>();
    long steps = cs.at("steps").get<long>();
    Path want = parse_path(cs.at("result").get<std::string>());
    std::string tag = " (" + ids(r) + "," + ids(l) + ")";

    ExtRC x = direct_scattering(p0, n);
    x.shift_time(r, l, steps);
    c.req(inverse_scattering_word(x) == want, "angle route" + tag);
    c.req(theta_path(x) == want, "theta route" + tag);

    Path p = p0;
    for (long t = 0; t < steps; ++t) {
      auto ev = evolve(r, l, p, n);
      c.req(ev.ok(), "simulation failed" + tag);
      if (!ev.ok()) break;
      p = ev.out;
    }
    c.req(p == want, "direct simulation" + tag);
  }
  return {"ivp", c.pass, c.detail};
}

CheckResult case_theta_oracle() {
  Checker c;
  auto fx = load_fixture("highest-40.json");
  int n = fx.at("n").get<int>();
  long L = fx.at("L").get<long>();
  auto mu = content_from_json(fx.at("mu"), n, L);
  size_t entries = fx.at("entries").size();
  c.req(entries == 40, "entry count");
  for (const auto& e : fx.at("entries")) {
    std::vector<std::vector<long>> rig;
    for (const auto& b : e.at("riggings"))
      rig.push_back(b.get<std::vector<long>>());
    auto rc = make_rigged(mu, rig);
    Path want = parse_path(e.at("path").get<std::string>());
    c.req(kkr_backward(rc) == want, "kkr of " + path_text(want));
    c.req(theta_path(extend(rc)) == want, "theta of " + path_text(want));
  }
  // sweep all strict rigged configurations (vacancies >= 1, required by the
  // theta reconstruction) with L <= 8, n <= 2 (capped)
  size_t total = 0;
  const size_t cap = 10'000;
  for (int nn = 1; nn <= 2 && total < cap; ++nn)
    for (long LL = 1; LL <= 8 && total < cap; ++LL)
      for (const auto& m : enumerate_configurations(nn, LL, 1)) {
        if (total >= cap) break;
        for (const auto& rc : enumerate_rigged(m)) {
          if (total >= cap) break;
          ++total;
          Path want = kkr_backward(rc);
          if (theta_path(extend(rc)) != want) {
            c.req(false, "theta != kkr on " + rc.json());
            return {"theta-oracle", c.pass, c.detail};
          }
        }
      }
  c.req(total > 0, "sweep empty");
  return {"theta-oracle", c.pass, c.detail};
}

CheckResult case_theta_identities() {
  Checker c;
  auto fx = load_fixture("theta-quadratic.json");
  int n = fx.at("n").get<int>();
  long L = fx.at("L").get<long>();
  auto mu = content_from_json(fx.at("mu"), n, L);
  auto td = make_theta(mu);
  int G = td.G;
  {
    auto B = fx.at("B").get<std::vector<std::vector<long>>>();
    bool okB = (int)B.size() == G;
    for (int i = 0; i < G && okB; ++i)
      for (int j = 0; j < G; ++j)
        if (td.B[i][j] != Int(B[i][j])) okB = false;
    c.req(okB, "B matrix");
    auto pv = fx.at("p").get<std::vector<long>>();
    for (int i = 0; i < G; ++i)
      c.req(td.p[i] == Int(pv[i]), "p vector");
    for (const auto& [key, hv] : fx.at("h").items()) {
      int r = key[0] - '0', l = key[2] - '0';
      auto want = hv.get<std::vector<long>>();
      auto got = h_vector_G(mu, r, l);
      bool ok = true;
      for (int i = 0; i < G; ++i)
        if (got[i] != Int(want[i])) ok = false;
      c.req(ok, "h vector " + key);
    }
    auto rv = fx.at("r").get<std::vector<long>>();
    for (int i = 0; i < G; ++i) td.r[i] = rv[i];
  }

  std::mt19937 rng(12345);
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto t2 = [&](const IVec& z2) { return theta2(td, z2); };

  // quasi-periodicity: Theta(z + Bm) = Theta(z) + t(m) z + t(m) B m / 2
  for (int trial = 0; trial < 100; ++trial) {
    IVec z2(G), m(G);
    for (int i = 0; i < G; ++i) z2[i] = rnd(-40, 40);
    for (int i = 0; i < G; ++i) m[i] = rnd(-3, 3);
    IVec Bm = mat_vec(td.B, m);
    IVec shifted(G);
    for (int i = 0; i < G; ++i) shifted[i] = z2[i] + 2 * Bm[i];
    Int lhs = t2(shifted);
    Int rhs = t2(z2) + dot(m, z2) + dot(m, Bm);
    c.req(lhs == rhs, "quasi-periodicity trial " + ids(trial));
    if (lhs != rhs) break;
  }

  // Hirota bilinear identity on J = r - p/2 - k h^(1)_1 (doubled form)
  IVec h11 = h_vector_G(mu, 1, 1), h1inf = h_vector_G(mu, 1, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int d = rnd(2, n + 1);
    IVec hd = h_vector_G(mu, d, 0), hd1 = h_vector_G(mu, d - 1, 0);
    long k = rnd(-5, 5);
    IVec J2(G);
    for (int i = 0; i < G; ++i)
      J2[i] = 2 * rnd(-20, 20) - td.p[i] - 2 * k * h11[i];
    auto at = [&](std::initializer_list<const IVec*> shifts) {
      IVec z = J2;
      for (const IVec* s : shifts)
        for (int i = 0; i < G; ++i) z[i] += 2 * (*s)[i];
      return t2(z);
    };
    Int lhs = at({&h1inf, &hd1}) + at({&h11, &hd});
    Int rhs = std::max(Int(at({&h1inf, &hd}) + at({&h11, &hd1})),
                       Int(at({&h11, &h1inf, &hd1}) + at({&hd}) - 2));
    c.req(lhs == rhs, "Hirota trial " + ids(trial));
    if (lhs != rhs) break;
  }
  return {"theta-identities", c.pass, c.detail};
}

// average of letter-a occupancy of the T^(1)_l carrier over one full period
std::vector<Rat> simulated_averages(const Path& p0, int n, int l, long N) {
  std::vector<Int> counts(n, 0);
  Path p = p0;
  for (long t = 0; t < N; ++t) {
    auto ev = l <= 0 ? evolve_inf(1, p, n) : evolve(1, l, p, n);
    if (!ev.ok()) throw std::runtime_error("evolution failed in average run");
    int ll = l;
    if (l <= 0) {
      // realized level of T^(1)_inf
      auto mu = soliton_content(p, n);
      ll = mu ? mu->largest_part(1) : 1;
    }
    const RTable& rt = r_table(1, ll, n);
    const Tableau& car = rt.elems[ev.carriers.front()];
    for (int x : car.rows[0])
      if (x >= 2) counts[x - 2] += 1;
    p = ev.out;
  }
  std::vector<Rat> avg;
  for (int a = 0; a < n; ++a) {
    Rat q(counts[a], Int(N));
    q.canonicalize();
    avg.push_back(q);
  }
  return avg;
}

CheckResult case_averages() {
  Checker c;
  auto fx = load_fixture("averages.json");
  for (const char* part : {"rank1", "rank2"}) {
    const auto& sec = fx.at(part);
    int n = sec.at("n").get<int>();
    Path p0 = parse_path(sec.at("path").get<std::string>());
    auto mu = soliton_content(p0, n);
    c.req(mu.has_value(), std::string(part) + " content");
    if (!mu) continue;
    if (sec.contains("mu"))
      c.req(*mu == content_from_json(sec.at("mu"), n, mu->L),
            std::string(part) + " content value");
    auto gamma = gamma_of(direct_scattering(p0, n));
    for (const auto& row : sec.at("rows")) {
      int l = row.at("l").get<int>();
      long N = row.at("N").get<long>();
      std::string tag = std::string(part) + " l=" + ids(l);
      c.req(dynamical_period(*mu, gamma, 1, l == 0 ? 0 : l) == Int(N),
            tag + " period");
      std::vector<Rat> want;
      for (const auto& s : row.at("avg"))
        want.push_back(parse_rat(s.get<std::string>()));
      for (int a = 2; a <= n + 1; ++a)
        c.req(time_average(*mu, l, a) == want[a - 2], tag + " formula");
      auto sim = simulated_averages(p0, n, l, N);
      for (int a = 0; a < n; ++a)
        c.req(sim[a] == want[a], tag + " simulation");
    }
  }
  return {"averages", c.pass, c.detail};
}

CheckResult case_general_case() {
  Checker c;
  auto fx = load_fixture("general-case.json");
  int n = fx.at("n").get<int>();
  for (const auto& cs : fx.at("cases")) {
    std::string name = cs.at("name").get<std::string>();
    Path p = parse_path(cs.at("path").get<std::string>());
    auto mu = soliton_content(p, n);
    c.req(mu.has_value(), name + " content");
    if (!mu) continue;
    std::set<std::pair<int, int>> bad;
    for (const auto& rl : cs.at("inadmissible"))
      bad.insert({rl.at(0).get<int>(), rl.at(1).get<int>()});
    for (int a = 1; a <= n; ++a) {
      int top = mu->largest_part(a);
      for (int l = 1; l <= top; ++l) {
        bool adm = admissible(*mu, a, l);
        c.req(adm == !bad.count({a, l}),
              name + " admissibility (" + ids(a) + "," + ids(l) + ")");
        auto ev = evolve(a, l, p, n);
        bool stays = false;
        if (ev.ok()) {
          auto out = soliton_content(ev.out, n);
          stays = out.has_value() && *out == *mu;
        }
        c.req(adm == stays,
              name + " level-set preservation (" + ids(a) + "," + ids(l) + ")");
      }
    }
    if (!cs.contains("orbit_size")) continue;

    auto gamma = gamma_of(direct_scattering(p, n));
    auto fg = f_gamma(*mu, gamma);
    c.req(det_bareiss(fg) == Int(cs.at("det_f_gamma").get<long>()),
          name + " det F_gamma");
    auto lat = general_case_lattice(*mu, gamma);
    c.req(lat.volume == Int(cs.at("volume").get<long>()), name + " volume");
    c.req(lat.index == Int(cs.at("orbit_size").get<long>()), name + " index");

    std::vector<std::pair<int, int>> gens;
    for (int a = 1; a <= n; ++a)
      for (int l = 1; l <= mu->largest_part(a); ++l)
        if (admissible(*mu, a, l)) gens.push_back({a, l});
    auto oc = orbit_closure(p, n, gens);
    c.req((long)oc.paths.size() == cs.at("orbit_size").get<long>(),
          name + " orbit closure size");
  }
  return {"general-case", c.pass, c.detail};
}

CheckResult case_bethe_phases() {
  Checker c;
  auto fx = load_fixture("evolution-tables.json");
  int n = fx.at("n").get<int>();
  Path p = parse_path(fx.at("path").get<std::string>());
  auto mu = soliton_content(p, n);
  c.req(mu.has_value(), "content");
  if (!mu) return {"bethe-phases", false, c.detail};
  auto bd = make_bethe(*mu);
  auto x = direct_scattering(p, n);
  auto u = string_centers(bd, x);
  for (int r = 1; r <= n; ++r)
    for (int l = 1; l <= mu->largest_part(r); ++l) {
      Rat twice = 2 * n_prime(bd, r, l) * eigenvalue_phase(bd, u, r, l);
      c.req(twice.get_den() == 1,
            "N' phase not half-integral (" + ids(r) + "," + ids(l) + ")");
    }

  auto h40 = load_fixture("highest-40.json");
  auto mu8 = content_from_json(h40.at("mu"), h40.at("n").get<int>(),
                               h40.at("L").get<long>());
  auto bd8 = make_bethe(mu8);
  std::set<std::vector<std::vector<Rat>>> forms;
  for (const auto& e : h40.at("entries")) {
    std::vector<std::vector<long>> rig;
    for (const auto& b : e.at("riggings"))
      rig.push_back(b.get<std::vector<long>>());
    auto rc = make_rigged(mu8, rig);
    forms.insert(canonical_centers(bd8, string_centers(bd8, extend(rc))));
  }
  c.req(forms.size() == h40.at("entries").size(),
        "string centers collide: " + ids((long)forms.size()) + " of 40");
  return {"bethe-phases", c.pass, c.detail};
}

}  // namespace

const std::vector<std::string>& verify_case_names() {
  static const std::vector<std::string> names = {
      "r-golden",     "evolution-tables", "kkr-golden",       "counting",
      "decomposition", "periods",         "ivp",              "theta-oracle",
      "theta-identities", "averages",     "general-case",     "bethe-phases"};
  return names;
}

CheckResult run_case(const std::string& name) {
  try {
    if (name == "r-golden") return case_r_golden();
    if (name == "evolution-tables") return case_evolution_tables();
    if (name == "kkr-golden") return case_kkr_golden();
    if (name == "counting") return case_counting();
    if (name == "decomposition") return case_decomposition();
    if (name == "periods") return case_periods();
    if (name == "ivp") return case_ivp();
    if (name == "theta-oracle") return case_theta_oracle();
    if (name == "theta-identities") return case_theta_identities();
    if (name == "averages") return case_averages();
    if (name == "general-case") return case_general_case();
    if (name == "bethe-phases") return case_bethe_phases();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
  return {name, false, "unknown case"};
}

std::vector<CheckResult> run_all_cases() {
  std::vector<CheckResult> out;
  for (const auto& name : verify_case_names()) out.push_back(run_case(name));
  return out;
}

}  // namespace psca
