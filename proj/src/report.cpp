#include "qslice/report.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace qslice {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

std::string mode_name(IsotropicMode mode) {
  return mode == IsotropicMode::Lagrangian ? "lagrangian" : "zero";
}

Json sudim_json(const SuperDim& s) { return Json::array({s.even, s.odd}); }

Json pyramids_report(const Partition& shape) {
  Json out;
  out["partition"] = shape.parts;
  Json list = Json::array();
  int index = 0;
  for (const Pyramid& p : enumerate_pyramids(shape)) {
    Json entry = p.to_json();
    entry["index"] = index++;
    Grading g = grading_from_pyramid(p);
    QElement e = nilpotent_from_pyramid(p);
    GoodnessReport good = check_good(g, functional_from_element(pi(e)));
    entry["good"] = good.good();
    entry["gl_equivalent"] = good.equivalences_hold();
    Json degrees = Json::array();
    for (int j : g.occurring_degrees()) {
      SuperDim s = g.sudim_piece(j);
      degrees.push_back(Json{{"degree", j}, {"sudim", sudim_json(s)}});
    }
    entry["graded_pieces"] = degrees;
    list.push_back(std::move(entry));
  }
  out["count"] = list.size();
  out["pyramids"] = std::move(list);
  return out;
}

Json grading_report(const Partition& shape, std::optional<int> pyramid_index) {
  Json out;
  out["partition"] = shape.parts;
  auto pyramids = enumerate_pyramids(shape);
  Json list = Json::array();
  for (int i = 0; i < int(pyramids.size()); ++i) {
    if (pyramid_index && *pyramid_index != i) continue;
    const Pyramid& p = pyramids[i];
    Grading g = grading_from_pyramid(p);
    Json entry;
    entry["index"] = i;
    entry["pyramid"] = p.to_json();
    entry["weights"] = g.weights();
    Json degrees = Json::array();
    for (int j : g.occurring_degrees())
      degrees.push_back(Json{{"degree", j}, {"sudim", sudim_json(g.sudim_piece(j))}});
    entry["graded_pieces"] = degrees;
    Json h_diag = Json::array();
    for (std::size_t k = 0; k < g.n(); ++k) h_diag.push_back(g.h().s().get(k, k).str());
    entry["h_gamma_diagonal"] = h_diag;
    list.push_back(std::move(entry));
  }
  out["gradings"] = std::move(list);
  return out;
}

Json structure_report(const NilpotentDatum& datum, const Pyramid& pyramid, int pyramid_index,
                      IsotropicMode mode) {
  Json out;
  out["partition"] = pyramid.shape().parts;
  out["pyramid"] = pyramid.to_json();
  out["pyramid_index"] = pyramid_index;
  out["isotropic_mode"] = mode_name(mode);

  GoodnessReport good = check_good(datum.grading, datum.chi);
  out["good"] = Json{{"gg1", good.gg1},
                     {"gg2", good.gg2},
                     {"gg3", good.gg3},
                     {"gl_equiv", good.equivalences_hold()},
                     {"verdict", good.good()}};

  GradingPropsReport props = check_grading_properties(datum);
  out["sudim_gE"] = sudim_json(props.sudim_g_e);
  out["sudim_g0"] = sudim_json(props.sudim_g0);
  out["sudim_g1"] = sudim_json(props.sudim_g1);
  out["ad_e_properties_ok"] = props.all_ok();

  IsotropicChoice choice = isotropic_choice(datum, mode);
  MPerpReport mperp = mperp_decomposition(datum, choice);
  out["mperp"] = Json{
      {"lhs", sudim_json(mperp.mperp)},
      {"rhs_parts", Json::array({sudim_json(mperp.bracket_part), sudim_json(mperp.pi_gf_part)})},
      {"direct_sum", mperp.direct_sum && mperp.zero_intersection},
      {"proof_identity", mperp.proof_identity}};

  bool sl2_ok = bracket(datum.h, datum.e) == datum.e.scaled(Rat(2)) &&
                bracket(datum.h, datum.f) == datum.f.scaled(Rat(-2)) &&
                bracket(datum.e, datum.f) == datum.h;
  out["sl2_verified"] = sl2_ok;
  out["pass"] = good.good() && good.equivalences_hold() && props.all_ok() && mperp.ok() && sl2_ok;
  return out;
}

Json walgebra_report(const NilpotentDatum& datum, const Partition& shape, int pyramid_index,
                     IsotropicMode mode, int kmax, bool include_timing) {
  auto start = Clock::now();
  Json out;
  out["partition"] = shape.parts;
  out["pyramid_index"] = pyramid_index;
  out["isotropic_mode"] = mode_name(mode);
  out["kmax"] = kmax;
  IsotropicChoice choice = isotropic_choice(datum, mode);
  NuReport nu = verify_nu(datum, choice, kmax);
  out["dims_W"] = nu.dims_w;
  out["dims_CS_cumulative"] = nu.cs_cumulative;
  out["cs_coefficients"] = nu.cs_coeffs;
  out["gr_q_matches_free_algebra"] = nu.gr_q_matches_free_algebra;
  out["nu_verified"] = nu.ok();
  if (nu.mismatch_degree >= 0) out["mismatch_degree"] = nu.mismatch_degree;
  out["pass"] = nu.ok();
  out["wall_time_ms"] = include_timing ? elapsed_ms(start) : 0;
  return out;
}

Json cohomology_report(const NilpotentDatum& datum, const Partition& shape, int pyramid_index,
                       IsotropicMode mode, int kmax, int imax, bool include_timing) {
  auto start = Clock::now();
  Json out;
  out["partition"] = shape.parts;
  out["pyramid_index"] = pyramid_index;
  out["isotropic_mode"] = mode_name(mode);
  out["kmax"] = kmax;
  out["imax"] = imax;
  IsotropicChoice choice = isotropic_choice(datum, mode);
  CohomologyTable t = cohomology_dims(datum, choice, kmax, imax);
  Json table = Json::array();
  for (int i = 0; i <= imax; ++i)
    for (int d = 0; d <= kmax; ++d)
      table.push_back(Json{{"i", i}, {"d", d}, {"dim", t.h[i][d]}});
  out["table"] = std::move(table);
  out["d2_ok"] = t.d2_ok;
  out["vanishing_ok"] = t.vanishing_ok;
  out["h0_matches_slice"] = t.h0_matches_slice;
  out["euler_ok"] = t.euler_ok;
  out["pass"] = t.ok();
  out["wall_time_ms"] = include_timing ? elapsed_ms(start) : 0;
  return out;
}

namespace {

struct CaseSpec {
  Partition partition;
  int pyramid_index;
  IsotropicMode mode;
};

Json run_case(const CaseSpec& spec, const RunConfig& config) {
  auto pyramids = enumerate_pyramids(spec.partition);
  const Pyramid& pyramid = pyramids.at(spec.pyramid_index);
  NilpotentDatum datum = datum_from_pyramid(pyramid);

  Json out;
  out["partition"] = spec.partition.parts;
  out["pyramid_index"] = spec.pyramid_index;
  out["isotropic_mode"] = mode_name(spec.mode);
  Json structure = structure_report(datum, pyramid, spec.pyramid_index, spec.mode);
  Json walgebra = walgebra_report(datum, spec.partition, spec.pyramid_index, spec.mode,
                                  config.kmax, config.include_timing);
  Json cohomology = cohomology_report(datum, spec.partition, spec.pyramid_index, spec.mode,
                                      config.kmax, config.imax, config.include_timing);

  std::string first_failure;
  auto check = [&](const char* name, bool ok) {
    if (!ok && first_failure.empty()) first_failure = name;
  };
  check("check_good", structure["good"]["verdict"].get<bool>() &&
                          structure["good"]["gl_equiv"].get<bool>());
  check("check_grading_properties", structure["ad_e_properties_ok"].get<bool>());
  check("mperp_decomposition", structure["mperp"]["direct_sum"].get<bool>() &&
                                   structure["mperp"]["proof_identity"].get<bool>());
  check("sl2_complete", structure["sl2_verified"].get<bool>());
  check("verify_nu", walgebra["pass"].get<bool>());
  check("cohomology_dims", cohomology["pass"].get<bool>());

  out["structure"] = std::move(structure);
  out["walgebra"] = std::move(walgebra);
  out["cohomology"] = std::move(cohomology);
  out["pass"] = first_failure.empty();
  if (!first_failure.empty()) out["first_failure"] = first_failure;
  return out;
}

int worker_count(const RunConfig& config) {
  if (const char* env = std::getenv("QSLICE_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(config.workers, 1);
}

Json run_cases(const std::vector<CaseSpec>& specs, const RunConfig& config) {
  std::vector<Json> results(specs.size());
  std::vector<std::string> errors(specs.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::min<int>(worker_count(config), std::max<std::size_t>(specs.size(), 1));
  auto body = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        results[i] = run_case(specs[i], config);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < specs.size(); ++i)
    if (!errors[i].empty()) throw QsliceError(errors[i]);
  Json cases = Json::array();
  bool pass = true;
  for (Json& r : results) {
    pass = pass && r["pass"].get<bool>();
    cases.push_back(std::move(r));
  }
  Json out;
  out["cases"] = std::move(cases);
  out["pass"] = pass;
  return out;
}

}  // namespace

Json verify_report(const RunConfig& config) {
  auto pyramids = enumerate_pyramids(config.partition);
  if (config.pyramid_index &&
      (*config.pyramid_index < 0 || *config.pyramid_index >= int(pyramids.size())))
    throw std::invalid_argument("pyramid index out of range");
  std::vector<CaseSpec> specs;
  for (int i = 0; i < int(pyramids.size()); ++i) {
    if (config.pyramid_index && *config.pyramid_index != i) continue;
    for (IsotropicMode mode : config.modes) specs.push_back({config.partition, i, mode});
  }
  Json out = run_cases(specs, config);
  out["partition"] = config.partition.parts;
  out["kmax"] = config.kmax;
  out["imax"] = config.imax;
  return out;
}

Json verify_all_report(int max_n, const RunConfig& config) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  std::vector<CaseSpec> specs;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lam : partitions_of(n))
      for (int i = 0; i < int(enumerate_pyramids(lam).size()); ++i)
        for (IsotropicMode mode : {IsotropicMode::Lagrangian, IsotropicMode::Zero})
          specs.push_back({lam, i, mode});
  Json out = run_cases(specs, config);
  out["max_n"] = max_n;
  out["kmax"] = config.kmax;
  out["imax"] = config.imax;
  return out;
}

bool report_passed(const Json& report) {
  return report.contains("pass") && report["pass"].get<bool>();
}

namespace {

std::string sudim_text(const Json& pair) {
  return std::to_string(pair[0].get<long>()) + "|" + std::to_string(pair[1].get<long>());
}

void render_case(std::ostringstream& out, const Json& c) {
  out << "case partition=";
  for (std::size_t i = 0; i < c["partition"].size(); ++i) {
    if (i) out << ",";
    out << c["partition"][i].get<int>();
  }
  out << " pyramid=" << c["pyramid_index"].get<int>()
      << " mode=" << c["isotropic_mode"].get<std::string>()
      << (c["pass"].get<bool>() ? "  [pass]" : "  [FAIL]") << "\n";
  const Json& s = c["structure"];
  out << "  good=" << (s["good"]["verdict"].get<bool>() ? "yes" : "no")
      << " sudim g_E=" << sudim_text(s["sudim_gE"]) << " g_0=" << sudim_text(s["sudim_g0"])
      << " g_1=" << sudim_text(s["sudim_g1"]) << "\n";
  out << "  m-perp " << sudim_text(s["mperp"]["lhs"]) << " = "
      << sudim_text(s["mperp"]["rhs_parts"][0]) << " + " << sudim_text(s["mperp"]["rhs_parts"][1])
      << (s["mperp"]["direct_sum"].get<bool>() ? " (direct sum)" : " (NOT direct)") << "\n";
  out << "  dims_W =";
  for (const auto& v : c["walgebra"]["dims_W"]) out << " " << v.get<long>();
  out << (c["walgebra"]["nu_verified"].get<bool>() ? "  (matches C[S])" : "  (MISMATCH)") << "\n";
  out << "  cohomology: vanishing=" << (c["cohomology"]["vanishing_ok"].get<bool>() ? "yes" : "NO")
      << " H0=C[S]: " << (c["cohomology"]["h0_matches_slice"].get<bool>() ? "yes" : "NO") << "\n";
  if (c.contains("first_failure"))
    out << "  first failure: " << c["first_failure"].get<std::string>() << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  if (report.contains("pyramids")) {
    out << "partition ";
    for (std::size_t i = 0; i < report["partition"].size(); ++i) {
      if (i) out << ",";
      out << report["partition"][i].get<int>();
    }
    out << ": " << report["count"].get<std::size_t>() << " pyramid(s)\n";
    for (const Json& p : report["pyramids"]) {
      out << "  #" << p["index"].get<int>() << " cols:";
      for (const auto& c : p["cols"]) out << " " << c.get<int>();
      out << "  good=" << (p["good"].get<bool>() ? "yes" : "no") << "\n";
    }
    return out.str();
  }
  if (report.contains("gradings")) {
    for (const Json& g : report["gradings"]) {
      out << "pyramid #" << g["index"].get<int>() << " weights:";
      for (const auto& w : g["weights"]) out << " " << w.get<int>();
      out << "\n";
      for (const Json& piece : g["graded_pieces"])
        out << "  g_{" << piece["degree"].get<int>() << "} sudim " << sudim_text(piece["sudim"])
            << "\n";
    }
    return out.str();
  }
  if (report.contains("cases")) {
    for (const Json& c : report["cases"]) render_case(out, c);
    out << (report["pass"].get<bool>() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    return out.str();
  }
  if (report.contains("dims_W")) {
    out << "dims_W =";
    for (const auto& v : report["dims_W"]) out << " " << v.get<long>();
    out << "\ncumulative C[S] =";
    for (const auto& v : report["dims_CS_cumulative"]) out << " " << v.get<long long>();
    out << "\nnu verified: " << (report["nu_verified"].get<bool>() ? "yes" : "NO") << "\n";
    return out.str();
  }
  if (report.contains("table")) {
    out << "cohomology dims (i, d, dim):\n";
    for (const Json& row : report["table"])
      out << "  H^" << row["i"].get<int>() << "(" << row["d"].get<int>() << ") = "
          << row["dim"].get<long>() << "\n";
    out << "vanishing: " << (report["vanishing_ok"].get<bool>() ? "yes" : "NO")
        << ", H0 matches C[S]: " << (report["h0_matches_slice"].get<bool>() ? "yes" : "NO") << "\n";
    return out.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace qslice
