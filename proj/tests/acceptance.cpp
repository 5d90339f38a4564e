// Acceptance runner.  One line per criterion; exit status 0 only when every
// criterion passes within its time budget.
//
//   acceptance [--jobs N] [--only K] [--report-dir DIR]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "tlcat/braid.hpp"
#include "tlcat/dilute.hpp"
#include "tlcat/fusion.hpp"
#include "tlcat/integrable.hpp"
#include "tlcat/repr.hpp"
#include "tlcat/twist.hpp"

using namespace tlcat;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // negative: no time limit
  std::function<Report(const RunOptions&)> run;
};

Report tl_relations(const RunOptions& o) { return verify_tl_relations(6, o); }

Report braiding(const RunOptions& o) {
  Report r("braiding");
  r.append(verify_hexagons(6, false, o));
  // Exhaustive for r+s, n+m <= 6, then 200 random pairs with r+s up to 8.
  r.append(verify_naturality(6, 200, 8, false, o));
  for (int n = 3; n <= 6; ++n) r.append(verify_braid_relations(n, o));
  r.append(verify_noncentral_witness());
  return r;
}

Report twist(const RunOptions& o) {
  Report r("twist");
  r.append(verify_centrality(6, o));
  r.append(verify_twist_axiom(6, o));
  r.append(verify_twist_naturality(5, o));
  r.append(verify_cyclic_lemma(5, o));
  r.append(verify_twist_forms(5, o));
  r.append(verify_twist_eigenvalues(6, o));
  r.append(verify_det_t1(5, o));
  return r;
}

Report rigidity(const RunOptions& o) {
  Report r("rigidity");
  r.append(verify_rigidity(4, 3, o));
  r.append(verify_wenzl_jones(5, o));
  return r;
}

Report fusion_generic(const RunOptions& o) {
  Report r("fusion-generic");
  r.append(verify_fusion_generic(6, o));
  r.append(verify_fusion_symbolic(o));
  return r;
}

Report fusion_roots(const RunOptions& o) { return verify_fusion_root_of_unity(o); }

Report integrability(const RunOptions& o) {
  Report r("integrability");
  r.append(verify_ybe(FaceFamily::Ordinary, 3, o));
  r.append(verify_inversion(FaceFamily::Ordinary).report);
  r.append(verify_boundary_ybe(FaceFamily::Ordinary, o));
  r.append(verify_transfer_commute(3, 4, o));
  return r;
}

Report dilute(const RunOptions& o) {
  Report r("dilute");
  r.append(verify_dilute_braiding(4, o));
  for (FaceFamily f : {FaceFamily::DiluteBraid, FaceFamily::DiluteIK}) {
    r.append(verify_ybe(f, 3, o));
    r.append(verify_inversion(f).report);
    r.append(verify_boundary_ybe(f, o));
  }
  r.append(verify_ik_transfer_commute(o));
  return r;
}

// Dimensions against counts computed without the library.
Report combinatorics(const RunOptions&) {
  Report r("combinatorics");
  for (int n = 0; n <= 8; ++n) {
    const long long end = (long long)enumerate(n, n, false).size();
    r.add(check_true("dim End(n) = Catalan(n)", {{"n", (long long)n}}, end == oracle::catalan(n),
                     std::to_string(end) + " vs " + std::to_string(oracle::catalan(n))));
    for (int k = n % 2; k <= n; k += 2) {
      const long long got = (long long)enumerate(n, k, false, k).size();
      const long long want = oracle::standard_dim(n, k);
      r.add(check_true("dim S_{n,k} = C(n,(n-k)/2) - C(n,(n-k)/2-1)", {{"n", (long long)n}, {"k", (long long)k}},
                       got == want && standard_dimension(n, k) == want,
                       std::to_string(got) + " vs " + std::to_string(want)));
    }
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  RunOptions opt;
  int only = 0;
  std::string report_dir;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) opt.jobs = std::atoi(argv[++i]);
    else if (a == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (a == "--report-dir" && i + 1 < argc) report_dir = argv[++i];
    else {
      std::cerr << "usage: acceptance [--jobs N] [--only K] [--report-dir DIR]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "TL relations, n <= 6", 5, tl_relations},
      {2, "braiding: closed forms, hexagons, naturality, lemmas, non-central witness", 120, braiding},
      {3, "twist: centrality, twist condition, naturality, cyclic lemma, gamma, det t1", 180, twist},
      {4, "rigidity: zig-zags and Wenzl-Jones projectors", -1, rigidity},
      {5, "generic fusion, n1 + n2 <= 6", 300, fusion_generic},
      {6, "root-of-unity fusion examples", 180, fusion_roots},
      {7, "integrability: YBE, inversion, boundary, commuting transfer matrices", 600, integrability},
      {8, "dilute: braiding, faces, Izergin-Korepin", 300, dilute},
      {9, "combinatorics: Catalan and standard dimensions, n <= 8", -1, combinatorics},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Report r = c.run(opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s < 0 || secs < c.budget_s;
    const bool pass = r.ok() && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << r.passed() << "/"
              << r.cases().size() << " cases, " << std::fixed << std::setprecision(2) << secs << " s";
    if (c.budget_s >= 0) std::cout << " of " << std::setprecision(0) << c.budget_s << " s";
    std::cout << ")" << std::endl;
    if (!in_time) std::cout << "      over time budget" << std::endl;
    for (const auto& k : r.cases())
      if (!k.pass) std::cout << "      failed: [" << k.section << "] " << k.identity << std::endl;
    if (!report_dir.empty()) {
      std::filesystem::create_directories(report_dir);
      std::ofstream(std::filesystem::path(report_dir) / ("criterion-" + std::to_string(c.id) + ".json")) << r.to_json();
    }
  }
  return all ? 0 : 1;
}
