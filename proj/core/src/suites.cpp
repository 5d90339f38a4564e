#include "tlcat/suites.hpp"

#include <algorithm>

#include "tlcat/braid.hpp"
#include "tlcat/dilute.hpp"
#include "tlcat/errors.hpp"
#include "tlcat/fusion.hpp"
#include "tlcat/integrable.hpp"
#include "tlcat/repr.hpp"
#include "tlcat/twist.hpp"

namespace tlcat {

namespace {

Report braid_suite(const SuiteOptions& o) {
  const int n = o.max_n;
  Report rep("braid");
  rep.append(verify_tl_relations(n, o.run));
  rep.append(verify_hexagons(n, false, o.run));
  rep.append(verify_naturality(n, 200, n + 2, false, o.run));
  for (int k = 3; k <= std::max(3, n); ++k) rep.append(verify_braid_relations(k, o.run));
  rep.append(verify_noncentral_witness());
  return rep;
}

Report twist_suite(const SuiteOptions& o) {
  const int n = o.max_n;
  Report rep("twist");
  rep.append(verify_centrality(n, o.run));
  rep.append(verify_twist_forms(std::min(n, 5), o.run));
  rep.append(verify_twist_axiom(n, o.run));
  rep.append(verify_cyclic_lemma(std::min(n, 5), o.run));
  rep.append(verify_twist_naturality(std::min(n, 5), o.run));
  rep.append(verify_twist_fixes_cups(std::max(1, n / 2)));
  rep.append(verify_twist_eigenvalues(n, o.run));
  rep.append(verify_det_t1(std::min(n, 5), o.run));
  return rep;
}

Report repr_suite(const SuiteOptions& o) {
  const int n = o.max_n;
  Report rep("repr");
  rep.append(verify_dimensions(std::max(n, 8)));
  rep.append(verify_rigidity(std::min(n, 4), std::min(n, 3), o.run));
  rep.append(verify_wenzl_jones(std::min(n, 5), o.run));
  rep.append(verify_homomorphism(3, 100, std::min(n, 5), o.run));
  return rep;
}

Report fusion_suite(const SuiteOptions& o) {
  Report rep("fusion");
  if (o.spec.kind == Specialization::Kind::Generic) {
    rep.append(verify_fusion_generic(o.max_n, o.run));
    rep.append(verify_fusion_symbolic(o.run));
    rep.append(verify_fusion_laws(o.run));
  } else {
    rep.append(verify_fusion_specialized(o.spec, o.max_n, o.run));
  }
  rep.append(verify_fusion_root_of_unity(o.run));
  return rep;
}

// The ordinary face, both transfer matrix checks and the crossing identities.
Report integrable_suite(const SuiteOptions& o) {
  Report rep("integrable");
  rep.append(verify_integrable(3, 4, o.run));
  return rep;
}

Report dilute_suite(const SuiteOptions& o) {
  Report rep("dilute");
  rep.append(verify_dilute_braiding(std::min(o.max_n, 4), o.run));
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"braid", "twist", "repr", "fusion", "integrable", "dilute"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "braid") return braid_suite(opt);
  if (name == "twist") return twist_suite(opt);
  if (name == "repr") return repr_suite(opt);
  if (name == "fusion") return fusion_suite(opt);
  if (name == "integrable") return integrable_suite(opt);
  if (name == "dilute") return dilute_suite(opt);
  if (name == "all") {
    Report rep("all");
    for (const auto& s : suite_names()) rep.append(run_suite(s, opt));
    return rep;
  }
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace tlcat
