#include "doctest.h"
#include "json.hpp"
#include "tlcat/fusion.hpp"

using namespace tlcat;

TEST_CASE("S2,2 x S1,1 at generic q") {
  const auto parts = fusion_decomposition_generic(2, 2, 1, 1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].k == 1);
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[0].mu == q_pow(-4));
  CHECK(parts[1].k == 3);
  CHECK(parts[1].mu == q_pow(2));
  const auto j = nlohmann::json::parse(
      fusion_table_json(ModuleSpec::standard(2, 2), ModuleSpec::standard(1, 1), Specialization::generic()));
  CHECK(j["dim"] == 3);
  CHECK(j["summands"].size() == 2);
}

TEST_CASE("monodromy eigenvalues") {
  CHECK(monodromy_eigenvalue(2, 1, 3) == q_pow(2));
  CHECK(monodromy_eigenvalue(1, 1, 0) == q_pow(-3));
  CHECK(monodromy_eigenvalue(1, 1, 2) == q_pow(1));
  CHECK(monodromy_eigenvalue(0, 0, 0) == Scalar(1));
}

TEST_CASE("Jordan type from nullities") {
  CHECK(partition_from_nullities({0, 2, 3}) == std::vector<int>{2, 1});
  CHECK(partition_from_nullities({0, 8, 12, 14}) == std::vector<int>{3, 3, 2, 2, 1, 1, 1, 1});
  Matrix<mpq_class> m(3, 3);
  m(0, 0) = m(1, 1) = m(2, 2) = 2;
  m(0, 1) = 1;
  const JordanType jt = jordan_type(m, mpq_class(2), mpq_class(1));
  CHECK(jt.blocks == std::vector<int>{2, 1});
  CHECK(jt.sole_eigenvalue);
  CHECK_THROWS_AS(jordan_type(m, mpq_class(3), mpq_class(1)), EigenvalueMismatch);
}

TEST_CASE("fused dimensions") {
  const auto ctx = rational_context(mpq_class(3, 2));
  CHECK(FusedModule<mpq_class>(ModuleSpec::standard(1, 1), ModuleSpec::standard(1, 1), ctx).dim() == 2);
  CHECK(FusedModule<mpq_class>(ModuleSpec::standard(2, 0), ModuleSpec::standard(1, 1), ctx).dim() == 2);
  CHECK(FusedModule<mpq_class>(ModuleSpec::regular(2), ModuleSpec::regular(2), ctx).dim() == 14);
}

TEST_CASE("fusion suites") {
  CHECK(verify_fusion_generic(4).ok());
  CHECK(verify_fusion_laws().ok());
  CHECK(verify_fusion_root_of_unity().ok());
  CHECK(verify_fusion_specialized(Specialization::root_of_unity(3), 4).ok());
}
