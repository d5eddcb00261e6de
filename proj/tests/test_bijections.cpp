#include "gmotzkin/bijections.hpp"

#include <doctest.h>

using namespace gm;

namespace {

std::string apply(BijectionId id, const char* p) { return labeled_str(apply_bijection(id, parse_labeled(p))); }

}

TEST_CASE("single-step cases")
{
  CHECK(apply(BijectionId::phi, "u.v") == "h2");
  CHECK(apply(BijectionId::tau, "u.u.v.v") == "u.d1");
  CHECK(apply(BijectionId::varphi, "u.v") == "u.d");
  CHECK(apply(BijectionId::theta, "u.d1") == "u.u.v1.v1");
  CHECK(apply(BijectionId::chi2, "u.d1") == "h1");
  CHECK(apply(BijectionId::chi2, "u.d2") == "u.v");
  CHECK(apply(BijectionId::chi2_inv, "h1") == "u.d1");
}

TEST_CASE("worked example: hat_varphi")
{
  const char* q = "u.dy.u.u.d2.u.u.u.dy.d1.dy.u.u.u.u.d2.u.d1.dy.dy.d1.d1.u.d2.u.u.u.dy.d1.d1";
  const char* image = "u.dy.u.h.u.u.u.dy.v.dy.u.u.u.h.u.v.dy.dy.v.v.h.u.u.u.dy.v.v";
  CHECK(apply(BijectionId::hat_varphi, q) == image);
  CHECK(apply(BijectionId::hat_varphi_inv, image) == q);
}

TEST_CASE("worked example: chi2 then chi1")
{
  const char* q = "u.d2.u.u.d2.u.u.u.d2.d1.d1.u.u.u.u.d2.u.d1.d1.d1.d1.d1.u.d1.u.u.u.d1.d1.d2";
  const char* lh = "u.v.u.u.v.h2.u.h2.v.h2.u.u.v.h1.d.v.h1.u.u.d.v";
  const char* lvu = "u.h.u.v.v2.u.u.v2.u.v.v2.u.u.u.v.v1.u.d.v.h.u.u.d.v";
  CHECK(apply(BijectionId::chi2, q) == lh);
  CHECK(apply(BijectionId::chi1, lh) == lvu);
  CHECK(apply(BijectionId::chi1, lvu) == lh);
  CHECK(apply(BijectionId::chi2_inv, lh) == q);
}

TEST_CASE("domain violations")
{
  // Exceptional paths have no image.
  CHECK_THROWS_AS(apply(BijectionId::phi, "h1.h1"), DomainViolation);
  CHECK_THROWS_AS(apply(BijectionId::varphi_bar, ""), DomainViolation);
  // Labels outside the form.
  CHECK_THROWS_AS(apply(BijectionId::phi, "h3"), InvalidPath);
  CHECK_THROWS_AS(apply(BijectionId::tau, "h1.u.v"), DomainViolation);
  CHECK_THROWS_AS(apply(BijectionId::chi2, "h"), DomainViolation);
}

TEST_CASE("exhaustive certification at small sizes")
{
  for (const auto& [name, id] : bijection_names()) {
    const unsigned top = (id == BijectionId::chi2 || id == BijectionId::chi2_inv || id == BijectionId::hat_varphi ||
                          id == BijectionId::hat_varphi_inv) ? 3 : 4;
    for (unsigned n = 0; n <= top; ++n) {
      const Report r = check_bijection(id, n);
      INFO(name << " n=" << n << " " << (r.counterexample ? r.counterexample->params : ""));
      CHECK(r.pass);
    }
  }
}

TEST_CASE("domain sizes")
{
  // 2^3 C_3 weighted Dyck paths of semilength 3.
  CHECK(enumerate_form(domain_form(BijectionId::chi2), 3).size() == 40);
  CHECK(enumerate_form(codomain_form(BijectionId::chi2), 3).size() == 40);
  CHECK(enumerate_form(domain_form(BijectionId::chi2), 5).size() == 1344);
}
