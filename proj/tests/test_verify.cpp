#include <doctest.h>

#include <set>

#include "cocycle_lab/verify.hpp"

using namespace cocycle_lab;

namespace {

std::set<std::string> failing(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.claims)
    if (!c.pass) out.insert(c.id);
  return out;
}

std::string negate(const std::string& s) { return s.front() == '-' ? s.substr(1) : "-" + s; }

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("filtering by group, criterion and claim id") {
    VerifyOptions opts;
    opts.only = {"braidings"};
    const VerificationReport r = verify_paper(opts);
    REQUIRE_FALSE(r.claims.empty());
    for (const auto& c : r.claims) CHECK(criterion_group(c.criterion) == "braidings");
    std::set<int> seen;
    for (const auto& c : r.claims) seen.insert(c.criterion);
    CHECK(seen == std::set<int>{6, 7, 8, 9, 10, 11});

    opts.only = {"8"};
    const auto r8 = verify_paper(opts);
    REQUIRE(r8.claims.size() == 1);
    CHECK(r8.claims[0].id == "c08.symmetric");
    CHECK(r8.all_pass());

    opts.only = {"c07.r.E1"};
    const auto one = verify_paper(opts);
    REQUIRE(one.claims.size() == 1);
    CHECK(one.claims[0].id == "c07.r.E1");
  }

  TEST_CASE("claims are deterministic and mapped to one criterion") {
    VerifyOptions opts;
    opts.only = {"cocycles"};
    const auto a = verify_paper(opts), b = verify_paper(opts);
    REQUIRE(a.claims.size() == b.claims.size());
    std::set<std::string> ids;
    for (std::size_t k = 0; k < a.claims.size(); ++k) {
      CHECK(a.claims[k].id == b.claims[k].id);
      CHECK(a.claims[k].pass == b.claims[k].pass);
      CHECK(a.claims[k].detail == b.claims[k].detail);
      CHECK(ids.insert(a.claims[k].id).second);
      CHECK(a.claims[k].criterion >= 1);
      CHECK(a.claims[k].criterion <= 5);
    }
    CHECK(a.all_pass());
    CHECK(a.by_criterion().size() == 5);
  }

  TEST_CASE("a sign flip in the sigma_tau table breaks exactly the E1 claims") {
    VerifyOptions opts;
    opts.only = {"braidings"};
    const auto baseline = failing(verify_paper(opts));

    reference::ReferenceData mutated = reference::reference_data();
    bool flipped = false;
    for (auto& table : mutated.braidings)
      if (table.name == "sigma_tau")
        for (auto& col : table.columns)
          if (col.label == "E1") {
            col.r[3] = negate(col.r[3]);
            flipped = true;
          }
    for (auto& col : mutated.forms)
      if (col.label == "E1") col.q[0] = negate(col.q[0]);
    REQUIRE(flipped);
    opts.data = &mutated;
    const auto after = failing(verify_paper(opts));

    std::set<std::string> fresh;
    for (const auto& id : after)
      if (!baseline.count(id)) fresh.insert(id);
    CHECK(fresh == std::set<std::string>{"c07.qf.E1", "c07.r.E1"});
    for (const auto& id : baseline) CHECK(after.count(id));
  }

  TEST_CASE("criterion metadata") {
    for (int c = 1; c <= kCriteriaCount; ++c) CHECK_FALSE(criterion_title(c).empty());
    CHECK(criterion_group(1) == "cocycles");
    CHECK(criterion_group(9) == "braidings");
    CHECK(criterion_group(14) == "hopf");
    CHECK_THROWS(criterion_title(16));
  }
}
