#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cimetrics/core_indices.hpp"
#include "oracles.hpp"

using cimetrics::classic_indices;
using cimetrics::CoreSet;
using cimetrics::g_core;
using cimetrics::g_index;
using cimetrics::GIndexVariant;
using cimetrics::h_core;
using cimetrics::h_index;
using cimetrics::IndexReport;
using cimetrics::ResearcherProfile;

namespace {

ResearcherProfile profile(std::vector<std::int64_t> citations) {
  return ResearcherProfile("P", std::move(citations));
}

std::vector<std::int64_t> random_citations(std::mt19937& rng, int max_n, int max_c) {
  std::uniform_int_distribution<int> n_dist(0, max_n);
  std::uniform_int_distribution<std::int64_t> c_dist(0, max_c);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_dist(rng)));
  for (auto& c : out) c = c_dist(rng);
  return out;
}

}  // namespace

TEST_CASE("profile validates and sorts") {
  const ResearcherProfile p("R1", {3, 50, 1, 50});
  CHECK(p.citations() == std::vector<std::int64_t>{50, 50, 3, 1});
  CHECK(p.n_papers() == 4);
  CHECK(p.total_citations() == 104);
  CHECK_THROWS_AS(ResearcherProfile("bad", {5, -1}), std::invalid_argument);
}

TEST_CASE("h_index: worked cases") {
  CHECK(h_index(profile({50, 50, 3, 1})) == 3);
  CHECK(h_index(profile({})) == 0);
  CHECK(h_index(profile({0, 0, 0})) == 0);
  CHECK(h_index(profile({5, 5, 5, 3, 3})) == 3);
  CHECK(h_index(profile({40, 30, 20, 13, 4})) == 4);
}

TEST_CASE("h_core: the top-h papers plus ties with the h-th") {
  SUBCASE("ties at the threshold extend the core") {
    const CoreSet core = h_core(profile({50, 50, 3, 3, 1}));
    CHECK(core.values == std::vector<std::int64_t>{50, 50, 3, 3});
    CHECK(core.size() == 4);
  }
  SUBCASE("no tie keeps exactly h members") {
    const CoreSet core = h_core(profile({90, 10, 3, 1}));
    CHECK(core.values == std::vector<std::int64_t>{90, 10, 3});
    CHECK(core.size() == 3);
  }
  SUBCASE("all-zero profile has an empty core") {
    CHECK(h_core(profile({0, 0})).size() == 0);
    CHECK(h_core(profile({})).size() == 0);
  }
  SUBCASE("a paper below the h-th paper's count stays out even if >= h") {
    // h = 4 and x_4 = 13, so the paper with 4 citations is not tied in.
    const CoreSet core = h_core(profile({40, 30, 20, 13, 4}));
    CHECK(core.values == std::vector<std::int64_t>{40, 30, 20, 13});
    // h = 1 and x_1 = 103: the 1-citation paper is not in the core.
    CHECK(h_core(profile({103, 1})).values == std::vector<std::int64_t>{103});
    // every member ties with the h-th paper beyond rank h
    CHECK(h_core(profile({5, 5, 5, 3, 3})).values == std::vector<std::int64_t>{5, 5, 5});
  }
}

TEST_CASE("h_core structural invariants on random profiles") {
  std::mt19937 rng(7011);
  for (int iter = 0; iter < 300; ++iter) {
    const ResearcherProfile p("P", random_citations(rng, 12, 15));
    const std::int64_t h = h_index(p);
    const CoreSet core = h_core(p);
    if (h == 0) {
      CHECK(core.size() == 0);
      continue;
    }
    const std::int64_t x_h = p.citations()[static_cast<std::size_t>(h) - 1];
    CHECK(core.size() >= static_cast<std::size_t>(h));
    for (const std::int64_t y : core.values) {
      CHECK(y >= h);    // members reach the h threshold
      CHECK(y >= x_h);  // and tie with the h-th paper
    }
    // the core is a maximal prefix: the next paper (if any) is strictly below x_h
    if (core.size() < p.n_papers()) {
      CHECK(p.citations()[core.size()] < x_h);
    }
    // ranks h..size all hold the same count
    for (std::size_t j = static_cast<std::size_t>(h) - 1; j < core.size(); ++j) {
      CHECK(core.values[j] == x_h);
    }
  }
}

TEST_CASE("g_index: worked cases") {
  CHECK(g_index(profile({100, 0})) == 10);
  CHECK(g_index(profile(std::vector<std::int64_t>(10, 10))) == 10);
  CHECK(g_index(profile({})) == 0);
  CHECK(g_index(profile({0, 0})) == 0);
  SUBCASE("capped variant stops at the paper count") {
    CHECK(g_index(profile({100, 0}), GIndexVariant::Capped) == 2);
    CHECK(g_index(profile(std::vector<std::int64_t>(10, 10)), GIndexVariant::Capped) == 10);
  }
}

TEST_CASE("g_core: zero-padded top papers") {
  SUBCASE("single paper padded to g") {
    const CoreSet core = g_core(profile({100, 0}));
    REQUIRE(core.size() == 10);
    CHECK(core.values[0] == 100);
    for (std::size_t j = 1; j < 10; ++j) CHECK(core.values[j] == 0);
  }
  SUBCASE("four 25s padded to ten") {
    const CoreSet core = g_core(profile({25, 25, 25, 25, 0}));
    REQUIRE(core.size() == 10);
    CHECK(std::accumulate(core.values.begin(), core.values.end(), std::int64_t{0}) == 100);
    CHECK(core.values[3] == 25);
    CHECK(core.values[4] == 0);
  }
  SUBCASE("all-zero gives an empty core") {
    CHECK(g_core(profile({0, 0})).size() == 0);
  }
}

TEST_CASE("h and g match definitional brute force on random profiles") {
  std::mt19937 rng(90210);
  for (int iter = 0; iter < 500; ++iter) {
    const auto citations = random_citations(rng, 8, 12);
    const ResearcherProfile p("P", citations);
    CHECK(h_index(p) == oracles::brute_force_h(p.citations()));
    CHECK(g_index(p) == oracles::brute_force_g(citations, false));
    CHECK(g_index(p, GIndexVariant::Capped) == oracles::brute_force_g(citations, true));
  }
}

TEST_CASE("g-core sums straddle g^2 and recomputing g on the core is stable") {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 300; ++iter) {
    const ResearcherProfile p("P", random_citations(rng, 10, 40));
    const std::int64_t g = g_index(p);
    const CoreSet core = g_core(p);
    const std::int64_t core_sum =
        std::accumulate(core.values.begin(), core.values.end(), std::int64_t{0});
    if (g == 0) continue;
    CHECK(core_sum >= g * g);
    // top g+1 values of the padded sequence stay below (g+1)^2
    CHECK(core_sum + (core.size() < p.n_papers() ? p.citations()[core.size()] : 0) <
          (g + 1) * (g + 1));
    // idempotence: the g-index of the padded core is g again
    CHECK(g_index(ResearcherProfile("Q", core.values)) == g);
  }
}

TEST_CASE("order relations between the indices") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 400; ++iter) {
    const ResearcherProfile p("P", random_citations(rng, 10, 25));
    const std::int64_t h = h_index(p);
    CHECK(h <= g_index(p));
    CHECK(h <= static_cast<std::int64_t>(p.n_papers()));
    if (!p.citations().empty()) {
      CHECK(h <= p.citations().front());
    }
  }
}

TEST_CASE("classic_indices: worked cases") {
  SUBCASE("R of (50,50,3,1) is sqrt(103)") {
    const IndexReport r = classic_indices(ResearcherProfile("R1", {50, 50, 3, 1}));
    CHECK(r.r_index == doctest::Approx(std::sqrt(103.0)).epsilon(1e-14));
    CHECK(r.h == 3);
    CHECK(r.sharp_c_h == 3);
    CHECK(r.a_index == doctest::Approx(103.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("R_m of (50,50,3,3,1) is sqrt(106)") {
    const IndexReport r = classic_indices(ResearcherProfile("R2", {50, 50, 3, 3, 1}));
    CHECK(r.r_m == doctest::Approx(std::sqrt(106.0)).epsilon(1e-14));
    CHECK(r.r_index == doctest::Approx(std::sqrt(103.0)).epsilon(1e-14));
  }
  SUBCASE("100 papers of 10 citations have Euclidean index 100") {
    const IndexReport r =
        classic_indices(ResearcherProfile("A", std::vector<std::int64_t>(100, 10)));
    CHECK(r.euclidean == 100.0);
    CHECK(r.r_n == doctest::Approx(std::sqrt(1000.0)).epsilon(1e-14));
  }
  SUBCASE("empty profile is all zeros") {
    const IndexReport r = classic_indices(ResearcherProfile("E", {}));
    CHECK(r.h == 0);
    CHECK(r.g == 0);
    CHECK(r.a_index == 0.0);
    CHECK(r.r_index == 0.0);
    CHECK(r.r_m == 0.0);
    CHECK(r.r_g == 0.0);
    CHECK(r.r_n == 0.0);
    CHECK(r.euclidean == 0.0);
  }
}

TEST_CASE("classic_indices: R^2 = h*A and R <= R_m on random profiles") {
  std::mt19937 rng(424242);
  for (int iter = 0; iter < 300; ++iter) {
    const ResearcherProfile p("P", random_citations(rng, 12, 60));
    const IndexReport r = classic_indices(p);
    CHECK(r.r_index * r.r_index ==
          doctest::Approx(static_cast<double>(r.h) * r.a_index).epsilon(1e-9));
    CHECK(r.r_index <= r.r_m + 1e-12);
  }
}
