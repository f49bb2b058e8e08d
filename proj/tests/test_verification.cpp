#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zygdist/generators.hpp"
#include "zygdist/parallel.hpp"
#include "zygdist/verification.hpp"

using namespace zyg;

namespace {

bool same(const RatioReport& a, const RatioReport& b) {
  return a.max_ratio_coarse == b.max_ratio_coarse && a.max_ratio_fine == b.max_ratio_fine && a.argmax == b.argmax &&
         a.admissible_coarse == b.admissible_coarse && a.admissible_fine == b.admissible_fine;
}

}  // namespace

TEST_CASE("linear functions give vanishing ratios") {
  const SampledFunction lin = linear_function(12);
  CHECK(verify_modulus_1d(lin, 2000, 1).max_ratio() == 0.0);
  CHECK(verify_equal_step(lin, 2000, 1).max_ratio() == 0.0);
  CHECK(verify_equal_centre(lin, 2000, 1).max_ratio() == 0.0);
  CHECK(verify_first_diff(lin, 2000, 1).max_ratio() == 0.0);
}

TEST_CASE("square function closed forms") {
  const SampledFunction sq = square_function(14);
  CHECK(verify_equal_step(sq, 2000, 2).max_ratio() == 0.0);
  const RatioReport m = verify_modulus_1d(sq, 4000, 2);
  CHECK(m.max_ratio() <= 2.0);
  CHECK(m.max_ratio() > 0.0);
  // Numerator 2|h' - h| over the bracket; (h'-h)/h' (1 + log) >= (h'-h)/h' gives at most 2 h'/||f||_*.
  CHECK(verify_equal_centre(sq, 4000, 2).max_ratio() <= 2.0);
  CHECK(std::isfinite(verify_first_diff(sq, 4000, 2).max_ratio()));
}

TEST_CASE("ratio reports are reproducible and thread-count independent") {
  const SampledFunction w = weierstrass_function(12, 8);
  set_thread_count(1);
  const RatioReport a = verify_modulus_1d(w, 3000, 9);
  set_thread_count(4);
  const RatioReport b = verify_modulus_1d(w, 3000, 9);
  const RatioReport c = verify_modulus_1d(w, 3000, 10);
  set_thread_count(0);
  CHECK(same(a, b));
  CHECK_FALSE(same(a, c));
  CHECK(a.stability > 0.0);
  CHECK(a.fine_depth == 12);
  CHECK(a.coarse_depth == 6);
}

TEST_CASE("hat ratios are finite and stable") {
  const SampledFunction hat = hat_function(16);
  for (const RatioReport& r : {verify_modulus_1d(hat, 10000, 3), verify_equal_step(hat, 10000, 3),
                               verify_equal_centre(hat, 10000, 3), verify_first_diff(hat, 10000, 3)}) {
    CHECK(std::isfinite(r.max_ratio()));
    CHECK(r.stability <= 1.5);
  }
}

TEST_CASE("dyadic distance lemma has constant one") {
  const DyadicDistanceReport hat = verify_dyadic_distance_bound(hat_function(8), 1);
  CHECK(hat.max_ratio == 0.5);
  CHECK(hat.pairs == 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DyadicDistanceReport r = verify_dyadic_distance_bound(random_jumps_function(8, 0.5, seed), 6);
    CHECK(r.max_ratio <= 1.0);
    CHECK(r.pairs == 127 * 126 / 2);
  }
  CHECK_THROWS(verify_dyadic_distance_bound(hat_function(8), 7));
}

TEST_CASE("common predecessor sizes") {
  const RealInterval I(Rational(3, 8), Rational(1, 2));
  for (int R : {1, 2}) {
    const PredecessorReport r = verify_predecessor_measure(I, Rational(R), 1, 12, 20000, 4);
    CHECK(r.pass);
    CHECK(r.N == 3);
    CHECK(r.total == doctest::Approx(2.0 * R).epsilon(1e-12));
    CHECK(r.rows.back().estimate == 0.0);
  }
  CHECK_THROWS(verify_predecessor_measure(I, Rational(1, 2), 1, 4, 100, 1));
}

TEST_CASE("BDG ratios") {
  const BdgReport hat = verify_bdg({average_growth(hat_function(8))}, 2.0);
  CHECK(hat.min_ratio == 1.0);
  CHECK(hat.max_ratio == 1.0);
  const BdgReport zero = verify_bdg({DyadicMartingale::zero(1, 4)}, 2.0);
  CHECK(zero.skipped == 1);
  CHECK(zero.ratios.empty());
  std::vector<DyadicMartingale> ensemble;
  for (std::uint64_t s = 0; s < 20; ++s) ensemble.push_back(random_jump_martingale(8, 0.5, s));
  const BdgReport r = verify_bdg(ensemble, 2.0);
  CHECK(r.pass);
  CHECK(r.min_ratio >= 1.0);
  CHECK(r.max_ratio <= 2.0);
  CHECK(verify_bdg(ensemble, 3.0).ratios.size() == 20);
}

TEST_CASE("strichartz consistency pattern") {
  const std::vector<double> eps{0.25, 0.5, 0.75, 1.0};
  const ConsistencyReport r = verify_strichartz_consistency(consistency_suite(10, 1), eps, {6, 8, 10});
  CHECK(r.mismatches == 0);
  for (const auto& row : r.rows) {
    if (row.name == "random_jumps") {
      CHECK_FALSE(row.strichartz_bounded);
      CHECK(row.d_bounded == std::vector<bool>{false, true, true, true});
    } else {
      CHECK(row.strichartz_bounded);
    }
  }
}

TEST_CASE("measure modulus") {
  const RatioReport u = verify_measure_modulus(GridMeasure::uniform(1, 10), 2000, 1);
  CHECK(u.max_ratio() == 0.0);
  for (const auto& m : lemma_measure_suite(10, 3)) {
    const RatioReport r = verify_measure_modulus(m.mu, 4000, 3);
    CHECK(std::isfinite(r.max_ratio()));
    CHECK(r.stability > 0.0);
  }
}
