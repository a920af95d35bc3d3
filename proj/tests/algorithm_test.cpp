#include <doctest.h>

#include "hpfold/algorithm.hpp"
#include "test_util.hpp"

using namespace hpfold;

TEST_CASE("algorithm and threshold names round trip") {
  for (Algorithm a : {Algorithm::Playout, Algorithm::Nmcs, Algorithm::Lnmcs, Algorithm::Nrpa,
                      Algorithm::Gnrpa, Algorithm::GreedyBfs, Algorithm::Uct})
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  for (ThresholdPolicy p : {ThresholdPolicy::Max, ThresholdPolicy::Mean, ThresholdPolicy::Median})
    CHECK(parse_threshold(threshold_name(p)) == p);
  CHECK_THROWS_AS(parse_algorithm("mcts"), std::invalid_argument);
  CHECK_THROWS_AS(parse_threshold("mode"), std::invalid_argument);
}

TEST_CASE("every algorithm is reproducible under a playout budget") {
  auto m1 = testutil::molecule(1);
  for (Algorithm a : {Algorithm::Playout, Algorithm::Nmcs, Algorithm::Lnmcs, Algorithm::Nrpa,
                      Algorithm::Gnrpa, Algorithm::GreedyBfs, Algorithm::Uct}) {
    AlgoConfig config;
    config.algorithm = a;
    config.level = 2;
    config.iterations = 20;
    CAPTURE(algorithm_name(a));
    const Budget budget{std::nullopt, 2500};
    SearchResult x = run_search(m1, config, budget, 17);
    SearchResult y = run_search(m1, config, budget, 17);
    CHECK(x.best.score == y.best.score);
    CHECK(x.best.moves == y.best.moves);
    CHECK(x.playouts == y.playouts);
    if (a == Algorithm::Playout) {
      CHECK(x.playouts == 1);
    } else {
      CHECK(x.playouts >= 2500);
    }
  }
}

TEST_CASE("budgeted searches relaunch until the budget is spent") {
  AlgoConfig config;
  config.algorithm = Algorithm::Nmcs;
  config.level = 1;
  SearchResult r = run_search(testutil::molecule(2), config, Budget{std::nullopt, 5000}, 3);
  CHECK(r.iterations > 1);
  CHECK(r.interrupted);
  CHECK(r.playouts == 5000);
}

TEST_CASE("unbudgeted searches run once") {
  AlgoConfig config;
  config.algorithm = Algorithm::Lnmcs;
  config.level = 1;
  config.eval_playouts = 2;
  SearchResult r = run_search(testutil::seq("HPHPPHHPHPPHPHHPPHPH"), config, {}, 3);
  CHECK(r.iterations == 1);
  CHECK_FALSE(r.interrupted);
}

TEST_CASE("a target stops the search") {
  AlgoConfig config;
  config.algorithm = Algorithm::Nmcs;
  config.level = 2;
  config.dim = Dimension::Two;
  SearchResult r =
      run_search(testutil::seq("HPHPPHHPHPPHPHHPPHPH"), config, Budget{60.0, std::nullopt}, 3, 4.0);
  CHECK(r.best.score >= 4.0);
  CHECK(r.interrupted);
  CHECK(r.elapsed_seconds < 60.0);
}

TEST_CASE("the recursion trace is exposed") {
  AlgoConfig config;
  config.algorithm = Algorithm::Nmcs;
  config.level = 1;
  config.dim = Dimension::Two;
  std::vector<RecursionEvent> trace;
  run_search(testutil::seq("HPPH"), config, {}, 1, std::nullopt, &trace);
  // One level-0 call per legal child at each of the three plies: 1 + 2 + 3.
  CHECK(trace.size() == 6);
  for (const RecursionEvent& e : trace) CHECK(e.level == 0);
}
