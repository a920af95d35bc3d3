#include <array>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "hpfold/playout.hpp"
#include "test_util.hpp"

using namespace hpfold;
using testutil::seq;

TEST_CASE("softmax_probabilities") {
  std::array<double, 3> p{};
  softmax_probabilities(std::array<double, 3>{0, 0, 0}, p);
  for (double v : p) CHECK(v == doctest::Approx(1.0 / 3));

  std::array<double, 2> two{};
  const double bias = 0.0;
  softmax_probabilities(std::array<double, 2>{1.0 * bias, 0.0 * bias}, two);
  CHECK(two[0] == doctest::Approx(0.5));

  softmax_probabilities(std::array<double, 2>{20.0, 0.0}, two);
  const double e20 = std::exp(20.0);
  CHECK(two[0] == doctest::Approx(e20 / (e20 + 1)).epsilon(1e-12));

  std::array<double, 0> none{};
  CHECK_THROWS_AS(softmax_probabilities(none, std::span<double>{}), ContractViolation);
}

TEST_CASE("softmax is shift invariant and normalized") {
  RngStream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> w(1 + rng.next_u64() % 6);
    for (double& x : w) x = 80.0 * rng.uniform() - 40.0;
    std::vector<double> shifted = w;
    const double c = 500.0 * rng.uniform() - 250.0;
    for (double& x : shifted) x += c;
    std::vector<double> p(w.size()), q(w.size());
    softmax_probabilities(w, p);
    softmax_probabilities(shifted, q);
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(p[i] == doctest::Approx(q[i]).epsilon(1e-9));
      CHECK(std::isfinite(p[i]));
      total += p[i];
    }
    CHECK(total == doctest::Approx(1.0));
  }
}

TEST_CASE("softmax_choice") {
  RngStream rng(9);
  const std::array<Move, 2> moves{Move::PosX, Move::PosY};
  CHECK_THROWS_AS(softmax_choice(std::span<const Move>{}, std::span<const double>{}, rng),
                  ContractViolation);

  // A lone candidate consumes no randomness.
  RngStream a(4), b(4);
  const std::array<Move, 1> lone{Move::NegZ};
  CHECK(softmax_choice(lone, std::array<double, 1>{7.0}, a) == Move::NegZ);
  CHECK(a.next_u64() == b.next_u64());

  // Extreme weights stay well defined.
  for (int i = 0; i < 100; ++i)
    CHECK(softmax_choice(moves, std::array<double, 2>{1000.0, 0.0}, rng) == Move::PosX);
}

TEST_CASE("softmax_choice frequencies follow the distribution") {
  RngStream rng(101);
  const std::array<Move, 3> moves{Move::PosX, Move::PosY, Move::NegY};
  const std::array<double, 3> w{1.0, 0.0, -0.2};
  std::array<double, 3> p{};
  softmax_probabilities(w, p);
  std::array<int, 3> hits{};
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    Move m = softmax_choice(moves, w, rng);
    for (int k = 0; k < 3; ++k) hits[k] += m == moves[k];
  }
  for (int k = 0; k < 3; ++k) CHECK(std::abs(hits[k] / double(draws) - p[k]) < 0.005);
}

TEST_CASE("playout from a terminal state") {
  RngStream rng(1);
  ChainState done = replay(seq("HPPH"), Dimension::Two, moves_from_string("URD"));
  ScoredSequence r = playout(done, PlayoutParams{}, rng);
  CHECK(r.score == 1.0);
  CHECK(r.moves.empty());
}

TEST_CASE("playout result replays to its score") {
  RngStream rng(8);
  ChainState root(testutil::molecule(1), Dimension::Three);
  for (int i = 0; i < 50; ++i) {
    ScoredSequence r = playout(root, PlayoutParams{}, rng);
    ChainState end = replay(testutil::molecule(1), Dimension::Three, r.moves, true);
    CHECK(end.is_terminal());
    CHECK(score(end) == r.score);
  }
}

TEST_CASE("playout is deterministic per seed") {
  ChainState root(testutil::molecule(3), Dimension::Three);
  RngStream a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    ScoredSequence x = playout(root, PlayoutParams{}, a);
    ScoredSequence y = playout(root, PlayoutParams{}, b);
    CHECK(x.score == y.score);
    CHECK(x.moves == y.moves);
  }
  ChainState in_place = root;
  RngStream c(42), d(42);
  playout_in_place(in_place, PlayoutParams{}, c);
  CHECK(std::vector<Move>(in_place.moves().begin(), in_place.moves().end()) ==
        playout(root, PlayoutParams{}, d).moves);
}

TEST_CASE("biased growth beats uniform growth on HPPH") {
  ChainState root(seq("HPPH"), Dimension::Two, false);
  RngStream rng(55);
  double biased = 0.0, uniform = 0.0;
  for (int i = 0; i < 10000; ++i) {
    biased += playout(root, PlayoutParams{20.0, {}}, rng).score;
    uniform += playout(root, PlayoutParams{0.0, {}}, rng).score;
  }
  CHECK(biased > uniform);
  CHECK(uniform > 0.0);
}

TEST_CASE("single biased playouts on molecule 1 average about 15") {
  ChainState root(testutil::molecule(1), Dimension::Three);
  RngStream rng(2);
  double total = 0.0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) total += playout(root, PlayoutParams{}, rng).score;
  const double mean = total / n;
  MESSAGE("mean single-playout score " << mean);
  CHECK(mean > 14.0);
  CHECK(mean < 15.5);
}
