#include <doctest.h>

#include <random>

#include "kmm/generate.hpp"
#include "kmm/oracle.hpp"
#include "kmm/pipeline.hpp"
#include "support.hpp"

using namespace kmm;
using test::sym;

namespace {

MatchConfig paper(std::size_t k, std::uint64_t seed = 7) {
  MatchConfig cfg;
  cfg.k = k;
  cfg.seed = seed;
  cfg.algorithm = Algorithm::Paper;
  return cfg;
}

SymbolString repeat(std::string_view unit, std::size_t times) {
  std::string s;
  for (std::size_t i = 0; i < times; ++i) s += unit;
  return sym(s);
}

}  // namespace

TEST_CASE("algorithm names round trip") {
  for (auto a : {Algorithm::Auto, Algorithm::Brute, Algorithm::LandauVishkin,
                 Algorithm::Abrahamson, Algorithm::Paper}) {
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  }
  CHECK_FALSE(parse_algorithm("fast").has_value());
}

TEST_CASE("single window when n = m") {
  const auto t = sym("abracadabra");
  MatchStats stats;
  CHECK(match_all(t, t, paper(2), &stats) == oracle::brute_distances(t, t, 2));
  CHECK(stats.windows == 1);
}

TEST_CASE("periodic text with a periodic pattern") {
  const auto t = repeat("ab", 64), p = repeat("ab", 16);
  MatchStats stats;
  CHECK(match_all(t, p, paper(3), &stats) == oracle::brute_distances(t, p, 3));
  CHECK(stats.small_period);
  CHECK(stats.period == 2);
}

TEST_CASE("every algorithm agrees with the oracle") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + rng() % 120, n = m + rng() % 400;
    const bool periodic = trial % 2 == 0;
    const auto inst = periodic ? gen::periodic_instance({n, m, 1 + rng() % 4, 2 + rng() % 3,
                                                         rng() % 6, rng() % 20, rng()})
                               : gen::random_instance(n, m, 2 + rng() % 30, rng(), 3, 2);
    const std::size_t k = rng() % (m + 2);
    const auto truth = oracle::brute_distances(inst.text, inst.pattern, k);
    for (auto a : {Algorithm::Auto, Algorithm::Brute, Algorithm::LandauVishkin,
                   Algorithm::Abrahamson, Algorithm::Paper}) {
      auto cfg = paper(k, rng());
      cfg.algorithm = a;
      CHECK(match_all(inst.text, inst.pattern, cfg) == truth);
    }
  }
}

TEST_CASE("both branches are exercised and exact") {
  std::mt19937_64 rng(127);
  int small = 0, large = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 64 + rng() % 200, k = 2 + rng() % 10;
    const bool periodic = trial % 2 == 0;
    const auto inst = periodic ? gen::periodic_instance({3 * m, m, 1 + rng() % 3, 3, k / 2, 3 * k, rng()})
                               : gen::random_instance(3 * m, m, 26, rng(), 2, k);
    MatchStats stats;
    CHECK(match_all(inst.text, inst.pattern, paper(k, rng()), &stats) ==
          oracle::brute_distances(inst.text, inst.pattern, k));
    (stats.small_period ? small : large)++;
  }
  CHECK(small >= 10);
  CHECK(large >= 10);
}

TEST_CASE("k = 0 reports exact occurrences only") {
  const auto t = sym("abcabdabcabc"), p = sym("abc");
  const auto r = match_all(t, p, paper(0));
  CHECK(r == oracle::brute_distances(t, p, 0));
  CHECK(r.entries[0] == Distance(0));
  CHECK_FALSE(r.entries[1].has_value());
  const auto u = repeat("a", 40), q = repeat("a", 8);
  CHECK(match_all(u, q, paper(0)) == oracle::brute_distances(u, q, 0));
}

TEST_CASE("k >= m is answered exactly") {
  const auto t = sym("abab"), p = sym("ab");
  MatchStats stats;
  const auto r = match_all(t, p, paper(5), &stats);
  CHECK(stats.downgraded);
  CHECK(r == test::report(5, {0, 2, 0}));
}

TEST_CASE("thread count does not change the result") {
  const auto inst = gen::periodic_instance({5000, 300, 3, 4, 4, 40, 5});
  auto one = paper(10);
  one.threads = 1;
  CHECK(match_all(inst.text, inst.pattern, one) == match_all(inst.text, inst.pattern, paper(10)));
  const auto rnd = gen::random_instance(5000, 300, 8, 6, 5, 5);
  CHECK(match_all(rnd.text, rnd.pattern, one) == match_all(rnd.text, rnd.pattern, paper(10)));
}

TEST_CASE("window_match") {
  const auto inst = gen::periodic_instance({200, 100, 2, 3, 2, 6, 11});
  CHECK(window_match(inst.text, inst.pattern, paper(6)) ==
        oracle::brute_distances(inst.text, inst.pattern, 6));
  const auto rnd = gen::random_instance(200, 100, 26, 12, 1, 3);
  CHECK(window_match(rnd.text, rnd.pattern, paper(6)) ==
        oracle::brute_distances(rnd.text, rnd.pattern, 6));
  CHECK_THROWS_AS(window_match(sym("abcdefg"), sym("ab"), paper(1)), std::invalid_argument);
}

TEST_CASE("match_all rejects bad shapes") {
  CHECK_THROWS_AS(match_all(sym("abc"), sym(""), paper(1)), std::invalid_argument);
  CHECK_THROWS_AS(match_all(sym("ab"), sym("abc"), paper(1)), std::invalid_argument);
}
