#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hypergiant/binomial.hpp"
#include "hypergiant/combinatorics.hpp"
#include "hypergiant/hypergraph.hpp"
#include "hypergiant/hypergraph_io.hpp"
#include "hypergiant/rng.hpp"
#include "hypergiant/stats.hpp"
#include "hypergiant/subset.hpp"
#include "oracles.hpp"

namespace hg = hypergiant;

TEST(CountSubsets, SmallValuesAndConventions) {
  EXPECT_EQ(hg::to_string(*hg::count_subsets(8, 1).exact), "8");
  EXPECT_EQ(hg::to_string(*hg::count_subsets(5, 3).exact), "10");
  EXPECT_TRUE(hg::count_subsets(7, -1).is_zero());
  EXPECT_TRUE(hg::count_subsets(3, 4).is_zero());
  EXPECT_EQ(hg::count_subsets(0, 0).value(), 1.0);
}

TEST(CountSubsets, LargeExactAndLogCompanion) {
  // C(100, 50) = 100891344545564193334812497256.
  const auto c = hg::count_subsets(100, 50);
  ASSERT_TRUE(c.exact.has_value());
  EXPECT_EQ(hg::to_string(*c.exact), "100891344545564193334812497256");
  EXPECT_NEAR(c.log_value, std::lgamma(101.0) - 2.0 * std::lgamma(51.0), 1e-9);
  // Beyond 128 bits only the log value remains.
  const auto big = hg::count_subsets(1000, 500);
  EXPECT_FALSE(big.exact.has_value());
  EXPECT_NEAR(big.log_value, std::lgamma(1001.0) - 2.0 * std::lgamma(501.0), 1e-8);
}

TEST(Combinatorics, ChooseRealAndFallingFactorial) {
  EXPECT_EQ(hg::choose_real(99999.0, 2), 99999.0 * 99998.0 / 2.0);
  EXPECT_EQ(hg::choose_real(10.0, -1), 0.0);
  EXPECT_EQ(hg::choose_real(3.0, 4), 0.0);
  EXPECT_EQ(hg::choose_real(50.0, 25), 126410606437752.0);
  EXPECT_NEAR(hg::choose_real(60.0, 30), 118264581564861424.0, 1e-14 * 118264581564861424.0);
  for (double n : {50.0, 1e6, 1e12}) {
    double direct = 0.0;
    for (int i = 0; i < 40; ++i) direct += std::log(n - i);
    EXPECT_NEAR(hg::log_falling_factorial(n, 40), direct, 1e-10 * std::abs(direct));
  }
}

TEST(Rng, ReproducibleAndStreamDistinct) {
  hg::RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs_c = differs_c || x != c.next();
    differs_d = differs_d || x != d.next();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_d);
}

TEST(Rng, UniformAndBelowRanges) {
  hg::RngStream rng(1, 0);
  double sum = 0.0;
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 700000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    ++counts[rng.below(7)];
  }
  EXPECT_NEAR(sum / 700000.0, 0.5, 0.003);
  for (int c : counts) EXPECT_NEAR(c, 100000, 1500);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(Rng, SplitMixKnownValue) {
  // Reference output of SplitMix64 from state 0.
  std::uint64_t state = 0;
  EXPECT_EQ(hg::splitmix64(state), 0xE220A8397B1DCDAFULL);
}

TEST(Binomial, DegenerateCases) {
  hg::RngStream rng(5, 0);
  EXPECT_EQ(hg::sample_binomial(1e12, 0.0, rng), 0u);
  EXPECT_EQ(hg::sample_binomial(37.0, 1.0, rng), 37u);
  EXPECT_EQ(hg::sample_binomial(0.0, 0.3, rng), 0u);
  EXPECT_THROW(hg::sample_binomial(10.0, 1.5, rng), std::invalid_argument);
  EXPECT_THROW(hg::sample_binomial(10.0, -0.1, rng), std::invalid_argument);
  EXPECT_THROW(hg::sample_binomial(1e12, 0.01, rng), std::invalid_argument);  // mean above bound
  EXPECT_THROW(hg::sample_binomial(2.5, 0.5, rng), std::invalid_argument);
}

TEST(Binomial, HugeNMoments) {
  const hg::BinomialDistribution dist(1e14, 2.5e-14);
  hg::RngStream rng(9, 0);
  std::vector<double> draws(1000000);
  for (auto& x : draws) x = static_cast<double>(dist(rng));
  const auto s = hg::summarize(draws);
  EXPECT_LE(std::abs(s.mean - 2.5), 3.0 * s.standard_error);
  EXPECT_NEAR(s.variance / 2.5, 1.0, 0.05);
}

TEST(Binomial, MatchesPmfOnSmallN) {
  const hg::BinomialDistribution dist(12.0, 0.3);
  hg::RngStream rng(11, 0);
  std::vector<std::int64_t> draws(400000);
  for (auto& x : draws) x = static_cast<std::int64_t>(dist(rng));
  const auto emp = hg::empirical_distribution(draws, 12);
  std::vector<double> exact(13);
  for (int k = 0; k <= 12; ++k) {
    exact[k] = std::exp(std::lgamma(13.0) - std::lgamma(k + 1.0) - std::lgamma(13.0 - k) + k * std::log(0.3) +
                        (12 - k) * std::log(0.7));
    EXPECT_NEAR(std::exp(hg::binomial_log_pmf(12.0, 0.3, k)), exact[k], 1e-12);
  }
  EXPECT_LE(hg::total_variation(emp, exact), 0.005);
}

TEST(Binomial, LargeMeanMoments) {
  // Edge count of G^3(10^5, p): mean 25000.
  const double n = hg::choose_real(1e5, 3);
  const double p = hg::edge_probability(3, 1.5, 100000);
  const hg::BinomialDistribution dist(n, p);
  hg::RngStream rng(13, 0);
  std::vector<double> draws(20000);
  for (auto& x : draws) x = static_cast<double>(dist(rng));
  const auto s = hg::summarize(draws);
  EXPECT_LE(std::abs(s.mean - n * p), 4.0 * s.standard_error);
  EXPECT_NEAR(s.variance / (n * p * (1 - p)), 1.0, 0.05);
}

TEST(Subset, WholePoolAndRejection) {
  hg::RngStream rng(3, 0);
  const std::vector<std::uint32_t> pool{9, 4, 7};
  EXPECT_EQ(hg::sample_k_subset(pool, 3, rng), (std::vector<std::uint32_t>{4, 7, 9}));
  EXPECT_THROW(hg::sample_k_subset(pool, 4, rng), std::invalid_argument);
}

TEST(Subset, UniformOverAllTriples) {
  hg::RngStream rng(4, 0);
  const std::vector<std::uint32_t> pool{1, 2, 3, 4, 5};
  std::map<std::vector<std::uint32_t>, int> counts;
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) {
    const auto s = hg::sample_k_subset(pool, 3, rng);
    ASSERT_TRUE(s[0] < s[1] && s[1] < s[2]);
    ++counts[s];
  }
  ASSERT_EQ(counts.size(), 10u);
  double chi2 = 0.0;
  for (const auto& [s, c] : counts) {
    EXPECT_NEAR(c / static_cast<double>(draws), 0.1, 0.003);
    chi2 += (c - draws / 10.0) * (c - draws / 10.0) / (draws / 10.0);
  }
  EXPECT_LT(chi2, 27.88);  // 99.9% quantile, 9 degrees of freedom
}

TEST(Hypergraph, ValidatesAndCanonicalizes) {
  const hg::Hypergraph h(5, 3, {3, 4, 5, 1, 2, 3});
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.edge(0)[0], 1u);
  EXPECT_THROW(hg::Hypergraph(5, 3, {1, 2, 2}), std::invalid_argument);
  EXPECT_THROW(hg::Hypergraph(5, 3, {1, 2, 6}), std::invalid_argument);
  EXPECT_THROW(hg::Hypergraph(5, 3, {0, 2, 3}), std::invalid_argument);
  EXPECT_THROW(hg::Hypergraph(5, 3, {1, 2, 3, 1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(hg::Hypergraph(5, 3, {1, 2}), std::invalid_argument);
}

TEST(Hypergraph, IncidenceListsMatchEdges) {
  const hg::Hypergraph h(6, 3, {1, 2, 3, 3, 4, 5});
  const hg::Incidence inc(h);
  EXPECT_EQ(inc.edges_of(3).size(), 2u);
  EXPECT_EQ(inc.edges_of(6).size(), 0u);
  for (hg::Vertex v = 1; v <= 6; ++v) {
    for (auto e : inc.edges_of(v)) {
      const auto edge = h.edge(e);
      EXPECT_NE(std::find(edge.begin(), edge.end(), v), edge.end());
    }
  }
}

TEST(Sampler, ZeroProbabilityAndDeterminism) {
  hg::RngStream rng(1, 0);
  const auto empty = hg::sample_hypergraph(hg::ModelParams::from_probability(3, 0.0, 50), rng);
  EXPECT_EQ(empty.edge_count(), 0u);
  const auto params = hg::ModelParams::make(3, 1.5, 2000);
  hg::RngStream a(77, 5), b(77, 5);
  const auto ha = hg::sample_hypergraph(params, a);
  const auto hb = hg::sample_hypergraph(params, b);
  EXPECT_EQ(ha, hb);
  std::ostringstream sa, sb;
  hg::write_hgr(sa, ha);
  hg::write_hgr(sb, hb);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Sampler, EdgeMarginalsAndIndependence) {
  const auto params = hg::ModelParams::from_probability(3, 0.1, 5);
  int first = 0, second = 0, both = 0;
  const int reps = 100000;
  for (int r = 0; r < reps; ++r) {
    hg::RngStream rng(21, static_cast<std::uint64_t>(r));
    const auto h = hg::sample_hypergraph(params, rng);
    bool a = false, b = false;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      const auto edge = h.edge(e);
      a = a || (edge[0] == 1 && edge[1] == 2 && edge[2] == 3);
      b = b || (edge[0] == 1 && edge[1] == 2 && edge[2] == 4);
    }
    first += a;
    second += b;
    both += a && b;
  }
  EXPECT_NEAR(first / double(reps), 0.1, 0.003);
  EXPECT_NEAR(second / double(reps), 0.1, 0.003);
  const double cov = both / double(reps) - (first / double(reps)) * (second / double(reps));
  EXPECT_NEAR(cov, 0.0, 0.003);
}

TEST(Sampler, EdgeSetLawMatchesCoinFlips) {
  // N = 5, d = 3: 1024 edge sets. Exact law is p^|E| (1-p)^(10-|E|).
  const double p = 0.1;
  const auto params = hg::ModelParams::from_probability(3, p, 5);
  const auto edges = oracle::all_edges(5, 3);
  const int reps = 1000000;
  std::vector<std::int64_t> masks, flips;
  masks.reserve(reps);
  flips.reserve(reps);
  hg::RngStream rng(8, 0), coins(8, 1);
  for (int r = 0; r < reps; ++r) {
    const auto h = hg::sample_hypergraph(params, rng);
    std::int64_t mask = 0;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      const auto edge = h.edge(e);
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (edges[j][0] == int(edge[0]) && edges[j][1] == int(edge[1]) && edges[j][2] == int(edge[2])) {
          mask |= std::int64_t{1} << j;
        }
      }
    }
    masks.push_back(mask);
    std::int64_t flip = 0;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (coins.uniform() < p) flip |= std::int64_t{1} << j;
    }
    flips.push_back(flip);
  }
  const auto emp = hg::empirical_distribution(masks, 1023);
  std::vector<double> exact(1024);
  for (int m = 0; m < 1024; ++m) {
    const int k = __builtin_popcount(static_cast<unsigned>(m));
    exact[m] = std::pow(p, k) * std::pow(1 - p, 10 - k);
  }
  EXPECT_LE(hg::total_variation(emp, hg::empirical_distribution(flips, 1023)), 0.01);
  EXPECT_LE(hg::total_variation(emp, exact), 0.01);
}

TEST(Sampler, MeanEdgeCountAndRejections) {
  const auto params = hg::ModelParams::make(3, 1.5, 100000);
  double total = 0.0;
  std::uint64_t rejections = 0, target = 0;
  for (int r = 0; r < 20; ++r) {
    hg::RngStream rng(31, static_cast<std::uint64_t>(r));
    hg::SamplingStats stats;
    const auto h = hg::sample_hypergraph(params, rng, &stats);
    total += static_cast<double>(h.edge_count());
    rejections += stats.rejections;
    target += stats.target_edges;
  }
  EXPECT_NEAR(total / 20.0 / 25000.0, 1.0, 0.02);
  EXPECT_LT(static_cast<double>(rejections) / static_cast<double>(target), 1e-3);
}

TEST(HgrIo, RoundTrip) {
  const auto params = hg::ModelParams::make(4, 2.0, 300);
  hg::RngStream rng(5, 0);
  const auto h = hg::sample_hypergraph(params, rng);
  std::stringstream buffer;
  hg::write_hgr(buffer, h);
  const auto back = hg::read_hgr(buffer);
  EXPECT_EQ(back, h);
  EXPECT_EQ(back.seed(), 5u);
}

TEST(HgrIo, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return hg::read_hgr(in);
  };
  EXPECT_NO_THROW(parse("HGR v1 5 3 1 0\n1 2 3\n"));
  EXPECT_THROW(parse("HGR v2 5 3 1 0\n1 2 3\n"), std::invalid_argument);
  EXPECT_THROW(parse("HGR v1 5 3 2 0\n1 2 3\n"), std::invalid_argument);
  EXPECT_THROW(parse("HGR v1 5 3 1 0\n3 2 1\n"), std::invalid_argument);
  EXPECT_THROW(parse("HGR v1 5 3 1 0\n1 2 9\n"), std::invalid_argument);
  EXPECT_THROW(parse("HGR v1 5 3 1 0\n1 2 x\n"), std::invalid_argument);
  EXPECT_THROW(parse("HGR v1 5 3 2 0\n1 2 3\n1 2 3\n"), std::invalid_argument);
  EXPECT_THROW(parse(""), std::invalid_argument);
}
