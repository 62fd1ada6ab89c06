// Copyright 2026 The seerkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seerkit/eval.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "seerkit/error.h"
#include "support/fixtures.h"
#include "support/oracle.h"

namespace seerkit {
namespace {

using Names = std::vector<std::string>;

std::vector<Names> data_mining_lists() {
  std::vector<Names> lists;
  for (const char* f : {"consensus_csseer.json", "consensus_arnetminer.json", "consensus_mas.json"}) {
    lists.push_back(read_run(testing::data_path(f)).results.at("data mining"));
  }
  return lists;
}

std::vector<size_t> consensus(const std::vector<Names>& lists, int n, NameMatch m) {
  std::vector<size_t> out;
  for (size_t i = 0; i < lists.size(); ++i) out.push_back(consensus_at_n(lists, i, n, m));
  return out;
}

using V = std::vector<size_t>;

TEST(Consensus, DataMiningListsVerbatim) {
  auto lists = data_mining_lists();
  EXPECT_EQ(consensus(lists, 3, NameMatch::kVerbatim), (V{2, 3, 2}));
  EXPECT_EQ(consensus(lists, 5, NameMatch::kVerbatim), (V{2, 3, 2}));
  EXPECT_EQ(consensus(lists, 10, NameMatch::kVerbatim), (V{3, 4, 2}));
}

// "Mohammed Javeed Zaki" and "Mohammed J. Zaki" share the key "m zaki", so
// the third list gains one match at n = 10.
TEST(Consensus, DataMiningListsNormalized) {
  auto lists = data_mining_lists();
  EXPECT_EQ(consensus(lists, 3, NameMatch::kNormalized), (V{2, 3, 2}));
  EXPECT_EQ(consensus(lists, 5, NameMatch::kNormalized), (V{2, 3, 2}));
  EXPECT_EQ(consensus(lists, 10, NameMatch::kNormalized), (V{3, 4, 3}));
}

TEST(Consensus, IdenticalRunsFullOverlap) {
  Names a = {"A One", "B Two", "C Three", "D Four"};
  std::vector<Names> lists = {a, a};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(consensus(lists, n, NameMatch::kNormalized), (V(2, n)));
}

TEST(Consensus, DuplicatesCollapseAndUnusableSkipped) {
  std::vector<Names> lists = {{"M. Jordan", "Michael Jordan", "..."}, {"m jordan"}};
  EXPECT_EQ(consensus_at_n(lists, 0, 3), 1u);
  EXPECT_EQ(top_name_keys({"M. Jordan", "Michael Jordan", "...", "X Y"}, 2,
                          NameMatch::kNormalized),
            (Names{"m jordan"}));
  EXPECT_EQ(top_name_keys({"M. Jordan", "Michael Jordan", "...", "X Y"}, 4,
                          NameMatch::kNormalized),
            (Names{"m jordan", "x y"}));
}

TEST(Consensus, Errors) {
  std::vector<Names> lists = {{"a"}, {"b"}};
  EXPECT_THROW(consensus_at_n(lists, 0, 0), Error);
  EXPECT_THROW(consensus_at_n(lists, 2, 3), Error);
  std::vector<Names> one = {{"a"}};
  EXPECT_THROW(consensus_at_n(one, 0, 3), Error);
}

TEST(Consensus, RandomInvariants) {
  std::mt19937_64 rng(3);
  Names pool;
  for (int i = 0; i < 15; ++i) pool.push_back("Person" + std::to_string(i) + " Surname" + std::to_string(i % 9));
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1), sys(2, 5), len(0, 12);
  for (int round = 0; round < 300; ++round) {
    std::vector<Names> lists(sys(rng));
    for (auto& l : lists) {
      for (size_t i = 0, n = len(rng); i < n; ++i) l.push_back(pool[pick(rng)]);
    }
    for (size_t i = 0; i < lists.size(); ++i) {
      size_t prev = 0;
      for (int n = 1; n <= 12; ++n) {
        const size_t s = consensus_at_n(lists, i, n);
        EXPECT_LE(s, static_cast<size_t>(n));
        EXPECT_GE(s, prev);
        prev = s;
      }
      // permuting the other systems changes nothing
      std::vector<Names> perm = lists;
      std::swap(perm[i], perm[0]);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      for (int n : {3, 5, 10}) EXPECT_EQ(consensus_at_n(perm, 0, n), consensus_at_n(lists, i, n));
    }
  }
}

TEST(Precision, BasicAndShortRuns) {
  Names truth = {"A One", "B Two", "C Three"};
  EXPECT_EQ(precision_at_k({"A One", "B Two", "C Three"}, truth, 3), 1.0);
  EXPECT_EQ(precision_at_k({"X", "Y", "Z"}, truth, 3), 0.0);
  EXPECT_DOUBLE_EQ(precision_at_k({"A. One"}, truth, 3), 1.0 / 3);
  EXPECT_DOUBLE_EQ(precision_at_k({"A. One"}, truth, 3, NameMatch::kVerbatim), 0.0);
  EXPECT_THROW(precision_at_k(truth, truth, 0), Error);
}

TEST(Precision, ValuesOnTheKGrid) {
  std::mt19937_64 rng(9);
  Names pool;
  for (int i = 0; i < 20; ++i) pool.push_back("P" + std::to_string(i) + " Q" + std::to_string(i));
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1), len(0, 15);
  for (int round = 0; round < 300; ++round) {
    Names run, truth;
    for (size_t i = 0, n = len(rng); i < n; ++i) run.push_back(pool[pick(rng)]);
    for (size_t i = 0, n = len(rng) + 1; i < n; ++i) truth.push_back(pool[pick(rng)]);
    for (int k : {1, 3, 5, 10}) {
      const double p = precision_at_k(run, truth, k);
      const double scaled = p * k;
      EXPECT_NEAR(scaled, std::round(scaled), 1e-12);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
  }
}

TEST(Precision, RunEqualToTruthScoresOne) {
  Names truth;
  for (int i = 0; i < 10; ++i) truth.push_back("Expert" + std::to_string(i) + " Name" + std::to_string(i));
  for (int k : {3, 5, 10}) EXPECT_EQ(precision_at_k(truth, truth, k), 1.0);
}

TEST(Files, ParseAndReject) {
  SystemRun run = parse_run(nlohmann::json::parse(R"({"system":"s","results":{"q":["A B"]}})"));
  EXPECT_EQ(run.system, "s");
  EXPECT_EQ(run.results.at("q"), Names{"A B"});
  EXPECT_THROW(parse_run(nlohmann::json::parse(R"({"results":{}})")), Error);
  EXPECT_THROW(parse_run(nlohmann::json::parse(R"({"system":"s","results":{"q":[1]}})")), Error);
  GroundTruth t = parse_truth(nlohmann::json::parse(R"({"q":["A B","C D"]})"));
  EXPECT_EQ(t.at("q").size(), 2u);
  EXPECT_THROW(parse_truth(nlohmann::json::parse("[]")), Error);
  try {
    read_truth("/nonexistent/truth.json");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(Report, ShapeAndMacroAverages) {
  std::vector<SystemRun> runs = {
      {"one", {{"q1", {"A A", "B B", "C C"}}, {"q2", {"D D"}}}},
      {"two", {{"q1", {"A A", "X X", "Y Y"}}}},
  };
  GroundTruth truth = {{"q1", {"A A", "B B"}}, {"q2", {"D D"}}};
  EvalOptions opts;
  opts.ns = {3};
  opts.ks = {1, 3};
  nlohmann::json r = evaluate(runs, truth, opts);
  EXPECT_EQ(r["name_match"], "normalized");
  ASSERT_EQ(r["systems"].size(), 2u);
  const auto& one = r["systems"][0];
  EXPECT_EQ(one["queries"]["q1"]["S@3"], 1);
  EXPECT_EQ(one["queries"]["q2"]["S@3"], 0);  // the other system has no q2 list
  EXPECT_DOUBLE_EQ(one["queries"]["q1"]["P@3"].get<double>(), 2.0 / 3);
  EXPECT_DOUBLE_EQ(one["macro"]["P@1"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(one["macro"]["S@3"].get<double>(), 0.5);
  const auto& two = r["systems"][1];
  EXPECT_DOUBLE_EQ(two["queries"]["q2"]["P@3"].get<double>(), 0.0);
  EXPECT_FALSE(evaluate(runs, std::nullopt, opts)["systems"][0]["queries"]["q1"].contains("P@1"));
  opts.ns = {0};
  EXPECT_THROW(evaluate(runs, truth, opts), Error);
}

TEST(GsStar, FavoursOffTopicCitations) {
  IndexConfig cfg;
  cfg.lm.mu = 10;
  auto index = Index::build(testing::corpus_of(testing::gs_star_documents()),
                            testing::lexicon_of({"graph mine"}), cfg, 1);
  RankConfig rc = RankConfig::from(cfg);
  Query q = make_query("graph mining", index->lexicon());
  ASSERT_TRUE(q.in_lexicon);
  const Corpus& corpus = index->corpus();

  RankedList gs = gs_star_rank(*index, q, 10, rc);
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(corpus.author(gs[0].id).id, "f fay");
  EXPECT_EQ(gs[0].score, 3.0);
  EXPECT_EQ(corpus.author(gs[1].id).id, "o topic");
  EXPECT_EQ(gs[1].score, 1.0);

  // |a1| = 20, |a2| = 3, |b1| = 3, |c| = 1, |D| = 27, c(q, D) = 4, mu = 10
  const double bg = 4.0 / 27;
  const double fay = std::log(4.0) * (10.0 / 30) * bg;  // a2 is uncited
  const double ona = std::log(2.0) * (3.0 / 13 + 10.0 / 13 * bg);
  RankedList ex = rank_experts(*index, q, 10, rc);
  ASSERT_GE(ex.size(), 2u);
  EXPECT_EQ(corpus.author(ex[0].id).id, "o topic");
  EXPECT_NEAR(ex[0].score, ona, 1e-12);
  EXPECT_EQ(corpus.author(ex[1].id).id, "f fay");
  EXPECT_NEAR(ex[1].score, fay, 1e-12);
}

TEST(GsStar, MatchesOracle) {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    auto f = testing::make_fixture(seed);
    auto index = testing::index_of(f, 10, seed % 2 ? 1000 : 4);
    testing::Oracle oracle(f.docs, f.phrases, 10);
    RankConfig rc = RankConfig::from(index->config());
    for (const auto& raw : {f.probe_words[0], f.probe_words[1] + " " + f.probe_words[2],
                            *f.phrases.begin()}) {
      Query q = make_query(raw, index->lexicon());
      testing::Scored got;
      for (const auto& e : gs_star_rank(*index, q, 1000, rc)) {
        got.emplace_back(index->corpus().author(e.id).id, e.score);
      }
      EXPECT_EQ(got, oracle.gs_star(raw, index->config().oov.top_n)) << raw;
    }
  }
}

TEST(GsStar, SingleAuthorCorpus) {
  std::vector<Document> docs(2);
  docs[0].id = "x";
  docs[0].title = "graph";
  docs[0].authors = {"Only One"};
  docs[1].id = "y";
  docs[1].title = "web";
  docs[1].authors = {"Only One"};
  docs[1].citations = {"x"};
  auto index = Index::build(testing::corpus_of(docs), testing::lexicon_of({}), IndexConfig{}, 1);
  RankedList gs = gs_star_rank(*index, make_query("graph", index->lexicon()), 5,
                               RankConfig::from(index->config()));
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].score, 1.0);
}

}  // namespace
}  // namespace seerkit
