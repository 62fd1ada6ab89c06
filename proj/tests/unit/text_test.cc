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

#include "seerkit/text.h"

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support/fixtures.h"

namespace seerkit::text {
namespace {

using Segments = std::vector<Segment>;

TEST(PorterStem, ReferenceVectors) {
  std::ifstream in(testing::data_path("porter_vectors.txt"));
  ASSERT_TRUE(in) << "missing porter vectors";
  std::string line;
  size_t checked = 0, wrong = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word, stem;
    fields >> word >> stem;
    if (porter_stem(word) != stem) {
      if (++wrong < 10) ADD_FAILURE() << word << " -> " << porter_stem(word) << " want " << stem;
    }
    ++checked;
  }
  EXPECT_GT(checked, 9000u);
  EXPECT_EQ(wrong, 0u);
}

TEST(PorterStem, ClassicExamples) {
  EXPECT_EQ(porter_stem("caresses"), "caress");
  EXPECT_EQ(porter_stem("ponies"), "poni");
  EXPECT_EQ(porter_stem("relational"), "relat");
  EXPECT_EQ(porter_stem("mining"), "mine");
  EXPECT_EQ(porter_stem("networks"), "network");
}

TEST(PorterStem, NonAsciiUntouched) {
  EXPECT_EQ(porter_stem("\xCE\xB1\xCE\xB2"), "\xCE\xB1\xCE\xB2");
  EXPECT_EQ(porter_stem(""), "");
}

TEST(StemToken, Fixpoint) {
  EXPECT_EQ(stem_token("acceleration"), stem_token(stem_token("acceleration")));
}

TEST(Segment, LowercasesAndFoldsLatin) {
  EXPECT_EQ(segment_words("Fran\xC3\xA7ois D\xC3\xBCrer"),
            (Segments{{"francois", "durer"}}));
}

TEST(Segment, ClausePunctuationSplits) {
  EXPECT_EQ(segment_words("data, mining: rules. now"),
            (Segments{{"data"}, {"mining"}, {"rules"}, {"now"}}));
}

TEST(Segment, JoinersStayInSegment) {
  EXPECT_EQ(segment_words("k-means and Zipf's law"),
            (Segments{{"k", "means", "and", "zipf", "s", "law"}}));
}

TEST(Segment, EmptyAndPunctuationOnly) {
  EXPECT_TRUE(segment_words("").empty());
  EXPECT_TRUE(segment_words(" ,;. ").empty());
}

TEST(Normalize, TokensAreStemmed) {
  EXPECT_EQ(normalize_tokens("Data Mining"), (std::vector<std::string>{"data", "mine"}));
}

TEST(Normalize, IdempotentOnRandomText) {
  std::mt19937_64 rng(7);
  std::ifstream in(testing::data_path("porter_vectors.txt"));
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line.substr(0, line.find(' ')));
  }
  ASSERT_FALSE(words.empty());
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  for (int round = 0; round < 300; ++round) {
    std::string s;
    for (int i = 0; i < 6; ++i) s += words[pick(rng)] + (i % 3 == 2 ? ", " : " ");
    const auto once = normalize_tokens(s);
    EXPECT_EQ(normalize_tokens(join(once)), once) << s;
  }
}

TEST(JoinSplit, RoundTrip) {
  const std::vector<std::string> toks = {"a", "bc", "d"};
  EXPECT_EQ(join(toks), "a bc d");
  EXPECT_EQ(split(join(toks)), toks);
  EXPECT_TRUE(split("").empty());
  EXPECT_EQ(split("  a  b "), (std::vector<std::string>{"a", "b"}));
}

TEST(CountWords, CountsAcrossSegments) {
  EXPECT_EQ(count_words("one two, three."), 3u);
  EXPECT_EQ(count_words(""), 0u);
}

}  // namespace
}  // namespace seerkit::text
