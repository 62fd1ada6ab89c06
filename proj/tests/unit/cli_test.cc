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

// Runs the seerkit binary as a subprocess.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "support/fixtures.h"

namespace {

using nlohmann::json;
using seerkit::testing::TempDir;

struct Proc {
  int exit = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class Cli : public ::testing::Test {
 protected:
  // args are shell-quoted one by one; env is a prefix like "SEERKIT_ENGINE=..."
  Proc run(const std::vector<std::string>& args, const std::string& env = "") {
    std::string cmd = "env -u SEERKIT_ENGINE " + env + " " + quote(SEERKIT_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    const std::string err_path = tmp_.file("stderr.txt");
    cmd += " 2>" + quote(err_path);
    Proc r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
  }

  // Builds an engine for the fixture with a fixed lexicon; returns its dir.
  std::string build(const std::vector<seerkit::Document>& docs, const std::string& name,
                    double mu = 100) {
    const std::string corpus = tmp_.file(name + ".jsonl");
    seerkit::testing::write_jsonl(corpus, docs);
    const std::string dir = tmp_.file(name);
    Proc r = run({"build", "--corpus", corpus, "--lexicon", lexicon_path(), "--out", dir,
                 "--mu", std::to_string(mu), "--threads", "2"});
    EXPECT_EQ(r.exit, 0) << r.err;
    return dir;
  }

  std::string lexicon_path() {
    const std::string path = tmp_.file("lexicon.txt");
    std::string text;
    for (const auto& p : f_.phrases) text += p + "\n";
    seerkit::testing::write_text(path, text);
    return path;
  }

  TempDir tmp_;
  seerkit::testing::Fixture f_ = seerkit::testing::make_fixture(31);
};

TEST_F(Cli, BuildAndQueryPrintJson) {
  const std::string dir = build(f_.docs, "engine");
  const std::string p = *f_.phrases.begin();
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"experts", "--engine", dir, "-q", p, "-k", "5"},
           {"related", "--engine", dir, "-q", p},
           {"gs-star", "--engine", dir, "-q", p},
           {"experts", "--engine", dir, "-q", f_.probe_words[0] + " unknownword"},
           {"info", "--engine", dir},
           {"export", "--engine", dir},
           {"coverage", "--engine", dir, "--min-title-words", "2"}}) {
    Proc r = run(args);
    ASSERT_EQ(r.exit, 0) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(json::parse(r.out)) << args[0];
    EXPECT_TRUE(r.err.empty()) << r.err;
  }
  Proc ex = run({"experts", "--engine", dir, "-q", p, "-k", "5"});
  EXPECT_LE(json::parse(ex.out)["results"].size(), 5u);
  json info = json::parse(run({"info", "--engine", dir}).out);
  EXPECT_EQ(info["documents"], f_.docs.size());
  EXPECT_EQ(info["mu"], 100.0);
}

TEST_F(Cli, OutputIsByteDeterministic) {
  const std::string a = build(f_.docs, "a");
  const std::string b = build(f_.docs, "b");
  const std::string p = *f_.phrases.begin();
  for (const char* cmd : {"experts", "related"}) {
    Proc x = run({cmd, "--engine", a, "-q", p, "-k", "20"});
    Proc y = run({cmd, "--engine", b, "-q", p, "-k", "20"});
    Proc z = run({cmd, "--engine", a, "-q", p, "-k", "20"});
    EXPECT_EQ(x.out, y.out);
    EXPECT_EQ(x.out, z.out);
  }
  EXPECT_EQ(slurp(a + "/index.bin"), slurp(b + "/index.bin"));
}

TEST_F(Cli, EngineFromEnvironment) {
  const std::string dir = build(f_.docs, "engine");
  Proc with_flag = run({"info", "--engine", dir});
  Proc from_env = run({"info"}, "SEERKIT_ENGINE=" + quote(dir));
  EXPECT_EQ(from_env.exit, 0) << from_env.err;
  EXPECT_EQ(from_env.out, with_flag.out);
  EXPECT_EQ(run({"info"}).exit, 1);  // required and absent
}

TEST_F(Cli, ExitCodes) {
  const std::string dir = build(f_.docs, "engine");
  const std::string p = *f_.phrases.begin();
  // usage errors
  EXPECT_EQ(run({"experts", "--engine", dir, "-q", p, "-k", "0"}).exit, 1);
  EXPECT_EQ(run({"experts", "--engine", dir}).exit, 1);
  EXPECT_EQ(run({"no-such-command"}).exit, 1);
  EXPECT_EQ(run({}).exit, 1);
  // domain errors
  Proc unknown = run({"expertise", "--engine", dir, "-a", "Nobody Anywhere"});
  EXPECT_EQ(unknown.exit, 2);
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_NE(unknown.err.find("not_found"), std::string::npos);
  EXPECT_EQ(run({"related", "--engine", dir, "-q", "qqq zzz"}).exit, 2);
  EXPECT_EQ(run({"experts", "--engine", dir, "-q", "   "}).exit, 2);
  // I/O and config
  EXPECT_EQ(run({"info", "--engine", tmp_.file("missing")}).exit, 1);
  EXPECT_EQ(run({"build", "--corpus", tmp_.file("missing.jsonl"), "--out", tmp_.file("x")}).exit,
            1);
  const std::string run_file = seerkit::testing::data_path("consensus_mas.json");
  EXPECT_EQ(run({"eval", "--runs", run_file, "--truth", tmp_.file("missing-truth.json")}).exit,
            1);
  EXPECT_EQ(run({"--version"}).exit, 0);
}

TEST_F(Cli, DiacriticQueryIsNormalized) {
  auto docs = f_.docs;
  docs[0].authors = {"José Müller"};
  const std::string dir = build(docs, "engine");
  Proc plain = run({"expertise", "--engine", dir, "-a", "Jose Muller"});
  Proc accented = run({"expertise", "--engine", dir, "-a", "JOSÉ MÜLLER"});
  ASSERT_EQ(plain.exit, 0) << plain.err;
  ASSERT_EQ(accented.exit, 0) << accented.err;
  json a = json::parse(plain.out), b = json::parse(accented.out);
  EXPECT_EQ(a["author"], b["author"]);
  EXPECT_EQ(a["results"], b["results"]);
  EXPECT_EQ(a["author"]["id"], "j muller");

  const std::string p = *f_.phrases.begin();
  std::string shouted = p;
  for (char& c : shouted) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  Proc lower = run({"experts", "--engine", dir, "-q", p});
  Proc upper = run({"experts", "--engine", dir, "-q", shouted});
  ASSERT_EQ(upper.exit, 0);
  json l = json::parse(lower.out), u = json::parse(upper.out);
  EXPECT_EQ(l["results"], u["results"]);
}

TEST_F(Cli, RebuildRefusedWithoutForce) {
  const std::string dir = build(f_.docs, "engine");
  const std::string before = slurp(dir + "/manifest.json");
  const std::string corpus = tmp_.file("engine.jsonl");
  Proc again = run({"build", "--corpus", corpus, "--lexicon", lexicon_path(), "--out", dir});
  EXPECT_EQ(again.exit, 1);
  EXPECT_NE(again.err.find("already_exists"), std::string::npos);
  EXPECT_EQ(slurp(dir + "/manifest.json"), before);
  Proc forced = run(
      {"build", "--corpus", corpus, "--lexicon", lexicon_path(), "--out", dir, "--force"});
  EXPECT_EQ(forced.exit, 0) << forced.err;
}

TEST_F(Cli, EmptyCorpusBuildsButQueriesFail) {
  const std::string dir = build({}, "empty");
  Proc info = run({"info", "--engine", dir});
  EXPECT_EQ(json::parse(info.out)["documents"], 0);
  EXPECT_EQ(run({"experts", "--engine", dir, "-q", *f_.phrases.begin()}).exit, 2);
}

void expect_close(const json& a, const json& b, const std::string& where) {
  ASSERT_EQ(a["results"].size(), b["results"].size()) << where;
  for (size_t i = 0; i < a["results"].size(); ++i) {
    EXPECT_EQ(a["results"][i]["id"], b["results"][i]["id"]) << where;
    const double x = a["results"][i]["score"], y = b["results"][i]["score"];
    EXPECT_NEAR(x, y, 1e-12 * std::max(1.0, std::fabs(y))) << where;
  }
}

TEST_F(Cli, AddMatchesRebuild) {
  const size_t split = f_.docs.size() * 2 / 3;
  std::vector<seerkit::Document> base(f_.docs.begin(), f_.docs.begin() + split);
  std::vector<seerkit::Document> rest(f_.docs.begin() + split, f_.docs.end());
  const std::string inc = build(base, "inc");
  const std::string full = build(f_.docs, "full");
  seerkit::testing::write_jsonl(tmp_.file("rest.jsonl"), rest);
  Proc add = run({"add", "--engine", inc, "--corpus", tmp_.file("rest.jsonl")});
  ASSERT_EQ(add.exit, 0) << add.err;
  EXPECT_EQ(json::parse(add.out)["documents_added"], rest.size());

  EXPECT_EQ(run({"export", "--engine", inc}).out, run({"export", "--engine", full}).out);
  EXPECT_EQ(run({"keyphrases", "--engine", inc}).out, run({"keyphrases", "--engine", full}).out);
  for (const auto& p : f_.phrases) {
    expect_close(json::parse(run({"experts", "--engine", inc, "-q", p, "-k", "100"}).out),
                 json::parse(run({"experts", "--engine", full, "-q", p, "-k", "100"}).out), p);
  }
  const std::string oov = f_.probe_words[0] + " " + f_.probe_words[1];
  expect_close(json::parse(run({"experts", "--engine", inc, "-q", oov, "-k", "100"}).out),
               json::parse(run({"experts", "--engine", full, "-q", oov, "-k", "100"}).out), oov);

  // adding the same batch again is a domain error and leaves the engine as is
  const std::string manifest = slurp(inc + "/manifest.json");
  EXPECT_EQ(run({"add", "--engine", inc, "--corpus", tmp_.file("rest.jsonl")}).exit, 2);
  EXPECT_EQ(slurp(inc + "/manifest.json"), manifest);
}

TEST_F(Cli, KeyphraseDumpLines) {
  const std::string dir = build(f_.docs, "engine");
  Proc r = run({"keyphrases", "--engine", dir});
  ASSERT_EQ(r.exit, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  size_t n = 0;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    EXPECT_EQ(j["id"], f_.docs[n].id);
    uint64_t matched = 0;
    for (const auto& e : j["phrases"]) {
      EXPECT_TRUE(f_.phrases.count(e["p"].get<std::string>()));
      EXPECT_GE(e["c"].get<int>(), 1);
      matched += e["c"].get<uint64_t>();
    }
    EXPECT_LE(matched, j["len"].get<uint64_t>());
    ++n;
  }
  EXPECT_EQ(n, f_.docs.size());
}

TEST_F(Cli, EvalReproducesConsensusTable) {
  std::vector<std::string> args = {"eval", "--runs"};
  for (const char* f : {"consensus_csseer.json", "consensus_arnetminer.json", "consensus_mas.json"}) {
    args.push_back(seerkit::testing::data_path(f));
  }
  args.push_back("--verbatim-names");
  Proc verbatim = run(args);
  ASSERT_EQ(verbatim.exit, 0) << verbatim.err;
  json v = json::parse(verbatim.out);
  const std::vector<int> expected = {3, 4, 2};
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(v["systems"][i]["queries"]["data mining"]["S@10"], expected[i]);
  }
  args.pop_back();
  json n = json::parse(run(args).out);
  EXPECT_EQ(n["systems"][2]["queries"]["data mining"]["S@10"], 3);
  EXPECT_EQ(n["systems"][0]["system"], "CSSeer");
}

}  // namespace
