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

#include "support/oracle.h"

#include <algorithm>
#include <cmath>

namespace seerkit::testing {

NaiveMatch naive_greedy(const std::vector<text::Segment>& segments,
                        const std::set<std::string>& phrases) {
  size_t max_len = 0;
  for (const auto& p : phrases) max_len = std::max(max_len, text::split(p).size());
  NaiveMatch out;
  for (const auto& seg : segments) {
    size_t pos = 0;
    while (pos < seg.size()) {
      size_t taken = 0;
      for (size_t len = std::min(max_len, seg.size() - pos); len >= 1; --len) {
        std::vector<std::string> cand(seg.begin() + pos, seg.begin() + pos + len);
        if (phrases.count(text::join(cand))) {
          out.phrases.push_back(text::join(cand));
          taken = len;
          break;
        }
      }
      if (taken == 0) {
        out.residual.push_back(seg[pos]);
        taken = 1;
      }
      pos += taken;
    }
  }
  return out;
}

Scored sorted(Scored v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  return v;
}

Oracle::Oracle(const std::vector<Document>& docs, const std::set<std::string>& phrases,
               double mu)
    : docs_(docs), phrases_(phrases), mu_(mu) {
  const size_t n = docs_.size();
  in_cit_.assign(n, 0);
  for (size_t d = 0; d < n; ++d) {
    for (size_t e = 0; e < n; ++e) {
      const auto& cites = docs_[e].citations;
      if (std::find(cites.begin(), cites.end(), docs_[d].id) != cites.end()) ++in_cit_[d];
    }
  }
  for (size_t d = 0; d < n; ++d) {
    std::set<std::string> keys;
    for (const auto& raw : docs_[d].authors) {
      try {
        keys.insert(normalize_name(raw));
      } catch (...) {
      }
    }
    authors_.push_back(keys);

    std::vector<text::Segment> segs = text::normalize_segments(docs_[d].title);
    for (auto& s : text::normalize_segments(docs_[d].abstract)) segs.push_back(s);
    NaiveMatch m = naive_greedy(segs, phrases_);
    std::map<std::string, unsigned> pc;
    for (const auto& p : m.phrases) pc[p] += 1;
    std::map<std::string, unsigned> wc;
    size_t wt = 0;
    for (const auto& s : segs) {
      for (const auto& t : s) {
        wc[t] += 1;
        ++wt;
      }
    }
    pc_.push_back(pc);
    wc_.push_back(wc);
    len_.push_back(m.phrases.size() + m.residual.size());
    word_total_.push_back(wt);
    total_len_ += len_.back();
  }
}

double Oracle::prior(size_t d) const { return prior_scale_ * std::log(1.0 + in_cit_[d]); }

unsigned Oracle::phrase_count(const std::string& q, size_t d) const {
  auto it = pc_[d].find(q);
  return it == pc_[d].end() ? 0 : it->second;
}

unsigned Oracle::word_count(const std::string& w, size_t d) const {
  auto it = wc_[d].find(w);
  return it == wc_[d].end() ? 0 : it->second;
}

size_t Oracle::total_words() const {
  size_t t = 0;
  for (size_t w : word_total_) t += w;
  return t;
}

std::set<std::string> Oracle::vocabulary() const {
  std::set<std::string> v;
  for (const auto& m : wc_) {
    for (const auto& [w, c] : m) v.insert(w);
  }
  return v;
}

double Oracle::p_phrase(const std::string& q, size_t d) const {
  double cD = 0;
  for (size_t e = 0; e < docs_.size(); ++e) cD += phrase_count(q, e);
  const double len = static_cast<double>(len_[d]);
  const double lambda = len / (len + mu_);
  const double first = len_[d] == 0 ? 0.0 : lambda * (phrase_count(q, d) / len);
  return first + (1.0 - lambda) * (cD / static_cast<double>(total_len_));
}

double Oracle::p_word(const std::string& w, size_t d) const {
  double cD = 0;
  for (size_t e = 0; e < docs_.size(); ++e) cD += word_count(w, e);
  const double len = static_cast<double>(len_[d]);
  const double lambda = len / (len + mu_);
  const double first = len_[d] == 0 ? 0.0 : lambda * (word_count(w, d) / len);
  return first + (1.0 - lambda) * (cD / static_cast<double>(total_len_));
}

double Oracle::p_words(const std::vector<std::string>& words, size_t d) const {
  double p = 1.0;
  for (const auto& w : words) p *= p_word(w, d);
  return p;
}

bool Oracle::authored(const std::string& key, size_t d) const {
  return authors_[d].count(key) > 0;
}

std::set<std::string> Oracle::all_authors() const {
  std::set<std::string> all;
  for (const auto& s : authors_) all.insert(s.begin(), s.end());
  return all;
}

std::vector<size_t> Oracle::top_docs(const std::vector<std::string>& words,
                                     size_t top_n) const {
  struct Row {
    size_t d;
    double p, joint;
  };
  std::vector<Row> rows;
  for (size_t d = 0; d < docs_.size(); ++d) {
    const double p = p_words(words, d);
    if (p == 0.0) continue;
    rows.push_back({d, p, prior(d) * p});
  }
  std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    if (x.joint != y.joint) return x.joint > y.joint;
    if (x.p != y.p) return x.p > y.p;
    return docs_[x.d].id < docs_[y.d].id;
  });
  std::vector<size_t> out;
  for (size_t i = 0; i < rows.size() && i < top_n; ++i) out.push_back(rows[i].d);
  return out;
}

Scored Oracle::experts(const std::string& raw_query, size_t top_n) const {
  const auto words = text::normalize_tokens(raw_query);
  const std::string q = text::join(words);
  Scored out;
  if (phrases_.count(q)) {
    for (const std::string& a : all_authors()) {
      double score = 0.0;
      bool supported = false;
      for (size_t d = 0; d < docs_.size(); ++d) {
        const int ind = authored(a, d) ? 1 : 0;
        score += prior(d) * p_phrase(q, d) * ind;
        if (ind && phrase_count(q, d) > 0) supported = true;
      }
      if (score > 0.0 || supported) out.emplace_back(a, score);
    }
  } else {
    const auto d1 = top_docs(words, top_n);
    std::set<std::string> candidates;
    for (size_t d : d1) candidates.insert(authors_[d].begin(), authors_[d].end());
    for (const std::string& a : candidates) {
      double score = 0.0;
      for (size_t d : d1) score += prior(d) * p_words(words, d) * (authored(a, d) ? 1 : 0);
      out.emplace_back(a, score);
    }
  }
  return sorted(out);
}

Scored Oracle::expertise(const std::string& author_key) const {
  std::set<std::string> candidates;
  for (size_t d = 0; d < docs_.size(); ++d) {
    if (!authored(author_key, d)) continue;
    for (const auto& [t, c] : pc_[d]) candidates.insert(t);
  }
  Scored out;
  for (const std::string& t : candidates) {
    double score = 0.0;
    for (size_t d = 0; d < docs_.size(); ++d) {
      score += prior(d) * p_phrase(t, d) * (authored(author_key, d) ? 1 : 0);
    }
    out.emplace_back(t, score);
  }
  return sorted(out);
}

Scored Oracle::related(const std::string& t) const {
  std::vector<size_t> postings;
  std::set<std::string> candidates;
  for (size_t d = 0; d < docs_.size(); ++d) {
    if (phrase_count(t, d) == 0) continue;
    postings.push_back(d);
    for (const auto& [s, c] : pc_[d]) {
      if (s != t) candidates.insert(s);
    }
  }
  Scored out;
  for (const std::string& s : candidates) {
    double score = 0.0;
    for (size_t d : postings) score += prior(d) * p_phrase(t, d) * p_phrase(s, d);
    out.emplace_back(s, score);
  }
  return sorted(out);
}

Scored Oracle::gs_star(const std::string& raw_query, size_t top_n) const {
  const auto words = text::normalize_tokens(raw_query);
  std::set<std::string> candidates;
  for (size_t d : top_docs(words, top_n)) {
    candidates.insert(authors_[d].begin(), authors_[d].end());
  }
  Scored out;
  for (const std::string& a : candidates) {
    double total = 0;
    for (size_t d = 0; d < docs_.size(); ++d) {
      if (authored(a, d)) total += in_cit_[d];
    }
    out.emplace_back(a, total);
  }
  return sorted(out);
}

}  // namespace seerkit::testing
