// Copyright 2026 The Model Hub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "common/error.hpp"
#include "eval/leaderboard.hpp"
#include "eval/scoring.hpp"
#include "eval/split.hpp"

using namespace hub;
using namespace hub::eval;
using nlohmann::json;

namespace {

// Written against the published SplitMix64 reference, independent of the
// production shuffle helper.
std::vector<std::int64_t> oracle_secret(std::int64_t n, double f, std::uint64_t seed) {
  std::uint64_t s = seed;
  auto next = [&s] {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i;
  for (std::int64_t i = n - 1; i > 0; --i) {
    const std::uint64_t bound = static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t reject_from = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = next();
    while (r >= reject_from) r = next();
    std::swap(a[static_cast<std::size_t>(i)], a[r % bound]);
  }
  const auto k = static_cast<std::size_t>(std::llround(f * static_cast<double>(n)));
  std::vector<std::int64_t> secret(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(secret.begin(), secret.end());
  return secret;
}

bool is_partition(const SplitMask &m) {
  const auto pub = m.public_indices();
  std::set<std::int64_t> all(pub.begin(), pub.end());
  for (auto i : m.secret_indices)
    if (!all.insert(i).second) return false;
  return static_cast<std::int64_t>(all.size()) == m.n && *all.begin() == 0 && *all.rbegin() == m.n - 1;
}

std::vector<Label> ints(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

LeaderboardEntry entry(std::int64_t version, double accuracy, Timestamp at) {
  LeaderboardEntry e;
  e.version = version;
  e.model_id = "m" + std::to_string(version);
  e.submitter = "u";
  e.public_report.task = TaskType::classification;
  e.public_report.accuracy = accuracy;
  e.submitted_at = at;
  return e;
}

LeaderboardEntry reg_entry(std::int64_t version, double rmse, Timestamp at) {
  LeaderboardEntry e;
  e.version = version;
  e.public_report.task = TaskType::regression;
  e.public_report.rmse = rmse;
  e.submitted_at = at;
  return e;
}

} // namespace

TEST_CASE("SplitMix64 reference output") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("make_split sizes and determinism") {
  const auto a = make_split(10, 0.5, 7);
  CHECK(a.secret_indices.size() == 5);
  CHECK(a == make_split(10, 0.5, 7));
  CHECK(is_partition(a));
  const auto b = make_split(10, 0.5, 8);
  CHECK(is_partition(b));
  CHECK(b.secret_indices.size() == 5);
}

TEST_CASE("make_split matches the independent shuffle oracle") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const auto n = std::uniform_int_distribution<std::int64_t>(2, 500)(rng);
    const double f = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const std::uint64_t seed = rng();
    const auto k = std::llround(f * static_cast<double>(n));
    if (k <= 0 || k >= n) {
      CHECK_THROWS_AS(make_split(n, f, seed), Error);
      continue;
    }
    const auto m = make_split(n, f, seed);
    CHECK(m.secret_indices == oracle_secret(n, f, seed));
    CHECK(static_cast<std::int64_t>(m.secret_indices.size()) == k);
    CHECK(std::is_sorted(m.secret_indices.begin(), m.secret_indices.end()));
    CHECK(is_partition(m));
    CHECK(split_from_json(json::parse(to_json(m).dump())) == m);
  }
}

TEST_CASE("make_split rejects bad arguments") {
  CHECK_THROWS_AS(make_split(1, 0.5, 1), Error);
  CHECK_THROWS_AS(make_split(10, 0.0, 1), Error);
  CHECK_THROWS_AS(make_split(10, 1.0, 1), Error);
  CHECK_THROWS_AS(make_split(10, NAN, 1), Error);
  CHECK_THROWS_AS(make_split(2, 0.1, 1), Error);  // rounds to 0 secret
  CHECK_THROWS_AS(make_split(2, 0.9, 1), Error);  // rounds to all secret
  CHECK_THROWS_AS(make_split(kMaxEvalLabels + 1, 0.5, 1), Error);
}

TEST_CASE("experiment scoring uses every index") {
  const Values y = ints({0, 1, 1, 0});
  const auto s = score_submission(TaskType::classification, y, experiment_mask(4), y);
  CHECK(s.public_report.accuracy == 1.0);
  CHECK(!s.secret_report);
}

TEST_CASE("competition scoring with a pinned mask") {
  SplitMask mask;
  mask.n = 4;
  mask.secret_indices = {0, 1};
  mask.secret_fraction = 0.5;
  const auto s = score_submission(TaskType::classification, Values{ints({0, 1, 1, 0})}, mask,
                                  Values{ints({1, 0, 1, 0})});
  CHECK(s.public_report.accuracy == 1.0);
  REQUIRE(s.secret_report);
  CHECK(s.secret_report->accuracy == 0.0);
}

TEST_CASE("scoring rejects wrong length and type") {
  const Values y = ints({0, 1, 1});
  try {
    score_submission(TaskType::classification, y, experiment_mask(3), Values{ints({0, 1})});
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::length_mismatch);
    CHECK(e.details()["expected_length"] == 3);
  }
  CHECK_THROWS_AS(values_from_json(TaskType::regression, json::parse(R"([1, "x"])"), "predictions"), Error);
  try {
    values_from_json(TaskType::regression, json::parse(R"([1, "x"])"), "predictions");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::type_mismatch);
    CHECK(e.details()["field"] == "predictions");
  }
  CHECK_THROWS_AS(values_from_json(TaskType::classification, json::array(), "predictions"), Error);
  CHECK_THROWS_AS(score_submission(TaskType::regression, Values{std::vector<double>{1, 2, 3}}, experiment_mask(3),
                                   Values{ints({1, 2, 3})}),
                  Error);
}

TEST_CASE("scoring is recomputable from stored predictions") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 50; ++iter) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(4, 60)(rng);
    std::vector<double> y, p;
    for (std::int64_t i = 0; i < n; ++i) {
      y.push_back(std::normal_distribution<double>()(rng));
      p.push_back(std::normal_distribution<double>()(rng));
    }
    const auto mask = make_split(n, 0.5, rng());
    const auto s = score_submission(TaskType::regression, Values{y}, mask, Values{p});
    // Round-trip predictions through JSON as the registry stores them.
    const auto p2 = values_from_json(TaskType::regression, json::parse(values_to_json(Values{p}).dump()), "p");
    const auto y2 = values_from_json(TaskType::regression, json::parse(values_to_json(Values{y}).dump()), "y");
    const auto s2 = score_submission(TaskType::regression, y2, mask, p2);
    CHECK(std::abs(s.public_report.mse - s2.public_report.mse) <= 1e-12);
    CHECK(std::abs(s.secret_report->r2 - s2.secret_report->r2) <= 1e-12);
  }
}

TEST_CASE("leaderboard ordering rules") {
  auto b = build_leaderboard("t", TaskType::classification, {entry(1, 0.8, 10), entry(2, 0.9, 20)}, "", false);
  CHECK(b.sort_metric == "accuracy");
  CHECK(b.entries[0].version == 2);

  auto r = build_leaderboard("t", TaskType::regression, {reg_entry(1, 1.0, 10), reg_entry(2, 0.5, 20)}, "", false);
  CHECK(r.sort_metric == "rmse");
  CHECK(r.entries[0].version == 2);

  auto t = build_leaderboard("t", TaskType::classification, {entry(1, 0.5, 20), entry(2, 0.5, 10)}, "accuracy", false);
  CHECK(t.entries[0].version == 2);
  auto v = build_leaderboard("t", TaskType::classification, {entry(3, 0.5, 10), entry(2, 0.5, 10)}, "accuracy", false);
  CHECK(v.entries[0].version == 2);

  try {
    build_leaderboard("t", TaskType::classification, {}, "rmse", false);
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::invalid_metric);
  }
}

TEST_CASE("leaderboard order is a strict total order") {
  std::mt19937_64 rng(3);
  const auto &metric = metrics::MetricRegistry::builtin().require("accuracy", TaskType::classification);
  std::vector<LeaderboardEntry> es;
  for (int i = 0; i < 40; ++i)
    es.push_back(entry(i + 1, std::uniform_int_distribution<int>(0, 3)(rng) / 4.0,
                       std::uniform_int_distribution<int>(0, 3)(rng)));
  for (const auto &a : es) {
    CHECK(!ranks_before(a, a, metric, false));
    for (const auto &b : es) {
      if (a.version != b.version) CHECK(ranks_before(a, b, metric, false) != ranks_before(b, a, metric, false));
      for (const auto &c : es)
        if (ranks_before(a, b, metric, false) && ranks_before(b, c, metric, false))
          CHECK(ranks_before(a, c, metric, false));
    }
  }
}

TEST_CASE("secret ranking can invert the public ranking") {
  SplitMask mask;
  mask.n = 4;
  mask.secret_indices = {0, 1};
  const Values y = ints({0, 1, 0, 1});
  // v1 nails the public half, v2 nails the secret half.
  const auto s1 = score_submission(TaskType::classification, y, mask, Values{ints({1, 0, 0, 1})});
  const auto s2 = score_submission(TaskType::classification, y, mask, Values{ints({0, 1, 1, 0})});
  auto e1 = entry(1, 0, 1), e2 = entry(2, 0, 2);
  e1.public_report = s1.public_report;
  e1.secret_report = s1.secret_report;
  e2.public_report = s2.public_report;
  e2.secret_report = s2.secret_report;
  const auto pub = build_leaderboard("t", TaskType::classification, {e1, e2}, "accuracy", false);
  const auto sec = build_leaderboard("t", TaskType::classification, {e1, e2}, "accuracy", true);
  CHECK(pub.entries[0].version == 1);
  CHECK(sec.entries[0].version == 2);
}

TEST_CASE("leaderboard JSON and CSV export") {
  auto e1 = entry(1, 0.75, 1'700'000'000'000'001);
  e1.custom_metadata = {{"optimizer", "adam"}, {"lr", 0.001}};
  e1.op_histogram = "Gemm:2 Relu:1";
  auto e2 = entry(2, 1.0 / 3.0, 1'700'000'000'000'002);
  e2.custom_metadata = {{"epochs", 5}, {"note", "has, comma \"q\""}};
  const auto board = build_leaderboard("trk", TaskType::classification, {e1, e2}, "accuracy", false);

  CHECK(leaderboard_from_json(json::parse(to_json(board).dump())) == board);

  const auto csv = to_csv(board);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const auto end = csv.find("\r\n", pos);
    lines.push_back(csv.substr(pos, end - pos));
    pos = end + 2;
  }
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "rank,version,model_id,submitter,submitted_at,accuracy,f1_macro,precision_macro,recall_macro,"
        "parameter_count,memory_size_bytes,op_histogram,epochs,lr,note,optimizer");
  CHECK(lines[1].rfind("1,1,m1,u,", 0) == 0);
  CHECK(lines[1].ends_with("Gemm:2 Relu:1,,0.001,,adam"));
  CHECK(lines[2].find("\"has, comma \"\"q\"\"\"") != std::string::npos);
  CHECK(lines[2].ends_with(","));
}

TEST_CASE("CSV adds secret columns only when secret reports are present") {
  auto e = entry(1, 0.5, 1);
  CHECK(to_csv(build_leaderboard("t", TaskType::classification, {e}, "", false)).find("secret_") == std::string::npos);
  e.secret_report = e.public_report;
  CHECK(to_csv(build_leaderboard("t", TaskType::classification, {e}, "", true)).find("secret_accuracy") !=
        std::string::npos);
}
