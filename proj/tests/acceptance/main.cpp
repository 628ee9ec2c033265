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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// all pass. Run a subset with e.g. `acceptance 5 6`.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <set>
#include <string>

#include "acceptance.hpp"

namespace acceptance {

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

} // namespace acceptance

int main(int argc, char **argv) {
  using namespace acceptance;
  struct Criterion {
    int id;
    const char *name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "metrics oracle equivalence", metrics_oracle},
      {2, "hand-derived metric fixtures", metric_fixtures},
      {3, "ONNX metadata and diff", onnx_metadata},
      {4, "interpreter goldens", interpreter_goldens},
      {5, "competition secrecy", competition_secrecy},
      {6, "atomic hot swap", atomic_hot_swap},
      {7, "CLI end-to-end workflow", cli_workflow},
      {8, "split determinism across processes", split_determinism},
      {9, "crash durability", crash_durability},
  };

  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto &c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d %s  %s (%s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
