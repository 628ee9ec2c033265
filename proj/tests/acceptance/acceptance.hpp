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

#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Collects failed expectations; the first few are reported.
class Check {
public:
  void expect(bool ok, const std::string &what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 4) notes_.push_back(what);
  }
  int failures() const { return failures_; }
  int checks() const { return checks_; }

  Outcome done(const std::string &summary) const {
    std::ostringstream os;
    os << summary << "; " << checks_ << " checks";
    if (failures_) {
      os << ", " << failures_ << " failed:";
      for (const auto &n : notes_) os << " [" << n << "]";
    }
    return {failures_ == 0, os.str()};
  }

private:
  int checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s);

Outcome metrics_oracle();       // 1
Outcome metric_fixtures();      // 2
Outcome onnx_metadata();        // 3
Outcome interpreter_goldens();  // 4
Outcome competition_secrecy();  // 5
Outcome atomic_hot_swap();      // 6
Outcome cli_workflow();         // 7
Outcome split_determinism();    // 8
Outcome crash_durability();     // 9

} // namespace acceptance
