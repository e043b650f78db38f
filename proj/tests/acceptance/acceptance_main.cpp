// Copyright 2026 The wsym Authors
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

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails. Optional arguments: --seed S and a list of criterion ids.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "wsym/acceptance.hpp"

int main(int argc, char** argv) {
  wsym::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      opts.only.push_back(std::atoi(argv[i]));
    }
  }
  opts.on_result = [](const wsym::CriterionResult& r) { std::cout << wsym::format_result(r) << std::endl; };
  const auto results = wsym::run_acceptance(opts);
  int failed = 0;
  double seconds = 0.0;
  for (const auto& r : results) {
    failed += !r.passed;
    seconds += r.seconds;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed in " << seconds << " s"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
