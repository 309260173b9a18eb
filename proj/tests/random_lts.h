// Copyright 2026 The padlcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADL_TESTS_RANDOM_LTS_H_
#define PADL_TESTS_RANDOM_LTS_H_

#include <random>
#include <string>

#include "padl/lts.h"

namespace padl::testing {

struct RandomLtsOptions {
  int max_states = 8;
  int num_labels = 3;       // drawn from "a", "b", "c", ...
  int max_out_degree = 3;
  double tau_probability = 0.25;
  double semisync_probability = 0.0;
};

inline std::string RandomLabelName(int i) { return std::string(1, static_cast<char>('a' + i)); }

inline Lts RandomLts(std::mt19937& rng, const RandomLtsOptions& opt = {}) {
  std::uniform_int_distribution<int> states(1, opt.max_states);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Lts lts;
  const int n = states(rng);
  for (int i = 0; i < n; ++i) lts.AddState();
  std::uniform_int_distribution<int> target(0, n - 1);
  std::uniform_int_distribution<int> degree(0, opt.max_out_degree);
  std::uniform_int_distribution<int> label(0, opt.num_labels - 1);
  for (int s = 0; s < n; ++s) {
    for (int k = degree(rng); k > 0; --k) {
      if (coin(rng) < opt.tau_probability) {
        lts.Add(s, kTauName, target(rng));
        continue;
      }
      std::string a = RandomLabelName(label(rng));
      if (coin(rng) < opt.semisync_probability) {
        lts.AddSemisync(s, a, target(rng), a + std::string(kExceptionSuffix), target(rng));
      } else {
        lts.Add(s, a, target(rng));
      }
    }
  }
  return lts;
}

}  // namespace padl::testing

#endif  // PADL_TESTS_RANDOM_LTS_H_
