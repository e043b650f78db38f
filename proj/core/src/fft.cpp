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

#include "wsym/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "wsym/error.hpp"

namespace wsym {
namespace {

// The FFTW planner is not reentrant; plans are cached and executed through the new-array API.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanKey {
  std::vector<int> dims;
  int howmany;
  int stride;
  int dist;
  int sign;
  auto tie() const { return std::tie(dims, howmany, stride, dist, sign); }
  bool operator<(const PlanKey& o) const { return tie() < o.tie(); }
};

fftw_plan get_plan(const PlanKey& key) {
  static std::map<PlanKey, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t total = static_cast<std::size_t>(key.howmany - 1) * key.dist + 1;
  std::size_t span = 1;
  for (int d : key.dims) span *= d;
  total += (span - 1) * key.stride;
  fftw_complex* scratch = fftw_alloc_complex(total);
  fftw_plan plan = fftw_plan_many_dft(static_cast<int>(key.dims.size()), key.dims.data(), key.howmany,
                                      scratch, nullptr, key.stride, key.dist, scratch, nullptr,
                                      key.stride, key.dist, key.sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  if (!plan) throw Error("FFTW failed to create a plan");
  cache.emplace(key, plan);
  return plan;
}

int sign_of(FftDirection dir) { return dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD; }

}  // namespace

void fft_inplace(std::complex<double>* data, const std::vector<int>& dims, FftDirection dir) {
  if (dims.empty()) return;
  fftw_plan plan = get_plan({dims, 1, 1, 0, sign_of(dir)});
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, p, p);
}

void fft_inplace(std::vector<std::complex<double>>& data, const std::vector<int>& dims,
                 FftDirection dir) {
  std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                      [](std::size_t a, int b) { return a * b; });
  if (total != data.size()) throw DimensionError("fft: data size does not match dims");
  fft_inplace(data.data(), dims, dir);
}

void fft_axis_inplace(std::vector<std::complex<double>>& data, const std::vector<int>& dims,
                      int axis, FftDirection dir) {
  int outer = 1, inner = 1;
  for (int i = 0; i < axis; ++i) outer *= dims[i];
  for (std::size_t i = axis + 1; i < dims.size(); ++i) inner *= dims[i];
  const int n = dims[axis];
  // One batched plan per outer block: inner contiguous transforms of stride `inner`.
  fftw_plan plan = get_plan({{n}, inner, inner, 1, sign_of(dir)});
  for (int o = 0; o < outer; ++o) {
    auto* p = reinterpret_cast<fftw_complex*>(data.data() + static_cast<std::size_t>(o) * n * inner);
    fftw_execute_dft(plan, p, p);
  }
}

}  // namespace wsym
