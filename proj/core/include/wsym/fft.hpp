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

#pragma once

#include <complex>
#include <vector>

namespace wsym {

enum class FftDirection { Forward, Backward };

// In-place unnormalized multidimensional DFT of row-major data (last axis fastest).
// Forward uses exp(-2 pi i jk/N), backward exp(+2 pi i jk/N).
void fft_inplace(std::complex<double>* data, const std::vector<int>& dims, FftDirection dir);
void fft_inplace(std::vector<std::complex<double>>& data, const std::vector<int>& dims,
                 FftDirection dir);

// Transform along a single axis of a row-major tensor.
void fft_axis_inplace(std::vector<std::complex<double>>& data, const std::vector<int>& dims,
                      int axis, FftDirection dir);

// Signed frequency index of DFT bin k on N points: k for k < N/2, k - N otherwise.
inline int signed_bin(int k, int n) { return k < n / 2 ? k : k - n; }

}  // namespace wsym
