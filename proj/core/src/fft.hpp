/*
   Copyright 2026 The windcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WINDCERT_SRC_FFT_HPP
#define WINDCERT_SRC_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace windcert::detail {

/// Unnormalized DFT: out_k = sum_j in_j e^{-2 pi i jk/n}.
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> in);
/// Unnormalized inverse DFT: out_j = sum_k in_k e^{+2 pi i jk/n}.
std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> in);

}  // namespace windcert::detail

#endif  // WINDCERT_SRC_FFT_HPP
