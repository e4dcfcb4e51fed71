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

#include "fft.hpp"

#include <map>
#include <mutex>
#include <utility>

#include <fftw3.h>

namespace windcert::detail {
namespace {

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per (size, sign) and kept for the
// lifetime of the process.
fftw_plan plan_for(int n, int sign) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, fftw_plan> plans;
    std::lock_guard lock(mutex);
    auto it = plans.find({n, sign});
    if (it != plans.end()) return it->second;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(std::make_pair(n, sign), p);
    return p;
}

std::vector<std::complex<double>> run(std::span<const std::complex<double>> in, int sign) {
    std::vector<std::complex<double>> src(in.begin(), in.end());
    std::vector<std::complex<double>> out(in.size());
    if (in.empty()) return out;
    fftw_plan p = plan_for(static_cast<int>(in.size()), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(src.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> in) {
    return run(in, FFTW_BACKWARD);
}

}  // namespace windcert::detail
