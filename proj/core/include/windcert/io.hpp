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

#ifndef WINDCERT_IO_HPP
#define WINDCERT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windcert/spectral.hpp"
#include "windcert/zero_factors.hpp"

namespace windcert {

/// Parses "3", "-0.5i", "0.3-2e-3i", "i". Throws BadInput.
Complex parse_complex(std::string_view text);

std::string format_complex(Complex z, int precision = 12);

/// Comma separated complex values; empty text gives an empty list.
std::vector<Complex> parse_complex_list(std::string_view text);

/// "a:m,b:m,..." with optional third field in|bd|out checked against |a|.
/// A bare "a" means multiplicity 1.
ZeroFactorSet parse_factor_list(std::string_view text);

/// Reads `theta,re,im` rows. Nodes must be strictly increasing in [0, 2 pi)
/// and uniformly spaced; the samples are moved onto a grid of `grid_size`
/// nodes (default: the smallest admissible power of two >= row count).
BoundaryFunction read_samples_csv(std::istream& in, std::optional<std::size_t> grid_size = std::nullopt);
BoundaryFunction read_samples_csv(const std::string& path, std::optional<std::size_t> grid_size = std::nullopt);

void write_samples_csv(std::ostream& out, const BoundaryFunction& f);

}  // namespace windcert

#endif  // WINDCERT_IO_HPP
