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

#ifndef WINDCERT_CATALOG_HPP
#define WINDCERT_CATALOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "windcert/spectral.hpp"
#include "windcert/zero_factors.hpp"

namespace windcert {

/// Properties known by construction.
struct CaseTruth {
    bool extendible = false;         ///< holomorphic extension to the disc
    std::optional<int> pole_budget;  ///< fewest poles of a meromorphic extension; empty if none exists
    std::optional<int> winding;      ///< empty when f vanishes on the circle
    ZeroFactorSet boundary_zeros;
};

struct CatalogCase {
    std::string name;
    BoundaryFunction f;
    CaseTruth truth;
};

using CaseParams = std::map<std::string, std::string, std::less<>>;

struct CatalogEntry {
    std::string_view name;
    std::string_view params;  ///< accepted parameters with defaults
    std::string_view summary;
};

std::span<const CatalogEntry> catalog_entries() noexcept;

/// Throws UnknownCase for unregistered names, BadParams for bad or unknown parameters.
CatalogCase make_case(std::string_view name, const CaseParams& params = {}, const CircleGrid& grid = CircleGrid());

enum class CaseClass { Extendible, Meromorphic, NonExtendible };

std::string_view to_string(CaseClass c) noexcept;

/// `poles` is used by Meromorphic only.
CatalogCase random_case(CaseClass cls, std::uint64_t seed, const CircleGrid& grid = CircleGrid(), int poles = 1);

}  // namespace windcert

#endif  // WINDCERT_CATALOG_HPP
