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

#include "windcert/zero_factors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "windcert/error.hpp"

namespace windcert {

std::string_view to_string(Location loc) noexcept {
    switch (loc) {
        case Location::Inside: return "in";
        case Location::Boundary: return "bd";
        case Location::Outside: return "out";
    }
    return "?";
}

ZeroFactorSet ZeroFactorSet::classify(const std::vector<std::pair<Complex, int>>& points, double eps) {
    ZeroFactorSet set(eps);
    for (const auto& [p, m] : points) set.add(p, m);
    return set;
}

Location ZeroFactorSet::locate(Complex point) const noexcept {
    const double r = std::abs(point);
    if (r < 1.0 - eps_) return Location::Inside;
    if (r > 1.0 + eps_) return Location::Outside;
    return Location::Boundary;
}

void ZeroFactorSet::add(Complex point, int multiplicity, Location location) {
    if (multiplicity < 1) throw Error(ErrorCode::BadParams, "multiplicity must be positive");
    if (!std::isfinite(point.real()) || !std::isfinite(point.imag())) {
        throw Error(ErrorCode::BadParams, "non-finite factor location");
    }
    if (locate(point) != location) {
        throw Error(ErrorCode::BadParams, "factor at |a| = " + std::to_string(std::abs(point)) +
                                              " is not " + std::string(to_string(location)));
    }
    factors_.push_back({point, multiplicity, location});
}

void ZeroFactorSet::add(Complex point, int multiplicity) { add(point, multiplicity, locate(point)); }

int ZeroFactorSet::total_multiplicity() const noexcept {
    int n = 0;
    for (const auto& f : factors_) n += f.multiplicity;
    return n;
}

bool ZeroFactorSet::all_at(Location loc) const noexcept {
    return std::all_of(factors_.begin(), factors_.end(), [loc](const ZeroFactor& f) { return f.location == loc; });
}

ZeroFactorSet ZeroFactorSet::only(Location loc) const {
    ZeroFactorSet out(eps_);
    for (const auto& f : factors_) {
        if (f.location == loc) out.factors_.push_back(f);
    }
    return out;
}

std::vector<Complex> ZeroFactorSet::expanded() const {
    std::vector<Complex> out;
    for (const auto& f : factors_) out.insert(out.end(), static_cast<std::size_t>(f.multiplicity), f.point);
    return out;
}

}  // namespace windcert
