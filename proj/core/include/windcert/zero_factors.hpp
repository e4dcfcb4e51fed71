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

#ifndef WINDCERT_ZERO_FACTORS_HPP
#define WINDCERT_ZERO_FACTORS_HPP

#include <complex>
#include <string_view>
#include <vector>

namespace windcert {

using Complex = std::complex<double>;

enum class Location { Inside, Boundary, Outside };

std::string_view to_string(Location loc) noexcept;

struct ZeroFactor {
    Complex point;
    int multiplicity = 1;
    Location location = Location::Boundary;
};

/// Linear factors (z - a)^m grouped by where a sits relative to the unit circle.
///
/// Locations are checked against |a| with tolerance `eps`: Inside needs
/// |a| < 1 - eps, Boundary ||a| - 1| <= eps, Outside |a| > 1 + eps.
class ZeroFactorSet {
public:
    static constexpr double kDefaultEps = 1e-12;

    ZeroFactorSet() = default;
    explicit ZeroFactorSet(double eps) : eps_(eps) {}

    /// Factors with their location derived from |point|.
    static ZeroFactorSet classify(const std::vector<std::pair<Complex, int>>& points,
                                  double eps = kDefaultEps);

    /// Throws BadParams if multiplicity < 1 or the declared location disagrees with |point|.
    void add(Complex point, int multiplicity, Location location);
    void add(Complex point, int multiplicity);

    const std::vector<ZeroFactor>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    double eps() const noexcept { return eps_; }
    int total_multiplicity() const noexcept;
    bool all_at(Location loc) const noexcept;
    ZeroFactorSet only(Location loc) const;
    /// Each point repeated by its multiplicity, in insertion order.
    std::vector<Complex> expanded() const;

    Location locate(Complex point) const noexcept;

private:
    double eps_ = kDefaultEps;
    std::vector<ZeroFactor> factors_;
};

}  // namespace windcert

#endif  // WINDCERT_ZERO_FACTORS_HPP
