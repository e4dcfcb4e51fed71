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

#include "windcert/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "windcert/error.hpp"

namespace windcert {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(std::string_view text, std::string_view whole) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw Error(ErrorCode::BadInput, "cannot parse number '" + std::string(whole) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw Error(ErrorCode::BadInput, "empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, s), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    // Split before the last sign that is not part of an exponent.
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    const std::string_view re_text = cut == std::string_view::npos ? std::string_view{} : body.substr(0, cut);
    std::string_view im_text = cut == std::string_view::npos ? body : body.substr(cut);
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_text, s);
    }
    return {re_text.empty() ? 0.0 : parse_real(re_text, s), im};
}

std::string format_complex(Complex z, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag())
       << "i";
    return os.str();
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    if (trim(text).empty()) return out;
    for (const auto item : split(text, ',')) out.push_back(parse_complex(item));
    return out;
}

ZeroFactorSet parse_factor_list(std::string_view text) {
    ZeroFactorSet set;
    if (trim(text).empty()) return set;
    for (const auto item : split(text, ',')) {
        const auto fields = split(item, ':');
        if (fields.size() > 3 || fields[0].empty()) {
            throw Error(ErrorCode::BadInput, "bad factor '" + std::string(item) + "'");
        }
        const Complex a = parse_complex(fields[0]);
        int m = 1;
        if (fields.size() >= 2) {
            const auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), m);
            if (ec != std::errc{} || ptr != fields[1].data() + fields[1].size()) {
                throw Error(ErrorCode::BadInput, "bad multiplicity in '" + std::string(item) + "'");
            }
        }
        if (fields.size() == 3) {
            Location loc;
            if (fields[2] == "in") {
                loc = Location::Inside;
            } else if (fields[2] == "bd") {
                loc = Location::Boundary;
            } else if (fields[2] == "out") {
                loc = Location::Outside;
            } else {
                throw Error(ErrorCode::BadInput, "location must be in, bd or out: '" + std::string(item) + "'");
            }
            set.add(a, m, loc);
        } else {
            set.add(a, m);
        }
    }
    return set;
}

BoundaryFunction read_samples_csv(std::istream& in, std::optional<std::size_t> grid_size) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::BadInput, "empty sample file");
    {
        std::string header;
        for (char c : line) {
            if (c != ' ' && c != '\r' && c != '\t') header += c;
        }
        if (header != "theta,re,im") throw Error(ErrorCode::BadInput, "expected header theta,re,im");
    }
    std::vector<double> theta;
    std::vector<Complex> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) throw Error(ErrorCode::BadInput, "row " + std::to_string(row) + ": expected 3 fields");
        theta.push_back(parse_real(fields[0], line));
        values.emplace_back(parse_real(fields[1], line), parse_real(fields[2], line));
    }
    const std::size_t m = theta.size();
    if (m < 2) throw Error(ErrorCode::BadInput, "need at least two samples");
    const double two_pi = 2.0 * std::numbers::pi;
    const double step = two_pi / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (!(theta[k] >= 0.0 && theta[k] < two_pi)) throw Error(ErrorCode::BadInput, "theta outside [0, 2pi)");
        if (k > 0 && !(theta[k] > theta[k - 1])) throw Error(ErrorCode::BadInput, "theta not strictly increasing");
        if (std::abs(theta[k] - theta[0] - static_cast<double>(k) * step) > 1e-9 * two_pi) {
            throw Error(ErrorCode::BadInput, "nodes are not uniformly spaced");
        }
    }
    std::size_t n = grid_size.value_or(CircleGrid::kMinSize);
    if (!grid_size) {
        while (n < m) n *= 2;
    }
    return interpolate_uniform(values, theta[0], CircleGrid(n));
}

BoundaryFunction read_samples_csv(const std::string& path, std::optional<std::size_t> grid_size) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
    return read_samples_csv(in, grid_size);
}

void write_samples_csv(std::ostream& out, const BoundaryFunction& f) {
    const auto old = out.precision(17);
    out << "theta,re,im\n";
    for (std::size_t j = 0; j < f.size(); ++j) {
        out << f.grid().angle(j) << ',' << f[j].real() << ',' << f[j].imag() << '\n';
    }
    out.precision(old);
}

}  // namespace windcert
