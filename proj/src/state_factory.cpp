// Copyright 2026 The eoftangle Authors
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

#include "eoftangle/state_factory.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eoftangle/errors.hpp"

namespace eoft {

PureState::PureState(ComplexVector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (total_dimension(dims_) != amplitudes_.size()) {
        throw ArgumentError("amplitude count " + std::to_string(amplitudes_.size()) +
                            " does not match the product of dims");
    }
    const double norm_sq = amplitudes_.squaredNorm();
    if (std::abs(norm_sq - 1.0) > kStateNormTolerance) {
        throw ArgumentError("state is not normalized: |psi|^2 = " + std::to_string(norm_sq));
    }
}

DensityMatrix PureState::density() const { return DensityMatrix::projector(amplitudes_, dims_); }

DensityMatrix PureState::reduced(std::span<const int> keep) const { return partial_trace(density(), keep); }

DensityMatrix PureState::reduced(std::initializer_list<int> keep) const {
    return reduced(std::span<const int>(keep.begin(), keep.size()));
}

double WParams::alpha() const { return std::sin(theta) * std::cos(phi); }
double WParams::beta() const { return std::sin(theta) * std::sin(phi); }
double WParams::gamma() const { return std::cos(theta); }

WParams WParams::balanced() { return {std::acos(1.0 / std::sqrt(3.0)), M_PI / 4.0}; }

PureState ghz(Complex first, Complex second) {
    const double norm_sq = std::norm(first) + std::norm(second);
    if (std::abs(norm_sq - 1.0) > kStateNormTolerance) {
        throw ArgumentError("GHZ amplitudes are not normalized");
    }
    ComplexVector amps = ComplexVector::Zero(8);
    amps(0) = first;
    amps(7) = second;
    return PureState(std::move(amps), {2, 2, 2});
}

PureState w(const WParams& params) {
    ComplexVector amps = ComplexVector::Zero(8);
    amps(0b001) = params.alpha();
    amps(0b010) = params.beta();
    amps(0b100) = params.gamma();
    return PureState(std::move(amps), {2, 2, 2});
}

PureState bell_like(double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw ArgumentError("bell_like amplitude must lie in [0, 1]");
    }
    ComplexVector amps = ComplexVector::Zero(4);
    amps(0) = a;
    amps(3) = std::sqrt(1.0 - a * a);
    return PureState(std::move(amps), {2, 2});
}

PureState haar_random(Dims dims, std::uint64_t seed) {
    const int total = total_dimension(dims);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector amps(total);
    for (int i = 0; i < total; ++i) {
        const double re = normal(engine);
        const double im = normal(engine);
        amps(i) = Complex(re, im);
    }
    amps /= amps.norm();
    return PureState(std::move(amps), std::move(dims));
}

PureState basis_state(Dims dims, std::span<const int> levels) {
    if (levels.size() != dims.size()) {
        throw ArgumentError("basis_state needs one level per subsystem");
    }
    int index = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (levels[k] < 0 || levels[k] >= dims[k]) {
            throw ArgumentError("basis level out of range");
        }
        index = index * dims[k] + levels[k];
    }
    ComplexVector amps = ComplexVector::Zero(total_dimension(dims));
    amps(index) = 1.0;
    return PureState(std::move(amps), std::move(dims));
}

PureState basis_state(Dims dims, std::initializer_list<int> levels) {
    return basis_state(std::move(dims), std::span<const int>(levels.begin(), levels.size()));
}

PureState tensor_product(const PureState& a, const PureState& b) {
    ComplexVector amps(a.amplitudes().size() * b.amplitudes().size());
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
        amps.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
    }
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    amps /= amps.norm();
    return PureState(std::move(amps), std::move(dims));
}

PureState parse_state(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw FormatError("state file: top level must be an object");
    }
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
        throw FormatError("state file: field \"dims\" must be a nonempty array of integers");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw FormatError("state file: field \"amplitudes\" must be an array of [re, im] pairs");
    }

    Dims dims;
    long long total = 1;
    for (std::size_t i = 0; i < doc["dims"].size(); ++i) {
        const json& d = doc["dims"][i];
        if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 4096) {
            throw FormatError("state file: dims[" + std::to_string(i) + "] must be a positive integer");
        }
        dims.push_back(d.get<int>());
        total *= dims.back();
        if (total > (1 << 16)) {
            throw FormatError("state file: total dimension exceeds 65536");
        }
    }

    const json& amps_json = doc["amplitudes"];
    if (static_cast<long long>(amps_json.size()) != total) {
        throw FormatError("state file: dimension mismatch, dims multiply to " + std::to_string(total) + " but " +
                          std::to_string(amps_json.size()) + " amplitudes were given");
    }
    ComplexVector amps(total);
    for (std::size_t i = 0; i < amps_json.size(); ++i) {
        const json& pair = amps_json[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw FormatError("state file: amplitudes[" + std::to_string(i) + "] must be a [re, im] pair of numbers");
        }
        amps(static_cast<Eigen::Index>(i)) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    const double norm_sq = amps.squaredNorm();
    if (std::abs(norm_sq - 1.0) > kFileNormTolerance) {
        throw FormatError("state file: normalization error, sum |amplitude|^2 = " + std::to_string(norm_sq));
    }
    amps /= std::sqrt(norm_sq);
    return PureState(std::move(amps), std::move(dims));
}

std::string serialize_state(const PureState& state) {
    nlohmann::json doc;
    doc["dims"] = state.dims();
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex& z : state.amplitudes()) {
        amps.push_back({z.real(), z.imag()});
    }
    doc["amplitudes"] = std::move(amps);
    return doc.dump(2) + "\n";
}

PureState load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open state file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_state(buffer.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_state(const PureState& state, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write state file " + path.string());
    }
    out << serialize_state(state);
}

} // namespace eoft
