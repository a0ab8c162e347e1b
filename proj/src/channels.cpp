// Copyright 2026 the qbcap authors
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

#include "qbcap/channels.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qbcap/errors.hpp"

namespace qbcap {

namespace {

void check_mad_params(const MadParams& p) {
    for (double g : {p.gamma1, p.gamma2, p.gamma3})
        if (g < 0.0 || g > 1.0) throw InvalidParams("mad: damping parameters must lie in [0,1]");
    if (p.gamma2 + p.gamma3 > 1.0)
        throw InvalidParams("mad: gamma2 + gamma3 must not exceed 1");
}

Mat mad_output(const MadParams& p, const Mat& r, bool resonant) {
    const double g1 = p.gamma1, g2 = p.gamma2, g3 = p.gamma3;
    Mat o(3, 3);
    o(0, 0) = r(0, 0) + g1 * r(1, 1) + g3 * r(2, 2);
    o(0, 1) = std::sqrt(1.0 - g1) * r(0, 1);
    if (resonant) o(0, 1) += std::sqrt(g1 * g2) * r(1, 2);
    o(0, 2) = std::sqrt(1.0 - g2 - g3) * r(0, 2);
    o(1, 1) = (1.0 - g1) * r(1, 1) + g2 * r(2, 2);
    o(1, 2) = std::sqrt((1.0 - g1) * (1.0 - g2 - g3)) * r(1, 2);
    o(2, 2) = (1.0 - g2 - g3) * r(2, 2);
    o(1, 0) = std::conj(o(0, 1));
    o(2, 0) = std::conj(o(0, 2));
    o(2, 1) = std::conj(o(1, 2));
    return o;
}

}  // namespace

KrausChannel kraus_from_map(const std::function<Mat(const Mat&)>& map, std::size_t dim_in,
                            std::size_t dim_out) {
    // Choi matrix J[(i,m),(j,n)] = <m| map(|i><j|) |n>, flattened as i*dim_out + m.
    Mat choi(dim_in * dim_out, dim_in * dim_out);
    for (std::size_t i = 0; i < dim_in; ++i)
        for (std::size_t j = 0; j < dim_in; ++j) {
            Mat unit(dim_in, dim_in);
            unit(i, j) = 1.0;
            const Mat out = map(unit);
            for (std::size_t m = 0; m < dim_out; ++m)
                for (std::size_t n = 0; n < dim_out; ++n)
                    choi(i * dim_out + m, j * dim_out + n) = out(m, n);
        }

    const Spectrum spec = eig_hermitian(choi);
    std::vector<Mat> kraus;
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        const double mu = spec.eigenvalues[k];
        if (mu < -1e-10) throw NotCP("channel map is not completely positive");
        if (mu <= 1e-12) continue;
        const double w = std::sqrt(mu);
        Mat op(dim_out, dim_in);
        for (std::size_t i = 0; i < dim_in; ++i)
            for (std::size_t m = 0; m < dim_out; ++m)
                op(m, i) = w * spec.eigenvectors(i * dim_out + m, k);
        kraus.push_back(std::move(op));
    }
    return KrausChannel(std::move(kraus));
}

KrausChannel make_mad(const MadParams& p) {
    check_mad_params(p);
    return kraus_from_map([p](const Mat& r) { return mad_output(p, r, false); }, 3, 3);
}

KrausChannel make_remad(const MadParams& p) {
    check_mad_params(p);
    return kraus_from_map([p](const Mat& r) { return mad_output(p, r, true); }, 3, 3);
}

KrausChannel make_depolarizing(std::size_t dim, double p) {
    if (dim < 2) throw InvalidParams("depolarizing: dimension must be >= 2");
    if (p < 0.0 || p > 1.0) throw InvalidParams("depolarizing: probability must lie in [0,1]");
    std::vector<Mat> kraus;
    if (p < 1.0) {
        Mat k = Mat::identity(dim);
        k *= cplx{std::sqrt(1.0 - p), 0.0};
        kraus.push_back(std::move(k));
    }
    if (p > 0.0) {
        const double w = std::sqrt(p / static_cast<double>(dim));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Mat k(dim, dim);
                k(i, j) = w;
                kraus.push_back(std::move(k));
            }
    }
    return KrausChannel(std::move(kraus));
}

KrausChannel make_qubit_ad(double gamma) {
    if (gamma < 0.0 || gamma > 1.0)
        throw InvalidParams("qubit amplitude damping: gamma must lie in [0,1]");
    Mat k0(2, 2), k1(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    k1(0, 1) = std::sqrt(gamma);
    return KrausChannel({std::move(k0), std::move(k1)});
}

KrausChannel ChannelSpec::build() const {
    switch (kind) {
        case ChannelKind::identity:
            return KrausChannel::identity(dim);
        case ChannelKind::depolarizing:
            if (params.size() != 1) throw InvalidParams("channel.params: depolarizing takes one value");
            return make_depolarizing(dim, params[0]);
        case ChannelKind::qubit_amplitude_damping:
            if (params.size() != 1)
                throw InvalidParams("channel.params: qubit_amplitude_damping takes one value");
            return make_qubit_ad(params[0]);
        case ChannelKind::mad:
            if (params.size() != 3) throw InvalidParams("channel.params: mad takes three values");
            return make_mad({params[0], params[1], params[2]});
        case ChannelKind::remad:
            if (params.size() != 3) throw InvalidParams("channel.params: remad takes three values");
            return make_remad({params[0], params[1], params[2]});
        case ChannelKind::custom_kraus:
            return KrausChannel(kraus);
    }
    throw InvalidParams("channel.kind: unknown kind");
}

std::string ChannelSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case ChannelKind::identity: os << "identity(dim=" << dim << ")"; break;
        case ChannelKind::depolarizing: os << "depolarizing(dim=" << dim << ",p=" << params[0] << ")"; break;
        case ChannelKind::qubit_amplitude_damping: os << "qubit_amplitude_damping(gamma=" << params[0] << ")"; break;
        case ChannelKind::mad:
            os << "mad(" << params[0] << "," << params[1] << "," << params[2] << ")";
            break;
        case ChannelKind::remad:
            os << "remad(" << params[0] << "," << params[1] << "," << params[2] << ")";
            break;
        case ChannelKind::custom_kraus: os << "custom_kraus(" << kraus.size() << " ops)"; break;
    }
    return os.str();
}

namespace {

Mat matrix_from_json(const nlohmann::json& rows, const std::string& field) {
    if (!rows.is_array() || rows.empty())
        throw InvalidParams(field + ": expected a non-empty array of rows");
    const std::size_t nr = rows.size();
    const std::size_t nc = rows[0].is_array() ? rows[0].size() : 0;
    if (nc == 0) throw InvalidParams(field + ": rows must be arrays of [re, im] pairs");
    Mat m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (!rows[i].is_array() || rows[i].size() != nc)
            throw InvalidParams(field + ": ragged rows");
        for (std::size_t j = 0; j < nc; ++j) {
            const auto& cell = rows[i][j];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                throw InvalidParams(field + ": entries must be [re, im] pairs");
            m(i, j) = cplx{cell[0].get<double>(), cell[1].get<double>()};
        }
    }
    return m;
}

}  // namespace

ChannelSpec ChannelSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidParams(std::string("channel: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidParams("channel.kind: missing or not a string");

    ChannelSpec spec;
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "identity")
        spec.kind = ChannelKind::identity;
    else if (kind == "depolarizing")
        spec.kind = ChannelKind::depolarizing;
    else if (kind == "qubit_amplitude_damping")
        spec.kind = ChannelKind::qubit_amplitude_damping;
    else if (kind == "mad")
        spec.kind = ChannelKind::mad;
    else if (kind == "remad")
        spec.kind = ChannelKind::remad;
    else if (kind == "custom_kraus")
        spec.kind = ChannelKind::custom_kraus;
    else
        throw InvalidParams("channel.kind: unknown kind '" + kind + "'");

    if (j.contains("dim")) {
        if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
            throw InvalidParams("channel.dim: must be a positive integer");
        spec.dim = j["dim"].get<std::size_t>();
    }
    if (spec.kind == ChannelKind::mad || spec.kind == ChannelKind::remad) spec.dim = 3;
    if (spec.kind == ChannelKind::qubit_amplitude_damping) spec.dim = 2;

    if (j.contains("params")) {
        if (!j["params"].is_array()) throw InvalidParams("channel.params: must be an array");
        for (const auto& v : j["params"]) {
            if (!v.is_number()) throw InvalidParams("channel.params: must contain numbers");
            spec.params.push_back(v.get<double>());
        }
    }
    if (spec.kind == ChannelKind::custom_kraus) {
        if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
            throw InvalidParams("channel.kraus: custom_kraus needs a non-empty operator list");
        for (std::size_t k = 0; k < j["kraus"].size(); ++k)
            spec.kraus.push_back(
                matrix_from_json(j["kraus"][k], "channel.kraus[" + std::to_string(k) + "]"));
        spec.dim = spec.kraus.front().cols();
    }
    spec.build();  // surface parameter problems (e.g. gamma2+gamma3 > 1) at parse time
    return spec;
}

}  // namespace qbcap
