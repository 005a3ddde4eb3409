// Copyright 2026 The exact1q developers
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

#include "exact1q/circuit_io.hpp"

#include <fstream>
#include <limits>

namespace exact1q {

namespace {

nlohmann::json scalar_to_json(const std::complex<double>& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json scalar_to_json(const ExactComplex& z) {
    return nlohmann::json::array({rational_to_json(z.real().rational_part()),
                                  rational_to_json(z.real().sqrt2_part()),
                                  rational_to_json(z.imag().rational_part()),
                                  rational_to_json(z.imag().sqrt2_part())});
}

std::complex<double> float_scalar_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("float scalar must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ExactComplex exact_scalar_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument(
            "qsqrt2 scalar must be [[a_num,a_den],[b_num,b_den],[c_num,c_den],[d_num,d_den]]");
    }
    return ExactComplex(QSqrt2(rational_from_json(j[0]), rational_from_json(j[1])),
                        QSqrt2(rational_from_json(j[2]), rational_from_json(j[3])));
}

template <class S, class FromJson>
Matrix<S> matrix_from_json(const nlohmann::json& j, const FromJson& scalar_from) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix must be a nonempty list of rows");
    }
    int d = static_cast<int>(j.size());
    Matrix<S> m(d);
    for (int r = 0; r < d; ++r) {
        const nlohmann::json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw std::invalid_argument("matrix rows must all have the matrix dimension");
        }
        for (int c = 0; c < d; ++c) {
            m(r, c) = scalar_from(row[c]);
        }
    }
    return m;
}

template <class S>
nlohmann::json matrix_to_json(const Matrix<S>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c) {
            row.push_back(scalar_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

MeasurementKind measurement_kind_from_string(const std::string& s) {
    if (s == "projective") return MeasurementKind::Projective;
    if (s == "povm") return MeasurementKind::Povm;
    throw std::invalid_argument("measurement type must be \"projective\" or \"povm\"");
}

std::string measurement_kind_to_string(MeasurementKind k) {
    return k == MeasurementKind::Projective ? "projective" : "povm";
}

template <class S, class FromJson>
Circuit<S> circuit_from_json_impl(const nlohmann::json& j, const FromJson& scalar_from) {
    int n = j.at("n").get<int>();
    int K = j.at("K").get<int>();
    int T = j.at("T").get<int>();
    const nlohmann::json& us = j.at("unitaries");
    if (!us.is_array() || static_cast<int>(us.size()) != T + 1) {
        throw std::invalid_argument("circuit needs exactly T+1 unitaries");
    }
    std::vector<Matrix<S>> unitaries;
    unitaries.reserve(us.size());
    for (const nlohmann::json& u : us) {
        unitaries.push_back(matrix_from_json<S>(u, scalar_from));
    }
    const nlohmann::json& meas = j.at("measurement");
    Measurement<S> m;
    m.kind = measurement_kind_from_string(meas.at("type").get<std::string>());
    m.e1 = matrix_from_json<S>(meas.at("E1"), scalar_from);
    return Circuit<S>(n, K, std::move(unitaries), std::move(m));
}

template <class S>
nlohmann::json circuit_to_json_impl(const Circuit<S>& c, const char* field) {
    nlohmann::json j;
    j["n"] = c.n();
    j["K"] = c.K();
    j["T"] = c.queries();
    j["field"] = field;
    nlohmann::json us = nlohmann::json::array();
    for (const Matrix<S>& u : c.unitaries()) {
        us.push_back(matrix_to_json(u));
    }
    j["unitaries"] = std::move(us);
    j["measurement"] = {{"type", measurement_kind_to_string(c.measurement().kind)},
                        {"E1", matrix_to_json(c.measurement().e1)}};
    return j;
}

}  // namespace

nlohmann::json rational_to_json(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num < std::numeric_limits<int64_t>::min() || num > std::numeric_limits<int64_t>::max() ||
        den > std::numeric_limits<int64_t>::max()) {
        throw std::invalid_argument("rational exceeds the serializable int64 range");
    }
    return nlohmann::json::array(
        {static_cast<int64_t>(num), static_cast<int64_t>(den)});
}

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("rational must be [num, den]");
    }
    int64_t num = j[0].get<int64_t>();
    int64_t den = j[1].get<int64_t>();
    if (den == 0) {
        throw std::invalid_argument("rational denominator is zero");
    }
    return Rational(BigInt(num), BigInt(den));
}

AnyCircuit circuit_from_json(const nlohmann::json& j) {
    std::string field = j.at("field").get<std::string>();
    if (field == "float") {
        return circuit_from_json_impl<std::complex<double>>(j, float_scalar_from_json);
    }
    if (field == "qsqrt2") {
        return circuit_from_json_impl<ExactComplex>(j, exact_scalar_from_json);
    }
    throw std::invalid_argument("field must be \"float\" or \"qsqrt2\"");
}

nlohmann::json circuit_to_json(const FloatCircuit& c) {
    return circuit_to_json_impl(c, "float");
}

nlohmann::json circuit_to_json(const ExactCircuit& c) {
    return circuit_to_json_impl(c, "qsqrt2");
}

nlohmann::json circuit_to_json(const AnyCircuit& c) {
    return std::visit([](const auto& circuit) { return circuit_to_json(circuit); }, c);
}

AnyCircuit load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open circuit file: " + path);
    }
    nlohmann::json j;
    in >> j;
    return circuit_from_json(j);
}

void save_circuit_file(const std::string& path, const AnyCircuit& c) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write circuit file: " + path);
    }
    out << circuit_to_json(c).dump(2) << "\n";
}

}  // namespace exact1q
