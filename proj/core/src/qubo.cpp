// Copyright 2026 The sbopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "sbopt/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sbopt/errors.hpp"

namespace sbopt {

namespace {

void check_bits(const QuboMatrix& q, std::span<const std::uint8_t> s) {
    if (s.size() != q.size()) {
        throw UsageError("binary vector has length " + std::to_string(s.size()) +
                         " but the QUBO has dimension " + std::to_string(q.size()));
    }
    for (auto b : s) {
        if (b > 1) throw UsageError("binary vector entries must be 0 or 1");
    }
}

}  // namespace

QuboMatrix::QuboMatrix(std::size_t n, double offset)
        : QuboMatrix(n, std::vector<double>(n * n, 0.0), offset) {}

QuboMatrix::QuboMatrix(std::size_t n, std::vector<double> data, double offset)
        : n_(n), data_(std::move(data)), offset_(offset) {
    validate();
}

void QuboMatrix::validate() const {
    if (n_ == 0) throw UsageError("QUBO dimension must be at least 1");
    if (!std::isfinite(offset_)) throw UsageError("QUBO offset must be finite");
    for (double v : data_) {
        if (!std::isfinite(v)) throw UsageError("QUBO coefficients must be finite");
    }
}

QuboMatrix QuboMatrix::from_dense(std::size_t n, std::span<const double> values, double offset) {
    if (values.size() != n * n) {
        throw UsageError("dense QUBO needs " + std::to_string(n * n) + " values, got " +
                         std::to_string(values.size()));
    }
    std::vector<double> sym(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym[i * n + j] = 0.5 * (values[i * n + j] + values[j * n + i]);
        }
    }
    return QuboMatrix(n, std::move(sym), offset);
}

QuboMatrix QuboMatrix::from_entries(std::size_t n, std::span<const QuboEntry> entries,
                                    double offset) {
    std::vector<double> data(n * n, 0.0);
    for (const auto& e : entries) {
        if (e.i >= n || e.j >= n) {
            throw UsageError("QUBO entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                             ") is outside dimension " + std::to_string(n));
        }
        if (e.i == e.j) {
            data[e.i * n + e.i] += e.value;
        } else {
            data[e.i * n + e.j] += 0.5 * e.value;
            data[e.j * n + e.i] += 0.5 * e.value;
        }
    }
    return QuboMatrix(n, std::move(data), offset);
}

double QuboMatrix::max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

QuboMatrix QuboMatrix::scaled(double factor) const {
    std::vector<double> data(data_);
    for (double& v : data) v *= factor;
    return QuboMatrix(n_, std::move(data), offset_ * factor);
}

std::vector<QuboEntry> QuboMatrix::upper_entries() const {
    std::vector<QuboEntry> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (data_[i * n_ + i] != 0.0) out.push_back({i, i, data_[i * n_ + i]});
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double v = data_[i * n_ + j];
            if (v != 0.0) out.push_back({i, j, 2.0 * v});
        }
    }
    return out;
}

double energy(const QuboMatrix& q, std::span<const std::uint8_t> s) {
    check_bits(q, s);
    const std::size_t n = q.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!s[i]) continue;
        const auto row = q.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (s[j]) acc += row[j];
        }
        total += acc;
    }
    return total + q.offset();
}

double delta_energy(const QuboMatrix& q, std::span<const std::uint8_t> s, std::size_t i) {
    check_bits(q, s);
    if (i >= q.size()) {
        throw UsageError("flip index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(q.size()));
    }
    const auto row = q.row(i);
    double cross = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (j != i && s[j]) cross += row[j];
    }
    const double gain = row[i] + 2.0 * cross;
    return s[i] ? -gain : gain;
}

IsingForm to_ising(const QuboMatrix& q) {
    // s = (sigma + 1) / 2 turns sum_ij Q_ij s_i s_j into
    //   1/4 sum_{i!=j} Q_ij sigma_i sigma_j + 1/2 sum_i (sum_j Q_ij) sigma_i
    //   + 1/4 (sum_ij Q_ij + sum_i Q_ii)
    const std::size_t n = q.size();
    IsingForm out;
    out.n = n;
    out.couplings.assign(n * n, 0.0);
    out.fields.assign(n, 0.0);
    double total = 0.0;
    double diagonal = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = q.row(i);
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row_sum += row[j];
            if (j != i) out.couplings[i * n + j] = 0.25 * row[j];
        }
        out.fields[i] = 0.5 * row_sum;
        total += row_sum;
        diagonal += row[i];
    }
    out.offset = 0.25 * (total + diagonal) + q.offset();
    return out;
}

double ising_energy(const IsingForm& ising, std::span<const std::int8_t> spins) {
    if (spins.size() != ising.n) {
        throw UsageError("spin vector has length " + std::to_string(spins.size()) +
                         " but the Ising form has dimension " + std::to_string(ising.n));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < ising.n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < ising.n; ++j) acc += ising.coupling(i, j) * spins[j];
        total += spins[i] * (acc + ising.fields[i]);
    }
    return total + ising.offset;
}

SpinVector to_spins(std::span<const std::uint8_t> bits) {
    SpinVector out(bits.size());
    std::transform(bits.begin(), bits.end(), out.begin(),
                   [](std::uint8_t b) { return static_cast<std::int8_t>(b ? 1 : -1); });
    return out;
}

BinaryVector to_bits(std::span<const std::int8_t> spins) {
    BinaryVector out(spins.size());
    std::transform(spins.begin(), spins.end(), out.begin(),
                   [](std::int8_t s) { return static_cast<std::uint8_t>(s > 0 ? 1 : 0); });
    return out;
}

BinaryVector bits_from_code(std::uint64_t code, std::size_t n) {
    if (n > 64) throw UsageError("integer codes cover at most 64 bits");
    BinaryVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((code >> i) & 1U);
    return out;
}

std::uint64_t code_from_bits(std::span<const std::uint8_t> bits) {
    if (bits.size() > 64) throw UsageError("integer codes cover at most 64 bits");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) code |= std::uint64_t{1} << i;
    }
    return code;
}

bool nearly_equal(double a, double b, double rel_tol) noexcept {
    return std::abs(a - b) <= rel_tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace sbopt
