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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sbopt {

using BinaryVector = std::vector<std::uint8_t>;
using SpinVector = std::vector<std::int8_t>;

/// One coefficient of an objective ``value * s_i * s_j``.
struct QuboEntry {
    std::size_t i;
    std::size_t j;
    double value;
};

/// Dense symmetric QUBO matrix. The stored matrix is always the symmetric part
/// (Q + Q^T) / 2 of whatever was supplied, so kernels can assume Q_ij == Q_ji.
///
/// An optional constant offset is carried alongside the matrix; energy() adds
/// it. Plain QUBOs have offset 0. Penalty encodings use it for the constants
/// produced by expanding squares, so that energies read as costs.
class QuboMatrix {
 public:
    /// Zero matrix of dimension n.
    explicit QuboMatrix(std::size_t n, double offset = 0.0);

    /// Row-major n x n values; any matrix is accepted and symmetrized.
    static QuboMatrix from_dense(std::size_t n, std::span<const double> values,
                                 double offset = 0.0);

    /// Sparse term list. Each entry contributes value * s_i * s_j; repeated
    /// (i, j) pairs accumulate and (i, j) / (j, i) are interchangeable.
    static QuboMatrix from_entries(std::size_t n, std::span<const QuboEntry> entries,
                                   double offset = 0.0);

    std::size_t size() const noexcept { return n_; }
    double offset() const noexcept { return offset_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * n_, n_};
    }
    std::span<const double> data() const noexcept { return data_; }

    double max_abs_coefficient() const noexcept;

    /// Same objective multiplied by factor (offset included).
    QuboMatrix scaled(double factor) const;

    /// Upper-triangular term list (i <= j) describing the same objective.
    std::vector<QuboEntry> upper_entries() const;

 private:
    QuboMatrix(std::size_t n, std::vector<double> data, double offset);
    void validate() const;

    std::size_t n_;
    std::vector<double> data_;
    double offset_;
};

/// Ising form  sigma^T J sigma + h^T sigma + offset  over sigma in {-1,+1}^n,
/// J symmetric with zero diagonal.
struct IsingForm {
    std::size_t n = 0;
    std::vector<double> couplings;  // row-major n x n
    std::vector<double> fields;
    double offset = 0.0;

    double coupling(std::size_t i, std::size_t j) const noexcept { return couplings[i * n + j]; }
};

/// s^T Q s + offset.
double energy(const QuboMatrix& q, std::span<const std::uint8_t> s);

/// energy(q, flip(s, i)) - energy(q, s) in O(n).
double delta_energy(const QuboMatrix& q, std::span<const std::uint8_t> s, std::size_t i);

/// Change of variables s = (sigma + 1) / 2.
IsingForm to_ising(const QuboMatrix& q);

double ising_energy(const IsingForm& ising, std::span<const std::int8_t> spins);

SpinVector to_spins(std::span<const std::uint8_t> bits);
BinaryVector to_bits(std::span<const std::int8_t> spins);

/// Bits of the unsigned integer code, bit 0 least significant.
BinaryVector bits_from_code(std::uint64_t code, std::size_t n);
std::uint64_t code_from_bits(std::span<const std::uint8_t> bits);

/// Relative comparison used across the library: |a - b| <= tol * (1 + max(|a|, |b|)).
bool nearly_equal(double a, double b, double rel_tol = 1e-9) noexcept;

}  // namespace sbopt
