#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "takiff/rational.hpp"

namespace takiff {

using IntMatrix = std::vector<std::vector<int>>;
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

namespace linalg {

/// Reduced row echelon form in place; returns the rank.
std::size_t rref(QMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

/// Solves a * x = b for x when the columns of a are independent and b lies in
/// their span; nullopt otherwise.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

QMatrix to_rational(const IntMatrix& m);

}  // namespace linalg
}  // namespace takiff
