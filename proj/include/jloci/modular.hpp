#pragma once

#include "jloci/sparse.hpp"

#include <cstdint>

namespace jloci {

inline constexpr std::uint64_t default_prime = 2147483647; // 2^31 - 1

/// Rank over F_p of M after clearing denominators row by row. This is a
/// lower bound for the rank over Q, and equal to it for all but finitely
/// many p.
std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p = default_prime);

/// Exact rank by dense fraction-free (Bareiss) elimination over Z. Shares no
/// code with the sparse echelon routines, so it serves as an independent
/// check on them.
std::size_t bareiss_rank(const ExactMatrix& m);

/// Determinant of a square integral matrix, by the same elimination.
/// Throws std::invalid_argument otherwise.
Integer integer_determinant(const ExactMatrix& m);

} // namespace jloci
