#pragma once

// Centrally symmetric polytopes in exact arithmetic. A body is given either by
// functionals (B = {x : |f·x| <= 1}) or by vertices (B = conv(±v)); the two
// are polar to each other, so one vertex enumerator serves both directions.

#include <vector>

#include "ramfac/linalg.hpp"

namespace ramfac {

/// Positive multiple of v with coprime integer entries. Zero stays zero.
RatVec primitive(const RatVec& v);

/// Flips sign so the first nonzero entry is positive.
RatVec sign_canonical(RatVec v);

/// One representative per ± pair (sign_canonical), sorted, zero vectors removed.
std::vector<RatVec> symmetric_representatives(const std::vector<RatVec>& vs);

/// Adds -v for every v and sorts; duplicates removed.
std::vector<RatVec> symmetrize(const std::vector<RatVec>& vs);

/// Vertices of {x in R^dim : |f·x| <= 1 for all f}, symmetric and sorted.
/// Double description on the homogenized cone. Throws DegenerateNormError if
/// the functionals do not span (unbounded body) and BudgetError above max_dim.
std::vector<RatVec> symmetric_vertices(const std::vector<RatVec>& functionals, std::size_t dim,
                                       std::size_t max_dim = 6);

/// Members of gens that are extreme points of conv(±gens), one per ± pair.
/// Decided by one LP per generator, so it works in any dimension.
std::vector<RatVec> extreme_generators(const std::vector<RatVec>& gens, std::size_t dim);

}  // namespace ramfac
