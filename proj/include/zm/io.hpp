#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zm/matching.hpp"
#include "zm/partition.hpp"
#include "zm/perm.hpp"
#include "zm/spherical.hpp"
#include "zm/symfunc.hpp"
#include "zm/zmeasure.hpp"

namespace zm {

/// CSV with header partition,numerator,denominator,im_numerator,im_denominator,decimal.
/// The decimal column approximates the real part and is display-only.
void write_csv(std::ostream& os, const MeasureTable& table);

/// CSV of w^λ(ρ): lambda,rho,numerator,denominator,decimal.
void write_csv(std::ostream& os, const SphericalTable& table);

/// JSON: {n, params, normalized, entries: [{partition, num, den, im_num, im_den, decimal}]}.
void write_json(std::ostream& os, const MeasureTable& table);

/// Plain text table (partition -> exact weight).
void write_text(std::ostream& os, const MeasureTable& table);

/// Matchings as JSON arrays of pairs: [[-2,-1],[1,2]].
std::string matching_to_json(const Matching& x);
Matching matching_from_json(const std::string& text);

/// Permutations as one-line JSON arrays over (-n,...,-1,1,...,n).
std::string permutation_to_json(const SignedPermutation& g);
SignedPermutation permutation_from_json(const std::string& text);

/// Symmetric functions as {basis, degree, terms: [[partition, num, den, im_num, im_den]...]}.
std::string symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);

/// "(3,1)" -> Partition; accepts "3,1" and "()" too.
Partition parse_partition(const std::string& text);

}  // namespace zm
