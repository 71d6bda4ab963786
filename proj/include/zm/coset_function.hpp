#pragma once

#include <map>

#include "zm/partition.hpp"
#include "zm/rational.hpp"

namespace zm {

/// A function on S(2n) constant on H(n)-double cosets, stored by coset type
/// (a partition of n). Carries φ_z restrictions, indicator functions and the
/// square-root-free payload of F_z.
struct CosetFunction {
    int n = 0;
    std::map<Partition, GaussianRational> values;

    const GaussianRational& at(const Partition& rho) const;
};

}  // namespace zm
