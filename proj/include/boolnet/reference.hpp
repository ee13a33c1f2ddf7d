#ifndef BOOLNET_REFERENCE_HPP_
#define BOOLNET_REFERENCE_HPP_

// Serial reference versions of the parallel kernels. Kept for differential
// testing and for the kernel benchmark.

#include <cstdint>

#include "boolnet/network.hpp"
#include "boolnet/oracle.hpp"

namespace boolnet::reference {

// Evaluates the tree directly under every assignment, one at a time.
std::uint64_t count_satisfying_serial(const Expr& e,
                                      std::size_t cap = kDefaultVariableCap);

// One expression at a time, straight from the enumeration stream.
Network build_network_serial(VarIndex variable_count, std::size_t max_len,
                             const BuildOptions& options = {});

}  // namespace boolnet::reference

#endif  // BOOLNET_REFERENCE_HPP_
