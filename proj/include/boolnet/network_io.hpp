#ifndef BOOLNET_NETWORK_IO_HPP_
#define BOOLNET_NETWORK_IO_HPP_

#include <iosfwd>
#include <stdexcept>

#include "boolnet/network.hpp"

namespace boolnet {

class NetworkLoadError : public std::runtime_error {
 public:
  enum class Kind { Version, Checksum, Format };
  NetworkLoadError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Line-oriented text file:
//   BOOLNET v1 k=<k> n=<n> policy=<oracle|audit>
//   <expression> <0|1|t> <resolution tag>      one line per cell
//   metrics cells=... by_length=... unresolved_by_length=...
//   checksum crc32=<8 hex digits>
// The checksum covers every byte before the checksum line. Aborted networks
// cannot be saved (std::invalid_argument).
void save_network(const Network& net, std::ostream& out);

// Rebuilds the trie from the records and checks the stored metrics against
// the rebuilt ones. Truncated files fail the checksum.
Network load_network(std::istream& in);

}  // namespace boolnet

#endif  // BOOLNET_NETWORK_IO_HPP_
