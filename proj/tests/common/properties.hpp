#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace einstrength::testing {

struct PropertyResult {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;
  bool ok() const { return passed == total && total > 0; }
};

PropertyResult ranking_axioms(std::size_t cases, std::uint64_t seed);
PropertyResult reduce_witness(std::size_t cases, std::uint64_t seed);
PropertyResult leader_containment(std::size_t cases, std::uint64_t seed);
PropertyResult binomial_round_trip(std::size_t cases, std::uint64_t seed);
// Sets in N^m when naturals is true, otherwise in Z^m.
PropertyResult lattice_oracle(bool naturals, std::size_t cases, std::uint64_t seed);

}  // namespace einstrength::testing
