#pragma once

// The six boundary identities among level-4 brackets of two generators
// ip, iq (reduced degree 3, home 3), with witnesses at level 5.

#include <string>
#include <vector>

#include "hhops/simplicial.hpp"

namespace wedge {

struct Identity {
  std::string lhs;
  std::string witness;
  int frozen_sign = 1;       // ∂(witness) = frozen_sign * lhs
  bool frozen_holds = false;
  bool printed_holds = false;  // ∂(witness) = +lhs
};

hhops::SimplicialLieObject two_sphere_object();
std::vector<Identity> check_identities();

}  // namespace wedge
