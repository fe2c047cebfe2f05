#include "wedge_identities.hpp"

#include "hhops/spectral.hpp"

namespace wedge {

using namespace hhops;

SimplicialLieObject two_sphere_object() {
  GeneratorSymbol p("ip", 3, 3), q("iq", 3, 3);
  return SimplicialLieObject("two generators at home 3", {{p, LieElement()}, {q, LieElement()}});
}

std::vector<Identity> check_identities() {
  const std::string x = "[s1 s0 ip, s4 s2 iq]";
  const std::string y = "[s1 s0 ip, s3 s2 iq]";
  std::vector<Identity> ids = {
      {"[s0 ip, s3 iq]", x, 1},
      {"[s0 ip, s2 iq]", y, 1},
      {"[s1 ip, s3 iq]", "[s2 s0 ip, s4 s1 iq] - " + x, -1},
      {"[s1 ip, s2 iq] + [s0 ip, s1 iq]", "[s2 s0 ip, s3 s1 iq] - " + y, -1},
      {"[s1 ip, s2 iq] + [s1 ip, s0 iq]", "[s2 s1 ip, s3 s0 iq]", -1},
      {"[s2 ip, s3 iq] - [s0 ip, s1 iq]", "[s3 s0 ip, s4 s1 iq]", -1},
  };
  SimplicialLieObject X = two_sphere_object();
  auto table = X.generator_table();
  for (auto& id : ids) {
    LieElement lhs = parse_element(id.lhs, table);
    LieElement boundary = total_boundary(X, 5, parse_element(id.witness, table));
    id.frozen_holds = equivalent(boundary, Rational(id.frozen_sign) * lhs);
    id.printed_holds = equivalent(boundary, lhs);
  }
  return ids;
}

}  // namespace wedge
