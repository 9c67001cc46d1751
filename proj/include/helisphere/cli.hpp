#pragma once
#include <string>
#include <vector>

#include "helisphere/momentum.hpp"
#include "helisphere/oracles.hpp"

namespace helisphere {

// Mini-language: const:<c> | linear:<k0>,<c> | catenary:<c> | minimal:<h>,<c>
// | table:<path> (CSV with columns z,K[,dK]).
MomentumProfile parse_momentum_spec(const std::string& spec);

std::vector<CheckReport> run_verification_suite(const std::string& suite);

int cli_main(int argc, char** argv);

}  // namespace helisphere
