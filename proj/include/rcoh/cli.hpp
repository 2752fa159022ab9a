#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcoh/field.hpp"

namespace rcoh::cli {

/// Bad flags or input data; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct LambdaSelection {
  std::vector<Vector> lambdas;
  std::string description;
};

/// Lambda spec forms:
///   "1,0,2"           explicit residues, exactly p of them
///   "zero"            the zero vector
///   "onehot"          the p one-hot vectors
///   "random:S[:N]"    N (default 1) nonzero vectors from seed S
///   "standard"        zero, the one-hot vectors, 5 random vectors from `seed`
///   "all"             every vector for p <= 3; otherwise zero plus 200 random vectors from `seed`
LambdaSelection expand_lambda_spec(Residue p, const std::string& spec, std::uint64_t seed);

/// "2,3,5" -> {2, 3, 5}; every entry must be prime.
std::vector<Residue> parse_primes(const std::string& text);
Residue parse_prime(std::int64_t value);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcoh::cli
