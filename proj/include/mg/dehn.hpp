#pragma once

#include <span>

#include "mg/oracle.hpp"

namespace mg {

// Metric small-cancellation data for a symmetrized relator set.
struct PieceReport {
  bool ok = false;            // max_piece * lambda_den < lambda_num * min_relator
  std::size_t max_piece = 0;  // longest piece among the symmetrized relators
  std::size_t min_relator = 0;
  std::size_t symmetrized_size = 0;
};

// Relators must be cyclically reduced and none may be a proper power;
// violations raise InputError. lambda = lambda_num / lambda_den.
PieceReport small_cancellation_check(std::span<const Word> relators, long lambda_num, long lambda_den);

// Word-problem oracle by Dehn's algorithm. Requires C'(lambda) with
// lambda <= 1/6, verified on construction.
OraclePtr make_dehn_oracle(int alphabet, std::vector<Word> relators, long lambda_num, long lambda_den);

std::optional<std::vector<Word>> dehn_oracle_relators(const OraclePtr& o);

}  // namespace mg
