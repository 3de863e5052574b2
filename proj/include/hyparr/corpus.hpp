#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

struct NamedArrangement {
  std::string name;
  std::string description;
  Arrangement arrangement;  ///< with its complete factorization
};

/// Boolean arrangements, generic pencils of lines, xy(x+y), the essentialized
/// braid arrangement A2, xyz(x+y+z), x^2 y as (x, x, y), and the supersolvable
/// rank-3 arrangement xyz(x-y)(x-z)(y-z).
std::vector<NamedArrangement> builtin_corpus();
std::optional<NamedArrangement> corpus_entry(const std::string& name);

/// Boolean arrangement x_1 ... x_n with complete factorization.
Arrangement boolean_arrangement(std::size_t n);
/// d lines through the origin of C^2 with normals (1,0), (0,1), (1,1), (1,2), ...
Arrangement generic_lines(std::size_t d);
/// Every hyperplane its own factor, in the given order.
Arrangement complete_from_normals(std::size_t dim, const std::vector<RatVector>& normals);

}  // namespace hyparr
