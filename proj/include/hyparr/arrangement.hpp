#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/matrix.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

/// Lattice elements are indexed by 64-bit hyperplane masks.
inline constexpr std::size_t kMaxHyperplanes = 64;

struct Hyperplane {
  RatVector normal;        ///< canonical: first nonzero coordinate is 1
  std::vector<int> mults;  ///< multiplicity in each factor f_1..f_r
  int total_multiplicity() const;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class FactorizationKind { Complete, General, Single };
std::string to_string(FactorizationKind kind);

/// Central arrangement in C^n with a factorization f = f_1 ... f_r recorded as
/// a hyperplane x factor multiplicity matrix. Proportional normals are merged
/// on construction by summing their multiplicities.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws ValidationError on zero normals, wrong lengths, negative or
  /// all-zero multiplicity rows, or more than kMaxHyperplanes hyperplanes.
  Arrangement(std::size_t dim, std::size_t factors, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t factors() const { return factors_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_.at(i); }

  /// Single iff r == 1, else Complete iff the factorization is complete.
  FactorizationKind kind() const;
  /// Every factor column has exactly one nonzero entry, equal to 1.
  bool has_complete_factorization() const;
  /// Every hyperplane has total multiplicity 1.
  bool is_reduced() const;
  std::size_t rank() const;
  bool is_essential() const { return rank() == dim_; }
  /// One row per hyperplane.
  RatMatrix normal_matrix() const;
  /// Primitive integer normal for display.
  std::vector<Integer> integer_normal(std::size_t i) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t factors_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

/// An intersection of hyperplanes of a fixed arrangement.
struct Edge {
  RatMatrix key;                        ///< canonical RREF basis of the span of normals
  std::size_t rank = 0;                 ///< codimension in the ambient space
  std::vector<std::size_t> J;           ///< hyperplanes containing the edge
  std::uint64_t mask = 0;               ///< J as a bit set
  std::vector<std::size_t> factor_set;  ///< factors f_j vanishing on the edge
  std::vector<int> a;                   ///< per factor: sum of multiplicities over J

  friend bool operator==(const Edge& x, const Edge& y) { return x.key == y.key && x.J == y.J; }
};

/// The intersection of the given hyperplanes (empty list: the ambient space).
Edge make_edge(const Arrangement& a, const std::vector<std::size_t>& generators);
/// True when `e` is exactly the edge it claims to be in `a`.
bool is_edge_of(const Arrangement& a, const Edge& e);

enum class Format { Plain, Json };

Arrangement parse(std::string_view text, Format format);
/// Json when the first non-blank character is '{', Plain otherwise.
Arrangement parse_auto(std::string_view text);
/// Reads a file; throws Error if it cannot be opened.
Arrangement load_arrangement(const std::string& path);
std::string to_plain(const Arrangement& a);
std::string to_json_text(const Arrangement& a);

struct Essentialization {
  Arrangement arrangement;
  std::size_t rank = 0;
};
/// Expresses each normal in the RREF basis of the normal span.
Essentialization essentialize(const Arrangement& a);

/// Hyperplanes containing W, same ambient space. Throws Error if W is not an edge.
Arrangement localize(const Arrangement& a, const Edge& w);
/// Traces H n W of the hyperplanes not containing W, inside W = C^{dim W}.
Arrangement restrict_to(const Arrangement& a, const Edge& w);
/// A with hyperplane i removed.
Arrangement delete_hyperplane(const Arrangement& a, std::size_t i);

/// Index blocks of the irreducible factors of an essential arrangement,
/// ordered by smallest member. Throws Error on non-essential input.
std::vector<std::vector<std::size_t>> irreducible_blocks(const Arrangement& a);
/// The irreducible factors, each re-essentialized.
std::vector<Arrangement> decompose(const Arrangement& a);
Arrangement subarrangement(const Arrangement& a, const std::vector<std::size_t>& indices);

/// Complete factorization obtained by splitting every multiplicity into
/// separate linear factors; origin[c] is the original factor of column c.
struct CompleteFactorization {
  Arrangement arrangement;
  std::vector<std::size_t> origin;
};
CompleteFactorization complete_factorization(const Arrangement& a);
/// f_D as a single factor (every multiplicity 1, r = 1).
Arrangement reduced_support(const Arrangement& a);
/// f_D with its complete factorization (one factor per hyperplane).
Arrangement reduced_complete(const Arrangement& a);
/// Sums factor columns: column c of `a` goes to column target[c] of the result.
Arrangement merge_factors(const Arrangement& a, const std::vector<std::size_t>& target, std::size_t new_factors);

}  // namespace hyparr
