#include "hyparr/corpus.hpp"

namespace hyparr {

Arrangement complete_from_normals(std::size_t dim, const std::vector<RatVector>& normals) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    std::vector<int> m(normals.size(), 0);
    m[i] = 1;
    hs.push_back({normals[i], std::move(m)});
  }
  return Arrangement(dim, normals.size(), std::move(hs));
}

Arrangement boolean_arrangement(std::size_t n) {
  std::vector<RatVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(n, 0);
    v[i] = 1;
    normals.push_back(std::move(v));
  }
  return complete_from_normals(n, normals);
}

Arrangement generic_lines(std::size_t d) {
  std::vector<RatVector> normals;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == 0) normals.push_back({1, 0});
    else if (i == 1) normals.push_back({0, 1});
    else normals.push_back({1, static_cast<long>(i - 1)});
  }
  return complete_from_normals(2, normals);
}

std::vector<NamedArrangement> builtin_corpus() {
  std::vector<NamedArrangement> out;
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back({"boolean" + std::to_string(n), "coordinate hyperplanes x_1 ... x_n", boolean_arrangement(n)});
  for (std::size_t d = 2; d <= 6; ++d)
    out.push_back({"generic-2-" + std::to_string(d), std::to_string(d) + " generic lines through 0 in C^2",
                   generic_lines(d)});
  out.push_back({"xy-xplusy", "xy(x+y)", complete_from_normals(2, {{1, 0}, {0, 1}, {1, 1}})});

  const Arrangement braid = complete_from_normals(3, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}});
  out.push_back({"braid-a2", "x-y, y-z, x-z essentialized to 3 lines in C^2", essentialize(braid).arrangement});

  out.push_back({"budur-example", "xyz(x+y+z) with f = (x, y, z, x+y+z)",
                 complete_from_normals(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})});

  std::vector<Hyperplane> x2y = {{{1, 0}, {1, 1, 0}}, {{0, 1}, {0, 0, 1}}};
  out.push_back({"x2y", "x^2 y as (x, x, y)", Arrangement(2, 3, std::move(x2y))});

  out.push_back({"supersolvable-a3", "xyz(x-y)(x-z)(y-z), the essentialized braid arrangement A3",
                 complete_from_normals(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}})});
  return out;
}

std::optional<NamedArrangement> corpus_entry(const std::string& name) {
  for (auto& e : builtin_corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace hyparr
