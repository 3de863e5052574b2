#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hyparr {

namespace {

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatVector canonical_normal(RatVector v) {
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  const Rational inv = 1 / *first;
  for (auto& x : v) x *= inv;
  return v;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

int Hyperplane::total_multiplicity() const { return std::accumulate(mults.begin(), mults.end(), 0); }

std::string to_string(FactorizationKind kind) {
  switch (kind) {
    case FactorizationKind::Complete: return "complete";
    case FactorizationKind::General: return "general";
    case FactorizationKind::Single: return "single";
  }
  return "general";
}

Arrangement::Arrangement(std::size_t dim, std::size_t factors, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), factors_(factors) {
  if (factors == 0) throw ValidationError("arrangement needs at least one factor (r >= 1)");
  std::map<RatVector, std::size_t> seen;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    Hyperplane& h = hyperplanes[i];
    const std::string where = "hyperplane " + std::to_string(i + 1) + ": ";
    if (h.normal.size() != dim) throw ValidationError(where + "normal has wrong length");
    if (h.mults.size() != factors) throw ValidationError(where + "multiplicity vector has wrong length");
    if (is_zero_vector(h.normal)) throw ValidationError(where + "zero normal vector");
    if (std::any_of(h.mults.begin(), h.mults.end(), [](int m) { return m < 0; }))
      throw ValidationError(where + "negative multiplicity");
    if (h.total_multiplicity() == 0) throw ValidationError(where + "all multiplicities are zero");
    RatVector key = canonical_normal(std::move(h.normal));
    auto [it, inserted] = seen.try_emplace(key, hyperplanes_.size());
    if (inserted) {
      hyperplanes_.push_back({std::move(key), std::move(h.mults)});
    } else {
      auto& target = hyperplanes_[it->second].mults;
      for (std::size_t j = 0; j < factors; ++j) target[j] += h.mults[j];
    }
  }
  if (hyperplanes_.size() > kMaxHyperplanes)
    throw ValidationError("more than " + std::to_string(kMaxHyperplanes) + " distinct hyperplanes");
}

FactorizationKind Arrangement::kind() const {
  if (factors_ == 1) return FactorizationKind::Single;
  return has_complete_factorization() ? FactorizationKind::Complete : FactorizationKind::General;
}

bool Arrangement::has_complete_factorization() const {
  for (std::size_t j = 0; j < factors_; ++j) {
    int nonzero = 0;
    for (const auto& h : hyperplanes_) {
      if (h.mults[j] == 0) continue;
      if (h.mults[j] != 1) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

bool Arrangement::is_reduced() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(),
                     [](const Hyperplane& h) { return h.total_multiplicity() == 1; });
}

RatMatrix Arrangement::normal_matrix() const {
  RatMatrix m(0, dim_);
  for (const auto& h : hyperplanes_) m.append_row(h.normal);
  return m;
}

std::size_t Arrangement::rank() const { return rank_of(normal_matrix()); }

std::vector<Integer> Arrangement::integer_normal(std::size_t i) const {
  return primitive_integer_vector(hyperplane(i).normal);
}

Edge make_edge(const Arrangement& a, const std::vector<std::size_t>& generators) {
  RatMatrix gens(0, a.dim());
  for (auto g : generators) gens.append_row(a.hyperplane(g).normal);
  Edge e;
  e.key = row_space_basis(gens);
  e.rank = e.key.rows();
  e.a.assign(a.factors(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatMatrix stacked = e.key;
    stacked.append_row(a.hyperplane(i).normal);
    if (rank_of(stacked) != e.rank) continue;
    e.J.push_back(i);
    e.mask |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < a.factors(); ++j) e.a[j] += a.hyperplane(i).mults[j];
  }
  for (std::size_t j = 0; j < a.factors(); ++j)
    if (e.a[j] > 0) e.factor_set.push_back(j);
  return e;
}

bool is_edge_of(const Arrangement& a, const Edge& e) {
  if (e.key.cols() != a.dim()) return false;
  if (std::any_of(e.J.begin(), e.J.end(), [&](std::size_t i) { return i >= a.size(); })) return false;
  const Edge truth = make_edge(a, e.J);
  return truth.key == e.key && truth.J == e.J;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_mult(const std::string& tok, const std::string& where) {
  Rational q;
  try {
    q = parse_rational(tok);
  } catch (const ValidationError&) {
    throw ValidationError(where + "malformed multiplicity '" + tok + "'");
  }
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_sint_p())
    throw ValidationError(where + "multiplicity must be a nonnegative integer, got '" + tok + "'");
  return static_cast<int>(q.get_num().get_si());
}

std::size_t parse_size(const std::string& tok, const std::string& what) {
  Rational q;
  try {
    q = parse_rational(tok);
  } catch (const ValidationError&) {
    throw ValidationError("line 1: malformed " + what + " '" + tok + "'");
  }
  if (q.get_den() != 1 || q <= 0 || !q.get_num().fits_uint_p())
    throw ValidationError("line 1: " + what + " must be a positive integer");
  return q.get_num().get_ui();
}

Arrangement parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  bool header = false;
  std::vector<Hyperplane> hs;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (split_ws(line).empty()) continue;
    if (!header) {
      const auto toks = split_ws(line);
      if (toks.size() != 2) throw ValidationError(where + "header must be 'n r'");
      n = parse_size(toks[0], "dimension n");
      r = parse_size(toks[1], "factor count r");
      header = true;
      continue;
    }
    const auto colon = line.find(':');
    const auto normal_toks = split_ws(line.substr(0, colon));
    if (normal_toks.size() == n + 1) throw ValidationError(where + "affine constant present (arrangements are central)");
    if (normal_toks.size() != n)
      throw ValidationError(where + "expected " + std::to_string(n) + " normal coordinates, got " +
                            std::to_string(normal_toks.size()));
    Hyperplane h;
    for (const auto& tok : normal_toks) {
      try {
        h.normal.push_back(parse_rational(tok));
      } catch (const ValidationError& e) {
        throw ValidationError(where + e.what());
      }
    }
    if (colon == std::string::npos) {
      if (r != 1) throw ValidationError(where + "missing ': m_1 ... m_r' multiplicities");
      h.mults = {1};
    } else {
      const auto mult_toks = split_ws(line.substr(colon + 1));
      if (mult_toks.size() != r)
        throw ValidationError(where + "expected " + std::to_string(r) + " multiplicities, got " +
                              std::to_string(mult_toks.size()));
      for (const auto& tok : mult_toks) h.mults.push_back(parse_mult(tok, where));
    }
    if (is_zero_vector(h.normal)) throw ValidationError(where + "zero normal vector");
    if (h.total_multiplicity() == 0) throw ValidationError(where + "all multiplicities are zero");
    hs.push_back(std::move(h));
  }
  if (!header) throw ValidationError("empty input: missing 'n r' header");
  return Arrangement(n, r, std::move(hs));
}

Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw ValidationError(where + ": expected an integer or a rational string");
}

Arrangement parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("JSON arrangement must be an object");
  for (const char* field : {"dim", "factors", "hyperplanes"})
    if (!doc.contains(field)) throw ValidationError(std::string("missing field '") + field + "'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
    throw ValidationError("dim: must be a positive integer");
  if (!doc["factors"].is_number_integer() || doc["factors"].get<long long>() <= 0)
    throw ValidationError("factors: must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());
  const auto r = static_cast<std::size_t>(doc["factors"].get<long long>());
  if (!doc["hyperplanes"].is_array()) throw ValidationError("hyperplanes: must be an array");
  std::vector<Hyperplane> hs;
  std::size_t idx = 0;
  for (const auto& item : doc["hyperplanes"]) {
    const std::string where = "hyperplanes[" + std::to_string(idx++) + "]";
    if (!item.is_object() || !item.contains("normal")) throw ValidationError(where + ": missing 'normal'");
    if (item.contains("constant") && json_rational(item["constant"], where + ".constant") != 0)
      throw ValidationError(where + ".constant: affine constant present (arrangements are central)");
    const auto& normal = item["normal"];
    if (!normal.is_array() || normal.size() != n)
      throw ValidationError(where + ".normal: expected " + std::to_string(n) + " entries");
    Hyperplane h;
    for (std::size_t i = 0; i < n; ++i)
      h.normal.push_back(json_rational(normal[i], where + ".normal[" + std::to_string(i) + "]"));
    if (!item.contains("mults")) {
      if (r != 1) throw ValidationError(where + ": missing 'mults'");
      h.mults = {1};
    } else {
      const auto& mults = item["mults"];
      if (!mults.is_array() || mults.size() != r)
        throw ValidationError(where + ".mults: expected " + std::to_string(r) + " entries");
      for (std::size_t j = 0; j < r; ++j) {
        const std::string w = where + ".mults[" + std::to_string(j) + "]";
        if (!mults[j].is_number_integer() || mults[j].get<long long>() < 0)
          throw ValidationError(w + ": must be a nonnegative integer");
        h.mults.push_back(static_cast<int>(mults[j].get<long long>()));
      }
    }
    if (is_zero_vector(h.normal)) throw ValidationError(where + ".normal: zero normal vector");
    if (h.total_multiplicity() == 0) throw ValidationError(where + ".mults: all multiplicities are zero");
    hs.push_back(std::move(h));
  }
  return Arrangement(n, r, std::move(hs));
}

}  // namespace

Arrangement parse(std::string_view text, Format format) {
  return format == Format::Json ? parse_json(text) : parse_plain(text);
}

Arrangement parse_auto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = first != std::string_view::npos && text[first] == '{';
  return parse(text, json ? Format::Json : Format::Plain);
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_auto(buf.str());
}

std::string to_plain(const Arrangement& a) {
  std::ostringstream out;
  out << a.dim() << ' ' << a.factors() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto normal = a.integer_normal(i);
    for (std::size_t k = 0; k < normal.size(); ++k) out << (k ? " " : "") << normal[k].get_str();
    out << " :";
    for (int m : a.hyperplane(i).mults) out << ' ' << m;
    out << '\n';
  }
  return out.str();
}

std::string to_json_text(const Arrangement& a) {
  nlohmann::json hs = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json normal = nlohmann::json::array();
    for (const auto& z : a.integer_normal(i)) normal.push_back(z.get_str());
    hs.push_back({{"normal", normal}, {"mults", a.hyperplane(i).mults}});
  }
  nlohmann::json doc = {{"dim", a.dim()}, {"factors", a.factors()}, {"hyperplanes", hs}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Structural operations

Essentialization essentialize(const Arrangement& a) {
  const RrefResult r = rref(a.normal_matrix());
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    RatVector coords;
    for (auto p : r.pivots) coords.push_back(h.normal[p]);
    hs.push_back({std::move(coords), h.mults});
  }
  return {Arrangement(r.rank, a.factors(), std::move(hs)), r.rank};
}

Arrangement subarrangement(const Arrangement& a, const std::vector<std::size_t>& indices) {
  std::vector<Hyperplane> hs;
  for (auto i : indices) hs.push_back(a.hyperplane(i));
  return Arrangement(a.dim(), a.factors(), std::move(hs));
}

Arrangement localize(const Arrangement& a, const Edge& w) {
  if (!is_edge_of(a, w)) throw Error("localize: not an edge of this arrangement");
  return subarrangement(a, w.J);
}

Arrangement restrict_to(const Arrangement& a, const Edge& w) {
  if (!is_edge_of(a, w)) throw Error("restrict: not an edge of this arrangement");
  const std::size_t d = a.dim() - w.rank;
  if (d == 0) throw Error("restrict: edge has dimension 0");
  const std::vector<RatVector> basis = kernel_basis(w.key);
  std::vector<Hyperplane> traces;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (w.mask >> i & 1u) continue;
    RatVector t;
    for (const auto& b : basis) {
      Rational acc = 0;
      for (std::size_t k = 0; k < a.dim(); ++k) acc += a.hyperplane(i).normal[k] * b[k];
      t.push_back(acc);
    }
    traces.push_back({std::move(t), a.hyperplane(i).mults});
  }
  return Arrangement(d, a.factors(), std::move(traces));
}

Arrangement delete_hyperplane(const Arrangement& a, std::size_t i) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != i) keep.push_back(k);
  return subarrangement(a, keep);
}

std::vector<std::vector<std::size_t>> irreducible_blocks(const Arrangement& a) {
  if (!a.is_essential()) throw Error("decompose: arrangement is not essential");
  // Greedy basis of the linear matroid of normals.
  std::vector<std::size_t> basis;
  RatMatrix span(0, a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatMatrix trial = span;
    trial.append_row(a.hyperplane(i).normal);
    if (rank_of(trial) > basis.size()) {
      basis.push_back(i);
      span = std::move(trial);
    }
  }
  // Columns of `cols` are the basis normals; the fundamental circuit of a
  // non-basis element is its support in that basis plus itself.
  RatMatrix cols(a.dim(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) cols(i, k) = a.hyperplane(basis[k]).normal[i];
  UnionFind uf(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (std::find(basis.begin(), basis.end(), e) != basis.end()) continue;
    const auto coords = linsolve(cols, a.hyperplane(e).normal);
    if (!coords) throw Error("decompose: element outside the span of the basis");
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((*coords)[k] != 0) uf.unite(e, basis[k]);
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < a.size(); ++i) blocks[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  return out;
}

std::vector<Arrangement> decompose(const Arrangement& a) {
  std::vector<Arrangement> out;
  for (const auto& block : irreducible_blocks(a)) out.push_back(essentialize(subarrangement(a, block)).arrangement);
  return out;
}

CompleteFactorization complete_factorization(const Arrangement& a) {
  CompleteFactorization out;
  std::vector<std::pair<std::size_t, std::size_t>> columns;  // (hyperplane, original factor)
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.factors(); ++j)
      for (int k = 0; k < a.hyperplane(i).mults[j]; ++k) columns.emplace_back(i, j);
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Hyperplane h{a.hyperplane(i).normal, std::vector<int>(columns.size(), 0)};
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns[c].first == i) h.mults[c] = 1;
    hs.push_back(std::move(h));
  }
  for (const auto& col : columns) out.origin.push_back(col.second);
  out.arrangement = Arrangement(a.dim(), columns.size(), std::move(hs));
  return out;
}

Arrangement reduced_support(const Arrangement& a) {
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) hs.push_back({h.normal, {1}});
  return Arrangement(a.dim(), 1, std::move(hs));
}

Arrangement reduced_complete(const Arrangement& a) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<int> m(a.size(), 0);
    m[i] = 1;
    hs.push_back({a.hyperplane(i).normal, std::move(m)});
  }
  return Arrangement(a.dim(), std::max<std::size_t>(a.size(), 1), std::move(hs));
}

Arrangement merge_factors(const Arrangement& a, const std::vector<std::size_t>& target, std::size_t new_factors) {
  if (target.size() != a.factors()) throw Error("merge_factors: one target per factor column required");
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    std::vector<int> m(new_factors, 0);
    for (std::size_t c = 0; c < target.size(); ++c) m.at(target[c]) += h.mults[c];
    hs.push_back({h.normal, std::move(m)});
  }
  return Arrangement(a.dim(), new_factors, std::move(hs));
}

}  // namespace hyparr
