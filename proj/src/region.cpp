#include "critidx/region.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace critidx {

RateTuple parse_rate_tuple(const std::string& text) {
  RateTuple out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string token;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) token += c;
    }
    Rational r = Rational::parse(token);
    if (r.is_negative()) throw std::invalid_argument("negative rate '" + token + "'");
    out.push_back(r);
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in rate tuple");
  return out;
}

std::string format_rate_tuple(const RateTuple& r) {
  std::string out = "(";
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) out += ", ";
    out += r[k].str();
  }
  return out + ")";
}

RateRegion::RateRegion(int n, std::vector<NodeSet> constraint_sets) : n_(n) {
  if (n < 0 || n > kMaxNodes) throw std::invalid_argument("region dimension out of range");
  for (NodeSet s : constraint_sets) {
    if (!s.subset_of(NodeSet::all(n))) throw std::invalid_argument("constraint set outside [1..n]");
  }
  std::erase_if(constraint_sets, [](NodeSet s) { return s.empty(); });
  std::sort(constraint_sets.begin(), constraint_sets.end());
  constraint_sets.erase(std::unique(constraint_sets.begin(), constraint_sets.end()), constraint_sets.end());
  for (NodeSet s : constraint_sets) {
    bool dominated = std::any_of(constraint_sets.begin(), constraint_sets.end(),
                                 [&](NodeSet t) { return s.proper_subset_of(t); });
    if (!dominated) sets_.push_back(s);
  }
}

bool RateRegion::contains(const RateTuple& r) const {
  if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("rate tuple dimension mismatch");
  for (const Rational& x : r) {
    if (x.is_negative()) return false;
  }
  for (NodeSet s : sets_) {
    Rational total;
    for (int j : s.members()) total += r[j - 1];
    if (total > 1) return false;
  }
  return true;
}

std::string RateRegion::to_json() const {
  nlohmann::json sets = nlohmann::json::array();
  for (NodeSet s : sets_) sets.push_back(s.members());
  return nlohmann::json{{"n", n_}, {"constraints", sets}}.dump();
}

RateRegion RateRegion::from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  int n = doc.at("n").get<int>();
  std::vector<NodeSet> sets;
  for (const auto& s : doc.at("constraints")) sets.push_back(NodeSet::from_vector(s.get<std::vector<int>>()));
  return RateRegion(n, std::move(sets));
}

bool region_contains(const RateRegion& region, const RateTuple& r) { return region.contains(r); }

namespace {

// Every set of `inner` lies inside some set of `outer`.
bool covered(const std::vector<NodeSet>& inner, const std::vector<NodeSet>& outer) {
  return std::all_of(inner.begin(), inner.end(), [&](NodeSet s) {
    return std::any_of(outer.begin(), outer.end(), [&](NodeSet t) { return s.subset_of(t); });
  });
}

}  // namespace

bool region_subset(const RateRegion& a, const RateRegion& b) {
  if (a.n() != b.n()) throw std::invalid_argument("region dimension mismatch");
  return covered(b.constraint_sets(), a.constraint_sets());
}

bool region_proper_subset(const RateRegion& a, const RateRegion& b) {
  return region_subset(a, b) && !covered(a.constraint_sets(), b.constraint_sets());
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) {
        if (!a[col][k].is_zero()) a[row][k] -= factor * a[col][k];
      }
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
  return x;
}

std::vector<RateTuple> region_vertices(const RateRegion& region) {
  const int n = region.n();
  if (n > kMaxVertexNodes) throw std::invalid_argument("vertex enumeration limited to 8 dimensions");

  std::vector<RateTuple> out;
  out.emplace_back(static_cast<std::size_t>(n));  // origin

  for (Mask support = 1; support < (Mask{1} << n); ++support) {
    const NodeSet t(support);
    const std::vector<int> coords = t.members();
    const std::size_t dim = coords.size();

    std::vector<NodeSet> rows;
    for (NodeSet s : region.constraint_sets()) {
      NodeSet r = s & t;
      if (!r.empty()) rows.push_back(r);
    }
    rows = RateRegion(n, rows).constraint_sets();
    // A support coordinate in no row can grow without bound along this face.
    Mask covered_coords = 0;
    for (NodeSet r : rows) covered_coords |= r.mask();
    if (covered_coords != support || rows.size() < dim) continue;

    // Choose dim rows, ascending indices.
    std::vector<std::size_t> pick(dim);
    for (std::size_t k = 0; k < dim; ++k) pick[k] = k;
    while (true) {
      std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) a[r][c] = rows[pick[r]].contains(coords[c]) ? 1 : 0;
      }
      if (auto y = solve_linear(std::move(a), std::vector<Rational>(dim, Rational(1)))) {
        bool positive = std::all_of(y->begin(), y->end(), [](const Rational& v) { return v.is_positive(); });
        if (positive) {
          RateTuple x(static_cast<std::size_t>(n));
          for (std::size_t c = 0; c < dim; ++c) x[coords[c] - 1] = (*y)[c];
          if (region.contains(x)) out.push_back(std::move(x));
        }
      }
      // Next combination.
      std::size_t k = dim;
      while (k > 0 && pick[k - 1] == rows.size() - dim + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t m = k; m < dim; ++m) pick[m] = pick[m - 1] + 1;
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace critidx
