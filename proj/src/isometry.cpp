#include "urykat/isometry.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace urykat {

namespace {

std::vector<std::vector<Rational>> row_fingerprints(const MetricSpace& space) {
  std::vector<std::vector<Rational>> prints;
  prints.reserve(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) {
    auto row = space.row(i);
    std::sort(row.begin(), row.end());
    prints.push_back(std::move(row));
  }
  return prints;
}

void search_isometries(const MetricSpace& space, std::uint64_t node_budget,
                       std::vector<Isometry>& out) {
  const int n = space.size();
  const auto prints = row_fingerprints(space);
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::uint64_t nodes = 0;

  std::function<void(int)> dfs = [&](int i) {
    if (i == n) {
      out.push_back(Isometry{img});
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || prints[cand] != prints[i]) continue;
      bool compatible = true;
      for (int j = 0; j < i; ++j) {
        if (space.dist(i, j) != space.dist(cand, img[j])) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      if (++nodes > node_budget) {
        fail(Errc::search_budget_exceeded, std::to_string(node_budget) + " nodes");
      }
      img[i] = cand;
      used[cand] = true;
      dfs(i + 1);
      img[i] = -1;
      used[cand] = false;
    }
  };
  dfs(0);
}

}  // namespace

GroupPtr IsometryGroup::full(SpacePtr space, std::uint64_t node_budget) {
  std::vector<Isometry> elements;
  search_isometries(*space, node_budget, elements);
  auto group = std::shared_ptr<IsometryGroup>(new IsometryGroup());
  group->space_ = std::move(space);
  group->elements_ = std::move(elements);  // DFS emits in lexicographic order
  group->check_axioms();
  return group;
}

GroupPtr IsometryGroup::from_elements(SpacePtr space, std::vector<Isometry> elements) {
  const int n = space->size();
  for (const auto& e : elements) {
    if (static_cast<int>(e.img.size()) != n) {
      fail(Errc::group_mismatch, "permutation length does not match the space");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : e.img) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
        fail(Errc::group_mismatch, "not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (space->dist(i, j) != space->dist(e.img[i], e.img[j])) {
          fail(Errc::group_mismatch,
               "permutation is not an isometry at (" + space->point_id(i) + "," +
                   space->point_id(j) + ")");
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const Isometry& a, const Isometry& b) { return a.img < b.img; });
  elements.erase(std::unique(elements.begin(), elements.end(),
                             [](const Isometry& a, const Isometry& b) { return a.img == b.img; }),
                 elements.end());
  auto group = std::shared_ptr<IsometryGroup>(new IsometryGroup());
  group->space_ = std::move(space);
  group->elements_ = std::move(elements);
  group->check_axioms();
  return group;
}

void IsometryGroup::check_axioms() const {
  const int n = space_->size();
  std::map<std::vector<int>, int> index;
  for (int e = 0; e < order(); ++e) index[elements_[static_cast<std::size_t>(e)].img] = e;

  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  auto it = index.find(id);
  if (it == index.end()) fail(Errc::group_mismatch, "identity missing");
  const_cast<IsometryGroup*>(this)->identity_ = it->second;

  auto& inv = const_cast<IsometryGroup*>(this)->inverse_;
  inv.assign(static_cast<std::size_t>(order()), -1);
  for (int a = 0; a < order(); ++a) {
    std::vector<int> inverse_img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      inverse_img[static_cast<std::size_t>(elements_[static_cast<std::size_t>(a)].img[static_cast<std::size_t>(i)])] = i;
    }
    auto found = index.find(inverse_img);
    if (found == index.end()) fail(Errc::group_mismatch, "inverse missing");
    inv[static_cast<std::size_t>(a)] = found->second;
  }
  // Exhaustive multiplication table.
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      std::vector<int> prod(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        prod[static_cast<std::size_t>(i)] =
            elements_[static_cast<std::size_t>(a)].img[static_cast<std::size_t>(
                elements_[static_cast<std::size_t>(b)].img[static_cast<std::size_t>(i)])];
      }
      if (index.find(prod) == index.end()) fail(Errc::group_mismatch, "not closed under composition");
    }
  }
}

int IsometryGroup::compose(int a, int b) const {
  const int n = space_->size();
  std::vector<int> prod(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    prod[static_cast<std::size_t>(i)] = apply(a, apply(b, i));
  }
  int idx = index_of(Isometry{std::move(prod)});
  if (idx < 0) fail(Errc::group_mismatch, "product left the element list");
  return idx;
}

int IsometryGroup::inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

int IsometryGroup::index_of(const Isometry& iso) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), iso,
                             [](const Isometry& x, const Isometry& y) { return x.img < y.img; });
  if (it == elements_.end() || it->img != iso.img) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<int> IsometryGroup::orbit(int point) const {
  std::set<int> seen;
  for (int e = 0; e < order(); ++e) seen.insert(apply(e, point));
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<int> IsometryGroup::orbit_union(const std::vector<int>& points) const {
  std::set<int> seen;
  for (int p : points) {
    for (int e = 0; e < order(); ++e) seen.insert(apply(e, p));
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::string permutation_cycles(const MetricSpace& space, const std::vector<int>& img) {
  const int n = space.size();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (done[static_cast<std::size_t>(i)] || img[static_cast<std::size_t>(i)] == i) continue;
    out << "(";
    int j = i;
    bool first = true;
    while (!done[static_cast<std::size_t>(j)]) {
      done[static_cast<std::size_t>(j)] = true;
      if (!first) out << " ";
      out << space.point_id(j);
      first = false;
      j = img[static_cast<std::size_t>(j)];
    }
    out << ")";
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

std::vector<int> parse_permutation_cycles(const MetricSpace& space, const std::string& text) {
  const int n = space.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  std::set<int> used_points;
  while (pos < text.size()) {
    if (text[pos] != '(') fail(Errc::parse_error, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail(Errc::parse_error, "unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ')' &&
             !std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      cycle.push_back(space.index_of(text.substr(start, pos - start)));
    }
    for (int p : cycle) {
      if (!used_points.insert(p).second) {
        fail(Errc::parse_error, "point repeated across cycles: " + text);
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    saw_cycle = true;
    skip_ws();
  }
  if (!saw_cycle) fail(Errc::parse_error, "empty permutation text");
  return img;
}

std::string IsometryGroup::cycle_notation(int e) const {
  return permutation_cycles(*space_, elements_[static_cast<std::size_t>(e)].img);
}

int IsometryGroup::parse_cycles(const std::string& text) const {
  Isometry iso{parse_permutation_cycles(*space_, text)};
  int idx = index_of(iso);
  if (idx < 0) fail(Errc::group_mismatch, "permutation " + text + " is not in the group");
  return idx;
}

bool partial_isometry_valid(const MetricSpace& space,
                            const std::vector<std::pair<int, int>>& pairs) {
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (pairs[a].first == pairs[b].first || pairs[a].second == pairs[b].second) return false;
      if (space.dist(pairs[a].first, pairs[b].first) !=
          space.dist(pairs[a].second, pairs[b].second)) {
        return false;
      }
    }
  }
  return true;
}

PartialIsometry partial_isometry(SpacePtr space, std::vector<std::pair<int, int>> pairs) {
  for (const auto& [s, t] : pairs) {
    if (s < 0 || s >= space->size() || t < 0 || t >= space->size()) {
      fail(Errc::unknown_point, "pair index out of range");
    }
  }
  if (!partial_isometry_valid(*space, pairs)) {
    fail(Errc::not_katetov, "pairs do not form a partial isometry");
  }
  return PartialIsometry{std::move(space), std::move(pairs)};
}

BackAndForthResult extend_partial_isometry(const PartialIsometry& start, int target_size) {
  const MetricSpace& space = *start.space;
  const int n = space.size();
  if (target_size > n) fail(Errc::usage_error, "target size exceeds the point count");
  BackAndForthResult result;
  auto pairs = start.pairs;

  auto in_domain = [&](int p) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto& q) { return q.first == p; });
  };
  auto in_range = [&](int p) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto& q) { return q.second == p; });
  };

  bool forward = true;
  while (static_cast<int>(pairs.size()) < target_size) {
    int next = -1;
    for (int p = 0; p < n; ++p) {
      if (forward ? !in_domain(p) : !in_range(p)) {
        next = p;
        break;
      }
    }
    if (next < 0) break;  // map already total on this side
    // The required profile over the opposite side's matched points.
    std::vector<int> anchors;
    std::vector<Rational> profile;
    anchors.reserve(pairs.size());
    profile.reserve(pairs.size());
    for (const auto& [s, t] : pairs) {
      anchors.push_back(forward ? t : s);
      profile.push_back(forward ? space.dist(next, s) : space.dist(next, t));
    }
    int found = -1;
    for (int y = 0; y < n && found < 0; ++y) {
      if (forward ? in_range(y) : in_domain(y)) continue;
      bool match = true;
      for (std::size_t a = 0; a < anchors.size(); ++a) {
        if (space.dist(y, anchors[a]) != profile[a]) {
          match = false;
          break;
        }
      }
      if (match) found = y;
    }
    if (found < 0) {
      result.success = false;
      result.forward_failure = forward;
      result.missing_anchor = std::move(anchors);
      result.missing_profile = std::move(profile);
      result.extension = PartialIsometry{start.space, std::move(pairs)};
      return result;
    }
    pairs.emplace_back(forward ? next : found, forward ? found : next);
    forward = !forward;
  }
  if (!partial_isometry_valid(space, pairs)) {
    fail(Errc::containment_failure, "back-and-forth produced an invalid matching");
  }
  result.success = true;
  result.extension = PartialIsometry{start.space, std::move(pairs)};
  return result;
}

ElementSet full_set(const IsometryGroup& group) {
  ElementSet out(static_cast<std::size_t>(group.order()));
  for (int e = 0; e < group.order(); ++e) out[static_cast<std::size_t>(e)] = e;
  return out;
}

ElementSet singleton_set(int element) { return ElementSet{element}; }

ElementSet product(const IsometryGroup& group, const ElementSet& a, const ElementSet& b) {
  std::set<int> out;
  for (int x : a) {
    for (int y : b) out.insert(group.compose(x, y));
  }
  return ElementSet(out.begin(), out.end());
}

ElementSet inverse_set(const IsometryGroup& group, const ElementSet& a) {
  std::set<int> out;
  for (int x : a) out.insert(group.inverse(x));
  return ElementSet(out.begin(), out.end());
}

ElementSet power(const IsometryGroup& group, const ElementSet& a, int exponent) {
  if (exponent < 1) fail(Errc::usage_error, "power expects exponent >= 1");
  ElementSet acc = a;
  for (int i = 1; i < exponent; ++i) acc = product(group, acc, a);
  return acc;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const ElementSet& a, const ElementSet& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

bool is_symmetric_set(const IsometryGroup& group, const ElementSet& a) {
  return inverse_set(group, a) == a;
}

GroupExtension trivial_group_extension(const GroupPtr& base) {
  GroupExtension out;
  out.extended = base;
  out.ext_to_base.resize(static_cast<std::size_t>(base->order()));
  for (int e = 0; e < base->order(); ++e) out.ext_to_base[static_cast<std::size_t>(e)] = e;
  return out;
}

GroupExtension extend_group_to_grown_space(const GroupPtr& base, SpacePtr grown) {
  const int base_n = base->space()->size();
  if (grown->size() != base_n + 1) {
    fail(Errc::group_mismatch, "grown space must add exactly one point");
  }
  const int fresh = base_n;
  GroupExtension out;
  std::vector<Isometry> extended;
  for (int e = 0; e < base->order(); ++e) {
    bool preserves = true;
    for (int u = 0; u < base_n && preserves; ++u) {
      preserves = grown->dist(fresh, base->apply(e, u)) == grown->dist(fresh, u);
    }
    if (!preserves) {
      out.dropped.push_back(e);
      continue;
    }
    std::vector<int> img = base->element(e).img;
    img.push_back(fresh);
    extended.push_back(Isometry{std::move(img)});
  }
  out.extended = IsometryGroup::from_elements(std::move(grown), std::move(extended));
  out.ext_to_base.resize(static_cast<std::size_t>(out.extended->order()));
  for (int e = 0; e < out.extended->order(); ++e) {
    std::vector<int> restriction(out.extended->element(e).img.begin(),
                                 out.extended->element(e).img.begin() + base_n);
    int idx = base->index_of(Isometry{std::move(restriction)});
    if (idx < 0) fail(Errc::group_mismatch, "extended element does not restrict into the group");
    out.ext_to_base[static_cast<std::size_t>(e)] = idx;
  }
  return out;
}

NbhdSet nbhd(GroupPtr group, std::vector<std::pair<int, Rational>> anchors) {
  if (anchors.empty()) fail(Errc::usage_error, "a neighbourhood needs at least one anchor");
  for (const auto& [point, eps] : anchors) {
    if (point < 0 || point >= group->space()->size()) {
      fail(Errc::unknown_point, "anchor index " + std::to_string(point));
    }
    if (eps <= 0) fail(Errc::usage_error, "anchor radius must be positive");
  }
  ElementSet members;
  for (int e = 0; e < group->order(); ++e) {
    bool inside = true;
    for (const auto& [point, eps] : anchors) {
      if (group->space()->dist(point, group->apply(e, point)) >= eps) {
        inside = false;
        break;
      }
    }
    if (inside) members.push_back(e);
  }
  NbhdSet out{std::move(group), std::move(anchors), std::move(members)};
  // Both hold by symmetry of the metric; cheap to assert.
  if (std::find(out.members.begin(), out.members.end(), out.group->identity()) ==
      out.members.end()) {
    fail(Errc::containment_failure, "neighbourhood does not contain the identity");
  }
  if (!is_symmetric_set(*out.group, out.members)) {
    fail(Errc::containment_failure, "neighbourhood is not inverse-closed");
  }
  return out;
}

}  // namespace urykat
