#include "sgx/pcminor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace sgx {

MinorSpec parse_minor_spec(const std::string& text) {
  MinorSpec spec;
  spec.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'K': spec.push_back(MinorAction::Keep); break;
      case 'C': spec.push_back(MinorAction::Contract); break;
      case '0': spec.push_back(MinorAction::Restrict0); break;
      case '1': spec.push_back(MinorAction::Restrict1); break;
      default: fail(Errc::parse, std::string("invalid minor spec character '") + c + "'");
    }
  }
  return spec;
}

std::string to_string(const MinorSpec& spec) {
  std::string s;
  s.reserve(spec.size());
  for (auto a : spec) s.push_back(static_cast<char>(a));
  return s;
}

namespace {

struct SpecOutcome {
  bool empty = false;
  int width = 0;
  std::vector<std::uint64_t> labels;  // per result vertex, first-occurrence order
  std::vector<int> vertex_map;        // source vertex -> result vertex or -1
  std::vector<int> kept;
  std::vector<int> dropped;
};

SpecOutcome spec_outcome(const LabelledPartialCube& L, const MinorSpec& spec) {
  const int n = L.graph.vertex_count();
  const int dim = L.idim;
  if (static_cast<int>(spec.size()) != dim)
    fail(Errc::invalid_argument, "spec length does not match isometric dimension");

  SpecOutcome out;
  std::uint64_t require_mask = 0, require_val = 0;
  for (int i = 0; i < dim; ++i) {
    if (spec[static_cast<size_t>(i)] == MinorAction::Restrict0) require_mask |= 1ULL << i;
    if (spec[static_cast<size_t>(i)] == MinorAction::Restrict1) {
      require_mask |= 1ULL << i;
      require_val |= 1ULL << i;
    }
  }

  std::vector<int> survivors;
  survivors.reserve(static_cast<size_t>(n));
  std::uint64_t all_or = 0, all_and = ~0ULL;
  for (int v = 0; v < n; ++v) {
    if ((L.label(v) & require_mask) == require_val) {
      survivors.push_back(v);
      all_or |= L.label(v);
      all_and &= L.label(v);
    }
  }
  if (survivors.empty()) {
    out.empty = true;
    return out;
  }

  for (int i = 0; i < dim; ++i) {
    if (spec[static_cast<size_t>(i)] != MinorAction::Keep) continue;
    bool constant = !(all_or >> i & 1) || (all_and >> i & 1);
    if (constant)
      out.dropped.push_back(i);
    else
      out.kept.push_back(i);
  }
  out.width = static_cast<int>(out.kept.size());

  out.vertex_map.assign(static_cast<size_t>(n), -1);
  std::unordered_map<std::uint64_t, int> ids;
  ids.reserve(survivors.size());
  for (int v : survivors) {
    std::uint64_t reduced = 0;
    for (size_t j = 0; j < out.kept.size(); ++j)
      if (L.label(v) >> out.kept[j] & 1) reduced |= 1ULL << j;
    auto [it, fresh] = ids.emplace(reduced, static_cast<int>(out.labels.size()));
    if (fresh) out.labels.push_back(reduced);
    out.vertex_map[static_cast<size_t>(v)] = it->second;
  }
  return out;
}

Graph outcome_graph(const LabelledPartialCube& L, const SpecOutcome& out) {
  Graph g(static_cast<int>(out.labels.size()));
  for (auto [u, v] : L.graph.edges()) {
    int a = out.vertex_map[static_cast<size_t>(u)];
    int b = out.vertex_map[static_cast<size_t>(v)];
    if (a != -1 && b != -1 && a != b) g.add_edge(a, b);
  }
  return g;
}

MinorResult finish_result(const LabelledPartialCube& L, SpecOutcome&& out, bool check) {
  if (out.empty) fail(Errc::empty_minor, "minor spec leaves no surviving vertex");
  MinorResult r;
  r.cube.graph = outcome_graph(L, out);
  r.cube.labels = std::move(out.labels);
  r.cube.idim = out.width;
  r.kept = std::move(out.kept);
  r.dropped = std::move(out.dropped);
  r.vertex_map = std::move(out.vertex_map);
  if (check) validate(r.cube);
  return r;
}

}  // namespace

MinorResult apply_spec(const LabelledPartialCube& L, const MinorSpec& spec) {
  return finish_result(L, spec_outcome(L, spec), true);
}

MinorResult contract_class(const LabelledPartialCube& L, int coordinate) {
  if (coordinate < 0 || coordinate >= L.idim) fail(Errc::invalid_argument, "coordinate out of range");
  MinorSpec spec(static_cast<size_t>(L.idim), MinorAction::Keep);
  spec[static_cast<size_t>(coordinate)] = MinorAction::Contract;
  return apply_spec(L, spec);
}

MinorResult restrict_class(const LabelledPartialCube& L, int coordinate, int side) {
  if (coordinate < 0 || coordinate >= L.idim) fail(Errc::invalid_argument, "coordinate out of range");
  if (side != 0 && side != 1) fail(Errc::invalid_argument, "side must be 0 or 1");
  MinorSpec spec(static_cast<size_t>(L.idim), MinorAction::Keep);
  spec[static_cast<size_t>(coordinate)] = side == 0 ? MinorAction::Restrict0 : MinorAction::Restrict1;
  return apply_spec(L, spec);
}

std::optional<MinorSpec> find_pc_minor(const LabelledPartialCube& L, const Graph& h,
                                       int idim_cap, int iso_cap) {
  LabelledPartialCube target = embed(h, 0);  // fails loudly when h is not a partial cube
  const int n = L.idim;
  const int k = target.idim;
  if (n > idim_cap) fail(Errc::too_large, "isometric dimension exceeds cap " + std::to_string(idim_cap));
  if (k > n || h.vertex_count() > L.graph.vertex_count()) return std::nullopt;

  static constexpr MinorAction kActions[3] = {MinorAction::Contract, MinorAction::Restrict0,
                                              MinorAction::Restrict1};
  std::vector<int> keep(static_cast<size_t>(k));
  std::iota(keep.begin(), keep.end(), 0);
  const int others = n - k;

  for (;;) {
    std::vector<char> is_kept(static_cast<size_t>(n), 0);
    for (int c : keep) is_kept[static_cast<size_t>(c)] = 1;
    std::vector<int> digits(static_cast<size_t>(others), 0);
    for (;;) {
      MinorSpec spec(static_cast<size_t>(n), MinorAction::Keep);
      int slot = 0;
      for (int c = 0; c < n; ++c)
        if (!is_kept[static_cast<size_t>(c)])
          spec[static_cast<size_t>(c)] = kActions[digits[static_cast<size_t>(slot++)]];
      auto out = spec_outcome(L, spec);
      if (!out.empty && static_cast<int>(out.labels.size()) == h.vertex_count()) {
        Graph candidate = outcome_graph(L, out);
        if (are_isomorphic(candidate, h, iso_cap)) return spec;
      }
      // next base-3 assignment
      int pos = others - 1;
      while (pos >= 0 && digits[static_cast<size_t>(pos)] == 2) digits[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++digits[static_cast<size_t>(pos)];
    }
    // next keep combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && keep[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    int v = ++keep[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) keep[static_cast<size_t>(j)] = ++v;
  }
  return std::nullopt;
}

bool has_pc_minor(const LabelledPartialCube& L, const Graph& h, int idim_cap, int iso_cap) {
  return find_pc_minor(L, h, idim_cap, iso_cap).has_value();
}

MinorFreeResult is_pc_minor_free(const LabelledPartialCube& L, const std::vector<Graph>& forbidden,
                                 int idim_cap, int iso_cap) {
  MinorFreeResult r;
  for (size_t i = 0; i < forbidden.size(); ++i) {
    if (auto spec = find_pc_minor(L, forbidden[i], idim_cap, iso_cap)) {
      r.free = false;
      r.forbidden_index = static_cast<int>(i);
      r.witness = std::move(*spec);
      return r;
    }
  }
  return r;
}

bool crossing(const LabelledPartialCube& L, int i, int j) {
  if (i == j) fail(Errc::invalid_argument, "crossing requires two distinct classes");
  if (i < 0 || i >= L.idim || j < 0 || j >= L.idim) fail(Errc::invalid_argument, "coordinate out of range");
  bool seen[2][2] = {{false, false}, {false, false}};
  for (auto l : L.labels) seen[l >> i & 1][l >> j & 1] = true;
  return seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1];
}

Graph crossing_graph(const LabelledPartialCube& L) {
  Graph g(L.idim);
  for (int i = 0; i < L.idim; ++i)
    for (int j = i + 1; j < L.idim; ++j)
      if (crossing(L, i, j)) g.add_edge(i, j);
  return g;
}

namespace {

std::string exact_canonical_key(const LabelledPartialCube& L) {
  const int dim = L.idim;
  std::vector<int> perm(static_cast<size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> cur(L.labels.size());
  do {
    for (size_t v = 0; v < L.labels.size(); ++v) {
      std::uint64_t l = L.labels[v], p = 0;
      for (int i = 0; i < dim; ++i)
        if (l >> i & 1) p |= 1ULL << perm[static_cast<size_t>(i)];
      cur[v] = p;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string key = "exact:" + std::to_string(dim) + ":";
  for (auto l : best) key += std::to_string(l) + ",";
  return key;
}

std::string coarse_canonical_key(const LabelledPartialCube& L) {
  const int n = L.graph.vertex_count();
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = L.graph.degree(v);
  std::sort(deg.begin(), deg.end());
  auto dm = distance_matrix(L.graph);
  std::vector<int> dist;
  dist.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) dist.push_back(dm(u, v));
  std::sort(dist.begin(), dist.end());
  std::string key = "coarse:" + std::to_string(n) + ":" + std::to_string(L.graph.edge_count()) + ":" +
                    std::to_string(L.idim) + ":";
  for (int d : deg) key += std::to_string(d) + ",";
  key += ";";
  for (int d : dist) key += std::to_string(d) + ",";
  return key;
}

}  // namespace

std::string canonical_key(const LabelledPartialCube& L) {
  return L.idim <= 8 ? exact_canonical_key(L) : coarse_canonical_key(L);
}

std::vector<EnumeratedMinor> proper_pc_minors(const LabelledPartialCube& L, int idim_cap, int iso_cap) {
  const int n = L.idim;
  if (n > idim_cap) fail(Errc::too_large, "isometric dimension exceeds cap " + std::to_string(idim_cap));
  static constexpr MinorAction kDigits[4] = {MinorAction::Keep, MinorAction::Contract,
                                             MinorAction::Restrict0, MinorAction::Restrict1};
  std::vector<EnumeratedMinor> out;
  std::unordered_map<std::string, std::vector<size_t>> buckets;
  std::vector<int> digits(static_cast<size_t>(n), 0);
  // Skip the all-Keep spec; every other spec strictly shrinks the cube.
  for (;;) {
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<size_t>(pos)] == 3) digits[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++digits[static_cast<size_t>(pos)];
    MinorSpec spec(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) spec[static_cast<size_t>(i)] = kDigits[digits[static_cast<size_t>(i)]];
    auto o = spec_outcome(L, spec);
    if (o.empty) continue;
    auto r = finish_result(L, std::move(o), true);
    std::string key = canonical_key(r.cube);
    bool exact = key.starts_with("exact:");
    auto& bucket = buckets[key];
    bool duplicate = false;
    for (size_t idx : bucket) {
      if (exact || are_isomorphic(out[idx].cube.graph, r.cube.graph, iso_cap)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    bucket.push_back(out.size());
    out.push_back(EnumeratedMinor{std::move(spec), std::move(r.cube)});
  }
  return out;
}

}  // namespace sgx
