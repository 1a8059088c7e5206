#include "happy/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "happy/errors.hpp"
#include "happy/mhe.hpp"

namespace happy {
namespace {

ColorSpec extend_precolor(const ColorSpec& spec, int new_n, int k) {
  ColorSpec out = ColorSpec::uncolored(new_n, k);
  std::copy(spec.precolor.begin(), spec.precolor.end(), out.precolor.begin());
  return out;
}

void validate_mhe_source(const HappyInstance& source) { source.spec.validate(source.graph); }

}  // namespace

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::MultiwayCutTo3MHE: return "mwc3->mhe3";
    case ReductionKind::Pad3MHEToKMHE: return "mhe3->mhek";
    case ReductionKind::MHEToMHV: return "mhe->mhv";
    case ReductionKind::MHEToHardMHV: return "mhe->hard";
    case ReductionKind::MHEToSoftMHV: return "mhe3->soft";
  }
  return "?";
}

std::string_view to_string(ReductionVerdict::Status status) {
  switch (status) {
    case ReductionVerdict::Status::Holds: return "holds";
    case ReductionVerdict::Status::Fails: return "fails";
    case ReductionVerdict::Status::Skipped: return "skipped";
  }
  return "?";
}

void MultiwayCutInstance::validate() const {
  if (terminals.size() < 2) throw ContractError("multiway cut needs at least two terminals");
  std::set<VertexId> seen;
  for (VertexId t : terminals) {
    if (t < 1 || t > graph.vertex_count()) {
      throw ContractError("terminal " + std::to_string(t) + " is not a vertex");
    }
    if (!seen.insert(t).second) {
      throw ContractError("terminal " + std::to_string(t) + " listed twice");
    }
  }
}

ReductionOutput multiway_cut_to_3mhe(const MultiwayCutInstance& instance) {
  instance.validate();
  if (instance.terminals.size() != 3) {
    throw ContractError("multiway_cut_to_3mhe needs exactly 3 terminals, got " +
                        std::to_string(instance.terminals.size()));
  }
  HappyInstance target{instance.graph, ColorSpec::uncolored(instance.graph.vertex_count(), 3),
                       HappinessMode::strict()};
  for (int i = 0; i < 3; ++i) target.spec.precolor[instance.terminals[i]] = i + 1;
  ReductionOutput out{ReductionKind::MultiwayCutTo3MHE, instance, std::move(target),
                      Problem::MHE,
                      AffineValueMap{-1, static_cast<std::int64_t>(instance.graph.edge_count())},
                      {}};
  out.params.k = 3;
  return out;
}

ReductionOutput pad_3mhe_to_kmhe(const HappyInstance& source, int k) {
  validate_mhe_source(source);
  if (k < 3) throw ContractError("pad_3mhe_to_kmhe needs k >= 3");
  const int n = source.graph.vertex_count();
  VertexId anchor = 0;
  for (VertexId v = 1; v <= n && anchor == 0; ++v) {
    if (source.spec.precolor[v] == 1) anchor = v;
  }
  if (anchor == 0) {
    throw ContractError("pad_3mhe_to_kmhe needs a vertex precolored 1 to anchor the pads");
  }
  const int pads = k - 3;
  const int new_n = n + 2 * pads;
  std::vector<Edge> edges = source.graph.edges();
  ColorSpec spec = extend_precolor(source.spec, new_n, k);
  for (int i = 4; i <= k; ++i) {
    const VertexId x = n + 2 * (i - 4) + 1;
    const VertexId y = x + 1;
    spec.precolor[x] = i;
    spec.precolor[y] = i;
    edges.push_back({x, y, Rational(1)});
    edges.push_back({anchor, x, Rational(1)});
  }
  ReductionOutput out{ReductionKind::Pad3MHEToKMHE, source,
                      HappyInstance{Graph(new_n, std::move(edges)), std::move(spec),
                                    HappinessMode::strict()},
                      Problem::MHE, AffineValueMap{1, pads}, {}};
  out.params.k = k;
  return out;
}

ReductionOutput mhe_to_mhv(const HappyInstance& source) {
  validate_mhe_source(source);
  const Graph& g = source.graph;
  const int n = g.vertex_count();
  const int k = source.spec.k;
  if (k < 2) throw ContractError("mhe_to_mhv needs k >= 2");
  std::set<Color> used;
  for (VertexId v = 1; v <= n; ++v) {
    if (source.spec.is_precolored(v)) used.insert(source.spec.precolor[v]);
  }
  if (used.empty()) throw ContractError("mhe_to_mhv needs at least one precolored vertex");

  const int m = static_cast<int>(g.edge_count());
  const int new_n = n + k + m;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * n + 2 * m);
  ColorSpec spec = extend_precolor(source.spec, new_n, k);
  for (Color i = 1; i <= k; ++i) {
    const VertexId apex = n + i;
    spec.precolor[apex] = i;
    for (VertexId v = 1; v <= n; ++v) edges.push_back({apex, v, Rational(1)});
  }
  for (int e = 0; e < m; ++e) {
    const VertexId y = n + k + e + 1;
    edges.push_back({g.edges()[e].u, y, Rational(1)});
    edges.push_back({y, g.edges()[e].v, Rational(1)});
  }
  ReductionOutput out{ReductionKind::MHEToMHV, source,
                      HappyInstance{Graph(new_n, std::move(edges)), std::move(spec),
                                    HappinessMode::strict()},
                      Problem::MHV, AffineValueMap{1, used.size() == 1 ? 1 : 0}, {}};
  out.params.k = k;
  return out;
}

ReductionOutput mhe_to_hardmhv(const HappyInstance& source) {
  validate_mhe_source(source);
  const Graph& g = source.graph;
  const int delta = g.max_degree();
  if (delta < 1) throw ContractError("mhe_to_hardmhv needs at least one edge");
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edge_count());
  const int satellites = delta - 1;
  const int new_n = n + m + m * satellites;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (2 + satellites));
  for (int e = 0; e < m; ++e) {
    const VertexId x = n + e + 1;
    edges.push_back({g.edges()[e].u, x, Rational(1)});
    edges.push_back({x, g.edges()[e].v, Rational(1)});
    for (int j = 0; j < satellites; ++j) {
      edges.push_back({x, n + m + e * satellites + j + 1, Rational(1)});
    }
  }
  const int q = delta + 1;
  ReductionOutput out{ReductionKind::MHEToHardMHV, source,
                      HappyInstance{Graph(new_n, std::move(edges)),
                                    extend_precolor(source.spec, new_n, source.spec.k),
                                    HappinessMode::hard(q)},
                      Problem::HardMHV, AffineValueMap{1, 0}, {}};
  out.params.k = source.spec.k;
  out.params.q = q;
  out.params.max_degree = delta;
  return out;
}

SoftParams soft_params(const Rational& rho) {
  if (rho <= 0 || rho >= 1) {
    throw ContractError("soft_params needs rho in (0, 1), got " + format_rational(rho));
  }
  const Rational k_floor =
      std::max({Rational(4) / rho - Rational(3), Rational(2) / rho, Rational(3)});
  const std::int64_t k = ceil(k_floor);
  const Rational kr(k);
  const Rational lower = (rho * kr + Rational(2) * rho - Rational(3)) / (Rational(1) - rho);
  const std::int64_t h = ceil(lower);
  const Rational hr(h);
  const Rational x_degree = hr + kr + Rational(2);
  if (!(hr + Rational(3) >= rho * x_degree) || !(hr + Rational(2) < rho * x_degree) || h < 1) {
    throw std::logic_error("soft_params produced (k, h) = (" + std::to_string(k) + ", " +
                           std::to_string(h) + ") violating the gadget inequalities");
  }
  return {k, h};
}

ReductionOutput mhe_to_softmhv(const HappyInstance& source, const Rational& rho) {
  validate_mhe_source(source);
  if (source.spec.k != 3) throw ContractError("mhe_to_softmhv needs a 3-color MHE source");
  const SoftParams params = soft_params(rho);
  const Graph& g = source.graph;
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edge_count());
  const int k = static_cast<int>(params.k);
  const int h = static_cast<int>(params.h);
  const int delta = std::max(g.max_degree(), 1);
  const int new_n = n * (1 + delta * k) + m * (h + k + 1);

  std::vector<Edge> edges;
  ColorSpec spec = extend_precolor(source.spec, new_n, k);
  VertexId next = n + 1;
  for (const Edge& e : g.edges()) {
    const VertexId x = next++;
    edges.push_back({e.u, x, Rational(1)});
    edges.push_back({x, e.v, Rational(1)});
    for (int j = 0; j < h; ++j) edges.push_back({x, next++, Rational(1)});
    for (Color i = 1; i <= k; ++i) {
      spec.precolor[next] = i;
      edges.push_back({x, next++, Rational(1)});
    }
  }
  for (VertexId v = 1; v <= n; ++v) {
    for (Color i = 1; i <= k; ++i) {
      for (int j = 0; j < delta; ++j) {
        spec.precolor[next] = i;
        edges.push_back({v, next++, Rational(1)});
      }
    }
  }
  ReductionOutput out{ReductionKind::MHEToSoftMHV, source,
                      HappyInstance{Graph(new_n, std::move(edges)), std::move(spec),
                                    HappinessMode::soft(rho)},
                      Problem::SoftMHV, SoftIffRelation{delta, n, m, h, k}, {}};
  out.params.k = k;
  out.params.h = h;
  out.params.max_degree = delta;
  return out;
}

std::int64_t brute_force_multiway_cut(const MultiwayCutInstance& instance, std::uint64_t budget) {
  instance.validate();
  const Graph& g = instance.graph;
  const int n = g.vertex_count();
  const int t = static_cast<int>(instance.terminals.size());
  std::vector<int> label(n + 1, -1);
  for (int i = 0; i < t; ++i) label[instance.terminals[i]] = i;
  std::vector<VertexId> free;
  for (VertexId v = 1; v <= n; ++v) {
    if (label[v] < 0) free.push_back(v);
  }
  long double required = 1;
  for (std::size_t i = 0; i < free.size(); ++i) required *= t;
  if (required > static_cast<long double>(budget)) {
    throw BudgetExceeded("multiway cut enumeration needs " + std::to_string(t) + "^" +
                             std::to_string(free.size()) + " labellings, budget is " +
                             std::to_string(budget),
                         required);
  }
  for (VertexId v : free) label[v] = 0;
  std::int64_t best = static_cast<std::int64_t>(g.edge_count());
  while (true) {
    std::int64_t cut = 0;
    for (const Edge& e : g.edges()) cut += label[e.u] != label[e.v] ? 1 : 0;
    best = std::min(best, cut);
    std::size_t pos = free.size();
    while (pos > 0 && label[free[pos - 1]] == t - 1) {
      label[free[pos - 1]] = 0;
      --pos;
    }
    if (pos == 0) break;
    ++label[free[pos - 1]];
  }
  return best;
}

ReductionVerdict verify_reduction(const ReductionOutput& output, std::uint64_t budget) {
  ReductionVerdict verdict;
  try {
    Rational source_opt;
    if (const auto* mwc = std::get_if<MultiwayCutInstance>(&output.source)) {
      source_opt = Rational(brute_force_multiway_cut(*mwc, budget));
    } else {
      const auto& src = std::get<HappyInstance>(output.source);
      source_opt = brute_force_mhe(src.graph, src.spec, budget).objective;
    }
    verdict.source_opt = source_opt;

    const HappyInstance& tgt = output.target;
    const Rational target_opt =
        output.target_problem == Problem::MHE
            ? brute_force_mhe(tgt.graph, tgt.spec, budget).objective
            : brute_force_mhv(tgt.graph, tgt.spec, tgt.mode, budget).objective;
    verdict.target_opt = target_opt;

    Rational expected;
    if (const auto* affine = std::get_if<AffineValueMap>(&output.value_map)) {
      expected = Rational(affine->a) * source_opt + Rational(affine->b);
    } else {
      const auto& iff = std::get<SoftIffRelation>(output.value_map);
      expected = Rational(iff.offset()) + source_opt;
    }
    verdict.status =
        target_opt == expected ? ReductionVerdict::Status::Holds : ReductionVerdict::Status::Fails;
    verdict.detail = "source OPT " + format_rational(source_opt) + ", target OPT " +
                     format_rational(target_opt) + ", expected " + format_rational(expected);
  } catch (const BudgetExceeded& e) {
    verdict.status = ReductionVerdict::Status::Skipped;
    verdict.detail = e.what();
  }
  return verdict;
}

}  // namespace happy
