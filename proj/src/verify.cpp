#include "anum/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "anum/chain_poset.hpp"
#include "anum/closed_forms.hpp"
#include "anum/decomposition.hpp"
#include "anum/engine.hpp"
#include "anum/enumerate.hpp"
#include "anum/graph_io.hpp"
#include "anum/recomplement.hpp"
#include "anum/scan.hpp"
#include "anum/sequence_shape.hpp"

namespace anum {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

std::string seq_text(const ASequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + seq[i].get_str();
  return out + ")";
}

ASequence seq_of(std::initializer_list<long> values) {
  ASequence out;
  for (long v : values) out.emplace_back(v);
  return out;
}

EdgePair random_non_edge(const Graph& g, std::mt19937_64& rng) {
  const int n = g.order();
  for (;;) {
    const int a = random_int(rng, 0, n - 1);
    int b = random_int(rng, 0, n - 2);
    if (b >= a) ++b;
    if (!g.has_edge(a, b)) return EdgePair::make(a, b);
  }
}

/// Random graph on n vertices with at least one non-edge.
Graph random_incomplete_graph(int n, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (g.edge_count() < static_cast<std::size_t>(pair_count(n))) return g;
  }
}

template <class Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pair_count(n)); ++bits) {
    fn(labeled_graph_from_bits(n, bits));
  }
}

// --- 1 ---------------------------------------------------------------------

Outcome path_six_checkpoint() {
  Outcome o;
  const Graph p6 = path_graph(6);
  const BigInt s = sa(p6);
  const auto chains = chain_counts(p6, VertexSet{}).counts;
  o.require(s == -5, "sa(P6) = " + s.get_str());
  o.require(chains == seq_of({0, 1, 11, 15}), "chain counts " + seq_text(chains));
  o.require(sa_via_chains(p6) == -5, "alternating chain sum");
  o.detail << "sa(P6) = " << s << ", |C_k(0;P6)| = " << seq_text(chains);
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome cycle_six_checkpoint() {
  Outcome o;
  const Graph p6 = path_graph(6);
  const Graph c6 = cycle_graph(6);
  const EdgePair e{0, 5};
  const BigInt s = sa(c6);
  o.require(s == -10, "sa(C6) = " + s.get_str());

  std::vector<VertexSet> fresh;
  for (VertexSet j : even_cover_family(c6)) {
    if (!is_even_cover(p6, j.bits())) fresh.push_back(j);
  }
  std::vector<VertexSet> expected{VertexSet::of({0, 5}), VertexSet::of({0, 1, 2, 5}), VertexSet::of({0, 2, 3, 5}),
                                  VertexSet::of({0, 3, 4, 5})};
  std::sort(expected.begin(), expected.end());
  o.require(fresh == expected, "EC(C6) \\ EC(P6)");

  const auto c6_counts = chain_counts(c6, VertexSet{});
  const auto p6_counts = chain_counts(p6, VertexSet{});
  for (const auto& [k, want] : {std::pair{2, 4}, std::pair{3, 9}}) {
    BigInt singular;
    for (VertexSet j : fresh) singular += count_singular_chains(p6, e, j, k);
    const BigInt excess = c6_counts.at(k) - p6_counts.at(k);
    o.require(singular == want && excess == want,
              "k=" + std::to_string(k) + " singular " + singular.get_str() + " excess " + excess.get_str());
    o.detail << "k=" << k << ": " << singular << " singular chains; ";
  }
  o.detail << "sa(C6) = " << s << ", new sets";
  for (VertexSet j : fresh) o.detail << ' ' << format_vertex_set(j);
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome reconnected_complement_checkpoint() {
  Outcome o;
  const Graph g = add_edge(cycle_graph(6), EdgePair{0, 3});
  const auto rc = reconnected_complement(g, VertexSet::of({0, 1}));
  std::vector<std::pair<int, int>> got;
  for (const auto& e : rc.graph.edges()) {
    got.emplace_back(rc.labels[static_cast<std::size_t>(e.a)] + 1, rc.labels[static_cast<std::size_t>(e.b)] + 1);
  }
  std::sort(got.begin(), got.end());
  const std::vector<std::pair<int, int>> want{{3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
  o.require(got == want, "edge set");
  o.detail << "E = {";
  for (std::size_t i = 0; i < got.size(); ++i) o.detail << (i ? "," : "") << '{' << got[i].first << ',' << got[i].second << '}';
  o.detail << '}';
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome star_checkpoint() {
  Outcome o;
  const ASequence seq = a_sequence(star_graph(7));
  o.require(seq.size() >= 4 && ASequence(seq.begin(), seq.begin() + 4) == seq_of({1, 6, 40, 96}), "prefix");
  const auto shape = analyze(seq);
  o.require(!shape.log_concave && shape.first_violation == 1U, "log-concavity break at index 1");
  o.require(seq[1] * seq[1] < seq[0] * seq[2], "36 < 40");
  o.detail << "a(K_{1,6}) = " << seq_text(seq) << ", first log-concavity break at index "
           << (shape.first_violation ? std::to_string(*shape.first_violation) : "none");
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome chain_formula_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t mismatches_with_odd_component = 0;
  std::string first;
  for (int n = 0; n <= 6; n += 2) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      ++checked;
      const BigInt via = sa_via_chains(g);
      const BigInt direct = sa(g);
      if (via == direct) return;
      ++mismatches;
      if (!is_even_cover(g, full_mask(n))) ++mismatches_with_odd_component;
      if (first.empty()) first = emit_graph6(g) + " (chains " + via.get_str() + ", sa " + direct.get_str() + ")";
    });
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail << checked << " labeled graphs of even order <= 6 (odd orders have no comp poset)";
  if (mismatches > 0) {
    o.detail << "; " << mismatches_with_odd_component << " of the mismatches have an odd component, first "
             << first;
  }
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome decomposition_identity() {
  Outcome o;
  std::size_t exhaustive = 0;
  for (int n = 0; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (int b = 1; b < n; ++b) {
        for (int a = 0; a < b; ++a) {
          if (g.has_edge(a, b)) continue;
          ++exhaustive;
          if (!verify_decomposition(g, EdgePair{a, b}).rhs_check) {
            o.require(false, emit_graph6(g) + " + {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
          }
        }
      }
    });
  }
  std::mt19937_64 rng(0x5eed0006);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_incomplete_graph(random_int(rng, 8, 10), rng);
    const EdgePair e = random_non_edge(g, rng);
    if (!verify_decomposition(g, e).rhs_check) o.require(false, "random " + emit_graph6(g));
  }
  o.detail << exhaustive << " exhaustive (G, e) pairs with n <= 6, 1000 random pairs with n in 8..10";
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome reconnected_complement_identities() {
  Outcome o;
  std::mt19937_64 rng(0x5eed0007);
  std::size_t failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = random_int(rng, 1, 12);
    const Graph g = random_graph(n, rng);
    const Mask j = rng() & full_mask(n);
    const Mask i = rng() & j;

    auto order = VertexSet(i).members();
    std::shuffle(order.begin(), order.end(), rng);
    const auto direct = reconnected_complement(g, VertexSet(i));
    const auto collapsed = reconnected_complement_by_collapse(g, order);
    std::reverse(order.begin(), order.end());
    const auto reversed = reconnected_complement_by_collapse(g, order);
    bool ok = direct.graph == collapsed.graph && direct.labels == collapsed.labels && direct.graph == reversed.graph;

    const auto restricted = induced(g, VertexSet(j));
    const auto left = reconnected_complement(restricted.graph, restricted.relabel(VertexSet(i)));
    const auto right = induced(direct.graph, direct.relabel(VertexSet(j & ~i)));
    ok = ok && left.graph == right.graph;
    if (!ok) {
      ++failures;
      o.require(false, emit_graph6(g));
    }
  }
  o.detail << "10000 random cases with n <= 12, " << failures << " failures";
  return o;
}

// --- 8 ---------------------------------------------------------------------

Outcome chain_counts_through_complement() {
  Outcome o;
  std::size_t graphs = 0;
  std::size_t comparisons = 0;
  for (int n = 0; n <= 8; n += 2) {
    for (const Graph& g : isomorphism_classes(n)) {
      ++graphs;
      const CompPoset poset(g);
      const auto matrix = poset.chain_count_matrix();
      for (std::size_t e = 0; e < poset.size(); ++e) {
        const VertexSet j = poset.elements()[e];
        const auto counts = chain_counts(reconnected_complement(g, j).graph, VertexSet{});
        for (int k = 0; k <= poset.rank(); ++k) {
          ++comparisons;
          if (matrix[e][static_cast<std::size_t>(k)] != counts.at(k)) {
            o.require(false, emit_graph6(g) + " J=" + format_vertex_set(j) + " k=" + std::to_string(k));
          }
        }
      }
    }
  }
  o.detail << graphs << " isomorphism classes of even order <= 8, " << comparisons << " (J, k) comparisons";
  return o;
}

// --- 9 ---------------------------------------------------------------------

Outcome subgraph_monotonicity() {
  Outcome o;
  // All spanning pairs H ⊆ G on six labeled vertices; a smaller H is the
  // same as a spanning one with isolated vertices added.
  constexpr int n = 6;
  constexpr std::uint64_t count = std::uint64_t{1} << pair_count(n);
  std::vector<std::array<std::int64_t, 4>> seqs(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const ASequence seq = a_sequence(labeled_graph_from_bits(n, bits));
    for (std::size_t i = 0; i < 4; ++i) seqs[bits][i] = *to_int64(seq[i]);
  }
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  for (std::uint64_t g = 0; g < count; ++g) {
    for (std::uint64_t h = g;; h = (h - 1) & g) {
      ++pairs;
      for (std::size_t i = 0; i < 4; ++i) failures += seqs[h][i] > seqs[g][i] ? 1 : 0;
      if (h == 0) break;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " exhaustive failures");

  std::mt19937_64 rng(0x5eed0009);
  std::size_t random_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int gn = random_int(rng, 1, 10);
    const Graph g = random_graph(gn, rng);
    const int hn = random_int(rng, 0, gn);
    GraphBuilder hb(hn);
    for (const auto& e : g.edges()) {
      if (e.b < hn && (rng() & 1U)) hb.add(e.a, e.b);
    }
    if (!monotonicity_check(std::move(hb).build(), g)) ++random_failures;
  }
  o.require(random_failures == 0, std::to_string(random_failures) + " random failures");
  o.detail << pairs << " exhaustive pairs on 6 labeled vertices, 1000 random pairs with n <= 10";
  return o;
}

// --- 10 --------------------------------------------------------------------

Outcome closed_form_agreement() {
  Outcome o;
  for (int n = 0; n <= 14; ++n) {
    if (path_a_sequence(n) != a_sequence(path_graph(n))) o.require(false, "path " + std::to_string(n));
  }
  for (int n = 3; n <= 14; ++n) {
    if (cycle_a_sequence(n) != a_sequence(cycle_graph(n))) o.require(false, "cycle " + std::to_string(n));
  }
  for (int n = 1; n <= 11; ++n) {
    if (star_a_sequence(n) != a_sequence(star_graph(n))) o.require(false, "star " + std::to_string(n));
  }
  for (int i = 1; i <= 10; ++i) {
    const BigInt p = BigInt(1) << (2 * i);
    const Rational rhs = Rational(p * (p - 1)) * abs(bernoulli(2 * i)) / Rational(2 * i);
    if (Rational(zigzag(2 * i - 1)) != rhs) o.require(false, "tangent/Bernoulli i=" + std::to_string(i));
  }
  for (int i = 1; i <= 20; ++i) {
    const auto box = bernoulli_bounds(i);
    const Real value = abs(to_real(bernoulli(2 * i)));
    const auto tan = tangent_bounds(i);
    const Real t = to_real(zigzag(2 * i - 1));
    if (!(box.lower < value && value < box.upper && tan.lower < t && t < tan.upper)) {
      o.require(false, "sandwich i=" + std::to_string(i));
    }
  }
  for (int k = 3; k <= 50; ++k) {
    if (!star_gap_holds(k)) o.require(false, "star gap k=" + std::to_string(k));
  }
  o.detail << "paths n<=14, cycles 3<=n<=14, stars n<=11, tangent identity i<=10, bounds i<=20, star gap 3<=k<=50";
  return o;
}

// --- 11 --------------------------------------------------------------------

std::size_t scan_violations(int n, std::optional<ClosureClass> cls, Check check, std::size_t& in_class) {
  ScanConfig config;
  config.n = n;
  config.class_filter = cls;
  config.checks = {check};
  std::ostream sink(nullptr);
  const auto summary = run_scan(config, sink);
  in_class += summary.in_class;
  return summary.violations.at(check);
}

Outcome shape_theorems() {
  Outcome o;
  for (ClosureClass cls : {ClosureClass::HamiltonianPlusSmall, ClosureClass::UniversalVertex}) {
    std::size_t in_class = 0;
    std::size_t bad = 0;
    for (int n = 0; n <= kMaxExhaustiveScanOrder; ++n) bad += scan_violations(n, cls, Check::TailPeaked, in_class);
    o.require(bad == 0, std::string(to_string(cls)) + " tail-peaked violations " + std::to_string(bad));
    o.detail << to_string(cls) << ": " << in_class << " classes, " << bad << " not tail-peaked; ";
  }

  std::vector<int> not_tail_peaked;
  for (int n = 0; n <= 40; ++n) {
    const auto shape = analyze(path_a_sequence(n));
    if (!shape.unimodal) o.require(false, "path " + std::to_string(n) + " not unimodal");
    if (!shape.tail_peaked && n >= 16 && n <= 20) not_tail_peaked.push_back(n);
  }
  o.require(!not_tail_peaked.empty(), "no tail-peaked failure among paths 16..20");
  o.detail << "paths n<=40 unimodal, not tail-peaked at n =";
  for (int n : not_tail_peaked) o.detail << ' ' << n;

  std::size_t in_class = 0;
  std::size_t bad = 0;
  for (int n = 0; n <= 7; ++n) bad += scan_violations(n, std::nullopt, Check::Unimodal, in_class);
  o.require(bad == 0, "unimodality violations " + std::to_string(bad));
  o.detail << "; all " << in_class << " classes with n <= 7: " << bad << " non-unimodal";
  return o;
}

// --- 12 --------------------------------------------------------------------

Outcome b_sign_laws() {
  Outcome o;
  std::size_t subsets = 0;
  std::size_t stated = 0;
  std::size_t by_components = 0;
  std::string first;
  for (int n = 0; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const auto bs = b_all_subsets(sa_all_subsets(g));
      for (Mask s = 0; s <= full_mask(n); ++s) {
        ++subsets;
        const BigInt& b = bs[static_cast<std::size_t>(s)];
        if (!b_sign_law_holds(g, s, b)) {
          ++stated;
          if (first.empty()) {
            first = emit_graph6(induced(g, VertexSet(s)).graph) + " (b = " + b.get_str() + ")";
          }
        }
        if (!b_component_sign_holds(g, s, b)) ++by_components;
      }
    });
  }
  o.require(stated == 0, std::to_string(stated) + " subsets break the stated rules");
  o.detail << subsets << " (graph, subset) pairs with n <= 6; component-count form fails " << by_components
           << " times";
  if (stated > 0) o.detail << "; the odd-order rule fails on disconnected sets, first " << first;
  return o;
}

template <class Fn>
Criterion make(int id, std::string name, double budget_seconds, Fn fn) {
  return Criterion{id, name, [id, name, budget_seconds, fn] {
                     CriterionResult r;
                     r.id = id;
                     r.name = name;
                     const auto start = std::chrono::steady_clock::now();
                     try {
                       Outcome o = fn();
                       r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                       r.passed = o.ok;
                       r.detail = o.detail.str();
                     } catch (const std::exception& e) {
                       r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                       r.detail = std::string("exception: ") + e.what();
                     }
                     if (budget_seconds > 0 && r.seconds > budget_seconds) {
                       r.passed = false;
                       r.detail += "; over the time budget";
                     }
                     return r;
                   }};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      make(1, "P6 signed a-number and chain counts", 1.0, path_six_checkpoint),
      make(2, "C6 new even covers and singular chains", 1.0, cycle_six_checkpoint),
      make(3, "reconnected complement of C6 + {1,4}", 0, reconnected_complement_checkpoint),
      make(4, "K_{1,6} prefix and log-concavity break", 0, star_checkpoint),
      make(5, "chain alternating sum equals sa, n <= 6", 300.0, chain_formula_equivalence),
      make(6, "edge-addition decomposition identity", 600.0, decomposition_identity),
      make(7, "collapse order and interchange identities", 0, reconnected_complement_identities),
      make(8, "chain counts through the reconnected complement", 0, chain_counts_through_complement),
      make(9, "subgraph monotonicity of a-sequences", 0, subgraph_monotonicity),
      make(10, "closed forms, tangent identity and bounds", 0, closed_form_agreement),
      make(11, "tail-peaked and unimodal shapes", 0, shape_theorems),
      make(12, "sign rules for b over all subsets, n <= 6", 0, b_sign_laws),
  };
  return all;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    out.push_back(c.run());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  char time[32];
  std::snprintf(time, sizeof time, " (%.2f s): ", r.seconds);
  return head + r.name + time + r.detail;
}

}  // namespace anum
