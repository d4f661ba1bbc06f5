#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhd/fdalgebra.hpp"
#include "qhd/heredity.hpp"

namespace qhd {

enum class Verdict { quasi_hereditary, not_quasi_hereditary, unknown };

struct HeredityChainReport {
  Verdict verdict = Verdict::unknown;
  EliminationOrdering ordering;
  std::vector<StepRecord> steps;
  bool certified = false;
  std::string detail;
};

namespace detail {

inline int recheck_cap(const TipSet& tips, const Quiver& q) {
  return std::max(2, tips.max_length()) + q.live_vertex_count() + 2;
}

}  // namespace detail

// Certifies a heredity chain in single-vertex steps: verify the heredity
// ideal, quotient, recurse. Each quotient also recompletes the restricted
// basis and compares tip sets, so the restriction step is itself checked
// rather than trusted. Stops at the first failing step.
template <Field K>
HeredityChainReport verify_chain(const FDAlgebra<K>& A,
                                 const std::vector<vertex_id>& ordering) {
  {
    auto live = A.quiver.live_vertices();
    auto sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != live)
      throw PreconditionFailed("ordering is not a permutation of the vertices");
  }
  HeredityChainReport rep;
  rep.ordering.ordering = ordering;
  FDAlgebra<K> cur = A;
  for (vertex_id v : ordering) {
    StepRecord rec = verify_heredity_ideal(cur, {v});
    rec.vertex = v;
    if (properly_internal(cur.quiver, v, cur.data.tips)) {
      rec.proj_ok = false;
      rec.tips_consistent = false;
      rep.steps.push_back(rec);
      rep.detail = "vertex " + cur.quiver.vertex_name(v) +
                   " is properly internal to the current tips; the chain "
                   "step cannot be justified";
      return rep;
    }
    if (!rec.passed()) {
      rep.steps.push_back(rec);
      rep.detail =
          "heredity check failed at vertex " + cur.quiver.vertex_name(v);
      return rep;
    }
    FDAlgebra<K> nxt = quotient_algebra(cur, {v});
    rec.quotient_dim = nxt.dim();
    std::vector<Element<K>> gens;
    for (const auto& g : nxt.data.basis) gens.push_back(g.element);
    auto redo = complete(nxt.quiver, gens, nxt.data.order,
                         detail::recheck_cap(nxt.data.tips, nxt.quiver));
    rec.tips_consistent = redo.tips.members == nxt.data.tips.members;
    rep.steps.push_back(rec);
    if (!rec.tips_consistent) {
      rep.detail = "restricted tips disagree with the recompleted quotient "
                   "basis at vertex " +
                   cur.quiver.vertex_name(v);
      return rep;
    }
    cur = std::move(nxt);
  }
  rep.certified = true;
  rep.verdict = Verdict::quasi_hereditary;
  return rep;
}

// Monomial decision: greedy elimination is complete here, so failure is a
// definitive no. A successful ordering is certified by the verifier on the
// monomial algebra itself.
template <Field K>
HeredityChainReport decide_monomial_qh(const Quiver& q, const TipSet& t,
                                       const AdmissibleOrder& ord) {
  EliminationOrdering greedy = greedy_ordering(q, t);
  if (!greedy.success()) {
    HeredityChainReport rep;
    rep.verdict = Verdict::not_quasi_hereditary;
    rep.ordering = greedy;
    rep.detail = "no eliminable vertex at step " +
                 std::to_string(*greedy.failure_index);
    return rep;
  }
  auto A = build_fd_algebra(q, monomial_data<K>(q, t, ord));
  HeredityChainReport rep = verify_chain(A, greedy.ordering);
  if (!rep.certified && rep.detail.empty())
    rep.detail = "verifier rejected the greedy chain";
  return rep;
}

template <Field K>
struct Decision {
  HeredityChainReport report;
  GroebnerData<K> data;          // of the deciding (or last tried) order
  int order_index = -1;          // which supplied order settled the verdict
};

// Order-by-order pipeline: complete, decide the associated monomial algebra,
// and on success lift the same vertex ordering back and certify it. A
// monomial reduced basis makes the greedy failure definitive (the ideal is
// itself monomial); otherwise failures simply fall through to the next
// order, and exhausting the list yields unknown.
template <Field K>
Decision<K> decide_qh(const Quiver& q, const std::vector<Element<K>>& gens,
                      const std::vector<AdmissibleOrder>& orders, int cap) {
  if (orders.empty()) throw PreconditionFailed("no admissible order supplied");
  Decision<K> last;
  for (size_t i = 0; i < orders.size(); ++i) {
    GroebnerData<K> data = complete(q, gens, orders[i], cap);
    EliminationOrdering greedy = greedy_ordering(q, data.tips);
    if (!greedy.success()) {
      last.data = data;
      last.order_index = static_cast<int>(i);
      last.report = HeredityChainReport{};
      last.report.ordering = greedy;
      if (data.all_monomial()) {
        last.report.verdict = Verdict::not_quasi_hereditary;
        last.report.detail = "monomial ideal: no eliminable vertex at step " +
                             std::to_string(*greedy.failure_index);
        return last;
      }
      last.report.detail = "associated monomial algebra blocked at step " +
                           std::to_string(*greedy.failure_index);
      continue;
    }
    auto A = build_fd_algebra(q, data);
    HeredityChainReport rep = verify_chain(A, greedy.ordering);
    rep.ordering = greedy;
    if (rep.certified) {
      return {std::move(rep), std::move(data), static_cast<int>(i)};
    }
    last = {std::move(rep), std::move(data), static_cast<int>(i)};
  }
  last.report.verdict = Verdict::unknown;
  last.report.certified = false;
  if (last.report.detail.empty())
    last.report.detail = "every supplied order failed to certify a chain";
  return last;
}

}  // namespace qhd
