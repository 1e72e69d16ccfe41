#include "osculo/incidence.hpp"

#include "osculo/errors.hpp"
#include "osculo/tangency_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace osculo {

bool lift_contained(const Sphere& s, const MultiPoly& p) {
  if (p.is_zero()) return true;
  return divides(sphere_polynomial(s, s.dimension() - 1), p.tilde_substitute(s));
}

IncidenceReport classify_incidences(const Collection& c, const MultiPoly& p,
                                    TangencyMode mode) {
  c.validate();
  if (p.nx() != c.dimension || p.ny() != c.dimension - 1) {
    throw InputError("polynomial variable space does not match the collection");
  }

  const TangencyGraph graph = count_pairs_bruteforce(c, mode);

  std::map<int, bool> contained;
  for (const Sphere& s : c.spheres) contained[s.id] = lift_contained(s, p);

  IncidenceReport report;
  for (const auto& [id, is_in] : contained) {
    if (is_in) report.contained_ids.push_back(id);
  }
  report.uncontained_count =
      static_cast<long>(c.spheres.size()) - static_cast<long>(report.contained_ids.size());

  // Count of Z(p)-incidences per uncontained sphere, for the I3 budget.
  std::map<int, long> zero_incidences;
  bool tilde_ok = true;

  for (const TangencyEdge& e : graph.edges) {
    const Sphere& s1 = c.by_id(e.id1);
    const Sphere& s2 = c.by_id(e.id2);
    const std::optional<LiftedPoint> witness = lifted_intersection(s1, s2, mode);
    if (!witness) throw InternalError("graph edge lost its lifted intersection");
    const Rational value = p.evaluate(witness->xy());
    if (!value.is_zero()) {
      report.i1.push_back(OrderedIncidence{e.id1, e.id2, *witness});
      report.i1.push_back(OrderedIncidence{e.id2, e.id1, *witness});
      continue;
    }
    const bool both = contained.at(e.id1) && contained.at(e.id2);
    auto& target = both ? report.i4 : report.i3;
    target.push_back(OrderedIncidence{e.id1, e.id2, *witness});
    target.push_back(OrderedIncidence{e.id2, e.id1, *witness});
    for (const Sphere* s : {&s1, &s2}) {
      if (contained.at(s->id)) continue;
      zero_incidences[s->id] += 1;
      // The contact of an uncontained participant lies on the zero set of
      // its Y-eliminated polynomial; check it exactly.
      if (!p.tilde_substitute(*s).evaluate(witness->xy()).is_zero()) tilde_ok = false;
    }
  }

  report.max_zero_incidences = 0;
  for (const auto& [id, k] : zero_incidences) {
    report.max_zero_incidences = std::max(report.max_zero_incidences, k);
  }
  report.i3_bound_ok = static_cast<long>(report.i3.size()) <=
                       2 * report.max_zero_incidences * report.uncontained_count;
  report.tilde_witnesses_ok = tilde_ok;
  return report;
}

AlgebraicChain algebraic_chain(const Collection& c, const MultiPoly& p,
                               TangencyMode mode) {
  c.validate();
  if (p.is_zero()) throw InputError("algebraic chain requires a nonzero polynomial");
  if (p.nx() != c.dimension || p.ny() != c.dimension - 1) {
    throw InputError("polynomial variable space does not match the collection");
  }

  const TangencyGraph graph = count_pairs_bruteforce(c, mode);

  AlgebraicChain chain;
  MultiPoly current = p;
  std::set<int> survivors;
  for (const Sphere& s : c.spheres) {
    if (lift_contained(s, current)) survivors.insert(s.id);
  }

  auto record_step = [&](const MultiPoly& poly, int deriv_index) {
    ChainStep step;
    step.poly = poly;
    step.collection_ids.assign(survivors.begin(), survivors.end());
    step.derivative_index = deriv_index;
    chain.steps.push_back(std::move(step));
  };

  auto verify_witnesses = [&](const MultiPoly& poly) {
    for (const TangencyEdge& e : graph.edges) {
      if (!survivors.count(e.id1) || !survivors.count(e.id2)) continue;
      const auto witness =
          lifted_intersection(c.by_id(e.id1), c.by_id(e.id2), mode);
      if (!witness) throw InternalError("graph edge lost its lifted intersection");
      if (!poly.evaluate(witness->xy()).is_zero()) {
        chain.witness_violations.emplace_back(e.id1, e.id2);
      }
    }
  };

  while (current.depends_on_y()) {
    int deriv_index = 0;
    MultiPoly next;
    for (int j = 1; j <= current.ny(); ++j) {
      MultiPoly d = current.partial_derivative(current.nx() + j - 1);
      if (!d.is_zero()) {
        deriv_index = j;
        next = std::move(d);
        break;
      }
    }
    if (deriv_index == 0) throw InternalError("Y-dependent polynomial with all Y-derivatives zero");
    record_step(current, deriv_index);
    current = std::move(next);
    // Incidences among the current survivors must already sit in the zero
    // set of the freshly differentiated polynomial.
    verify_witnesses(current);
    for (auto it = survivors.begin(); it != survivors.end();) {
      if (lift_contained(c.by_id(*it), current)) {
        ++it;
      } else {
        it = survivors.erase(it);
      }
    }
  }
  record_step(current, 0);

  chain.terminal = current;
  const MultiPoly& r = chain.terminal;
  for (int id : survivors) {
    if (divides(sphere_polynomial(c.by_id(id), c.dimension - 1), r)) {
      chain.terminal_ids.push_back(id);
    }
  }
  chain.terminal_bound_ok =
      r.is_zero() || 2 * static_cast<long>(chain.terminal_ids.size()) <= r.degree();
  return chain;
}

}  // namespace osculo
