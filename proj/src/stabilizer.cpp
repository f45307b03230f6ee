#include "gcs/stabilizer.hpp"

#include <algorithm>
#include <cmath>

namespace gcs {

ConditionalMonomial single_factor(const std::string& site, Factor f) {
  ConditionalMonomial m;
  m.site(site).push_back(std::move(f));
  return m;
}

StabilizerSet initial_stabilizers(const ClusterGraph& g, const FiniteGroup& G, bool right) {
  StabilizerSet out;
  for (const auto& v : g.vertices) {
    if (v.parity == Parity::Even) {
      out.push_back({"Se[" + v.id + "]", v.id, std::nullopt, single_factor(v.id, Factor::t(Word::constant(0)))});
      continue;
    }
    for (std::size_t e = 0; e < G.order(); ++e) {
      const Word w = Word::constant(Element(e));
      out.push_back({"So[" + v.id + "," + G.label(Element(e)) + "]", v.id, Element(e),
                     single_factor(v.id, right ? Factor::x_right(w) : Factor::x_left(w))});
    }
  }
  return out;
}

namespace {

struct Image {
  std::vector<Factor> control, target;
};

}  // namespace

ConditionalMonomial conjugate_by_cmult(const ConditionalMonomial& op, const std::string& control,
                                       const std::string& target, Sense sense, const FiniteGroup& G,
                                       const std::string& hint) {
  const SiteTerm* ct = op.find(control);
  const SiteTerm* tt = op.find(target);
  if (!ct && !tt) return op;

  ConditionalMonomial out = op;
  const bool left = sense == Sense::Left;
  std::vector<Image> images;

  if (ct) {
    for (const Factor& f : ct->factors) {
      Image im;
      switch (f.kind) {
        case FactorKind::T:
        case FactorKind::ZRep:
          im.control = {f};
          break;
        case FactorKind::XLeft:
          im.control = {f};
          im.target = {left ? Factor::x_left(f.word) : Factor::x_right(f.word)};
          break;
        case FactorKind::XRight: {
          // X→_g ⊗ I  ->  Σ_h X→_g T_h ⊗ X_{h g⁻¹ h⁻¹}, left or right as the gate.
          const int h = out.add_var(hint);
          const Word hw = Word::variable(h);
          const Word conj = hw * f.word.inverse() * hw.inverse();
          im.control = {f, Factor::t(hw)};
          im.target = {left ? Factor::x_left(conj) : Factor::x_right(conj)};
          break;
        }
      }
      images.push_back(std::move(im));
    }
  }
  if (tt) {
    for (const Factor& f : tt->factors) {
      Image im;
      switch (f.kind) {
        case FactorKind::ZRep:
          throw InputError("conjugating a Z factor on a CMULT target is not supported");
        case FactorKind::T: {
          // I ⊗ T_g  ->  Σ_h T_h ⊗ T_{hg} (left)  or  Σ_h T_h ⊗ T_{g h⁻¹} (right)
          const int h = out.add_var(hint);
          const Word hw = Word::variable(h);
          im.control = {Factor::t(hw)};
          im.target = {Factor::t(left ? hw * f.word : f.word * hw.inverse())};
          break;
        }
        case FactorKind::XLeft:
        case FactorKind::XRight: {
          const bool same = (f.kind == FactorKind::XLeft) == left;
          if (!same) {
            im.target = {f};  // left and right multiplications commute
            break;
          }
          // I ⊗ X_g  ->  Σ_h T_h ⊗ X_{h g h⁻¹}
          const int h = out.add_var(hint);
          const Word hw = Word::variable(h);
          im.control = {Factor::t(hw)};
          im.target = {Factor{f.kind, hw * f.word * hw.inverse(), nullptr}};
          break;
        }
      }
      images.push_back(std::move(im));
    }
  }

  std::vector<Factor> new_control, new_target;
  for (auto& im : images) {
    new_control.insert(new_control.end(), im.control.begin(), im.control.end());
    new_target.insert(new_target.end(), im.target.begin(), im.target.end());
  }
  out.erase_site(control);
  out.erase_site(target);
  if (!new_control.empty()) out.site(control) = std::move(new_control);
  if (!new_target.empty()) out.site(target) = std::move(new_target);
  out.simplify(G);
  return out;
}

StabilizerSet propagate(const ClusterGraph& g, const GateSchedule& sched, const StabilizerSet& init,
                        const FiniteGroup& G, bool enforce_support) {
  StabilizerSet out;
  for (const auto& s : init) {
    Stabilizer p = s;
    for (const auto& gate : sched) p.op = conjugate_by_cmult(p.op, gate.control, gate.target, gate.sense, G, "h" + gate.edge);
    if (enforce_support) {
      const auto ball = g.ball2(s.site);
      for (const auto& site : p.op.support())
        if (std::find(ball.begin(), ball.end(), site) == ball.end())
          throw BudgetError(p.label + " reaches site '" + site + "' beyond the next-nearest neighbourhood");
    }
    out.push_back(std::move(p));
  }
  return out;
}

ConditionalMonomial closed_form_even(const ClusterGraph& g, const FiniteGroup& G, const std::string& v) {
  ConditionalMonomial m;
  Word out_word, in_word;  // later edges on the left
  auto it = g.orderings.find(v);
  if (it != g.orderings.end()) {
    for (const auto& eid : it->second) {
      const Edge& e = g.edge(eid);
      const bool outward = ClusterGraph::outward(e, v);
      const int x = m.add_var((outward ? "g" : "h") + eid);
      const Word xw = Word::variable(x);
      if (outward)
        out_word = xw * out_word;
      else
        in_word = xw * in_word;
      m.site(g.other_end(e, v)).push_back(Factor::t(xw));
    }
  }
  auto& vf = m.site(v);
  vf.insert(vf.begin(), Factor::t(out_word * in_word.inverse()));
  // Keep v first in the printed form.
  std::stable_partition(m.terms.begin(), m.terms.end(), [&](const SiteTerm& t) { return t.site == v; });
  m.simplify(G);
  if (m.terms.empty()) m.site(v).push_back(Factor::t(Word::constant(0)));
  return m;
}

ConditionalMonomial closed_form_odd(const ClusterGraph& g, const FiniteGroup& G, const std::string& w, Element el) {
  ConditionalMonomial m;
  m.site(w).push_back(Factor::x_left(Word::constant(el)));
  for (const auto& eid : g.incident(w)) {
    const Edge& e = g.edge(eid);
    const std::string v = g.other_end(e, w);
    const bool left = ClusterGraph::outward(e, v);
    const auto& order = g.ordering(v);
    const auto pos = std::find(order.begin(), order.end(), eid) - order.begin();
    Word W;
    for (auto k = static_cast<std::size_t>(pos) + 1; k < order.size(); ++k) {
      const Edge& later = g.edge(order[k]);
      if (ClusterGraph::outward(later, v) != left) continue;
      const int h = m.add_var("h" + later.id);
      W = Word::variable(h) * W;
      m.site(g.other_end(later, v)).push_back(Factor::t(Word::variable(h)));
    }
    const Word conj = W * Word::constant(el) * W.inverse();
    m.site(v).push_back(left ? Factor::x_left(conj) : Factor::x_right(conj));
  }
  m.simplify(G);
  return m;
}

StabilizerSet closed_form_stabilizers(const ClusterGraph& g, const FiniteGroup& G) {
  StabilizerSet out;
  for (const auto& v : g.vertices) {
    if (v.parity == Parity::Even) {
      out.push_back({"Se[" + v.id + "]", v.id, std::nullopt, closed_form_even(g, G, v.id)});
      continue;
    }
    for (std::size_t e = 0; e < G.order(); ++e)
      out.push_back({"So[" + v.id + "," + G.label(Element(e)) + "]", v.id, Element(e),
                     closed_form_odd(g, G, v.id, Element(e))});
  }
  return out;
}

StabilizerSet qubit_css_stabilizers(const ClusterGraph& g, const GroupSpec& z2) {
  if (z2.G().order() != 2) throw InputError("CSS cluster stabilizers are defined for Z2 only");
  const auto triv = z2.reps().trivial_index();
  const std::size_t minus = triv && *triv == 0 ? 1 : 0;
  const std::shared_ptr<const Representation> z(z2.irreps, &z2.reps()[minus]);
  StabilizerSet out;
  for (const auto& w : g.odd_ids()) {
    ConditionalMonomial op;
    op.site(w).push_back(Factor::x_left(Word::constant(1)));
    for (const auto& v : g.neighbours(w)) op.site(v).push_back(Factor::x_left(Word::constant(1)));
    out.push_back({"Xo[" + w + "]", w, std::nullopt, std::move(op)});
  }
  for (const auto& v : g.even_ids()) {
    ConditionalMonomial op;
    op.site(v).push_back(Factor::z(z, 0, 0));
    for (const auto& w : g.neighbours(v)) op.site(w).push_back(Factor::z(z, 0, 0));
    out.push_back({"Ze[" + v + "]", v, std::nullopt, std::move(op)});
  }
  return out;
}

VerifyResult verify(const StabilizerSet& set, const SparseState& state, double tol) {
  VerifyResult r;
  const double n = state.norm();
  if (!(n > 0)) throw std::domain_error("verify: zero state");
  for (const auto& s : set) {
    const double res = distance(apply(s.op, state), state) / n;
    r.residuals.emplace_back(s.label, res);
    if (res > r.max_residual || r.worst.empty()) {
      r.max_residual = res;
      r.worst = s.label;
    }
    if (!(res <= tol) && r.first_failure.empty()) r.first_failure = s.label;
  }
  r.pass = r.first_failure.empty();
  return r;
}

double action_distance(const ConditionalMonomial& a, const ConditionalMonomial& b, const Register& reg,
                       std::mt19937_64& rng, std::size_t samples, const SparseState* anchor) {
  std::vector<std::string> support = a.support();
  for (const auto& s : b.support())
    if (std::find(support.begin(), support.end(), s) == support.end()) support.push_back(s);
  double worst = 0;
  const std::uint64_t n = reg.G().order();
  std::uint64_t dim = 1;
  for (std::size_t k = 0; k < support.size() && dim <= 4096; ++k) dim *= n;
  if (!support.empty() && dim <= 4096) {
    // Exhaustive: every basis state of the support, other sites at e.
    Register sub(reg.spec(), support);
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
      std::vector<Element> vals(support.size());
      std::uint64_t r = idx;
      for (std::size_t k = support.size(); k-- > 0;) {
        vals[k] = Element(r % n);
        r /= n;
      }
      SparseState basis = group_basis_state(sub, vals);
      worst = std::max(worst, distance(apply(a, basis), apply(b, basis)));
    }
    return worst;
  }
  for (std::size_t k = 0; k < samples; ++k) {
    SparseState psi = random_state(reg, rng, anchor ? 8 : 16);
    if (anchor && !anchor->empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, anchor->size() - 1);
      std::normal_distribution<double> gauss;
      std::vector<Key> keys(psi.keys());
      std::vector<cplx> amps(psi.amps());
      for (int e = 0; e < 8; ++e) {
        keys.push_back(anchor->keys()[pick(rng)]);
        const double re = gauss(rng);
        amps.emplace_back(re, gauss(rng));
      }
      psi = SparseState(reg, std::move(keys), std::move(amps));
    }
    worst = std::max(worst, distance(apply(a, psi), apply(b, psi)));
  }
  return worst;
}

CrossCheck cross_check(const ClusterGraph& g, const GroupSpec& spec, const SparseState& state, std::mt19937_64& rng,
                       double tol, std::size_t samples) {
  const auto& G = spec.G();
  const auto sched = schedule(g);
  const auto propagated = propagate(g, sched, initial_stabilizers(g, G), G);
  const auto closed = closed_form_stabilizers(g, G);
  CrossCheck c;
  c.stabilizers = propagated.size();
  for (std::size_t k = 0; k < propagated.size(); ++k) {
    const double d = action_distance(propagated[k].op, closed[k].op, state.reg(), rng, samples, &state);
    c.max_deviation = std::max(c.max_deviation, d);
    if (!(d <= tol) && c.first_failure.empty()) c.first_failure = "equivalence " + propagated[k].label;
  }
  const auto vp = verify(propagated, state, tol);
  const auto vc = verify(closed, state, tol);
  c.max_propagated_residual = vp.max_residual;
  c.max_closed_residual = vc.max_residual;
  if (c.first_failure.empty() && !vp.pass) c.first_failure = "propagated " + vp.first_failure;
  if (c.first_failure.empty() && !vc.pass) c.first_failure = "closed-form " + vc.first_failure;
  c.pass = c.first_failure.empty();
  return c;
}

}  // namespace gcs
