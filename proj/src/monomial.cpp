#include "gcs/monomial.hpp"

#include <algorithm>
#include <cmath>

namespace gcs {

Word Word::inverse() const {
  Word w;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    WordFactor f = *it;
    f.inverse = !f.inverse;
    w.factors.push_back(f);
  }
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w.factors.insert(w.factors.end(), rhs.factors.begin(), rhs.factors.end());
  return w;
}

bool Word::uses(int var) const {
  return std::any_of(factors.begin(), factors.end(), [&](const WordFactor& f) { return f.var == var; });
}

std::size_t Word::occurrences(int var) const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [&](const WordFactor& f) { return f.var == var; }));
}

void Word::simplify(const FiniteGroup& G) {
  std::vector<WordFactor> out;
  for (WordFactor f : factors) {
    if (f.var < 0) {
      if (f.inverse) f = {-1, G.inv(f.constant), false};
      if (f.constant == 0) continue;
      if (!out.empty() && out.back().var < 0) {
        out.back().constant = G.mul(out.back().constant, f.constant);
        if (out.back().constant == 0) out.pop_back();
        continue;
      }
      out.push_back(f);
      continue;
    }
    if (!out.empty() && out.back().var == f.var && out.back().inverse != f.inverse) {
      out.pop_back();
      continue;
    }
    out.push_back(f);
  }
  factors = std::move(out);
}

void Word::shift_vars(int offset) {
  for (auto& f : factors)
    if (f.var >= 0) f.var += offset;
}

int ConditionalMonomial::add_var(const std::string& hint) {
  std::string name = hint;
  for (int k = 2; std::find(vars.begin(), vars.end(), name) != vars.end(); ++k) name = hint + "#" + std::to_string(k);
  vars.push_back(name);
  return static_cast<int>(vars.size()) - 1;
}

std::vector<Factor>& ConditionalMonomial::site(const std::string& id) {
  for (auto& t : terms)
    if (t.site == id) return t.factors;
  terms.push_back({id, {}});
  return terms.back().factors;
}

const SiteTerm* ConditionalMonomial::find(std::string_view id) const {
  for (const auto& t : terms)
    if (t.site == id) return &t;
  return nullptr;
}

void ConditionalMonomial::erase_site(std::string_view id) {
  terms.erase(std::remove_if(terms.begin(), terms.end(), [&](const SiteTerm& t) { return t.site == id; }), terms.end());
}

std::vector<std::string> ConditionalMonomial::support() const {
  std::vector<std::string> out;
  for (const auto& t : terms)
    if (!t.factors.empty()) out.push_back(t.site);
  return out;
}

void ConditionalMonomial::simplify(const FiniteGroup& G) {
  for (auto& t : terms) {
    std::vector<Factor> kept;
    for (auto& f : t.factors) {
      if (f.kind != FactorKind::ZRep) f.word.simplify(G);
      // X by the identity is the identity.
      if ((f.kind == FactorKind::XLeft || f.kind == FactorKind::XRight) && f.word.factors.empty()) continue;
      kept.push_back(std::move(f));
    }
    t.factors = std::move(kept);
  }
  terms.erase(std::remove_if(terms.begin(), terms.end(), [](const SiteTerm& t) { return t.factors.empty(); }),
              terms.end());
  for (auto& c : constraints) c.word.simplify(G);
}

namespace {

std::string word_string(const Word& w, const std::vector<std::string>& vars, const FiniteGroup& G) {
  if (w.factors.empty()) return G.label(0);
  std::string s;
  for (const auto& f : w.factors) {
    if (!s.empty()) s += " ";
    s += f.var < 0 ? G.label(f.constant) : vars[static_cast<std::size_t>(f.var)];
    if (f.inverse) s += "^-1";
  }
  return s;
}

}  // namespace

std::string ConditionalMonomial::to_string(const FiniteGroup& G) const {
  std::string s;
  if (scalar != cplx(1.0)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.6g%+.6gi) ", scalar.real(), scalar.imag());
    s += buf;
  }
  if (!vars.empty()) {
    s += "sum[";
    for (std::size_t k = 0; k < vars.size(); ++k) s += (k ? "," : "") + vars[k];
    s += "] ";
  }
  bool first = true;
  for (const auto& t : terms)
    for (const auto& f : t.factors) {
      if (!first) s += " ";
      first = false;
      switch (f.kind) {
        case FactorKind::T: s += "T[" + t.site + ":" + word_string(f.word, vars, G) + "]"; break;
        case FactorKind::XLeft: s += "Xl[" + t.site + ":" + word_string(f.word, vars, G) + "]"; break;
        case FactorKind::XRight: s += "Xr[" + t.site + ":" + word_string(f.word, vars, G) + "]"; break;
        case FactorKind::ZRep:
          s += "Z[" + t.site + ":" + (f.rep ? f.rep->label() : "?") + "(" + std::to_string(f.i) + "," +
               std::to_string(f.j) + ")]";
          break;
      }
    }
  for (const auto& c : constraints) {
    if (!first) s += " ";
    first = false;
    s += "{" + word_string(c.word, vars, G) + " = " + G.label(c.value) + "}";
  }
  if (first) s += "I";
  return s;
}

ConditionalMonomial product(const ConditionalMonomial& a, const ConditionalMonomial& b) {
  ConditionalMonomial out = a;
  const int offset = static_cast<int>(a.vars.size());
  for (const auto& v : b.vars) out.add_var(v);
  for (const auto& t : b.terms) {
    auto& dst = out.site(t.site);
    for (Factor f : t.factors) {
      f.word.shift_vars(offset);
      dst.push_back(std::move(f));
    }
  }
  for (Constraint c : b.constraints) {
    c.word.shift_vars(offset);
    out.constraints.push_back(std::move(c));
  }
  out.scalar = a.scalar * b.scalar;
  return out;
}

namespace {

// Backtracking evaluation of one monomial on one basis key.
class Evaluator {
 public:
  Evaluator(const ConditionalMonomial& op, const Register& reg) : op_(op), reg_(reg), G_(reg.G()) {
    for (const auto& t : op.terms) pos_.push_back(reg.index_of(t.site));
    for (const auto& t : op.terms)
      for (const auto& f : t.factors)
        if (f.kind == FactorKind::ZRep && !f.rep) throw InputError("Z factor without a representation");
  }

  void run(Key key, cplx amp, std::vector<Key>& out_keys, std::vector<cplx>& out_amps) {
    Frame f;
    f.asg.assign(op_.vars.size(), -1);
    f.cur.resize(op_.terms.size());
    f.next.resize(op_.terms.size());
    for (std::size_t t = 0; t < op_.terms.size(); ++t) {
      f.cur[t] = reg_.get(key, pos_[t]);
      f.next[t] = static_cast<int>(op_.terms[t].factors.size()) - 1;
    }
    f.cons_done.assign(op_.constraints.size(), false);
    f.amp = amp * op_.scalar;
    key_ = key;
    out_keys_ = &out_keys;
    out_amps_ = &out_amps;
    solve(std::move(f));
  }

 private:
  struct Frame {
    std::vector<int> asg;
    std::vector<Element> cur;
    std::vector<int> next;
    std::vector<bool> cons_done;
    cplx amp;
  };

  bool assigned(const Word& w, const Frame& f) const {
    for (const auto& x : w.factors)
      if (x.var >= 0 && f.asg[static_cast<std::size_t>(x.var)] < 0) return false;
    return true;
  }

  Element eval(const Word& w, const Frame& f) const {
    Element r = 0;
    for (const auto& x : w.factors) {
      Element e = x.var < 0 ? x.constant : static_cast<Element>(f.asg[static_cast<std::size_t>(x.var)]);
      if (x.inverse) e = G_.inv(e);
      r = G_.mul(r, e);
    }
    return r;
  }

  // Result: 0 blocked, 1 satisfied (maybe after binding a variable), -1 violated.
  int resolve(const Word& w, Element target, Frame& f) const {
    int unknown = -1;
    std::size_t unknown_count = 0;
    for (const auto& x : w.factors)
      if (x.var >= 0 && f.asg[static_cast<std::size_t>(x.var)] < 0 && x.var != unknown) {
        if (unknown >= 0) return 0;  // two distinct unknowns
        unknown = x.var;
        ++unknown_count;
      }
    if (unknown_count == 0) return eval(w, f) == target ? 1 : -1;
    if (unknown_count > 1 || w.occurrences(unknown) != 1) return 0;
    // w = A x^{±1} B  =>  x^{±1} = A⁻¹ target B⁻¹
    Element A = 0, B = 0;
    bool after = false, inv = false;
    for (const auto& x : w.factors) {
      if (x.var == unknown) {
        after = true;
        inv = x.inverse;
        continue;
      }
      Element e = x.var < 0 ? x.constant : static_cast<Element>(f.asg[static_cast<std::size_t>(x.var)]);
      if (x.inverse) e = G_.inv(e);
      if (after)
        B = G_.mul(B, e);
      else
        A = G_.mul(A, e);
    }
    Element v = G_.mul(G_.mul(G_.inv(A), target), G_.inv(B));
    if (inv) v = G_.inv(v);
    f.asg[static_cast<std::size_t>(unknown)] = v;
    return 1;
  }

  int first_unknown(const Word& w, const Frame& f) const {
    for (const auto& x : w.factors)
      if (x.var >= 0 && f.asg[static_cast<std::size_t>(x.var)] < 0) return x.var;
    return -1;
  }

  void solve(Frame f) {
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t t = 0; t < op_.terms.size(); ++t) {
        const auto& fs = op_.terms[t].factors;
        while (f.next[t] >= 0) {
          const Factor& fac = fs[static_cast<std::size_t>(f.next[t])];
          if (fac.kind == FactorKind::ZRep) {
            f.amp *= fac.rep->entry(f.cur[t], fac.i, fac.j);
            if (f.amp == cplx(0)) return;
          } else if (fac.kind == FactorKind::T) {
            const int r = resolve(fac.word, f.cur[t], f);
            if (r < 0) return;
            if (r == 0) break;
          } else {
            if (!assigned(fac.word, f)) break;
            const Element w = eval(fac.word, f);
            f.cur[t] = fac.kind == FactorKind::XLeft ? G_.mul(w, f.cur[t]) : G_.mul(f.cur[t], G_.inv(w));
          }
          --f.next[t];
          progress = true;
        }
      }
      for (std::size_t c = 0; c < op_.constraints.size(); ++c) {
        if (f.cons_done[c]) continue;
        const int r = resolve(op_.constraints[c].word, op_.constraints[c].value, f);
        if (r < 0) return;
        if (r == 1) {
          f.cons_done[c] = true;
          progress = true;
        }
      }
    }

    int branch = -1;
    for (std::size_t t = 0; t < op_.terms.size() && branch < 0; ++t)
      if (f.next[t] >= 0) branch = first_unknown(op_.terms[t].factors[static_cast<std::size_t>(f.next[t])].word, f);
    for (std::size_t c = 0; c < op_.constraints.size() && branch < 0; ++c)
      if (!f.cons_done[c]) branch = first_unknown(op_.constraints[c].word, f);

    if (branch < 0) {
      std::size_t free = 0;
      for (int a : f.asg)
        if (a < 0) ++free;
      Key k = key_;
      for (std::size_t t = 0; t < op_.terms.size(); ++t) k = reg_.set(k, pos_[t], f.cur[t]);
      out_keys_->push_back(k);
      out_amps_->push_back(f.amp * std::pow(double(G_.order()), double(free)));
      return;
    }
    for (std::size_t g = 0; g < G_.order(); ++g) {
      Frame c = f;
      c.asg[static_cast<std::size_t>(branch)] = static_cast<int>(g);
      solve(std::move(c));
    }
  }

  const ConditionalMonomial& op_;
  const Register& reg_;
  const FiniteGroup& G_;
  std::vector<std::size_t> pos_;
  Key key_ = 0;
  std::vector<Key>* out_keys_ = nullptr;
  std::vector<cplx>* out_amps_ = nullptr;
};

}  // namespace

SparseState apply(const ConditionalMonomial& op, const SparseState& s) {
  Evaluator ev(op, s.reg());
  std::vector<Key> keys;
  std::vector<cplx> amps;
  keys.reserve(s.size());
  amps.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) ev.run(s.keys()[x], s.amps()[x], keys, amps);
  return {s.reg(), std::move(keys), std::move(amps)};
}

ConditionalMonomial restrict_to(const ConditionalMonomial& op, std::string_view site, Element m) {
  ConditionalMonomial out = op;
  const SiteTerm* term = op.find(site);
  if (!term) return out;
  Word cur = Word::constant(m);
  for (auto it = term->factors.rbegin(); it != term->factors.rend(); ++it) {
    switch (it->kind) {
      case FactorKind::T:
        out.constraints.push_back({it->word * cur.inverse(), 0});
        break;
      case FactorKind::XLeft:
        cur = it->word * cur;
        break;
      case FactorKind::XRight:
        cur = cur * it->word.inverse();
        break;
      case FactorKind::ZRep:
        throw InputError("restriction of a Z factor is not supported");
    }
  }
  out.constraints.push_back({cur * Word::constant(m).inverse(), 0});
  out.erase_site(site);
  return out;
}

ConditionalMonomial absorb_uniform(const ConditionalMonomial& op, std::string_view site) {
  const SiteTerm* term = op.find(site);
  if (term)
    for (const auto& f : term->factors)
      if (f.kind == FactorKind::T || f.kind == FactorKind::ZRep)
        throw InputError("cannot absorb site '" + std::string(site) + "': it carries a T or Z factor");
  ConditionalMonomial out = op;
  out.erase_site(site);
  return out;
}

}  // namespace gcs
