#include "gcs/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "gcs/kernels.hpp"

namespace gcs {

Register::Register(GroupSpec spec, std::vector<std::string> sites) : spec_(std::move(spec)), sites_(std::move(sites)) {
  if (!spec_.group) throw InputError("register needs a group");
  const std::size_t n = spec_.group->order();
  bits_ = 1;
  while ((std::size_t(1) << bits_) < n) ++bits_;
  mask_ = (std::uint64_t(1) << bits_) - 1;
  if (sites_.size() * bits_ > 128)
    throw BudgetError("register of " + std::to_string(sites_.size()) + " sites exceeds the 128-bit key");
  std::unordered_set<std::string> seen;
  for (const auto& s : sites_)
    if (!seen.insert(s).second) throw InputError("duplicate site id '" + s + "'");
}

std::size_t Register::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < sites_.size(); ++i)
    if (sites_[i] == id) return i;
  throw InputError("unknown site '" + std::string(id) + "'");
}

bool Register::contains(std::string_view id) const {
  return std::find(sites_.begin(), sites_.end(), id) != sites_.end();
}

Key Register::make_key(const std::vector<Element>& values) const {
  if (values.size() != sites_.size())
    throw InputError("basis key has " + std::to_string(values.size()) + " entries for " +
                     std::to_string(sites_.size()) + " sites");
  Key k = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= spec_.group->order()) throw InputError("basis key entry out of range");
    k = set(k, i, values[i]);
  }
  return k;
}

std::vector<Element> Register::unpack(Key k) const {
  std::vector<Element> v(sites_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = get(k, i);
  return v;
}

Key Register::drop(Key k, std::size_t i) const {
  const unsigned s = shift(i);
  const Key low = s == 0 ? Key(0) : (k & ((Key(1) << s) - 1));
  const unsigned hs = s + bits_;
  const Key high = hs >= 128 ? Key(0) : (k >> hs);
  return (high << s) | low;
}

Register Register::without(std::size_t i) const {
  auto s = sites_;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
  return {spec_, std::move(s)};
}

Register Register::concat(const Register& other) const {
  auto s = sites_;
  s.insert(s.end(), other.sites_.begin(), other.sites_.end());
  return {spec_, std::move(s)};
}

bool Register::same_layout(const Register& other) const {
  if (sites_ != other.sites_) return false;
  return spec_.group == other.spec_.group || (G().name() == other.G().name() && G().table() == other.G().table());
}

std::uint64_t Register::dimension() const {
  std::uint64_t d = 1;
  const std::uint64_t n = spec_.group->order();
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (d > UINT64_MAX / n) return UINT64_MAX;
    d *= n;
  }
  return d;
}

SparseState::SparseState(Register reg, std::vector<Key> keys, std::vector<cplx> amps) : reg_(std::move(reg)) {
  if (keys.size() != amps.size()) throw std::invalid_argument("keys/amplitudes length mismatch");
  std::vector<std::size_t> perm(keys.size());
  std::iota(perm.begin(), perm.end(), 0);
  const bool sorted = std::is_sorted(keys.begin(), keys.end());
  if (!sorted) std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  keys_.reserve(keys.size());
  amps_.reserve(keys.size());
  for (std::size_t p = 0; p < perm.size();) {
    const Key k = keys[perm[p]];
    cplx a = 0;
    for (; p < perm.size() && keys[perm[p]] == k; ++p) a += amps[perm[p]];
    if (std::abs(a) >= kPrune) {
      keys_.push_back(k);
      amps_.push_back(a);
    }
  }
}

cplx SparseState::amplitude(Key k) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return 0.0;
  return amps_[static_cast<std::size_t>(it - keys_.begin())];
}

double SparseState::norm2() const { return kernels::norm2(amps_.data(), amps_.size()); }
double SparseState::norm() const { return std::sqrt(norm2()); }

SparseState SparseState::scaled(cplx s) const {
  SparseState out(reg_);
  out.keys_ = keys_;
  out.amps_ = amps_;
  for (auto& a : out.amps_) a *= s;
  if (std::abs(s) < 1.0) return SparseState(reg_, out.keys_, out.amps_);
  return out;
}

SparseState SparseState::normalized() const {
  const double n = norm();
  if (!(n > 0)) throw std::domain_error("cannot normalise the zero state");
  return scaled(1.0 / n);
}

SparseState group_basis_state(const Register& reg, const std::vector<Element>& values) {
  return {reg, {reg.make_key(values)}, {cplx(1.0)}};
}

SparseState trivial_irrep_state(const Register& reg, const std::vector<std::string>& sites) {
  const std::size_t n = reg.G().order();
  std::vector<Key> keys{0};
  for (const auto& s : sites) {
    const std::size_t i = reg.index_of(s);
    std::vector<Key> next;
    next.reserve(keys.size() * n);
    for (Key k : keys)
      for (std::size_t g = 0; g < n; ++g) next.push_back(reg.set(k, i, Element(g)));
    keys = std::move(next);
  }
  const cplx a = std::pow(double(n), -0.5 * double(sites.size()));
  std::vector<cplx> amps(keys.size(), a);
  return {reg, std::move(keys), std::move(amps)};
}

SparseState rep_basis_state(const Register& reg, std::string_view site, std::size_t irrep, std::size_t i,
                            std::size_t j) {
  const auto& reps = reg.spec().reps();
  if (irrep >= reps.size()) throw InputError("irrep index out of range");
  const auto& r = reps[irrep];
  if (i >= r.dim() || j >= r.dim()) throw InputError("matrix index out of range for irrep '" + r.label() + "'");
  const std::size_t pos = reg.index_of(site);
  const std::size_t n = reg.G().order();
  const double c = std::sqrt(double(r.dim()) / double(n));
  std::vector<Key> keys;
  std::vector<cplx> amps;
  for (std::size_t g = 0; g < n; ++g) {
    keys.push_back(reg.set(0, pos, Element(g)));
    amps.push_back(c * r.entry(Element(g), i, j));
  }
  return {reg, std::move(keys), std::move(amps)};
}

SparseState tensor(const SparseState& a, const SparseState& b) {
  Register reg = a.reg().concat(b.reg());
  const unsigned shift = static_cast<unsigned>(b.reg().size() * reg.bits());
  std::vector<Key> keys;
  std::vector<cplx> amps;
  keys.reserve(a.size() * b.size());
  amps.reserve(a.size() * b.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      keys.push_back((shift >= 128 ? Key(0) : (a.keys()[x] << shift)) | b.keys()[y]);
      amps.push_back(a.amps()[x] * b.amps()[y]);
    }
  return {reg, std::move(keys), std::move(amps)};
}

SparseState permute_site(const SparseState& s, std::size_t site, const std::function<Element(Element)>& f) {
  const auto& reg = s.reg();
  std::vector<Key> keys(s.keys());
  for (auto& k : keys) k = reg.set(k, site, f(reg.get(k, site)));
  return {reg, std::move(keys), s.amps()};
}

SparseState apply_local(const SparseState& s, const LocalOp& op) {
  const auto& reg = s.reg();
  const auto& G = reg.G();
  const std::size_t pos = reg.index_of(op.site);
  using K = LocalOp::Kind;
  if ((op.kind != K::ZRep) && op.g >= G.order()) throw InputError("group element out of range");
  switch (op.kind) {
    case K::XLeft:
      return permute_site(s, pos, [&](Element h) { return G.mul(op.g, h); });
    case K::XRight: {
      const Element gi = G.inv(op.g);
      return permute_site(s, pos, [&](Element h) { return G.mul(h, gi); });
    }
    case K::T: {
      std::vector<Key> keys;
      std::vector<cplx> amps;
      for (std::size_t x = 0; x < s.size(); ++x)
        if (reg.get(s.keys()[x], pos) == op.g) {
          keys.push_back(s.keys()[x]);
          amps.push_back(s.amps()[x]);
        }
      return {reg, std::move(keys), std::move(amps)};
    }
    case K::ZRep: {
      const auto& reps = reg.spec().reps();
      if (op.irrep >= reps.size()) throw InputError("irrep index out of range");
      const auto& r = reps[op.irrep];
      if (op.i >= r.dim() || op.j >= r.dim()) throw InputError("matrix index out of range");
      std::vector<cplx> amps(s.amps());
      for (std::size_t x = 0; x < s.size(); ++x) amps[x] *= r.entry(reg.get(s.keys()[x], pos), op.i, op.j);
      return {reg, s.keys(), std::move(amps)};
    }
  }
  return s;
}

SparseState apply_cmult(const SparseState& s, std::string_view control, std::string_view target, Sense sense) {
  const auto& reg = s.reg();
  const std::size_t c = reg.index_of(control), t = reg.index_of(target);
  if (c == t) throw InputError("CMULT control and target must differ");
  const auto& G = reg.G();
  std::vector<Key> keys(s.keys());
  for (auto& k : keys) {
    const Element g = reg.get(k, c), h = reg.get(k, t);
    k = reg.set(k, t, sense == Sense::Left ? G.mul(g, h) : G.mul(h, G.inv(g)));
  }
  return {reg, std::move(keys), s.amps()};
}

SparseState apply_site_matrix(const SparseState& s, std::string_view site, const Matrix& U) {
  const auto& reg = s.reg();
  const std::size_t n = reg.G().order();
  if (static_cast<std::size_t>(U.rows()) != n || static_cast<std::size_t>(U.cols()) != n)
    throw InputError("site matrix has wrong shape");
  const std::size_t pos = reg.index_of(site);
  std::vector<Key> keys;
  std::vector<cplx> amps;
  keys.reserve(s.size() * n);
  amps.reserve(s.size() * n);
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Element in = reg.get(s.keys()[x], pos);
    for (std::size_t out = 0; out < n; ++out) {
      const cplx u = U(Eigen::Index(out), in);
      if (u == cplx(0)) continue;
      keys.push_back(reg.set(s.keys()[x], pos, Element(out)));
      amps.push_back(u * s.amps()[x]);
    }
  }
  return {reg, std::move(keys), std::move(amps)};
}

SparseState select_site(const SparseState& s, std::string_view site, Element value) {
  const auto& reg = s.reg();
  const std::size_t pos = reg.index_of(site);
  std::vector<Key> keys;
  std::vector<cplx> amps;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (reg.get(s.keys()[x], pos) == value) {
      keys.push_back(reg.drop(s.keys()[x], pos));
      amps.push_back(s.amps()[x]);
    }
  return {reg.without(pos), std::move(keys), std::move(amps)};
}

SparseState project_site(const SparseState& s, std::string_view site, const std::vector<cplx>& phi) {
  const auto& reg = s.reg();
  if (phi.size() != reg.G().order()) throw InputError("projection vector has wrong length");
  const std::size_t pos = reg.index_of(site);
  std::vector<Key> keys;
  std::vector<cplx> amps;
  keys.reserve(s.size());
  amps.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    const cplx w = std::conj(phi[reg.get(s.keys()[x], pos)]);
    if (w == cplx(0)) continue;
    keys.push_back(reg.drop(s.keys()[x], pos));
    amps.push_back(w * s.amps()[x]);
  }
  return {reg.without(pos), std::move(keys), std::move(amps)};
}

SparseState reorder(const SparseState& s, const std::vector<std::string>& sites) {
  const auto& reg = s.reg();
  if (sites.size() != reg.size()) throw InputError("reorder: site list size mismatch");
  Register out(reg.spec(), sites);
  std::vector<std::size_t> src(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) src[i] = reg.index_of(sites[i]);
  std::vector<Key> keys;
  keys.reserve(s.size());
  for (Key k : s.keys()) {
    Key n = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) n = out.set(n, i, reg.get(k, src[i]));
    keys.push_back(n);
  }
  return {out, std::move(keys), s.amps()};
}

namespace {

void require_same(const SparseState& a, const SparseState& b) {
  if (!a.reg().same_layout(b.reg())) throw InputError("states live on different registers");
}

// Aligned copies of a and b over the union of their keys.
void align(const SparseState& a, const SparseState& b, std::vector<cplx>& va, std::vector<cplx>& vb) {
  const auto& ka = a.keys();
  const auto& kb = b.keys();
  va.clear();
  vb.clear();
  std::size_t x = 0, y = 0;
  while (x < ka.size() || y < kb.size()) {
    if (y == kb.size() || (x < ka.size() && ka[x] < kb[y])) {
      va.push_back(a.amps()[x++]);
      vb.push_back(0);
    } else if (x == ka.size() || kb[y] < ka[x]) {
      va.push_back(0);
      vb.push_back(b.amps()[y++]);
    } else {
      va.push_back(a.amps()[x++]);
      vb.push_back(b.amps()[y++]);
    }
  }
}

}  // namespace

SparseState add(const SparseState& a, const SparseState& b, cplx ca, cplx cb) {
  require_same(a, b);
  std::vector<Key> keys(a.keys());
  keys.insert(keys.end(), b.keys().begin(), b.keys().end());
  std::vector<cplx> amps;
  amps.reserve(keys.size());
  for (auto v : a.amps()) amps.push_back(ca * v);
  for (auto v : b.amps()) amps.push_back(cb * v);
  return {a.reg(), std::move(keys), std::move(amps)};
}

cplx inner_product(const SparseState& a, const SparseState& b) {
  require_same(a, b);
  if (a.keys() == b.keys()) return kernels::dot(a.amps().data(), b.amps().data(), a.size());
  std::vector<cplx> va, vb;
  align(a, b, va, vb);
  return kernels::dot(va.data(), vb.data(), va.size());
}

double fidelity(const SparseState& a, const SparseState& b) {
  const double na = a.norm2(), nb = b.norm2();
  if (!(na > 0) || !(nb > 0)) throw std::domain_error("fidelity of a zero-norm state");
  const double f = std::norm(inner_product(a, b)) / (na * nb);
  return std::min(1.0, f);
}

double distance(const SparseState& a, const SparseState& b) {
  require_same(a, b);
  if (a.keys() == b.keys()) return std::sqrt(kernels::diff_norm2(a.amps().data(), b.amps().data(), a.size()));
  std::vector<cplx> va, vb;
  align(a, b, va, vb);
  return std::sqrt(kernels::diff_norm2(va.data(), vb.data(), va.size()));
}

SparseState random_state(const Register& reg, std::mt19937_64& rng, std::size_t entries) {
  std::uniform_int_distribution<int> elem(0, int(reg.G().order()) - 1);
  std::normal_distribution<double> gauss;
  std::vector<Key> keys;
  std::vector<cplx> amps;
  for (std::size_t e = 0; e < entries; ++e) {
    Key k = 0;
    for (std::size_t i = 0; i < reg.size(); ++i) k = reg.set(k, i, Element(elem(rng)));
    keys.push_back(k);
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps.emplace_back(re, im);
  }
  return SparseState(reg, std::move(keys), std::move(amps)).normalized();
}

SparseState random_dense_state(const Register& reg, std::mt19937_64& rng, std::uint64_t cap) {
  const std::uint64_t dim = reg.dimension();
  if (dim > cap) throw BudgetError("dense random state of dimension " + std::to_string(dim) + " exceeds cap");
  std::normal_distribution<double> gauss;
  std::vector<Key> keys;
  std::vector<cplx> amps;
  const std::size_t n = reg.G().order();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    Key k = 0;
    std::uint64_t r = idx;
    for (std::size_t i = reg.size(); i-- > 0;) {
      k = reg.set(k, i, Element(r % n));
      r /= n;
    }
    keys.push_back(k);
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps.emplace_back(re, im);
  }
  return SparseState(reg, std::move(keys), std::move(amps)).normalized();
}

Eigen::VectorXcd to_dense(const SparseState& s, std::uint64_t cap) {
  const auto& reg = s.reg();
  const std::uint64_t dim = reg.dimension();
  if (dim > cap) throw BudgetError("dense dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  const std::uint64_t n = reg.G().order();
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < reg.size(); ++i) idx = idx * n + reg.get(s.keys()[x], i);
    v(static_cast<Eigen::Index>(idx)) = s.amps()[x];
  }
  return v;
}

std::vector<RepLabel> rep_labels(const GroupSpec& spec) {
  std::vector<RepLabel> out;
  for (std::size_t r = 0; r < spec.reps().size(); ++r)
    for (std::size_t i = 0; i < spec.reps()[r].dim(); ++i)
      for (std::size_t j = 0; j < spec.reps()[r].dim(); ++j) out.push_back({r, i, j});
  return out;
}

Matrix basis_transform(const GroupSpec& spec) {
  const std::size_t n = spec.G().order();
  const auto labels = rep_labels(spec);
  if (labels.size() != n)
    throw InputError("representation basis needs a complete irrep set (sum of d^2 = " + std::to_string(labels.size()) +
                     ", |G| = " + std::to_string(n) + ")");
  Matrix W(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& L = labels[r];
    const auto& rep = spec.reps()[L.irrep];
    const double c = std::sqrt(double(rep.dim()) / double(n));
    for (std::size_t g = 0; g < n; ++g) W(r, g) = c * std::conj(rep.entry(Element(g), L.i, L.j));
  }
  return W;
}

SiteTable site_table(const SparseState& s, std::string_view site) {
  const auto& reg = s.reg();
  SiteTable t;
  t.position = reg.index_of(site);
  t.site = std::string(site);
  t.full = reg;
  t.rest = reg.without(t.position);
  const std::size_t n = reg.G().order();
  std::vector<std::pair<Key, std::size_t>> rows;
  rows.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) rows.emplace_back(reg.drop(s.keys()[x], t.position), x);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [k, _] : rows)
    if (t.rest_keys.empty() || t.rest_keys.back() != k) t.rest_keys.push_back(k);
  t.coeffs = Matrix::Zero(static_cast<Eigen::Index>(t.rest_keys.size()), static_cast<Eigen::Index>(n));
  std::size_t row = 0;
  for (const auto& [k, x] : rows) {
    while (t.rest_keys[row] != k) ++row;
    t.coeffs(static_cast<Eigen::Index>(row), reg.get(s.keys()[x], t.position)) = s.amps()[x];
  }
  t.basis = Basis::Group;
  return t;
}

SiteTable change_basis(const SiteTable& t, Basis target) {
  if (t.basis == target) return t;
  const Matrix W = basis_transform(t.full.spec());
  SiteTable out = t;
  // Rows hold coefficient vectors; c = W ψ becomes C = Ψ Wᵀ, and ψ = W† c becomes Ψ = C W*.
  out.coeffs = target == Basis::Representation ? Matrix(t.coeffs * W.transpose()) : Matrix(t.coeffs * W.conjugate());
  out.basis = target;
  return out;
}

SiteTable change_basis(const SparseState& s, std::string_view site, Basis target) {
  return change_basis(site_table(s, site), target);
}

SparseState from_site_table(const SiteTable& t) {
  const SiteTable g = change_basis(t, Basis::Group);
  const auto& reg = g.full;
  const unsigned bits = reg.bits();
  const std::size_t pos = g.position;
  const unsigned low_bits = static_cast<unsigned>((reg.size() - 1 - pos) * bits);
  std::vector<Key> keys;
  std::vector<cplx> amps;
  for (Eigen::Index row = 0; row < g.coeffs.rows(); ++row) {
    const Key rk = g.rest_keys[static_cast<std::size_t>(row)];
    const Key low = low_bits == 0 ? Key(0) : (rk & ((Key(1) << low_bits) - 1));
    const Key high = low_bits >= 128 ? Key(0) : (rk >> low_bits);
    for (Eigen::Index c = 0; c < g.coeffs.cols(); ++c) {
      const Key hi = low_bits + bits >= 128 ? Key(0) : (high << (low_bits + bits));
      keys.push_back(hi | (Key(c) << low_bits) | low);
      amps.push_back(g.coeffs(row, c));
    }
  }
  return {reg, std::move(keys), std::move(amps)};
}

}  // namespace gcs
