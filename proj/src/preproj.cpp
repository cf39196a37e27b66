#include "qloop/preproj.hpp"

#include <algorithm>

#include "qloop/error.hpp"

namespace qloop {

namespace {

bool parity_ok(const CartanData& c, const YKey& v) { return ((v.shift - c.xi(v.node)) % 2 + 2) % 2 == 0; }

}  // namespace

ZQWindow::ZQWindow(const CartanData& c, int r_lo, int r_hi) : c_(c), lo_(r_lo), hi_(r_hi) {
  if (r_lo >= r_hi) throw InvalidInput("ZQ window needs r_lo < r_hi");
  for (int r = lo_; r <= hi_; ++r)
    for (int i = 1; i <= c_.rank(); ++i)
      if (parity_ok(c_, {i, r})) {
        index_[{i, r}] = static_cast<int>(vertices_.size());
        vertices_.push_back({i, r});
      }
  std::vector<Arrow> arrows;
  for (std::size_t u = 0; u < vertices_.size(); ++u)
    for (int j : c_.neighbors(vertices_[u].node)) {
      const int w = index({j, vertices_[u].shift - 1});
      if (w < 0) continue;
      arrow_index_[{static_cast<int>(u), w}] = static_cast<int>(arrows.size());
      arrows.push_back({static_cast<int>(u), w});
    }
  quiver_ = Quiver(static_cast<int>(vertices_.size()), std::move(arrows));
}

int ZQWindow::index(const YKey& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int ZQWindow::arrow_index(int u, int w) const {
  auto it = arrow_index_.find({u, w});
  return it == arrow_index_.end() ? -1 : it->second;
}

std::vector<YKey> ZQWindow::relation_vertices() const {
  std::vector<YKey> out;
  for (const YKey& v : vertices_)
    if (v.shift - 2 >= lo_) out.push_back(v);
  return out;
}

bool PreprojModule::satisfies_relations() const {
  const auto& arrows = rep.quiver.arrows();
  for (const YKey& v : window.relation_vertices()) {
    const int u = window.index(v), t = window.index({v.node, v.shift - 2});
    QMatrix sum(rep.dims[t], rep.dims[u]);
    for (int j : window.cartan().neighbors(v.node)) {
      const int mid = window.index({j, v.shift - 1});
      const int a = window.arrow_index(u, mid), b = window.arrow_index(mid, t);
      if (arrows[a].source != u || arrows[b].target != t) return false;
      sum = sum + rep.maps[b] * rep.maps[a];
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

std::map<YKey, int> PreprojModule::dimensions() const {
  std::map<YKey, int> out;
  for (std::size_t u = 0; u < rep.dims.size(); ++u)
    if (rep.dims[u] != 0) out[window.vertices()[u]] = rep.dims[u];
  return out;
}

PreprojModule injective_module(const ZQWindow& w, int node, int r) {
  const CartanData& c = w.cartan();
  c.check_node(node);
  const int target = w.index({node, r});
  if (target < 0) throw InvalidInput("(" + std::to_string(node) + "," + std::to_string(r) + ") is not a vertex of the window");
  const auto& verts = w.vertices();
  const int nv = static_cast<int>(verts.size());
  const auto& arrows = w.quiver().arrows();

  // Built upwards from the socle. The space at u is the subspace of the sum
  // of the spaces at its successors w cut out by sum_a Delta(w -> u-2) phi_a = 0;
  // the map along u -> w is the projection onto that summand.
  QuiverRep rep{w.quiver(), DimVec(nv, 0), std::vector<QMatrix>(arrows.size())};
  std::vector<int> order(nv);
  for (int u = 0; u < nv; ++u) order[u] = u;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return verts[a].shift < verts[b].shift; });
  for (int u : order) {
    const YKey v = verts[u];
    std::vector<int> out;  // arrows leaving u
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].source == u) out.push_back(static_cast<int>(a));
    if (v.shift <= r) {
      rep.dims[u] = u == target ? 1 : 0;
      for (int a : out) rep.maps[a] = QMatrix(rep.dims[arrows[a].target], rep.dims[u]);
      continue;
    }
    std::vector<int> offset;
    int ambient = 0;
    for (int a : out) {
      offset.push_back(ambient);
      ambient += rep.dims[arrows[a].target];
    }
    const int below = w.index({v.node, v.shift - 2});
    const int drel = below < 0 ? 0 : rep.dims[below];
    QMatrix constraint(drel, ambient);
    for (std::size_t k = 0; k < out.size() && drel > 0; ++k) {
      const int mid = arrows[out[k]].target;
      const int b = w.arrow_index(mid, below);
      if (b < 0) continue;
      const QMatrix& mb = rep.maps[b];
      for (int i = 0; i < mb.rows(); ++i)
        for (int j = 0; j < mb.cols(); ++j) constraint.at(i, offset[k] + j) = mb.at(i, j);
    }
    const Nullspace ns = nullspace(constraint);
    rep.dims[u] = static_cast<int>(ns.basis.size());
    std::vector<std::vector<Rational>> basis;
    for (const auto& vec : ns.basis) basis.push_back(primitive_integer_vector(vec));
    for (std::size_t k = 0; k < out.size(); ++k) {
      const int dw = rep.dims[arrows[out[k]].target];
      QMatrix m(dw, rep.dims[u]);
      for (int col = 0; col < rep.dims[u]; ++col)
        for (int i = 0; i < dw; ++i) m.at(i, col) = basis[col][offset[k] + i];
      rep.maps[out[k]] = std::move(m);
    }
  }
  for (int u = 0; u < nv; ++u)
    if (rep.dims[u] != 0 && verts[u].shift >= w.r_hi() - 1)
      throw WindowTooSmall("support of Delta_{" + std::to_string(node) + "," + std::to_string(r) +
                           "} reaches the top of the window [" + std::to_string(w.r_lo()) + "," +
                           std::to_string(w.r_hi()) + "]; enlarge it");
  PreprojModule mod{w, std::move(rep)};
  if (!mod.satisfies_relations()) throw ConsistencyError("injective module violates the preprojective relations");
  return mod;
}

PreprojModule injective_module(const CartanData& c, int node, int r) {
  c.check_node(node);
  return injective_module(ZQWindow(c, r, r + c.coxeter_number()), node, r);
}

bool is_l_dominant(const CartanData& c, const GradedW& w, const GradedV& v) {
  return is_dominant(y_w_a_v(c, w, v));
}

YMonomial y_w_a_v(const CartanData& c, const GradedW& w, const GradedV& v) {
  std::vector<YMonomial::Entry> es;
  for (const auto& [key, m] : w) {
    c.check_node(key.node);
    if (!parity_ok(c, key)) throw InvalidInput("W must be graded by (i, r) with r = xi_i mod 2");
    es.push_back({key, m});
  }
  YMonomial out = YMonomial::from_entries(std::move(es));
  for (const auto& [key, m] : v) {
    c.check_node(key.node);
    if (parity_ok(c, key)) throw InvalidInput("V must be graded by (i, r) with r = xi_i + 1 mod 2");
    out *= a_monomial_unchecked(c, key.node, key.shift).pow(-m);
  }
  return out;
}

namespace {

// Restriction of a representation to the vertices where it is nonzero.
std::pair<QuiverRep, std::vector<int>> restrict_to_support(const QuiverRep& m) {
  std::vector<int> keep, pos(m.dims.size(), -1);
  for (std::size_t u = 0; u < m.dims.size(); ++u)
    if (m.dims[u] != 0) {
      pos[u] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(u));
    }
  std::vector<Arrow> arrows;
  std::vector<QMatrix> maps;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const Arrow& ar = m.quiver.arrows()[a];
    if (pos[ar.source] < 0 || pos[ar.target] < 0) continue;
    arrows.push_back({pos[ar.source], pos[ar.target]});
    maps.push_back(m.maps[a]);
  }
  QuiverRep r{Quiver(static_cast<int>(keep.size()), std::move(arrows)), {}, std::move(maps)};
  for (int u : keep) r.dims.push_back(m.dims[u]);
  return {std::move(r), keep};
}

YPolynomial qchar_from_module(const CartanData& c, const ZQWindow& w, const QuiverRep& delta, const YMonomial& top) {
  auto [sub, keep] = restrict_to_support(delta);
  const GrassmannianCensus census = grassmannian_census(sub);
  YPolynomial out;
  for (std::size_t k = 0; k < census.nus.size(); ++k) {
    if (census.euler[k] == 0) continue;
    YMonomial m = top;
    for (std::size_t t = 0; t < keep.size(); ++t) {
      const int d = census.nus[k][t];
      if (d == 0) continue;
      const YKey& v = w.vertices()[keep[t]];
      m *= a_monomial(c, v.node, v.shift + 1).pow(-d);
    }
    out.add_term(m, census.euler[k]);
  }
  return out;
}

}  // namespace

YPolynomial fundamental_qchar(const CartanData& c, int node, int r) {
  c.check_node(node);
  if (!parity_ok(c, {node, r}))
    throw InvalidInput("fundamental module needs r = xi_i mod 2 (got node " + std::to_string(node) + ", r = " +
                       std::to_string(r) + ")");
  const PreprojModule delta = injective_module(c, node, r);
  return qchar_from_module(c, delta.window, delta.rep, y_var(node, r));
}

YPolynomial standard_qchar(const CartanData& c, const GradedW& w) {
  if (w.empty()) return YPolynomial(1L);
  int lo = w.begin()->first.shift, hi = lo;
  for (const auto& [key, m] : w) {
    c.check_node(key.node);
    if (!parity_ok(c, key)) throw InvalidInput("W must be graded by (i, r) with r = xi_i mod 2");
    if (m < 0) throw InvalidInput("W multiplicities must be nonnegative");
    lo = std::min(lo, key.shift);
    hi = std::max(hi, key.shift);
  }
  const ZQWindow win(c, lo, hi + c.coxeter_number());
  QuiverRep sum = zero_rep(win.quiver());
  for (const auto& [key, m] : w) {
    const PreprojModule delta = injective_module(win, key.node, key.shift);
    for (int k = 0; k < m; ++k) sum = direct_sum(sum, delta.rep);
  }
  return qchar_from_module(c, win, sum, y_w_a_v(c, w, {}));
}

}  // namespace qloop
