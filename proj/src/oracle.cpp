#include "detsum/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

namespace detsum {

namespace {

void ham_dfs(const Graph& g, std::vector<int>& order, std::uint64_t visited, HamiltonianCount& out, bool collect) {
  const int n = g.vertex_count();
  const int last = order.back();
  if (static_cast<int>(order.size()) == n) {
    if (g.has_edge(last, 0)) {
      ++out.oriented;
      if (collect) out.cycles.push_back(order);
    }
    return;
  }
  for (int v = 1; v < n; ++v) {
    if ((visited >> v) & 1 || !g.has_edge(last, v)) continue;
    order.push_back(v);
    ham_dfs(g, order, visited | (std::uint64_t{1} << v), out, collect);
    order.pop_back();
  }
}

}  // namespace

HamiltonianCount ham_bruteforce(const Graph& g, bool collect_cycles) {
  const int n = g.vertex_count();
  if (n > 11) throw InstanceTooLarge("ham_bruteforce supports n <= 11");
  HamiltonianCount out;
  if (n < 3) return out;
  std::vector<int> order{0};
  ham_dfs(g, order, 1, out, collect_cycles);
  out.hamiltonian = out.oriented > 0;
  return out;
}

std::optional<std::int64_t> held_karp(const WeightedGraph& wg) {
  const int n = wg.vertex_count();
  if (n > 20) throw InstanceTooLarge("held_karp supports n <= 20");
  if (n < 3) return std::nullopt;
  const Graph& g = wg.graph();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // best[X][t]: lightest path 0 -> t visiting exactly X ∪ {0}, X ⊆ V \ {0}.
  const int rest = n - 1;
  const std::size_t subsets = std::size_t{1} << rest;
  std::vector<std::int64_t> best(subsets * static_cast<std::size_t>(rest), kInf);
  for (int t = 1; t < n; ++t)
    if (g.has_edge(0, t)) best[(std::size_t{1} << (t - 1)) * rest + (t - 1)] = wg.weight(0, t);
  for (std::size_t x = 1; x < subsets; ++x) {
    for (int t = 0; t < rest; ++t) {
      const std::int64_t cur = best[x * rest + t];
      if (cur >= kInf || !((x >> t) & 1)) continue;
      for (int u = 0; u < rest; ++u) {
        if ((x >> u) & 1 || !g.has_edge(t + 1, u + 1)) continue;
        std::int64_t& slot = best[(x | (std::size_t{1} << u)) * rest + u];
        slot = std::min(slot, cur + wg.weight(t + 1, u + 1));
      }
    }
  }
  std::int64_t answer = kInf;
  for (int t = 1; t < n; ++t) {
    const std::int64_t cur = best[(subsets - 1) * rest + (t - 1)];
    if (cur < kInf && g.has_edge(t, 0)) answer = std::min(answer, cur + wg.weight(t, 0));
  }
  if (answer >= kInf) return std::nullopt;
  return answer;
}

boost::multiprecision::cpp_int ie_walk_count(const Graph& g) {
  using boost::multiprecision::cpp_int;
  const int n = g.vertex_count();
  if (n > 16) throw InstanceTooLarge("ie_walk_count supports n <= 16");
  if (n == 0) return 0;
  cpp_int total = 0;
  const std::uint64_t others = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~std::uint64_t{1};
  // Enumerate X ⊆ V \ {0}; count closed n-walks at 0 inside X ∪ {0}.
  for (std::uint64_t x = 0;; x = (x - others) & others) {
    const std::uint64_t allowed = x | 1;
    std::vector<cpp_int> walks(static_cast<std::size_t>(n), 0);
    std::vector<cpp_int> next(static_cast<std::size_t>(n));
    walks[0] = 1;
    for (int step = 0; step < n; ++step) {
      for (int v = 0; v < n; ++v) {
        next[v] = 0;
        if (!((allowed >> v) & 1)) continue;
        for (std::uint64_t nb = g.neighbors(v) & allowed; nb != 0; nb &= nb - 1) next[v] += walks[std::countr_zero(nb)];
      }
      walks.swap(next);
    }
    const int excluded = n - std::popcount(allowed);
    if (excluded % 2 == 0)
      total += walks[0];
    else
      total -= walks[0];
    if (x == others) break;
  }
  return total;
}

FieldElement permanent(const FieldContext& ctx, const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("permanent needs a square matrix");
  const std::size_t n = m.rows();
  if (n > 8) throw InstanceTooLarge("permanent supports n <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement sum;
  do {
    FieldElement prod = FieldElement::one();
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = ctx.mul(prod, m(i, perm[i]));
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

SymbolicPolynomial SymbolicPolynomial::one() {
  SymbolicPolynomial p;
  p.terms_.insert(Monomial{});
  return p;
}

SymbolicPolynomial SymbolicPolynomial::variable(const VariableId& v) {
  SymbolicPolynomial p;
  p.terms_.insert(Monomial{v});
  return p;
}

void SymbolicPolynomial::toggle(Monomial m) {
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.insert(std::move(m));
  if (!inserted) terms_.erase(it);
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& other) {
  for (const Monomial& m : other.terms_) toggle(m);
  return *this;
}

SymbolicPolynomial operator*(const SymbolicPolynomial& a, const SymbolicPolynomial& b) {
  SymbolicPolynomial out;
  for (const Monomial& x : a.terms_) {
    for (const Monomial& y : b.terms_) {
      Monomial z;
      z.reserve(x.size() + y.size());
      std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
      out.toggle(std::move(z));
    }
  }
  return out;
}

std::string SymbolicPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const Monomial& m : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    if (m.empty()) os << "1";
    bool first_var = true;
    for (const VariableId& v : m) {
      if (!first_var) os << "*";
      first_var = false;
      os << "x[" << v.from << "," << v.to;
      if (v.extra >= 0) os << ";" << v.extra;
      os << "]";
    }
  }
  return os.str();
}

SymbolicLccInstance::SymbolicLccInstance(ArcSet base, int label_count)
    : base_(std::move(base)), labels_(label_count) {
  if (label_count < 0 || label_count > 8) throw InstanceTooLarge("symbolic instances support at most 8 labels");
  values_.resize(base_.arc_count() << label_count);
}

void SymbolicLccInstance::set(int arc, LabelSet subset, SymbolicPolynomial value) {
  if (subset == 0) throw InvalidInput("f is only defined on nonempty label sets");
  values_[(static_cast<std::size_t>(arc) << labels_) + subset] = std::move(value);
}

const SymbolicPolynomial& SymbolicLccInstance::get(int arc, LabelSet subset) const {
  return values_[(static_cast<std::size_t>(arc) << labels_) + subset];
}

SymbolicPolynomial symbolic_lambda(const SymbolicLccInstance& inst) {
  const int n = inst.base().vertex_count();
  const int labels = inst.label_count();
  if (n > 4 || labels > 4) throw InstanceTooLarge("symbolic_lambda supports n_base <= 4 and |L| <= 4");
  SymbolicPolynomial total;
  std::vector<int> succ(static_cast<std::size_t>(n));
  std::iota(succ.begin(), succ.end(), 0);
  do {
    std::vector<int> arcs;
    bool cover = true;
    for (int v = 0; v < n && cover; ++v) {
      const int a = succ[v] == v ? -1 : inst.base().arc_index(v, succ[v]);
      cover = a >= 0;
      arcs.push_back(a);
    }
    if (!cover) continue;
    // Every map L -> arcs; keep the surjective ones.
    std::size_t maps = 1;
    for (int i = 0; i < labels; ++i) maps *= static_cast<std::size_t>(n);
    for (std::size_t code = 0; code < maps; ++code) {
      std::vector<LabelSet> pre(static_cast<std::size_t>(n), 0);
      std::size_t c = code;
      for (int l = 0; l < labels; ++l) {
        pre[c % n] |= LabelSet{1} << l;
        c /= n;
      }
      if (std::count(pre.begin(), pre.end(), LabelSet{0}) != 0) continue;
      SymbolicPolynomial prod = SymbolicPolynomial::one();
      for (int v = 0; v < n && !prod.is_zero(); ++v) prod = prod * inst.get(arcs[v], pre[v]);
      total += prod;
    }
  } while (std::next_permutation(succ.begin(), succ.end()));
  return total;
}

SymbolicLccInstance symbolic_bipartite_instance(const BipartiteInstance& inst) {
  const Graph& g = inst.graph;
  const int n1 = static_cast<int>(inst.part1.size());
  ArcSet base(n1);
  std::vector<std::pair<int, std::pair<int, int>>> arcs;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      if (i == j) continue;
      bool any = false;
      for (int w : inst.part2) any = any || (g.has_edge(inst.part1[i], w) && g.has_edge(w, inst.part1[j]));
      if (any) arcs.push_back({base.add_arc(i, j), {inst.part1[i], inst.part1[j]}});
    }
  SymbolicLccInstance out(std::move(base), static_cast<int>(inst.part2.size()));
  for (auto [arc, uv] : arcs) {
    for (std::size_t b = 0; b < inst.part2.size(); ++b) {
      const int w = inst.part2[b];
      if (!g.has_edge(uv.first, w) || !g.has_edge(w, uv.second)) continue;
      out.set(arc, LabelSet{1} << b,
              SymbolicPolynomial::variable(edge_variable(uv.first, w, inst.special)) *
                  SymbolicPolynomial::variable(edge_variable(w, uv.second, inst.special)));
    }
  }
  return out;
}

SymbolicLccInstance symbolic_general_instance(const Graph& g, const Partition& part, int m) {
  const int n1 = static_cast<int>(part.part1.size());
  const int n2 = static_cast<int>(part.part2.size());
  const int s = part.special();
  SymbolicLccInstance out(ArcSet::complete_bidirected(n1), n2 + m);
  for (std::size_t a = 0; a < out.base().arc_count(); ++a) {
    const Arc arc = out.base().arc(static_cast<int>(a));
    const int u = part.part1[arc.from];
    const int v = part.part1[arc.to];
    for (LabelSet x = 1; x < (LabelSet{1} << n2); ++x) {
      std::vector<int> inner;
      for (int b = 0; b < n2; ++b)
        if ((x >> b) & 1) inner.push_back(part.part2[b]);
      SymbolicPolynomial sum;
      do {
        Monomial mono;
        int prev = u;
        bool ok = true;
        for (std::size_t i = 0; i <= inner.size() && ok; ++i) {
          const int next = i < inner.size() ? inner[i] : v;
          ok = g.has_edge(prev, next);
          mono.push_back(edge_variable(prev, next, s));
          prev = next;
        }
        if (ok) sum.toggle(std::move(mono));
      } while (std::next_permutation(inner.begin(), inner.end()));
      if (!sum.is_zero()) out.set(static_cast<int>(a), x, std::move(sum));
    }
    if (!g.has_edge(u, v)) continue;
    for (int d = 0; d < m; ++d)
      out.set(static_cast<int>(a), LabelSet{1} << (n2 + d), SymbolicPolynomial::variable(extra_variable(u, v, d, s)));
  }
  return out;
}

int arcs_inside(const std::vector<int>& cycle, const std::vector<int>& part1) {
  auto in1 = [&](int v) { return std::find(part1.begin(), part1.end(), v) != part1.end(); };
  int count = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (in1(cycle[i]) && in1(cycle[(i + 1) % cycle.size()])) ++count;
  return count;
}

SymbolicPolynomial hamiltonian_polynomial(const std::vector<std::vector<int>>& cycles, const Partition& part,
                                          int m) {
  const int s = part.special();
  auto in1 = [&](int v) { return std::find(part.part1.begin(), part.part1.end(), v) != part.part1.end(); };
  SymbolicPolynomial out;
  for (const auto& cycle : cycles) {
    if (arcs_inside(cycle, part.part1) != m) continue;
    std::vector<int> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 0);
    do {
      Monomial mono;
      std::size_t next_label = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        if (in1(u) && in1(v))
          mono.push_back(extra_variable(u, v, labels[next_label++], s));
        else
          mono.push_back(edge_variable(u, v, s));
      }
      out.toggle(std::move(mono));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return out;
}

}  // namespace detsum
