#include "symext/group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_set>

namespace symext {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

std::atomic<std::size_t> g_default_cap{3628800};  // 10!

std::vector<Permutation> closure(int degree, const std::vector<Permutation>& generators, std::size_t cap) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> out{Permutation::identity(degree)};
  seen.insert(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      Permutation p = g * out[head];
      if (seen.insert(p).second) {
        if (out.size() >= cap)
          throw Error(ErrorKind::too_large, "group closure exceeds " + std::to_string(cap) + " elements");
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t default_element_cap() { return g_default_cap.load(); }
void set_default_element_cap(std::size_t cap) { g_default_cap.store(cap); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[static_cast<std::size_t>(x)])
      throw Error(ErrorKind::invalid_argument, "image list is not a bijection");
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> im(images.begin(), images.end());
  for (auto& x : im) --x;
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i] - 1;
      const int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw Error(ErrorKind::invalid_argument, "cycle point out of range");
      if (used[static_cast<std::size_t>(from)])
        throw Error(ErrorKind::invalid_argument, "cycles are not disjoint");
      used[static_cast<std::size_t>(from)] = true;
      im[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> im = images_;
  for (auto& x : im) ++x;
  return im;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::preimage(std::span<const int> points) const {
  const Permutation inv = inverse();
  return inv.image(points);
}

std::vector<int> Permutation::image(std::span<const int> points) const {
  std::vector<int> out;
  out.reserve(points.size());
  for (int p : points) out.push_back((*this)(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw Error(ErrorKind::dimension_mismatch, "composing permutations of different degree");
  Permutation p;
  p.images_.resize(h.images_.size());
  for (std::size_t i = 0; i < h.images_.size(); ++i)
    p.images_[i] = g.images_[static_cast<std::size_t>(h.images_[i])];
  return p;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), cap_(cap), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::dimension_mismatch, "generator degree differs from group degree");
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> reached{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (reached.count(e)) continue;
    gens.push_back(e);
    auto cl = closure(degree, gens, elements.size() + 1);
    reached = std::unordered_set<Permutation, PermHash>(cl.begin(), cl.end());
  }
  if (reached.size() != elements.size())
    throw Error(ErrorKind::internal, "element list is not closed under products");
  PermGroup g(degree, std::move(gens), std::max(elements.size(), default_element_cap()));
  std::call_once(g.cache_->once, [&] { g.cache_->elements = std::move(elements); });
  return g;
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::call_once(cache_->once, [this] { cache_->elements = closure(degree_, generators_, cap_); });
  return cache_->elements;
}

bool PermGroup::is_materialized() const { return !cache_->elements.empty(); }

std::size_t PermGroup::order() const {
  if (known_order_) return *known_order_;
  return elements().size();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), g);
}

PermGroup close_group(int degree, std::vector<Permutation> generators, std::size_t cap) {
  PermGroup g(degree, std::move(generators), cap);
  g.elements();
  return g;
}

PermGroup symmetric(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "symmetric group needs n >= 1");
  if (n > 20 || factorial(n) > cap) throw Error(ErrorKind::too_large, "S_" + std::to_string(n) + " exceeds element cap");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 1);
    gens.push_back(Permutation::from_cycles(n, std::vector<std::vector<int>>{cyc}));
  }
  PermGroup g(n, std::move(gens), cap);
  g.set_known_order(factorial(n));
  return g;
}

PermGroup alternating(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "alternating group needs n >= 1");
  const std::uint64_t order = n >= 2 ? factorial(n) / 2 : 1;
  if (n > 20 || order > cap) throw Error(ErrorKind::too_large, "A_" + std::to_string(n) + " exceeds element cap");
  std::vector<Permutation> gens;
  for (int i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  PermGroup g(n, std::move(gens), cap);
  g.set_known_order(order);
  return g;
}

PermGroup alternating_on(int degree, std::span<const int> points) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < points.size(); ++i)
    gens.push_back(Permutation::from_cycles(degree, {{points[0] + 1, points[1] + 1, points[i] + 1}}));
  PermGroup g(degree, std::move(gens));
  g.set_known_order(points.size() >= 2 ? factorial(static_cast<int>(points.size())) / 2 : 1);
  return g;
}

std::size_t index(const PermGroup& group, const PermGroup& subgroup) {
  if (group.degree() != subgroup.degree()) throw Error(ErrorKind::not_a_subgroup, "degrees differ");
  for (const auto& g : subgroup.generators())
    if (!group.contains(g)) throw Error(ErrorKind::not_a_subgroup, "generator " + g.cycle_string() + " not in group");
  const std::size_t big = group.order();
  const std::size_t small = subgroup.order();
  if (big % small != 0) throw Error(ErrorKind::internal, "subgroup order does not divide group order");
  return big / small;
}

PermGroup block_subgroup(int n, int j) {
  if (j < 1 || j > n - 1) throw Error(ErrorKind::invalid_argument, "block_subgroup needs 1 <= j <= n-1");
  std::vector<Permutation> transpositions;
  for (int a = 1; a < j; ++a) transpositions.push_back(Permutation::from_cycles(n, {{a, a + 1}}));
  for (int a = j + 1; a < n; ++a) transpositions.push_back(Permutation::from_cycles(n, {{a, a + 1}}));
  // Even words in the block transpositions, paired up.
  std::vector<Permutation> gens;
  for (std::size_t a = 0; a < transpositions.size(); ++a)
    for (std::size_t b = a + 1; b < transpositions.size(); ++b) gens.push_back(transpositions[a] * transpositions[b]);
  PermGroup g(n, std::move(gens));
  const std::uint64_t product = factorial(j) * factorial(n - j);
  g.set_known_order(product >= 2 ? product / 2 : 1);
  return g;
}

Zeta zeta(int n, int j, ZetaChoice choice) {
  if (j < 1 || j > n - 1) throw Error(ErrorKind::invalid_argument, "zeta needs 1 <= j <= n-1");
  const Permutation swap = Permutation::from_cycles(n, {{j, j + 1}});
  if (choice == ZetaChoice::transposition) return Zeta{swap, false, false};

  // zeta = (j j+1) * tau where tau stabilizes [j-1] u {j+1} setwise.
  std::optional<Permutation> tau;
  if (j + 3 <= n)
    tau = Permutation::from_cycles(n, {{j + 2, j + 3}});
  else if (j >= 3)
    tau = Permutation::from_cycles(n, {{1, 2}});
  else if (j == 2)
    tau = Permutation::from_cycles(n, {{1, 3}});
  else if (n >= 3)
    tau = Permutation::from_cycles(n, {{1, 3}});
  if (!tau) return Zeta{swap, false, true};
  Zeta z{swap * *tau, true, false};
  return z;
}

std::vector<int> act_on_set(const Permutation& g, const std::vector<int>& s) { return g.image(s); }

std::vector<int> act_on_tuple(const Permutation& g, const std::vector<int>& t) {
  std::vector<int> out;
  out.reserve(t.size());
  for (int p : t) out.push_back(g(p));
  return out;
}

std::vector<std::vector<int>> point_orbits(const PermGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : group.generators())
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, pts] : by_root) out.push_back(std::move(pts));
  return out;
}

}  // namespace symext
