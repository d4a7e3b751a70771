#include "gradsym/group.hpp"

#include <algorithm>
#include <array>

namespace gradsym {

Group Group::build(std::size_t n, std::vector<GroupElem> table, std::vector<std::string> labels, std::string kind,
                   std::vector<std::uint32_t> params) {
  if (n == 0 || n > kMaxGroupOrder)
    throw Error(ErrorKind::InvalidTable, "group order " + std::to_string(n) + " outside [1, 64]");
  if (table.size() != n * n) throw Error(ErrorKind::InvalidTable, "table is not square");
  for (auto v : table)
    if (v >= n) throw Error(ErrorKind::InvalidTable, "entry " + std::to_string(v) + " out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a)
      throw Error(ErrorKind::InvalidTable, "index 0 is not the identity (row/column " + std::to_string(a) + ")");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a * n + b]]) throw Error(ErrorKind::InvalidTable, "row " + std::to_string(a) + " repeats an entry");
      if (col[table[b * n + a]])
        throw Error(ErrorKind::InvalidTable, "column " + std::to_string(a) + " repeats an entry");
      row[table[a * n + b]] = true;
      col[table[b * n + a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
          throw Error(ErrorKind::InvalidTable, "associativity fails at (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
      }
  auto d = std::make_shared<Data>();
  d->order = n;
  d->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == 0) d->inverse[a] = static_cast<GroupElem>(b);
  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  }
  if (labels.size() != n) throw Error(ErrorKind::InvalidTable, "label count does not match order");
  d->table = std::move(table);
  d->labels = std::move(labels);
  d->kind = std::move(kind);
  d->params = std::move(params);
  Group g;
  g.d_ = std::move(d);
  return g;
}

Group Group::cyclic(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidTable, "cyclic group needs n >= 1");
  if (n > kMaxGroupOrder) throw Error(ErrorKind::InvalidTable, "order exceeds 64");
  std::vector<GroupElem> t(n * n);
  std::vector<std::string> labels;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return build(n, std::move(t), std::move(labels), "cyclic", {n});
}

Group Group::product(const std::vector<std::uint32_t>& orders) {
  std::size_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw Error(ErrorKind::InvalidTable, "factor order must be positive");
    n *= o;
    if (n > kMaxGroupOrder) throw Error(ErrorKind::InvalidTable, "order exceeds 64");
  }
  auto digits = [&](std::size_t idx) {
    std::vector<std::uint32_t> out;
    for (auto o : orders) {
      out.push_back(static_cast<std::uint32_t>(idx % o));
      idx /= o;
    }
    return out;
  };
  std::vector<GroupElem> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    auto da = digits(a);
    std::string lab = "(";
    for (std::size_t i = 0; i < da.size(); ++i) lab += (i ? "," : "") + std::to_string(da[i]);
    labels.push_back(lab + ")");
    for (std::size_t b = 0; b < n; ++b) {
      auto db = digits(b);
      std::size_t idx = 0, stride = 1;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        idx += ((da[i] + db[i]) % orders[i]) * stride;
        stride *= orders[i];
      }
      t[a * n + b] = static_cast<GroupElem>(idx);
    }
  }
  return build(n, std::move(t), std::move(labels), "product", orders);
}

Group Group::dihedral(std::uint32_t n) {
  if (n == 0 || 2 * n > kMaxGroupOrder) throw Error(ErrorKind::InvalidTable, "dihedral parameter out of range");
  const std::uint32_t N = 2 * n;
  // s^a r^k with s r = r^{-1} s.
  std::vector<GroupElem> t(N * N);
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < N; ++x) {
    std::uint32_t a = x / n, k = x % n;
    std::string lab = a ? (k ? "s*r^" + std::to_string(k) : "s") : (k ? "r^" + std::to_string(k) : "e");
    labels.push_back(lab);
    for (std::uint32_t y = 0; y < N; ++y) {
      std::uint32_t b = y / n, l = y % n;
      // s^a r^k s^b r^l = s^{a+b} r^{(b ? -k : k) + l}
      std::uint32_t kk = b ? (n - k) % n : k;
      t[x * N + y] = ((a + b) % 2) * n + (kk + l) % n;
    }
  }
  return build(N, std::move(t), std::move(labels), "dihedral", {n});
}

Group Group::sym3() {
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms{Perm{0, 1, 2}, Perm{1, 2, 0}, Perm{2, 0, 1},
                                  Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}};
  std::vector<std::string> labels{"e", "(123)", "(132)", "(12)", "(13)", "(23)"};
  std::vector<GroupElem> t(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a * 6 + b] = static_cast<GroupElem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return build(6, std::move(t), std::move(labels), "sym3", {});
}

Group Group::quaternion8() {
  // Elements (sign, unit) with unit in {1,i,j,k}; index = unit + 4*sign.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::string> labels{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  std::vector<GroupElem> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a % 4, ub = b % 4;
      int sign = (a / 4 + b / 4 + unit_sign[ua][ub]) % 2;
      t[a * 8 + b] = static_cast<GroupElem>(unit_mul[ua][ub] + 4 * sign);
    }
  return build(8, std::move(t), std::move(labels), "quaternion8", {});
}

Group Group::from_table(const std::vector<std::vector<std::uint32_t>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0 || n > kMaxGroupOrder) throw Error(ErrorKind::InvalidTable, "table size outside [1, 64]");
  std::vector<GroupElem> flat;
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::InvalidTable, "row " + std::to_string(a) + " has wrong length");
    flat.insert(flat.end(), table[a].begin(), table[a].end());
  }
  return build(n, std::move(flat), std::move(labels), "table", {});
}

void Group::check(GroupElem g) const {
  if (g >= d_->order) throw Error(ErrorKind::IndexOutOfRange, "group element " + std::to_string(g));
}

std::uint32_t Group::element_order(GroupElem g) const {
  check(g);
  std::uint32_t m = 1;
  GroupElem x = g;
  while (x != identity()) {
    x = mul(x, g);
    ++m;
  }
  return m;
}

bool Group::is_abelian() const {
  for (GroupElem a = 0; a < order(); ++a)
    for (GroupElem b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const std::string& Group::label(GroupElem g) const {
  check(g);
  return d_->labels[g];
}

std::vector<GroupElem> Group::subgroup_generated(std::span<const GroupElem> gens) const {
  std::vector<bool> in(order(), false);
  in[identity()] = true;
  std::vector<GroupElem> members{identity()};
  for (auto g : gens) check(g);
  // In a finite group closure under products already contains inverses.
  bool grew = true;
  for (auto g : gens)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  while (grew) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        GroupElem c = mul(members[i], members[j]);
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<std::uint32_t>> Group::table() const {
  std::vector<std::vector<std::uint32_t>> out(order(), std::vector<std::uint32_t>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) out[a][b] = mul(static_cast<GroupElem>(a), static_cast<GroupElem>(b));
  return out;
}

bool Group::operator==(const Group& other) const {
  if (d_ == other.d_) return true;
  if (!d_ || !other.d_) return false;
  return d_->table == other.d_->table;
}

}  // namespace gradsym
