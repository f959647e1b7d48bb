#include "whlab/hopf/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "whlab/core/errors.hpp"
#include "whlab/core/scalar.hpp"

namespace whlab {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::string> labels,
                                   std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), labels_(std::move(labels)) {
  std::size_t n = labels_.size();
  if (n == 0) throw DomainError("group table is empty");
  if (table.size() != n) throw DomainError("group table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw DomainError("group table row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw DomainError("group table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      table_.push_back(table[a][b]);
    }
  }
  auto is_identity = [&](std::size_t e) {
    for (std::size_t g = 0; g < n; ++g)
      if (mul(e, g) != g || mul(g, e) != g) return false;
    return true;
  };
  std::size_t e = 0;
  while (e < n && !is_identity(e)) ++e;
  if (e == n) throw DomainError("group table has no identity");
  identity_ = e;
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == e && mul(b, a) == e) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw DomainError("element " + labels_[a] + " has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw DomainError("group table is not associative at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
}

FiniteGroupTable FiniteGroupTable::trivial() { return cyclic(1); }

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroupTable(n == 1 ? "1" : "Z" + std::to_string(n), labels, table);
}

FiniteGroupTable FiniteGroupTable::direct_product(FiniteGroupTable const& a,
                                                  FiniteGroupTable const& b) {
  std::size_t n = a.order(), m = b.order();
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) labels.push_back(a.label(i) + "." + b.label(j));
  for (std::size_t x = 0; x < n * m; ++x)
    for (std::size_t y = 0; y < n * m; ++y)
      table[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  return FiniteGroupTable(a.name() + "x" + b.name(), labels, table);
}

FiniteGroupTable FiniteGroupTable::dihedral8() {
  // r^i s^j stored as 4j + i; s r = r^-1 s
  std::vector<std::string> labels{"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t i1 = x % 4, j1 = x / 4, i2 = y % 4, j2 = y / 4;
      std::size_t i = (i1 + (j1 ? 4 - i2 : i2)) % 4;
      table[x][y] = 4 * ((j1 + j2) % 2) + i;
    }
  return FiniteGroupTable("D8", labels, table);
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
  // elements (sign, unit) with unit in {1, i, j, k}; index 2 * unit + (sign < 0)
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products: u * v = sign * w
  int const sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::size_t const unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t u = x / 2, v = y / 2;
      int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[u][v];
      table[x][y] = 2 * unit[u][v] + (s < 0 ? 1 : 0);
    }
  return FiniteGroupTable("Q8", labels, table);
}

FiniteGroupTable FiniteGroupTable::named(std::string_view name) {
  auto fail = [&]() -> FiniteGroupTable {
    throw DomainError("unknown group '" + std::string(name) + "' (try Z4, Z2xZ2, Z2^3, D8, Q8)");
  };
  if (name.empty()) return fail();
  if (auto x = name.find('x'); x != std::string_view::npos)
    return direct_product(named(name.substr(0, x)), named(name.substr(x + 1)));
  if (auto caret = name.find('^'); caret != std::string_view::npos) {
    std::size_t k = 0;
    auto rest = name.substr(caret + 1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || k == 0) return fail();
    FiniteGroupTable base = named(name.substr(0, caret));
    FiniteGroupTable out = base;
    for (std::size_t i = 1; i < k; ++i) out = direct_product(out, base);
    out.name_ = std::string(name);
    return out;
  }
  if (name == "1") return trivial();
  if (name == "D8") return dihedral8();
  if (name == "Q8") return quaternion8();
  if (name.front() == 'Z') {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 4096) return cyclic(n);
  }
  return fail();
}

FiniteGroupTable FiniteGroupTable::parse(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0, order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> rows;
  bool in_table = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (in_table) {
      std::vector<std::size_t> row;
      std::istringstream rs(line);
      std::string tok;
      while (rs >> tok) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
          throw ParseError("expected an element index, got '" + tok + "'", line_no, 0);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    } else if (word == "order:") {
      if (!(ls >> order) || order == 0) throw ParseError("expected a positive order", line_no, 0);
    } else if (word == "labels:") {
      while (ls >> word) labels.push_back(word);
    } else if (word == "table:") {
      in_table = true;
    } else {
      throw ParseError("unknown key '" + word + "'", line_no, 0);
    }
  }
  if (order == 0) throw ParseError("missing order line", line_no, 0);
  if (!in_table) throw ParseError("missing table", line_no, 0);
  if (rows.size() != order)
    throw ParseError("table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(order), line_no, 0);
  if (labels.empty())
    for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != order) throw ParseError("expected " + std::to_string(order) + " labels", line_no, 0);
  return FiniteGroupTable(std::move(name), labels, rows);
}

FiniteGroupTable FiniteGroupTable::load(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return parse(buf.str(), stem);
}

std::optional<std::size_t> FiniteGroupTable::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> FiniteGroupTable::p_group_prime() const {
  std::size_t n = order();
  if (n < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

std::vector<std::size_t> FiniteGroupTable::subgroup_generated(
    std::vector<std::size_t> const& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> queue{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t g : gens) {
      if (g >= order()) throw DomainError("generator index out of range");
      std::size_t h = mul(queue[i], g);
      if (!in[h]) {
        in[h] = true;
        queue.push_back(h);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool FiniteGroupTable::is_subgroup(std::vector<std::size_t> const& elements) const {
  std::vector<bool> in(order(), false);
  for (auto e : elements) {
    if (e >= order()) return false;
    in[e] = true;
  }
  if (!in[identity_]) return false;
  for (auto a : elements)
    for (auto b : elements)
      if (!in[mul(a, inv(b))]) return false;
  return true;
}

bool FiniteGroupTable::is_normal(std::vector<std::size_t> const& subgroup) const {
  if (!is_subgroup(subgroup)) return false;
  std::vector<bool> in(order(), false);
  for (auto e : subgroup) in[e] = true;
  for (std::size_t g = 0; g < order(); ++g)
    for (auto h : subgroup)
      if (!in[mul(mul(g, h), inv(g))]) return false;
  return true;
}

FiniteGroupTable FiniteGroupTable::restrict_to(std::vector<std::size_t> const& subgroup) const {
  if (!is_subgroup(subgroup)) throw DomainError("elements do not form a subgroup");
  std::vector<std::size_t> pos(order(), order());
  for (std::size_t i = 0; i < subgroup.size(); ++i) pos[subgroup[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(subgroup.size(), std::vector<std::size_t>(subgroup.size()));
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    labels.push_back(label(subgroup[i]));
    for (std::size_t j = 0; j < subgroup.size(); ++j) table[i][j] = pos[mul(subgroup[i], subgroup[j])];
  }
  return FiniteGroupTable(name_ + "_sub", labels, table);
}

FiniteGroupTable::Quotient FiniteGroupTable::quotient(std::vector<std::size_t> const& subgroup) const {
  if (!is_normal(subgroup)) throw DomainError("subgroup is not normal in " + name_);
  std::size_t n = order();
  std::vector<std::size_t> coset_of(n, n), lift;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of[g] != n) continue;
    std::size_t c = lift.size();
    lift.push_back(g);
    for (auto h : subgroup) coset_of[mul(g, h)] = c;
  }
  std::size_t q = lift.size();
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(q, std::vector<std::size_t>(q));
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back("[" + label(lift[a]) + "]");
    for (std::size_t b = 0; b < q; ++b) table[a][b] = coset_of[mul(lift[a], lift[b])];
  }
  return Quotient{FiniteGroupTable(name_ + "/H", labels, table), coset_of, lift};
}

}  // namespace whlab
