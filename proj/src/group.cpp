#include "zpi/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace zpi {

namespace {

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Letter order a < a^-1 < b < b^-1 < ... for free-group words.
int letter_rank(std::int64_t l) {
  return 2 * static_cast<int>(std::llabs(l) - 1) + (l < 0 ? 1 : 0);
}

void free_reduce(std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (std::int64_t l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

}  // namespace

GroupPtr Group::trivial() {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::Trivial;
  return g;
}

GroupPtr Group::cyclic(std::int64_t m) {
  if (m < 1) throw DomainError("cyclic group: modulus must be >= 1");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::Cyclic;
  g->m_ = m;
  return g;
}

GroupPtr Group::table(std::vector<std::vector<int>> mul) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw DomainError("table group: empty table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw DomainError("table group: table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw DomainError("table group: entry out of range");
  }
  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[mul[i][j]]++) throw DomainError("table group: row not a permutation");
      if (seen_col[mul[j][i]]++) throw DomainError("table group: column not a permutation");
    }
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = (mul[e][j] == j) && (mul[j][e] == j);
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw DomainError("table group: no identity element");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (mul[i][j] == identity) {
        inv[i] = j;
        break;
      }
    if (inv[i] < 0) throw DomainError("table group: missing inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw DomainError("table group: multiplication not associative");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::Table;
  g->table_ = std::move(mul);
  g->table_inv_ = std::move(inv);
  g->table_identity_ = identity;
  return g;
}

GroupPtr Group::free_abelian(int rank) {
  if (rank < 0) throw DomainError("free abelian group: negative rank");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::FreeAbelian;
  g->rank_ = rank;
  return g;
}

GroupPtr Group::free(int rank) {
  if (rank < 0 || rank > 26) throw DomainError("free group: rank must be in [0,26]");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::Free;
  g->rank_ = rank;
  return g;
}

bool Group::finite() const {
  switch (kind_) {
    case GroupKind::Trivial:
    case GroupKind::Cyclic:
    case GroupKind::Table:
      return true;
    case GroupKind::FreeAbelian:
      return rank_ == 0;
    case GroupKind::Free:
      return rank_ == 0;
  }
  return false;
}

std::int64_t Group::size() const {
  if (!finite()) throw DomainError("size(): group is infinite");
  switch (kind_) {
    case GroupKind::Trivial: return 1;
    case GroupKind::Cyclic: return m_;
    case GroupKind::Table: return static_cast<std::int64_t>(table_.size());
    default: return 1;  // rank-0 free / free-abelian
  }
}

GroupElement Group::identity() const {
  switch (kind_) {
    case GroupKind::Trivial: return GroupElement(std::vector<std::int64_t>{});
    case GroupKind::Cyclic: return GroupElement({0});
    case GroupKind::Table: return GroupElement({table_identity_});
    case GroupKind::FreeAbelian:
      return GroupElement(std::vector<std::int64_t>(rank_, 0));
    case GroupKind::Free: return GroupElement(std::vector<std::int64_t>{});
  }
  return GroupElement(std::vector<std::int64_t>{});
}

bool Group::is_identity(const GroupElement& x) const { return x == identity(); }

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  require(a, "mul");
  require(b, "mul");
  switch (kind_) {
    case GroupKind::Trivial: return a;
    case GroupKind::Cyclic:
      return GroupElement({mod_reduce(a.payload()[0] + b.payload()[0], m_)});
    case GroupKind::Table:
      return GroupElement({table_[a.payload()[0]][b.payload()[0]]});
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v(rank_);
      for (int i = 0; i < rank_; ++i) v[i] = a.payload()[i] + b.payload()[i];
      return GroupElement(std::move(v));
    }
    case GroupKind::Free: {
      std::vector<std::int64_t> w = a.payload();
      w.insert(w.end(), b.payload().begin(), b.payload().end());
      free_reduce(w);
      return GroupElement(std::move(w));
    }
  }
  return a;
}

GroupElement Group::inv(const GroupElement& a) const {
  require(a, "inv");
  switch (kind_) {
    case GroupKind::Trivial: return a;
    case GroupKind::Cyclic:
      return GroupElement({mod_reduce(-a.payload()[0], m_)});
    case GroupKind::Table:
      return GroupElement({table_inv_[a.payload()[0]]});
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v(rank_);
      for (int i = 0; i < rank_; ++i) v[i] = -a.payload()[i];
      return GroupElement(std::move(v));
    }
    case GroupKind::Free: {
      std::vector<std::int64_t> w(a.payload().rbegin(), a.payload().rend());
      for (auto& l : w) l = -l;
      return GroupElement(std::move(w));
    }
  }
  return a;
}

bool Group::is_involution(const GroupElement& x) const {
  return !is_identity(x) && is_identity(mul(x, x));
}

bool Group::contains(const GroupElement& x) const {
  const auto& w = x.payload();
  switch (kind_) {
    case GroupKind::Trivial: return w.empty();
    case GroupKind::Cyclic:
      return w.size() == 1 && w[0] >= 0 && w[0] < m_;
    case GroupKind::Table:
      return w.size() == 1 && w[0] >= 0 &&
             w[0] < static_cast<std::int64_t>(table_.size());
    case GroupKind::FreeAbelian:
      return static_cast<int>(w.size()) == rank_;
    case GroupKind::Free: {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || std::llabs(w[i]) > rank_) return false;
        if (i + 1 < w.size() && w[i + 1] == -w[i]) return false;  // not reduced
      }
      return true;
    }
  }
  return false;
}

void Group::require(const GroupElement& x, const char* what) const {
  if (!contains(x))
    throw DomainError(std::string(what) + ": element not in group " + describe());
}

bool Group::less(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case GroupKind::Trivial: return false;
    case GroupKind::Cyclic:
    case GroupKind::Table:
      return a.payload()[0] < b.payload()[0];
    case GroupKind::FreeAbelian:
      return a.payload() < b.payload();
    case GroupKind::Free: {
      const auto& u = a.payload();
      const auto& v = b.payload();
      if (u.size() != v.size()) return u.size() < v.size();
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return letter_rank(u[i]) < letter_rank(v[i]);
      return false;
    }
  }
  return false;
}

int Group::word_length(const GroupElement& x) const {
  require(x, "word_length");
  switch (kind_) {
    case GroupKind::Trivial: return 0;
    case GroupKind::Cyclic: {
      std::int64_t k = x.payload()[0];
      return static_cast<int>(std::min(k, m_ - k));
    }
    case GroupKind::Table:
      return is_identity(x) ? 0 : 1;
    case GroupKind::FreeAbelian: {
      std::int64_t s = 0;
      for (auto c : x.payload()) s += std::llabs(c);
      return static_cast<int>(s);
    }
    case GroupKind::Free:
      return static_cast<int>(x.payload().size());
  }
  return 0;
}

std::vector<GroupElement> Group::ball(int r) const {
  if (r < 0) throw DomainError("ball: negative radius");
  std::vector<GroupElement> out;
  switch (kind_) {
    case GroupKind::Trivial:
      out.push_back(identity());
      break;
    case GroupKind::Cyclic:
      for (std::int64_t k = 0; k < m_; ++k)
        if (std::min(k, m_ - k) <= r) out.push_back(GroupElement({k}));
      break;
    case GroupKind::Table:
      if (r == 0)
        out.push_back(identity());
      else
        out = elements();
      break;
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v(rank_, 0);
      std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i == rank_) {
          out.push_back(GroupElement(v));
          return;
        }
        for (std::int64_t c = -budget; c <= budget; ++c) {
          v[i] = c;
          rec(i + 1, budget - static_cast<int>(std::llabs(c)));
        }
        v[i] = 0;
      };
      rec(0, r);
      std::sort(out.begin(), out.end(),
                [&](const GroupElement& a, const GroupElement& b) { return less(a, b); });
      break;
    }
    case GroupKind::Free: {
      // Words generated length by length, letters in rank order, so the
      // output is already sorted by the length-then-lex total order.
      std::vector<std::vector<std::int64_t>> layer = {{}};
      out.push_back(identity());
      std::vector<std::int64_t> letters;
      for (int i = 1; i <= rank_; ++i) {
        letters.push_back(i);
        letters.push_back(-i);
      }
      std::sort(letters.begin(), letters.end(),
                [](std::int64_t a, std::int64_t b) { return letter_rank(a) < letter_rank(b); });
      for (int len = 1; len <= r; ++len) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& w : layer)
          for (std::int64_t l : letters) {
            if (!w.empty() && w.back() == -l) continue;
            auto w2 = w;
            w2.push_back(l);
            next.push_back(std::move(w2));
          }
        std::sort(next.begin(), next.end(),
                  [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
                    for (std::size_t i = 0; i < a.size(); ++i)
                      if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
                    return false;
                  });
        for (const auto& w : next) out.push_back(GroupElement(w));
        layer = std::move(next);
      }
      break;
    }
  }
  return out;
}

std::vector<GroupElement> Group::elements() const {
  if (!finite()) throw DomainError("elements(): group is infinite");
  std::vector<GroupElement> out;
  switch (kind_) {
    case GroupKind::Trivial:
      out.push_back(identity());
      break;
    case GroupKind::Cyclic:
      for (std::int64_t k = 0; k < m_; ++k) out.push_back(GroupElement({k}));
      break;
    case GroupKind::Table:
      for (std::size_t i = 0; i < table_.size(); ++i)
        out.push_back(GroupElement({static_cast<std::int64_t>(i)}));
      break;
    default:
      out.push_back(identity());
      break;
  }
  return out;
}

std::string Group::to_string(const GroupElement& x) const {
  require(x, "to_string");
  switch (kind_) {
    case GroupKind::Trivial: return "1";
    case GroupKind::Cyclic:
    case GroupKind::Table:
      return std::to_string(x.payload()[0]);
    case GroupKind::FreeAbelian: {
      std::ostringstream os;
      os << "(";
      for (int i = 0; i < rank_; ++i) {
        if (i) os << ",";
        os << x.payload()[i];
      }
      os << ")";
      return os.str();
    }
    case GroupKind::Free: {
      if (x.payload().empty()) return "1";
      std::ostringstream os;
      bool first = true;
      for (std::int64_t l : x.payload()) {
        if (!first) os << " ";
        first = false;
        char c = static_cast<char>('a' + std::llabs(l) - 1);
        os << (l > 0 ? c : static_cast<char>(std::toupper(c)));
      }
      return os.str();
    }
  }
  return "";
}

GroupElement Group::parse(const std::string& s) const {
  switch (kind_) {
    case GroupKind::Trivial:
      return identity();
    case GroupKind::Cyclic:
    case GroupKind::Table: {
      std::int64_t v = std::stoll(s);
      if (kind_ == GroupKind::Cyclic) v = mod_reduce(v, m_);
      GroupElement e({v});
      require(e, "parse");
      return e;
    }
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v;
      std::string t = s;
      for (char& c : t)
        if (c == '(' || c == ')' || c == ',') c = ' ';
      std::istringstream is(t);
      std::int64_t x;
      while (is >> x) v.push_back(x);
      GroupElement e(std::move(v));
      require(e, "parse");
      return e;
    }
    case GroupKind::Free: {
      std::vector<std::int64_t> w;
      for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '1') continue;  // "1" denotes the empty word
        if (std::islower(static_cast<unsigned char>(c)))
          w.push_back(c - 'a' + 1);
        else if (std::isupper(static_cast<unsigned char>(c)))
          w.push_back(-(c - 'A' + 1));
        else
          throw DomainError("parse: bad letter in word '" + s + "'");
      }
      free_reduce(w);
      GroupElement e(std::move(w));
      require(e, "parse");
      return e;
    }
  }
  return identity();
}

bool Group::same(const Group& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case GroupKind::Trivial: return true;
    case GroupKind::Cyclic: return m_ == other.m_;
    case GroupKind::Table: return table_ == other.table_;
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
      return rank_ == other.rank_;
  }
  return false;
}

std::string Group::describe() const {
  switch (kind_) {
    case GroupKind::Trivial: return "trivial";
    case GroupKind::Cyclic: return "cyclic(" + std::to_string(m_) + ")";
    case GroupKind::Table: return "table(" + std::to_string(table_.size()) + ")";
    case GroupKind::FreeAbelian: return "free_abelian(" + std::to_string(rank_) + ")";
    case GroupKind::Free: return "free(" + std::to_string(rank_) + ")";
  }
  return "?";
}

namespace {

GroupElement power(const Group& g, const GroupElement& x, std::int64_t e) {
  GroupElement base = e < 0 ? g.inv(x) : x;
  std::int64_t n = e < 0 ? -e : e;
  GroupElement acc = g.identity();
  while (n > 0) {
    if (n & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    n >>= 1;
  }
  return acc;
}

void check_surjective(const Group& dst, const std::vector<GroupElement>& images) {
  if (!dst.finite()) return;
  std::set<std::vector<std::int64_t>> reached;
  std::vector<GroupElement> frontier = {dst.identity()};
  reached.insert(dst.identity().payload());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& im : images)
        for (const auto& y : {dst.mul(x, im), dst.mul(x, dst.inv(im))})
          if (reached.insert(y.payload()).second) next.push_back(y);
    frontier = std::move(next);
  }
  if (static_cast<std::int64_t>(reached.size()) != dst.size())
    throw DomainError("quotient map: not surjective onto finite target");
}

}  // namespace

QuotientMap QuotientMap::from_generator_images(GroupPtr source, GroupPtr target,
                                               std::vector<GroupElement> images) {
  if (!source || !target) throw DomainError("quotient map: null group");
  QuotientMap q;
  q.src_ = std::move(source);
  q.dst_ = std::move(target);
  q.images_ = std::move(images);
  std::size_t expected = 0;
  switch (q.src_->kind()) {
    case GroupKind::Trivial: expected = 0; break;
    case GroupKind::Cyclic: expected = 1; break;
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
      expected = static_cast<std::size_t>(q.src_->rank());
      break;
    case GroupKind::Table:
      throw DomainError("quotient map: table sources need from_element_map");
  }
  if (q.images_.size() != expected)
    throw DomainError("quotient map: wrong number of generator images");
  for (const auto& im : q.images_) q.dst_->require(im, "quotient map image");
  // Relator checks: the cyclic relation, and commutativity for free-abelian
  // sources mapping into a possibly nonabelian target.
  if (q.src_->kind() == GroupKind::Cyclic) {
    if (!q.dst_->is_identity(power(*q.dst_, q.images_[0], q.src_->modulus())))
      throw DomainError("quotient map: cyclic relator not satisfied");
  }
  if (q.src_->kind() == GroupKind::FreeAbelian) {
    for (std::size_t i = 0; i < q.images_.size(); ++i)
      for (std::size_t j = i + 1; j < q.images_.size(); ++j)
        if (!(q.dst_->mul(q.images_[i], q.images_[j]) ==
              q.dst_->mul(q.images_[j], q.images_[i])))
          throw DomainError("quotient map: images of commuting generators do not commute");
  }
  check_surjective(*q.dst_, q.images_);
  return q;
}

QuotientMap QuotientMap::from_element_map(GroupPtr source, GroupPtr target,
                                          std::vector<GroupElement> images) {
  if (!source || !target) throw DomainError("quotient map: null group");
  if (source->kind() != GroupKind::Table && source->kind() != GroupKind::Trivial)
    throw DomainError("quotient map: element maps are for table sources");
  QuotientMap q;
  q.src_ = std::move(source);
  q.dst_ = std::move(target);
  q.images_ = std::move(images);
  q.element_map_ = true;
  if (q.images_.size() != static_cast<std::size_t>(q.src_->size()))
    throw DomainError("quotient map: element map has wrong size");
  for (const auto& im : q.images_) q.dst_->require(im, "quotient map image");
  const auto els = q.src_->elements();
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = 0; b < els.size(); ++b) {
      auto ab = q.src_->mul(els[a], els[b]);
      std::size_t ab_idx = static_cast<std::size_t>(ab.payload()[0]);
      if (!(q.images_[ab_idx] == q.dst_->mul(q.images_[a], q.images_[b])))
        throw DomainError("quotient map: element map is not multiplicative");
    }
  check_surjective(*q.dst_, q.images_);
  return q;
}

GroupElement QuotientMap::image(const GroupElement& x) const {
  src_->require(x, "quotient image");
  switch (src_->kind()) {
    case GroupKind::Trivial:
      return dst_->identity();
    case GroupKind::Cyclic:
      return power(*dst_, images_[0], x.payload()[0]);
    case GroupKind::Table:
      return images_[static_cast<std::size_t>(x.payload()[0])];
    case GroupKind::FreeAbelian: {
      GroupElement acc = dst_->identity();
      for (int i = 0; i < src_->rank(); ++i)
        acc = dst_->mul(acc, power(*dst_, images_[i], x.payload()[i]));
      return acc;
    }
    case GroupKind::Free: {
      GroupElement acc = dst_->identity();
      for (std::int64_t l : x.payload()) {
        const auto& im = images_[static_cast<std::size_t>(std::llabs(l) - 1)];
        acc = dst_->mul(acc, l > 0 ? im : dst_->inv(im));
      }
      return acc;
    }
  }
  return dst_->identity();
}

bool QuotientMap::kernel_contains(const GroupElement& x) const {
  return dst_->is_identity(image(x));
}

GroupElement QuotientMap::minimal_lift(const GroupElement& y, int max_radius) const {
  dst_->require(y, "minimal_lift");
  for (int r = 0; r <= max_radius; ++r) {
    for (const auto& x : src_->ball(r)) {
      if (src_->word_length(x) != r) continue;
      if (image(x) == y) return x;
    }
    if (src_->finite() && r >= 1) break;  // ball(1) is already everything
  }
  throw ResourceBoundError("minimal_lift: no preimage within radius " +
                           std::to_string(max_radius));
}

GroupElement quotient_image(const QuotientMap& q, const GroupElement& x) {
  return q.image(x);
}

bool kernel_contains(const QuotientMap& q, const GroupElement& x) {
  return q.kernel_contains(x);
}

std::vector<GroupElement> ball_enumerate(const Group& g, int r) { return g.ball(r); }

}  // namespace zpi
