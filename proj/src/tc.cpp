#include "braidcong/tc.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace braidcong {

namespace {

void append_power(std::vector<int>& w, int g, long e) {
  for (long t = 0; t < std::labs(e); ++t) w.push_back(e > 0 ? g : -g);
}

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& k : out) k = -k;
  return out;
}

void append_word(std::vector<int>& w, const std::vector<int>& tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

// 1-based abstract generator index for the strand pair (i, j), i < j,
// in lexicographic order.
struct PairIndex {
  int n;
  explicit PairIndex(int n) : n(n) {}
  int operator()(int i, int j) const {
    // pairs (1,2)..(1,n) come first, then (2,3).. and so on
    return (i - 1) * n - i * (i - 1) / 2 + (j - i);
  }
  int count() const { return n * (n - 1) / 2; }
};

void check_presentation_params(int n, std::uint32_t p) {
  if (n < 3) throw std::invalid_argument("presentation: need n >= 3");
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("presentation: p must be an odd prime");
}

}  // namespace

Presentation presentation_G(int n, std::uint32_t p) {
  check_presentation_params(n, p);
  Presentation out;
  out.generators = n - 1;
  for (int i = 1; i + 1 <= n - 1; ++i) out.relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.relators.push_back({i, j, -i, -j});
  {
    std::vector<int> w;
    append_power(w, 1, p);
    out.relators.push_back(std::move(w));
  }
  if (p > 3) {
    std::vector<int> twist;
    for (int t = 0; t < 6; ++t) {
      twist.push_back(1);
      twist.push_back(2);
    }
    out.relators.push_back(std::move(twist));

    std::vector<int> inv;
    append_power(inv, 1, (p - 1) / 2);
    append_power(inv, 2, 4);
    append_power(inv, 1, -static_cast<long>((p - 1) / 2));
    append_word(inv, inverse_word({2, 2, 1, -2, -2}));
    out.relators.push_back(std::move(inv));
  }
  if (n > 4) {
    std::vector<int> a{4, 3, 3, 4};
    append_power(a, 2, (p - 1) / 2);
    a.push_back(-3);
    a.push_back(2);
    std::vector<int> rhs = a;
    append_power(rhs, 1, 2);
    append_word(rhs, inverse_word(a));
    std::vector<int> center;
    for (int t = 0; t < 4; ++t) {
      center.push_back(1);
      center.push_back(2);
      center.push_back(3);
    }
    append_word(center, inverse_word(rhs));
    out.relators.push_back(std::move(center));
  }
  return out;
}

Presentation presentation_H(int n, std::uint32_t p) {
  check_presentation_params(n, p);
  const long k = (p - 1) / 2;
  PairIndex pi(n);
  Presentation out;
  out.generators = pi.count();

  // Braid relation on k-th powers of adjacent band generators.
  for (int i = 1; i + 2 <= n; ++i) {
    const int a = pi(i, i + 1), b = pi(i + 1, i + 2);
    std::vector<int> w;
    append_power(w, a, k);
    append_power(w, b, k);
    append_power(w, a, k);
    append_power(w, b, -k);
    append_power(w, a, -k);
    append_power(w, b, -k);
    out.relators.push_back(std::move(w));
  }
  // p-th powers.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> w;
      append_power(w, pi(i, j), p);
      out.relators.push_back(std::move(w));
    }
  // Double twist about the first three strands (p > 3 only).
  if (p > 3) {
    std::vector<int> w;
    for (int t = 0; t < 2; ++t) {
      w.push_back(pi(1, 2));
      w.push_back(pi(1, 3));
      w.push_back(pi(2, 3));
    }
    out.relators.push_back(std::move(w));
  }
  // Conjugation relations of the band generators.
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::vector<int> rhs;
          if ((r < s && s < i && i < j) || (i < r && r < s && s < j)) {
            rhs = {pi(i, j)};
          } else if (r < s && s == i && i < j) {
            rhs = {pi(r, j), pi(i, j), -pi(r, j)};
          } else if (r == i && i < s && s < j) {
            rhs = {pi(i, j), pi(s, j), pi(i, j), -pi(s, j), -pi(i, j)};
          } else if (r < i && i < s && s < j) {
            rhs = {pi(r, j), pi(s, j), -pi(r, j), -pi(s, j), pi(i, j), pi(s, j), pi(r, j), -pi(s, j), -pi(r, j)};
          } else {
            continue;
          }
          std::vector<int> w{-pi(r, s), pi(i, j), pi(r, s)};
          append_word(w, inverse_word(rhs));
          out.relators.push_back(std::move(w));
        }
  // Band expansion relators.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      std::vector<int> w;
      for (int t = j - 1; t > i; --t) append_power(w, pi(t, t + 1), k + 1);
      w.push_back(pi(i, i + 1));
      for (int t = i + 1; t < j; ++t) append_power(w, pi(t, t + 1), k);
      w.push_back(-pi(i, j));
      out.relators.push_back(std::move(w));
    }
  // Involution relator a_{1,2} a_{1,3} a_{2,3} C^{-1}.
  {
    std::vector<int> c;
    if ((p + 1) / 2 % 2 == 0) {
      for (int t = 0; t < 2; ++t) {
        append_power(c, pi(1, 2), (p + 1) / 4);
        append_power(c, pi(2, 3), 2);
      }
    } else {
      append_power(c, pi(1, 2), (p + 3) / 4);
      append_power(c, pi(1, 3), 2);
      append_power(c, pi(1, 2), (p - 1) / 4);
      append_power(c, pi(2, 3), 2);
    }
    std::vector<int> w{pi(1, 2), pi(1, 3), pi(2, 3)};
    append_word(w, inverse_word(c));
    out.relators.push_back(std::move(w));
  }
  // Center relator a_{1,2} a_{1,3} a_{1,4} a_{2,3} a_{2,4} a_{3,4} B a_{1,4}^{-1} B^{-1}.
  if (n >= 5) {
    // B = a_{3,5} a_{4,5} a_{2,3}^e a_{3,4}^{-1}, with e = k/2 for even k and
    // e = -(k+1)/2 for odd k (the two readings of s_2^k modulo s_2^p = 1).
    std::vector<int> b{pi(3, 5), pi(4, 5)};
    append_power(b, pi(2, 3), k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    b.push_back(-pi(3, 4));
    std::vector<int> w;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 4; ++j) w.push_back(pi(i, j));
    append_word(w, b);
    w.push_back(-pi(1, 4));
    append_word(w, inverse_word(b));
    out.relators.push_back(std::move(w));
  }
  return out;
}

Presentation presentation_S(int n) {
  if (n < 2) throw std::invalid_argument("presentation_S: need n >= 2");
  Presentation out;
  out.generators = n - 1;
  for (int i = 1; i <= n - 1; ++i) out.relators.push_back({i, i});
  for (int i = 1; i + 1 <= n - 1; ++i) out.relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.relators.push_back({i, j, -i, -j});
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens: " + std::to_string(p.generators) + "\n";
  for (const std::vector<int>& w : p.relators) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(w[i]);
    }
    out.push_back('\n');
  }
  for (const std::vector<int>& w : p.subgroup) {
    out += "sub:";
    for (int k : w) {
      out.push_back(' ');
      out += std::to_string(k);
    }
    out.push_back('\n');
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation out;
  bool have_header = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) continue;
    size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    if (line.empty() || line[0] == '#') continue;

    bool is_sub = false;
    if (line.rfind("gens:", 0) == 0) {
      if (have_header) throw std::invalid_argument("parse_presentation: duplicate gens header");
      have_header = true;
      int value = 0;
      std::string_view rest = line.substr(5);
      size_t s = rest.find_first_not_of(" \t");
      if (s == std::string_view::npos) throw std::invalid_argument("parse_presentation: missing generator count");
      rest = rest.substr(s);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || value < 0)
        throw std::invalid_argument("parse_presentation: bad generator count");
      out.generators = value;
      continue;
    }
    if (!have_header) throw std::invalid_argument("parse_presentation: expected gens header first");
    if (line.rfind("sub:", 0) == 0) {
      is_sub = true;
      line = line.substr(4);
    }
    std::vector<int> word;
    size_t at = 0;
    while (at < line.size()) {
      while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) ++at;
      if (at >= line.size()) break;
      size_t stop = at;
      while (stop < line.size() && line[stop] != ' ' && line[stop] != '\t') ++stop;
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + at, line.data() + stop, value);
      if (ec != std::errc() || ptr != line.data() + stop)
        throw std::invalid_argument("parse_presentation: malformed letter '" +
                                    std::string(line.substr(at, stop - at)) + "'");
      if (value == 0 || std::abs(value) > out.generators)
        throw std::invalid_argument("parse_presentation: letter out of range");
      word.push_back(value);
      at = stop;
    }
    if (word.empty()) continue;
    (is_sub ? out.subgroup : out.relators).push_back(std::move(word));
  }
  if (!have_header) throw std::invalid_argument("parse_presentation: missing gens header");
  return out;
}

namespace {

constexpr size_t kNone = static_cast<size_t>(-1);

struct CapHit {};

struct Enumerator {
  int cols;
  size_t cap;
  std::vector<std::vector<size_t>> row;
  std::vector<size_t> parent;
  std::vector<std::pair<size_t, size_t>> pending;
  size_t live = 0;

  Enumerator(int generators, size_t cap) : cols(2 * generators), cap(cap) {}

  size_t find(size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  size_t make() {
    if (row.size() >= cap) throw CapHit{};
    row.emplace_back(cols, kNone);
    parent.push_back(row.size() - 1);
    ++live;
    return row.size() - 1;
  }

  void set_edge(size_t a, int col, size_t b) {
    a = find(a);
    b = find(b);
    if (row[a][col] == kNone) {
      row[a][col] = b;
      if (row[b][col ^ 1] == kNone)
        row[b][col ^ 1] = a;
      else if (find(row[b][col ^ 1]) != a)
        pending.emplace_back(find(row[b][col ^ 1]), a);
    } else if (find(row[a][col]) != b) {
      pending.emplace_back(find(row[a][col]), b);
    } else if (row[b][col ^ 1] == kNone) {
      row[b][col ^ 1] = a;
    } else if (find(row[b][col ^ 1]) != a) {
      pending.emplace_back(find(row[b][col ^ 1]), a);
    }
  }

  void process_pending() {
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);  // keep the smaller index alive
      parent[y] = x;
      --live;
      for (int col = 0; col < cols; ++col) {
        size_t t = row[y][col];
        if (t == kNone) continue;
        t = find(t);
        if (row[x][col] == kNone) {
          row[x][col] = t;
          if (row[t][col ^ 1] == kNone)
            row[t][col ^ 1] = x;
          else if (find(row[t][col ^ 1]) != x)
            pending.emplace_back(find(row[t][col ^ 1]), x);
        } else if (find(row[x][col]) != t) {
          pending.emplace_back(find(row[x][col]), t);
        }
      }
    }
  }

  // Trace `seq` (a column sequence) as a cycle at `start`, defining new cosets
  // for interior gaps and closing the final edge by deduction or coincidence.
  void trace(size_t start, const std::vector<int>& seq) {
    size_t cur = find(start);
    for (size_t pos = 0; pos < seq.size(); ++pos) {
      cur = find(cur);
      const int col = seq[pos];
      size_t next = row[cur][col];
      if (next != kNone) {
        cur = find(next);
        continue;
      }
      if (pos + 1 == seq.size()) {
        set_edge(cur, col, find(start));
        process_pending();
        cur = find(start);
      } else {
        size_t fresh = make();
        set_edge(cur, col, fresh);
        process_pending();
        cur = find(fresh);
      }
    }
    cur = find(cur);
    size_t root = find(start);
    if (cur != root) {
      pending.emplace_back(cur, root);
      process_pending();
    }
  }
};

std::vector<int> column_sequence(const std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int k : word) out.push_back(k > 0 ? 2 * (k - 1) : 2 * (-k - 1) + 1);
  return out;
}

void validate_presentation(const Presentation& p) {
  if (p.generators < 0) throw std::invalid_argument("presentation: negative generator count");
  auto check = [&](const std::vector<std::vector<int>>& words) {
    for (const std::vector<int>& w : words)
      for (int k : w)
        if (k == 0 || std::abs(k) > p.generators)
          throw std::invalid_argument("presentation: letter out of range");
  };
  check(p.relators);
  check(p.subgroup);
}

}  // namespace

CosetTable coset_enumerate(const Presentation& p, size_t max_cosets) {
  validate_presentation(p);
  if (max_cosets < 1) throw std::invalid_argument("coset_enumerate: need room for at least one coset");
  if (p.generators == 0) {
    CosetTable t;
    t.status = CosetTable::Status::Complete;
    t.live_cosets = 1;
    t.action = {{}};
    return t;
  }

  std::vector<std::vector<int>> relator_cols, subgroup_cols;
  for (const std::vector<int>& w : p.relators)
    if (!w.empty()) relator_cols.push_back(column_sequence(w));
  for (const std::vector<int>& w : p.subgroup)
    if (!w.empty()) subgroup_cols.push_back(column_sequence(w));

  Enumerator en(p.generators, max_cosets);
  en.make();
  try {
    for (const std::vector<int>& w : subgroup_cols) en.trace(0, w);
    for (size_t c = 0; c < en.row.size(); ++c) {
      if (en.find(c) != c) continue;
      for (const std::vector<int>& w : relator_cols) {
        en.trace(c, w);
        if (en.find(c) != c) break;
      }
      if (en.find(c) != c) continue;
      for (int col = 0; col < en.cols; ++col) {
        if (en.find(c) != c) break;
        if (en.row[c][col] != kNone) continue;
        size_t fresh = en.make();
        en.set_edge(c, col, fresh);
        en.process_pending();
      }
    }
  } catch (const CapHit&) {
    CosetTable t;
    t.status = CosetTable::Status::LimitExceeded;
    t.live_cosets = en.live;
    return t;
  }

  // Breadth-first renumbering from the subgroup coset.
  std::unordered_map<size_t, size_t> number;
  std::vector<size_t> order;
  size_t root = en.find(0);
  number.emplace(root, 0);
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head)
    for (int col = 0; col < en.cols; ++col) {
      size_t raw = en.row[order[head]][col];
      if (raw == kNone) throw std::logic_error("coset table: incomplete row after closure");
      size_t t = en.find(raw);
      if (number.emplace(t, order.size()).second) order.push_back(t);
    }
  if (order.size() != en.live) throw std::logic_error("coset table: unreachable live coset");

  CosetTable table;
  table.status = CosetTable::Status::Complete;
  table.live_cosets = en.live;
  table.action.assign(order.size(), std::vector<size_t>(en.cols));
  for (size_t c = 0; c < order.size(); ++c)
    for (int col = 0; col < en.cols; ++col) table.action[c][col] = number.at(en.find(en.row[order[c]][col]));

  // Safety net: the table must realize every relator at every coset and the
  // subgroup generators at coset 0.
  auto walk = [&](size_t c, const std::vector<int>& seq) {
    for (int col : seq) c = table.action[c][col];
    return c;
  };
  for (size_t c = 0; c < table.live_cosets; ++c)
    for (const std::vector<int>& w : relator_cols)
      if (walk(c, w) != c) throw std::logic_error("coset table: relator not realized");
  for (const std::vector<int>& w : subgroup_cols)
    if (walk(0, w) != 0) throw std::logic_error("coset table: subgroup generator moves coset 0");
  return table;
}

}  // namespace braidcong
