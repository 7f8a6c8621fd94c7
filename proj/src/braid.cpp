#include "braidcong/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace braidcong {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int i) {
  if (i < 0 || i + 1 >= degree) throw std::invalid_argument("transposition: index out of range");
  Permutation p = identity(degree);
  std::swap(p.img_[i], p.img_[i + 1]);
  return p;
}

Permutation Permutation::half_twist(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = degree - 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("permutation composition: degree mismatch");
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[i] = next.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::one_indexed() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

namespace {

void check_letter(int k, int strands) {
  if (k == 0) throw std::invalid_argument("braid word: zero letter");
  if (std::abs(k) > strands - 1)
    throw std::invalid_argument("braid word: letter index " + std::to_string(std::abs(k)) +
                                " out of range for " + std::to_string(strands) + " strands");
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> letters;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    size_t j = i;
    if (text[j] == '+' || text[j] == '-') ++j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j || j == i)
      throw std::invalid_argument("braid word: malformed token near '" + std::string(text.substr(i, 8)) + "'");
    letters.push_back(value);
    i = j;
  }
  return letters;
}

}  // namespace

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 2) throw std::invalid_argument("braid word: need at least 2 strands");
  BraidWord w{strands, parse_letters(text)};
  for (int k : w.letters) check_letter(k, strands);
  return w;
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w.letters[i]);
  }
  return out;
}

WordText parse_word_text(std::string_view text) {
  WordText out;
  size_t pos = text.find(';');
  if (pos != std::string_view::npos) {
    std::string_view head = text.substr(0, pos);
    size_t eq = head.find('=');
    auto strip = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    if (eq == std::string_view::npos || strip(head.substr(0, eq)) != "n")
      throw std::invalid_argument("braid word: malformed header (expected 'n=<int>;')");
    std::string_view num = strip(head.substr(eq + 1));
    int n = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw std::invalid_argument("braid word: malformed strand count in header");
    out.strands = n;
    text = text.substr(pos + 1);
  }
  out.letters = parse_letters(text);
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("compose: strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return compose(compose(g, w), inverse(g));
}

BraidWord power(const BraidWord& w, int e) {
  BraidWord base = e < 0 ? inverse(w) : w;
  int k = std::abs(e);
  BraidWord out{w.strands, {}};
  out.letters.reserve(base.letters.size() * k);
  for (int t = 0; t < k; ++t) out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (int k : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -k)
      out.letters.pop_back();
    else
      out.letters.push_back(k);
  }
  return out;
}

BraidWord pure_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_generator: need 1 <= i < j <= n");
  BraidWord w{n, {}};
  for (int t = j - 1; t > i; --t) w.letters.push_back(t);
  w.letters.push_back(i);
  w.letters.push_back(i);
  for (int t = i + 1; t <= j - 1; ++t) w.letters.push_back(-t);
  return w;
}

Permutation permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int k : w.letters) p = p.then(Permutation::transposition(w.strands, std::abs(k) - 1));
  return p;
}

std::vector<BraidWord> braid_relators(int n) {
  if (n < 2) throw std::invalid_argument("braid_relators: need n >= 2");
  std::vector<BraidWord> out;
  for (int i = 1; i + 1 <= n - 1; ++i) {
    BraidWord r{n, {i, i + 1, i, -(i + 1), -i, -(i + 1)}};
    out.push_back(std::move(r));
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      BraidWord r{n, {i, j, -i, -j}};
      out.push_back(std::move(r));
    }
  return out;
}

namespace {

// LHS a_{r,s}^{-1} a_{i,j} a_{r,s} composed with the inverse of the listed RHS.
BraidWord pure_relator(int n, int r, int s, int i, int j, const std::vector<std::pair<std::pair<int, int>, int>>& rhs) {
  BraidWord w = compose(compose(inverse(pure_generator(r, s, n)), pure_generator(i, j, n)), pure_generator(r, s, n));
  BraidWord rhs_word{n, {}};
  for (const auto& [pair, e] : rhs) rhs_word = compose(rhs_word, power(pure_generator(pair.first, pair.second, n), e));
  return compose(w, inverse(rhs_word));
}

}  // namespace

std::vector<BraidWord> pure_braid_relators(int n) {
  if (n < 3) throw std::invalid_argument("pure_braid_relators: need n >= 3");
  std::vector<BraidWord> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (r < s && s < i && i < j)  // disjoint, nested handled below
            out.push_back(pure_relator(n, r, s, i, j, {{{i, j}, 1}}));
          else if (i < r && r < s && s < j)
            out.push_back(pure_relator(n, r, s, i, j, {{{i, j}, 1}}));
          else if (r < s && s == i && i < j)
            out.push_back(pure_relator(n, r, s, i, j, {{{r, j}, 1}, {{i, j}, 1}, {{r, j}, -1}}));
          else if (r == i && i < s && s < j)
            out.push_back(pure_relator(n, r, s, i, j,
                                       {{{i, j}, 1}, {{s, j}, 1}, {{i, j}, 1}, {{s, j}, -1}, {{i, j}, -1}}));
          else if (r < i && i < s && s < j)
            out.push_back(pure_relator(n, r, s, i, j,
                                       {{{r, j}, 1},
                                        {{s, j}, 1},
                                        {{r, j}, -1},
                                        {{s, j}, -1},
                                        {{i, j}, 1},
                                        {{s, j}, 1},
                                        {{r, j}, 1},
                                        {{s, j}, -1},
                                        {{r, j}, -1}}));
        }
  return out;
}

}  // namespace braidcong
