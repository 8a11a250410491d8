#include "hhh/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "hhh/poly.hpp"

namespace hhh {

Permutation::Permutation(int n) : images_(std::max(n, 0)) {
  if (n < 1) throw Error(Errc::invalid_permutation, "permutation size must be positive");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  if (n < 1) throw Error(Errc::invalid_permutation, "empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw Error(Errc::invalid_permutation, "not a bijection of {1.." + std::to_string(n) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text, int n) {
  if (n < 1) throw Error(Errc::invalid_permutation, "permutation size must be positive");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::parse_error, msg + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected integer");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > n) {
        pos = start;
        fail("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (used[v]) {
        pos = start;
        fail("point " + std::to_string(v) + " repeated");
      }
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::special(const std::vector<int>& cycle_type) {
  std::vector<int> parts = cycle_type;
  std::sort(parts.rbegin(), parts.rend());
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  if (n < 1 || (!parts.empty() && parts.back() < 1)) throw Error(Errc::invalid_permutation, "invalid cycle type");
  std::vector<int> images(n);
  int start = 1;
  for (int len : parts) {
    for (int k = 0; k < len; ++k) images[start + k - 1] = start + (k + 1) % len;
    start += len;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n() != o.n()) throw Error(Errc::invalid_permutation, "size mismatch");
  std::vector<int> r(images_.size());
  for (int i = 1; i <= n(); ++i) r[i - 1] = (*this)(o(i));
  return Permutation(std::move(r));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n() + 1, false);
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << "(";
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ")";
  }
  return os.str();
}

std::vector<int> parse_cycle_type(std::string_view text, int n) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) cur += c;
    else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else throw Error(Errc::parse_error, "bad character in cycle type '" + std::string(text) + "'");
  }
  flush();
  std::sort(parts.rbegin(), parts.rend());
  if (parts.empty() || parts.back() < 1 || std::accumulate(parts.begin(), parts.end(), 0) != n)
    throw Error(Errc::invalid_permutation, "cycle type '" + std::string(text) + "' is not a partition of " + std::to_string(n));
  return parts;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace hhh
