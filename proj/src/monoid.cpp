#include "notakto/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace notakto {

MonoidElement MonoidElement::reduce(unsigned i, unsigned j, unsigned k, unsigned l) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (i >= 2) {  // a^2 = 1
      i %= 2;
      changed = true;
    }
    while (j >= 3) {  // b^3 = b
      j -= 2;
      changed = true;
    }
    if (j >= 2 && (k >= 1 || l >= 1)) {  // b^2 c = c, b^2 d = d
      j -= 2;
      changed = true;
    }
    while (l >= 2) {  // d^2 = c^2
      l -= 2;
      k += 2;
      changed = true;
    }
    while (k >= 1 && l >= 1) {  // c d = a d
      k -= 1;
      i += 1;
      changed = true;
    }
    while (k >= 3) {  // c^3 = a c^2
      k -= 1;
      i += 1;
      changed = true;
    }
  }
  MonoidElement x;
  x.exps_ = {static_cast<unsigned char>(i), static_cast<unsigned char>(j),
             static_cast<unsigned char>(k), static_cast<unsigned char>(l)};
  return x;
}

MonoidElement MonoidElement::operator*(const MonoidElement& other) const {
  return reduce(exps_[0] + other.exps_[0], exps_[1] + other.exps_[1],
                exps_[2] + other.exps_[2], exps_[3] + other.exps_[3]);
}

MonoidElement MonoidElement::pow(unsigned n) const {
  MonoidElement out;
  for (unsigned step = 0; step < n; ++step) out *= *this;
  return out;
}

int MonoidElement::index() const {
  const auto& all = elements();
  return static_cast<int>(std::lower_bound(all.begin(), all.end(), *this) - all.begin());
}

MonoidElement multiply(const MonoidElement& x, const MonoidElement& y) { return x * y; }

const std::vector<MonoidElement>& elements() {
  static const std::vector<MonoidElement> all = [] {
    const std::vector<MonoidElement> gens = {MonoidElement::a(), MonoidElement::b(),
                                             MonoidElement::c(), MonoidElement::d()};
    std::set<MonoidElement> seen = {MonoidElement::identity()};
    std::vector<MonoidElement> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<MonoidElement> next;
      for (const auto& x : frontier)
        for (const auto& g : gens)
          if (seen.insert(x * g).second) next.push_back(x * g);
      frontier = std::move(next);
    }
    return std::vector<MonoidElement>(seen.begin(), seen.end());
  }();
  return all;
}

const std::vector<MonoidElement>& p_set() {
  static const std::vector<MonoidElement> p = [] {
    std::vector<MonoidElement> v = {MonoidElement::a(), MonoidElement::b().pow(2),
                                    MonoidElement::b() * MonoidElement::c(),
                                    MonoidElement::c().pow(2)};
    std::sort(v.begin(), v.end());
    return v;
  }();
  return p;
}

bool is_p(const MonoidElement& x) {
  const auto& p = p_set();
  return std::binary_search(p.begin(), p.end(), x);
}

MonoidElement parse_element(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty monoid element");
  if (text == "1") return MonoidElement::identity();
  std::array<unsigned, 4> exps{};
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char g = text[pos];
    if (g < 'a' || g > 'd')
      throw std::invalid_argument("unknown generator '" + std::string(1, g) + "' in \"" +
                                  std::string(text) + "\"");
    ++pos;
    unsigned n = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, n);
      if (ec != std::errc() || ptr == first || n > 1024)
        throw std::invalid_argument("bad exponent in \"" + std::string(text) + "\"");
      pos += static_cast<std::size_t>(ptr - first);
    }
    exps[g - 'a'] += n;
  }
  return MonoidElement::reduce(exps[0], exps[1], exps[2], exps[3]);
}

std::string render_element(const MonoidElement& x) {
  std::string out;
  for (int g = 0; g < 4; ++g) {
    const int e = x.exponents()[g];
    if (e == 0) continue;
    out += static_cast<char>('a' + g);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string multiplication_table_csv() {
  std::string out = "*";
  for (const auto& y : elements()) out += "," + render_element(y);
  out += "\n";
  for (const auto& x : elements()) {
    out += render_element(x);
    for (const auto& y : elements()) out += "," + render_element(x * y);
    out += "\n";
  }
  return out;
}

}  // namespace notakto
