#include "cominkl/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cominkl {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  return '?';
}

Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  throw std::invalid_argument("unknown type '" + std::string(s) + "' (expected A, B or C)");
}

std::vector<int> CoxeterType::generators() const {
  std::vector<int> g;
  for (int s = first_generator(); s <= last_generator(); ++s) g.push_back(s);
  return g;
}

void CoxeterType::validate() const {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (degree() > kMaxDegree)
    throw std::invalid_argument(name() + ": rank exceeds the supported maximum for group computations");
}

std::string CoxeterType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

std::string word_to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

int GroupElement::operator()(int i) const {
  int a = std::abs(i);
  if (a < 1 || a > deg) throw std::out_of_range("GroupElement: argument out of range");
  int r = img[a - 1];
  return i < 0 ? -r : r;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
  std::uint64_t h = 1469598103934665603ull ^ g.deg;
  for (int i = 0; i < g.deg; ++i) {
    h ^= static_cast<std::uint8_t>(g.img[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

GroupElement identity(const CoxeterType& t) {
  t.validate();
  GroupElement g;
  g.deg = static_cast<std::uint8_t>(t.degree());
  for (int i = 0; i < g.deg; ++i) g.img[i] = static_cast<std::int8_t>(i + 1);
  return g;
}

GroupElement generator(const CoxeterType& t, int s) { return mul_right(t, identity(t), s); }

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.deg != b.deg) throw std::invalid_argument("compose: degree mismatch");
  GroupElement r;
  r.deg = a.deg;
  for (int i = 1; i <= a.deg; ++i) r.img[i - 1] = static_cast<std::int8_t>(a(b(i)));
  return r;
}

GroupElement inverse(const GroupElement& a) {
  GroupElement r;
  r.deg = a.deg;
  for (int i = 1; i <= a.deg; ++i) {
    int j = a(i);
    r.img[std::abs(j) - 1] = static_cast<std::int8_t>(j < 0 ? -i : i);
  }
  return r;
}

GroupElement mul_right(const CoxeterType& t, const GroupElement& w, int s) {
  if (!t.is_generator(s)) throw std::invalid_argument("generator " + std::to_string(s) + " not in " + t.name());
  GroupElement r = w;
  if (t.family != Family::A && s == 0) {
    r.img[0] = static_cast<std::int8_t>(-r.img[0]);
  } else {
    std::swap(r.img[s - 1], r.img[s]);
  }
  return r;
}

GroupElement mul_left(const CoxeterType& t, int s, const GroupElement& w) {
  if (!t.is_generator(s)) throw std::invalid_argument("generator " + std::to_string(s) + " not in " + t.name());
  GroupElement r = w;
  for (int i = 0; i < r.deg; ++i) {
    int x = r.img[i];
    int a = std::abs(x);
    int sign = x < 0 ? -1 : 1;
    if (t.family != Family::A && s == 0) {
      if (a == 1) r.img[i] = static_cast<std::int8_t>(-x);
    } else if (a == s) {
      r.img[i] = static_cast<std::int8_t>(sign * (s + 1));
    } else if (a == s + 1) {
      r.img[i] = static_cast<std::int8_t>(sign * s);
    }
  }
  return r;
}

int length(const CoxeterType& t, const GroupElement& w) {
  int n = w.deg;
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.img[i] > w.img[j]) ++len;
  if (t.family != Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (w.img[i] + w.img[j] < 0) ++len;
  }
  return len;
}

GroupElement evaluate_word(const CoxeterType& t, const Word& w) {
  GroupElement g = identity(t);
  for (int s : w) g = mul_right(t, g, s);
  return g;
}

bool is_reduced(const CoxeterType& t, const Word& w) {
  return length(t, evaluate_word(t, w)) == static_cast<int>(w.size());
}

Word reduced_word(const CoxeterType& t, const GroupElement& w) {
  Word out;
  GroupElement g = w;
  int len = length(t, g);
  while (len > 0) {
    bool found = false;
    for (int s : t.generators()) {
      GroupElement h = mul_right(t, g, s);
      if (length(t, h) < len) {
        out.push_back(s);
        g = h;
        --len;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string element_to_string(const GroupElement& w) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < w.deg; ++i) os << (i ? "," : "") << int(w.img[i]);
  os << "]";
  return os.str();
}

namespace {

void sort_by_length(const CoxeterType& t, std::vector<GroupElement>& v) {
  std::vector<std::pair<int, GroupElement>> tmp;
  tmp.reserve(v.size());
  for (auto& g : v) tmp.emplace_back(length(t, g), g);
  std::sort(tmp.begin(), tmp.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = tmp[i].second;
}

}  // namespace

std::vector<GroupElement> bruhat_interval_below(const CoxeterType& t, const GroupElement& w) {
  std::set<GroupElement> seen{identity(t)};
  for (int s : reduced_word(t, w)) {
    std::vector<GroupElement> add;
    for (auto& g : seen) add.push_back(mul_right(t, g, s));
    seen.insert(add.begin(), add.end());
  }
  std::vector<GroupElement> out(seen.begin(), seen.end());
  sort_by_length(t, out);
  return out;
}

std::vector<GroupElement> all_elements(const CoxeterType& t) {
  std::set<GroupElement> seen{identity(t)};
  std::vector<GroupElement> frontier{identity(t)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (auto& g : frontier)
      for (int s : t.generators()) {
        auto h = mul_right(t, g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out(seen.begin(), seen.end());
  sort_by_length(t, out);
  return out;
}

bool is_min_coset_rep(const CoxeterType& t, const GroupElement& w, std::uint64_t parabolic) {
  int len = length(t, w);
  for (int s : t.generators())
    if ((parabolic >> s) & 1u)
      if (length(t, mul_left(t, s, w)) < len) return false;
  return true;
}

std::uint64_t cominuscule_parabolic(const CoxeterType& t) {
  if (t.family == Family::A) throw std::invalid_argument("cominuscule quotient needs type B or C");
  std::uint64_t m = 0;
  for (int s = 1; s < t.rank; ++s) m |= 1ull << s;
  return m;
}

std::uint64_t quadric_parabolic(const CoxeterType& t) {
  if (t.family == Family::A) throw std::invalid_argument("quadric quotient needs type B or C");
  std::uint64_t m = 0;
  for (int s = 0; s < t.rank - 1; ++s) m |= 1ull << s;
  return m;
}

CosetRep CosetRep::from_elements(const std::vector<int>& rows) {
  CosetRep x;
  for (int t : rows) {
    if (t < 1 || t > 64) throw std::invalid_argument("row length out of range: " + std::to_string(t));
    if (x.contains(t)) throw std::invalid_argument("repeated row length: " + std::to_string(t));
    x.mask |= 1ull << (t - 1);
  }
  return x;
}

CosetRep CosetRep::parse(std::string_view text) {
  auto a = text.find('{');
  auto b = text.rfind('}');
  if (a == std::string_view::npos || b == std::string_view::npos || b < a)
    throw std::invalid_argument("expected a set like {4,2,1}");
  std::vector<int> rows;
  std::string body(text.substr(a + 1, b - a - 1));
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    rows.push_back(std::stoi(item));
  }
  return from_elements(rows);
}

std::vector<int> CosetRep::elements() const {
  std::vector<int> out;
  for (int t = 64; t >= 1; --t)
    if (contains(t)) out.push_back(t);
  return out;
}

int CosetRep::size() const { return std::popcount(mask); }

int CosetRep::length() const {
  int s = 0;
  for (int t : elements()) s += t;
  return s;
}

int CosetRep::max_element() const { return mask == 0 ? 0 : 64 - std::countl_zero(mask); }

std::string CosetRep::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int t : elements()) {
    if (!first) s += ",";
    s += std::to_string(t);
    first = false;
  }
  return s + "}";
}

CosetRep set_union(CosetRep a, CosetRep b) { return {a.mask | b.mask}; }
CosetRep set_intersection(CosetRep a, CosetRep b) { return {a.mask & b.mask}; }
CosetRep set_difference(CosetRep a, CosetRep b) { return {a.mask & ~b.mask}; }

CosetRep subset_action(CosetRep x, int s) {
  if (s < 0 || s > 62) throw std::invalid_argument("generator out of range");
  if (s == 0) return {x.mask ^ 1u};
  bool lo = x.contains(s), hi = x.contains(s + 1);
  if (lo == hi) return x;
  return {x.mask ^ (3ull << (s - 1))};
}

bool bruhat_leq(CosetRep y, CosetRep x) {
  auto ey = y.elements(), ex = x.elements();
  if (ey.size() > ex.size()) return false;
  for (std::size_t i = 0; i < ey.size(); ++i)
    if (ey[i] > ex[i]) return false;
  return true;
}

Word row_word(CosetRep x) {
  Word w;
  for (int t : x.elements())
    for (int j = 0; j < t; ++j) w.push_back(j);
  return w;
}

Word column_word(CosetRep x) {
  // Row r (0-based) is shifted 2r boxes right and holds entries 0..t_r-1.
  auto rows = x.elements();
  int max_col = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) max_col = std::max(max_col, 2 * static_cast<int>(r) + rows[r] - 1);
  Word w;
  for (int col = 0; col <= max_col; ++col)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int entry = col - 2 * static_cast<int>(r);
      if (entry >= 0 && entry < rows[r]) w.push_back(entry);
    }
  return w;
}

std::uint64_t zeta(CosetRep x) {
  if (x.mask >> 63) throw std::overflow_error("zeta: row length too large");
  return x.mask << 1;
}

CosetRep negative_positions(const GroupElement& w) {
  CosetRep x;
  for (int i = 1; i <= w.deg; ++i)
    if (w(i) < 0) x.mask |= 1ull << (i - 1);
  return x;
}

CosetRep to_coset_rep(const CoxeterType& t, const GroupElement& w) {
  if (!is_min_coset_rep(t, w, cominuscule_parabolic(t)))
    throw std::invalid_argument("not a minimal coset representative: " + element_to_string(w));
  return negative_positions(w);
}

GroupElement coset_rep_element(const CoxeterType& t, CosetRep x) {
  if (x.max_element() > t.rank) throw std::invalid_argument("row length exceeds rank: " + x.to_string());
  return evaluate_word(t, row_word(x));
}

}  // namespace cominkl
