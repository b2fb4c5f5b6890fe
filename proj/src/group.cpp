#include "caylap/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace caylap {

std::string GroupSpec::to_string() const {
  if (kind == "cyclic" || kind == "dihedral") {
    std::ostringstream os;
    os << kind << ":" << n;
    return os.str();
  }
  if (kind == "product") {
    std::ostringstream os;
    os << "product(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << ",";
      os << factors[i].to_string();
    }
    os << ")";
    return os.str();
  }
  return kind;
}

std::vector<int> perm_mul(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

std::string perm_name(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::ostringstream os;
  bool any = false;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)] || p[static_cast<std::size_t>(start)] == start)
      continue;
    os << "(";
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      os << (cur + 1);  // 1-based display
      cur = p[static_cast<std::size_t>(cur)];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

void Group::finish() {
  const int n = order();
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    if (mul_[0][static_cast<std::size_t>(g)] != g ||
        mul_[static_cast<std::size_t>(g)][0] != g)
      throw std::invalid_argument("Group: element 0 is not a two-sided identity");
    for (int h = 0; h < n; ++h)
      if (mul_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == 0 &&
          mul_[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)] == 0) {
        inv_[static_cast<std::size_t>(g)] = h;
        break;
      }
    if (inv_[static_cast<std::size_t>(g)] < 0)
      throw std::invalid_argument("Group: element without a two-sided inverse");
  }
}

void Group::validate() const {
  const int n = order();
  if (n < 1) throw std::invalid_argument("Group: empty table");
  if (static_cast<int>(names_.size()) != n)
    throw std::invalid_argument("Group: names/order mismatch");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Group: ragged multiplication table");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("Group: table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("Group: multiplication is not associative");
}

bool Group::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int Group::element_order(int g) const {
  int k = 1, cur = g;
  while (cur != 0) {
    cur = mul(cur, g);
    ++k;
  }
  return k;
}

int Group::element_by_name(const std::string& label) const {
  for (int g = 0; g < order(); ++g)
    if (names_[static_cast<std::size_t>(g)] == label) return g;
  auto it = aliases_.find(label);
  if (it != aliases_.end()) return it->second;
  if (!label.empty() &&
      std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int idx = std::stoi(label);
    if (idx >= 0 && idx < order()) return idx;
  }
  throw std::invalid_argument("unknown group element '" + label + "'");
}

const std::vector<std::vector<int>>& Group::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  const int n = order();
  class_index_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    if (class_index_[static_cast<std::size_t>(g)] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      int c = mul(mul(h, g), inv(h));
      if (class_index_[static_cast<std::size_t>(c)] < 0) {
        class_index_[static_cast<std::size_t>(c)] = static_cast<int>(classes_.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

int Group::class_of(int g) const {
  conjugacy_classes();
  return class_index_[static_cast<std::size_t>(g)];
}

Group Group::cyclic(int n) {
  if (n < 2) throw std::invalid_argument("cyclic: n must be >= 2");
  Group g;
  g.spec_ = {"cyclic", n, {}};
  g.cyclotomic_order_ = n <= 2 ? 1 : n;
  g.mul_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  g.names_.push_back("e");
  for (int k = 1; k < n; ++k) {
    std::ostringstream os;
    os << "a";
    if (k > 1) os << "^" << k;
    g.names_.push_back(os.str());
    g.aliases_["a" + std::to_string(k)] = k;  // accept a4 for a^4
  }
  g.finish();
  return g;
}

Group Group::dihedral(int n) {
  if (n < 2) throw std::invalid_argument("dihedral: n must be >= 2");
  Group g;
  g.spec_ = {"dihedral", n, {}};
  g.cyclotomic_order_ = n == 2 ? 1 : n;
  const int N = 2 * n;
  auto idx = [n](int b, int k) { return b * n + ((k % n + n) % n); };
  g.mul_.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
  // Elements are s^b r^k; r s = s r^{-1}.
  for (int b1 = 0; b1 < 2; ++b1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int k2 = 0; k2 < n; ++k2) {
          int r = b2 == 0 ? idx(b1, k1 + k2) : idx(b1 ^ 1, k2 - k1);
          g.mul_[static_cast<std::size_t>(idx(b1, k1))][static_cast<std::size_t>(idx(b2, k2))] = r;
        }
  for (int b = 0; b < 2; ++b)
    for (int k = 0; k < n; ++k) {
      std::ostringstream os;
      if (b == 0) {
        if (k == 0) os << "e";
        else { os << "r"; if (k > 1) os << "^" << k; }
      } else {
        os << "s";
        if (k > 0) { os << "r"; if (k > 1) os << "^" << k; }
      }
      g.names_.push_back(os.str());
      if (k > 1) {  // accept r3 for r^3, sr3 for sr^3
        g.aliases_[(b == 0 ? "r" : "sr") + std::to_string(k)] = b * n + k;
      }
    }
  g.finish();
  return g;
}

Group Group::klein() {
  Group g;
  g.spec_ = {"klein", 0, {}};
  g.cyclotomic_order_ = 1;
  g.mul_.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.mul_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
  g.names_ = {"e", "a", "b", "ab"};
  g.finish();
  return g;
}

namespace {

// Shared builder for the permutation groups: given generator permutations,
// enumerate by breadth-first right multiplication (or take a fixed element
// list) and fill the table through an index map.
Group perm_group(const std::vector<std::vector<int>>& elements,
                 std::vector<std::string> names, GroupSpec spec,
                 std::map<std::string, int> aliases) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index.at(perm_mul(elements[static_cast<std::size_t>(i)],
                            elements[static_cast<std::size_t>(j)]));
  return Group::from_table(std::move(mul), std::move(names), std::move(spec), std::move(aliases));
}

}  // namespace

Group Group::a4() {
  const std::vector<int> t{1, 2, 0, 3};  // (123)
  const std::vector<int> x{1, 0, 3, 2};  // (12)(34)
  std::vector<std::vector<int>> elems{{0, 1, 2, 3}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& gen : {t, x}) {
      std::vector<int> cand = perm_mul(elems[head], gen);
      if (std::find(elems.begin(), elems.end(), cand) == elems.end())
        elems.push_back(std::move(cand));
    }
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(perm_name(p));
  std::map<std::string, int> aliases{{"t", 1}, {"x", 0}};
  // BFS from the identity visits e, then e*t and e*x — resolve the alias
  // targets by value rather than trusting discovery order.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == t) aliases["t"] = static_cast<int>(i);
    if (elems[i] == x) aliases["x"] = static_cast<int>(i);
  }
  Group g = perm_group(elems, std::move(names), {"a4", 0, {}}, std::move(aliases));
  g.cyclotomic_order_ = 3;  // the degree-1 characters take values in Q(omega)
  return g;
}

Group Group::s4() {
  std::vector<std::vector<int>> elems;
  std::vector<int> p{0, 1, 2, 3};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : elems) names.push_back(perm_name(q));
  std::map<std::string, int> aliases;
  const std::vector<int> tau{1, 0, 2, 3};    // (12)
  const std::vector<int> sigma{0, 2, 3, 1};  // (234)
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == tau) aliases["tau"] = static_cast<int>(i);
    if (elems[i] == sigma) aliases["sigma"] = static_cast<int>(i);
  }
  return perm_group(elems, std::move(names), {"s4", 0, {}}, std::move(aliases));  // rational entries
}

Group Group::q8() {
  // Elements (sign, axis), axis 0=e 1=i 2=j 3=k; index = 2*axis + (sign<0).
  auto idx = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
  // axis multiplication: (sign, axis) for axis_a * axis_b
  auto axmul = [](int a, int b) -> std::pair<int, int> {
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (a == b) return {-1, 0};
    // i*j=k, j*k=i, k*i=j (cyclic); reversed order flips the sign.
    if ((a == 1 && b == 2)) return {1, 3};
    if ((a == 2 && b == 3)) return {1, 1};
    if ((a == 3 && b == 1)) return {1, 2};
    if ((a == 2 && b == 1)) return {-1, 3};
    if ((a == 3 && b == 2)) return {-1, 1};
    return {-1, 2};  // a==1, b==3
  };
  Group g;
  g.spec_ = {"q8", 0, {}};
  g.cyclotomic_order_ = 4;  // the degree-2 irrep needs zeta_4
  g.mul_.assign(8, std::vector<int>(8));
  for (int sa = 1; sa >= -1; sa -= 2)
    for (int aa = 0; aa < 4; ++aa)
      for (int sb = 1; sb >= -1; sb -= 2)
        for (int ab = 0; ab < 4; ++ab) {
          auto [s, ax] = axmul(aa, ab);
          g.mul_[static_cast<std::size_t>(idx(sa, aa))][static_cast<std::size_t>(idx(sb, ab))] =
              idx(sa * sb * s, ax);
        }
  g.names_ = {"e", "-e", "i", "-i", "j", "-j", "k", "-k"};
  g.finish();
  return g;
}

Group Group::product(const Group& g1, const Group& g2) {
  Group g;
  g.spec_ = {"product", 0, {g1.spec(), g2.spec()}};
  g.cyclotomic_order_ = std::lcm(g1.cyclotomic_order(), g2.cyclotomic_order());
  const int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  g.mul_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          g.mul_[static_cast<std::size_t>(a1 * n2 + a2)][static_cast<std::size_t>(b1 * n2 + b2)] =
              g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      g.names_.push_back("(" + g1.name(a1) + "," + g2.name(a2) + ")");
  g.finish();
  return g;
}

Group Group::from_table(std::vector<std::vector<int>> mul,
                        std::vector<std::string> names, GroupSpec spec) {
  return from_table(std::move(mul), std::move(names), std::move(spec), {});
}

Group Group::from_table(std::vector<std::vector<int>> mul,
                        std::vector<std::string> names, GroupSpec spec,
                        std::map<std::string, int> aliases) {
  Group g;
  g.mul_ = std::move(mul);
  g.names_ = std::move(names);
  g.spec_ = std::move(spec);
  g.aliases_ = std::move(aliases);
  g.validate();
  g.finish();
  return g;
}

namespace {

Group group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
    throw std::invalid_argument("explicit group JSON needs {\"order\", \"mul\"[, \"names\"]}");
  int n = j.at("order").get<int>();
  auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(mul.size()) != n)
    throw std::invalid_argument("explicit group JSON: mul has wrong number of rows");
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != n)
      throw std::invalid_argument("explicit group JSON: names length mismatch");
  } else {
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  }
  return Group::from_table(std::move(mul), std::move(names), {"explicit", 0, {}});
}

std::string strip_spaces(const std::string& s) {
  std::string r;
  for (char c : s)
    if (c != ' ' && c != '\t') r.push_back(c);
  return r;
}

// Split "a,b,c" at top-level commas (parentheses nest).
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Group parse_group(const std::string& descriptor) {
  std::string d = strip_spaces(descriptor);
  if (d.empty()) throw std::invalid_argument("empty group descriptor");

  if (d[0] == '{') return group_from_json(nlohmann::json::parse(d));
  if (d[0] == '@') {
    std::ifstream in(d.substr(1));
    if (!in) throw std::invalid_argument("cannot open group file '" + d.substr(1) + "'");
    nlohmann::json j;
    in >> j;
    return group_from_json(j);
  }

  if (d == "klein") return Group::klein();
  if (d == "a4") return Group::a4();
  if (d == "s4") return Group::s4();
  if (d == "q8") return Group::q8();

  auto parametric = [&](const std::string& head) -> int {
    // head:N or head(N)
    if (d.rfind(head + ":", 0) == 0) return std::stoi(d.substr(head.size() + 1));
    if (d.rfind(head + "(", 0) == 0 && d.back() == ')')
      return std::stoi(d.substr(head.size() + 1, d.size() - head.size() - 2));
    return -1;
  };
  if (int n = parametric("cyclic"); n >= 0) return Group::cyclic(n);
  if (int n = parametric("dihedral"); n >= 0) return Group::dihedral(n);

  if (d.rfind("product(", 0) == 0 && d.back() == ')') {
    auto parts = split_top(d.substr(8, d.size() - 9));
    if (parts.size() < 2)
      throw std::invalid_argument("product needs at least two factors");
    Group g = parse_group(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = Group::product(g, parse_group(parts[i]));
    return g;
  }

  throw std::invalid_argument("unrecognized group descriptor '" + descriptor + "'");
}

}  // namespace caylap
