#include "gsurf/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gsurf/errors.hpp"
#include "json.hpp"

namespace gsurf {

namespace {

const char* kKindNames[] = {
    "NotAGroup",
    "Abelian",
    "CapExceeded",
    "InvalidParameter",
    "Io",
    "CentralElement",
    "NotInjectiveOnCommutators",
    "IdentityViolation",
    "MonotonicityViolation",
    "DivisibilityViolation",
    "InconsistentGonality",
    "MoreThanTwoValencies",
    "DiamondViolation",
    "DisconnectedIncidenceGraph",
    "NoMatch",
};

}  // namespace

const char* error_kind_name(ErrorKind k) { return kKindNames[(int)k]; }

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAGroup:
    case ErrorKind::Abelian:
    case ErrorKind::CapExceeded:
    case ErrorKind::InvalidParameter:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

// ---- core construction -----------------------------------------------------

namespace {

void compute_structure(Group& g, bool allow_abelian) {
  const int n = g.n;
  g.inv.assign(n, -1);
  for (int32_t a = 0; a < n; ++a) {
    for (int32_t b = 0; b < n; ++b) {
      if (g.op(a, b) == 0) {
        if (g.op(b, a) != 0)
          fail(ErrorKind::NotAGroup,
               "element " + std::to_string(a) + " has a right inverse " +
                   std::to_string(b) + " that is not a left inverse");
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0)
      fail(ErrorKind::NotAGroup,
           "element " + std::to_string(a) + " has no inverse");
  }

  g.central.assign(n, 0);
  g.center.clear();
  for (int32_t x = 0; x < n; ++x) {
    bool c = true;
    for (int32_t y = 0; y < n && c; ++y) c = g.commutes(x, y);
    if (c) {
      g.central[x] = 1;
      g.center.push_back(x);
    }
  }
  if (!allow_abelian && (int)g.center.size() == n)
    fail(ErrorKind::Abelian, "group of order " + std::to_string(n) +
                                 " is abelian; the complex is empty");

  g.class_of.assign(n, -1);
  g.classes.clear();
  for (int32_t x = 0; x < n; ++x) {
    if (g.class_of[x] >= 0) continue;
    int32_t idx = (int32_t)g.classes.size();
    std::vector<int32_t> cls;
    for (int32_t h = 0; h < n; ++h) {
      int32_t y = g.conj(x, h);
      if (g.class_of[y] < 0) {
        g.class_of[y] = idx;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.classes.push_back(std::move(cls));
  }

  if (g.names.empty()) {
    g.names.resize(n);
    for (int i = 0; i < n; ++i) g.names[i] = "g" + std::to_string(i);
  }
}

Group build_from_table(std::vector<std::vector<int32_t>> table,
                       std::vector<std::string> names, bool allow_abelian,
                       std::string group_name) {
  const int n = (int)table.size();
  if (n < 1) fail(ErrorKind::NotAGroup, "empty table");
  if (n > kMaxDenseOrder)
    fail(ErrorKind::InvalidParameter,
         "order " + std::to_string(n) + " exceeds dense-table cap " +
             std::to_string(kMaxDenseOrder));
  for (int i = 0; i < n; ++i) {
    if ((int)table[i].size() != n)
      fail(ErrorKind::NotAGroup, "row " + std::to_string(i) + " has " +
                                     std::to_string(table[i].size()) +
                                     " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(ErrorKind::NotAGroup,
             "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") = " + std::to_string(table[i][j]) + " out of range");
  }
  if (!names.empty() && (int)names.size() != n)
    fail(ErrorKind::InvalidParameter, "names size does not match order");

  // Rows and columns must be permutations (cancellation laws).
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[table[i][j]])
        fail(ErrorKind::NotAGroup, "row " + std::to_string(i) +
                                       " is not a permutation (duplicate " +
                                       std::to_string(table[i][j]) + ")");
      seen[table[i][j]] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[table[i][j]])
        fail(ErrorKind::NotAGroup, "column " + std::to_string(j) +
                                       " is not a permutation (duplicate " +
                                       std::to_string(table[i][j]) + ")");
      seen[table[i][j]] = 1;
    }
  }

  // Locate the two-sided identity.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) fail(ErrorKind::NotAGroup, "no two-sided identity element");

  // Relabel so the identity is element 0 (swap 0 <-> e).
  if (e != 0) {
    auto relabel = [&](int32_t v) -> int32_t {
      if (v == e) return 0;
      if (v == 0) return e;
      return v;
    };
    std::vector<std::vector<int32_t>> t2(n, std::vector<int32_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t2[relabel(i)][relabel(j)] = relabel(table[i][j]);
    table.swap(t2);
    if (!names.empty()) std::swap(names[0], names[e]);
  }

  bool assoc_verified = n <= kAssocVerifyMax;
  if (assoc_verified) {
    for (int32_t a = 0; a < n; ++a)
      for (int32_t b = 0; b < n; ++b)
        for (int32_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            fail(ErrorKind::NotAGroup,
                 "associativity fails at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
  }

  Group g;
  g.n = n;
  g.name = group_name.empty() ? "table:" + std::to_string(n) : group_name;
  g.associativity_verified = assoc_verified;
  g.mul.resize((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul[(size_t)i * n + j] = table[i][j];
  g.names = std::move(names);
  compute_structure(g, allow_abelian);
  return g;
}

}  // namespace

int Group::order_of(int32_t x) const {
  int32_t p = x;
  int k = 1;
  while (p != 0) {
    p = op(p, x);
    ++k;
  }
  return k;
}

std::vector<int32_t> Group::centralizer(int32_t x) const {
  std::vector<int32_t> out;
  for (int32_t y = 0; y < n; ++y)
    if (commutes(x, y)) out.push_back(y);
  return out;
}

int Group::centralizer_size(int32_t x) const {
  return n / (int)conjugacy_class(x).size();
}

Group from_cayley_table(const std::vector<std::vector<int32_t>>& table,
                        const std::vector<std::string>& names,
                        const std::string& group_name) {
  return build_from_table(table, names, /*allow_abelian=*/false, group_name);
}

Group from_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& ex) {
    fail(ErrorKind::Io, "cannot parse " + path + ": " + ex.what());
  }
  if (!doc.contains("order") || !doc.contains("table"))
    fail(ErrorKind::Io, path + ": expected fields \"order\" and \"table\"");
  int n = doc["order"].get<int>();
  std::vector<std::vector<int32_t>> table;
  try {
    table = doc["table"].get<std::vector<std::vector<int32_t>>>();
  } catch (const std::exception& ex) {
    fail(ErrorKind::Io, path + ": bad \"table\": " + ex.what());
  }
  if ((int)table.size() != n)
    fail(ErrorKind::NotAGroup, path + ": table size does not match order");
  std::vector<std::string> names;
  if (doc.contains("names"))
    names = doc["names"].get<std::vector<std::string>>();
  std::string stem = path;
  if (auto pos = stem.find_last_of('/'); pos != std::string::npos)
    stem = stem.substr(pos + 1);
  return from_cayley_table(table, names, stem);
}

// ---- permutations ----------------------------------------------------------

namespace {

using Perm = std::vector<int32_t>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

int64_t factorial(int n) {
  int64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    // saturate far above every cap in use instead of overflowing
    if (f > (int64_t)1 << 40) return f;
    f *= i;
  }
  return f;
}

// Lexicographic rank of a permutation of 0..n-1 (factorial number system).
int64_t lehmer_rank(const Perm& p) {
  const int n = (int)p.size();
  int64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++c;
    r += c * factorial(n - 1 - i);
  }
  return r;
}

Perm lehmer_unrank(int n, int64_t r) {
  std::vector<int32_t> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    int64_t f = factorial(n - 1 - i);
    int idx = (int)(r / f);
    r %= f;
    p[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return p;
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[j] < p[i]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

std::string cycle_notation_name(const std::vector<int32_t>& perm) {
  const int n = (int)perm.size();
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);  // display is 1-based
      first = false;
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<int32_t> parse_cycle_notation(const std::string& text,
                                          int min_degree) {
  std::vector<std::vector<int32_t>> cycles;
  int max_point = min_degree;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail(ErrorKind::InvalidParameter,
           "cycle notation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int32_t> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
      if (i >= text.size())
        fail(ErrorKind::InvalidParameter,
             "cycle notation: unterminated cycle in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!isdigit((unsigned char)text[i]))
        fail(ErrorKind::InvalidParameter,
             "cycle notation: expected point in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && isdigit((unsigned char)text[i]))
        v = v * 10 + (text[i++] - '0');
      if (v < 1)
        fail(ErrorKind::InvalidParameter, "cycle notation: points are >= 1");
      cyc.push_back(v - 1);
      max_point = std::max(max_point, v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::vector<int32_t> perm(max_point);
  for (int p = 0; p < max_point; ++p) perm[p] = p;
  std::vector<char> used(max_point, 0);
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int32_t from = cyc[k];
      int32_t to = cyc[(k + 1) % cyc.size()];
      if (used[from])
        fail(ErrorKind::InvalidParameter,
             "cycle notation: point " + std::to_string(from + 1) +
                 " appears twice in \"" + text + "\"");
      used[from] = 1;
      perm[from] = to;
    }
  }
  return perm;
}

namespace {

Group group_from_perm_list(std::vector<Perm> elems, const std::string& name) {
  const int n = (int)elems.size();
  if (n > kMaxDenseOrder)
    fail(ErrorKind::CapExceeded,
         "order " + std::to_string(n) + " exceeds dense-table cap");
  std::map<Perm, int32_t> index;
  for (int32_t i = 0; i < n; ++i) index[elems[i]] = i;

  Group g;
  g.n = n;
  g.name = name;
  g.associativity_verified = true;  // inherited from permutation composition
  g.mul.resize((size_t)n * n);
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]));
      if (it == index.end())
        fail(ErrorKind::NotAGroup, "permutation set is not closed");
      g.mul[(size_t)a * n + b] = it->second;
    }
  g.names.resize(n);
  for (int i = 0; i < n; ++i) g.names[i] = cycle_notation_name(elems[i]);
  compute_structure(g, /*allow_abelian=*/false);
  return g;
}

}  // namespace

Group from_permutations(const std::vector<std::vector<int32_t>>& gens, int cap,
                        const std::string& group_name) {
  if (gens.empty()) fail(ErrorKind::InvalidParameter, "no generators");
  size_t degree = 0;
  for (const auto& p : gens) degree = std::max(degree, p.size());
  std::vector<Perm> norm;
  for (const auto& p : gens) {
    Perm q(degree);
    for (size_t i = 0; i < degree; ++i)
      q[i] = i < p.size() ? p[i] : (int32_t)i;
    std::vector<char> seen(degree, 0);
    for (int32_t v : q) {
      if (v < 0 || v >= (int32_t)degree || seen[v])
        fail(ErrorKind::InvalidParameter, "generator is not a permutation");
      seen[v] = 1;
    }
    norm.push_back(std::move(q));
  }

  Perm id(degree);
  for (size_t i = 0; i < degree; ++i) id[i] = (int32_t)i;
  std::vector<Perm> elems{id};
  std::map<Perm, int32_t> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : norm) {
      Perm p = compose(elems[head], gperm);
      if (index.emplace(p, (int32_t)elems.size()).second) {
        elems.push_back(std::move(p));
        if ((int)elems.size() > cap)
          fail(ErrorKind::CapExceeded,
               "generated group exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::string name = group_name.empty()
                         ? "perm-closure:" + std::to_string(elems.size())
                         : group_name;
  return group_from_perm_list(std::move(elems), name);
}

Group from_permutation_generators(const std::vector<std::string>& cycles,
                                  int cap, const std::string& group_name) {
  std::vector<std::vector<int32_t>> gens;
  int degree = 0;
  for (const auto& s : cycles) {
    auto p = parse_cycle_notation(s);
    degree = std::max(degree, (int)p.size());
    gens.push_back(std::move(p));
  }
  for (auto& p : gens)
    while ((int)p.size() < degree) p.push_back((int32_t)p.size());
  return from_permutations(gens, cap, group_name);
}

Group from_generator_file(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos)
      line = line.substr(0, pos);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(a, b - a + 1));
  }
  if (lines.empty()) fail(ErrorKind::Io, path + ": no generators found");
  std::string stem = path;
  if (auto pos = stem.find_last_of('/'); pos != std::string::npos)
    stem = stem.substr(pos + 1);
  return from_permutation_generators(lines, cap, stem);
}

// ---- builtins --------------------------------------------------------------

Group symmetric_group(int n) {
  if (n < 3)
    fail(ErrorKind::InvalidParameter, "symmetric group needs n >= 3");
  if (factorial(n) > kMaxDenseOrder)
    fail(ErrorKind::InvalidParameter,
         "symmetric:" + std::to_string(n) + " exceeds dense-table cap");
  const int64_t N = factorial(n);
  std::vector<Perm> elems;
  elems.reserve(N);
  for (int64_t r = 0; r < N; ++r) elems.push_back(lehmer_unrank(n, r));

  Group g;
  g.n = (int)N;
  g.name = "symmetric:" + std::to_string(n);
  g.mul.resize((size_t)N * N);
  for (int64_t a = 0; a < N; ++a)
    for (int64_t b = 0; b < N; ++b)
      g.mul[(size_t)a * N + b] = (int32_t)lehmer_rank(compose(elems[a], elems[b]));
  g.names.resize(N);
  for (int64_t i = 0; i < N; ++i) g.names[i] = cycle_notation_name(elems[i]);
  compute_structure(g, false);
  return g;
}

Group alternating_group(int n) {
  if (n < 4)
    fail(ErrorKind::InvalidParameter, "alternating group needs n >= 4");
  if (factorial(n) / 2 > kMaxDenseOrder)
    fail(ErrorKind::InvalidParameter,
         "alternating:" + std::to_string(n) + " exceeds dense-table cap");
  const int64_t NF = factorial(n);
  std::vector<Perm> elems;
  std::vector<int32_t> rank_to_idx(NF, -1);
  for (int64_t r = 0; r < NF; ++r) {
    Perm p = lehmer_unrank(n, r);
    if (is_even(p)) {
      rank_to_idx[r] = (int32_t)elems.size();
      elems.push_back(std::move(p));
    }
  }
  const int64_t N = (int64_t)elems.size();

  Group g;
  g.n = (int)N;
  g.name = "alternating:" + std::to_string(n);
  g.mul.resize((size_t)N * N);
  for (int64_t a = 0; a < N; ++a)
    for (int64_t b = 0; b < N; ++b)
      g.mul[(size_t)a * N + b] = rank_to_idx[lehmer_rank(compose(elems[a], elems[b]))];
  g.names.resize(N);
  for (int64_t i = 0; i < N; ++i) g.names[i] = cycle_notation_name(elems[i]);
  compute_structure(g, false);
  return g;
}

Group dihedral_group(int order) {
  if (order < 6 || order % 2 != 0)
    fail(ErrorKind::InvalidParameter,
         "dihedral order must be even and >= 6, got " + std::to_string(order));
  const int n = order / 2;
  // index k in [0,n): rotation r^k; index n+k: reflection s r^k
  auto idx = [&](bool refl, int k) { return (refl ? n : 0) + ((k % n) + n) % n; };
  Group g;
  g.n = order;
  g.name = "dihedral:" + std::to_string(order);
  g.mul.resize((size_t)order * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      bool ra = a >= n, rb = b >= n;
      int ka = a % n, kb = b % n;
      int32_t v;
      if (!ra && !rb) v = idx(false, ka + kb);
      else if (!ra && rb) v = idx(true, kb - ka);
      else if (ra && !rb) v = idx(true, ka + kb);
      else v = idx(false, kb - ka);
      g.mul[(size_t)a * order + b] = v;
    }
  compute_structure(g, false);
  return g;
}

Group quaternion_group8() {
  // elements: 1,-1,i,-i,j,-j,k,-k as (unit u in {1,i,j,k}, sign s)
  auto idx = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
  // unit products: table[u][v] = (unit, sign)
  static const int unit_of[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_of[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Group g;
  g.n = 8;
  g.name = "quaternion8";
  g.mul.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      g.mul[a * 8 + b] = idx(unit_of[ua][ub], sa * sb * sign_of[ua][ub]);
    }
  compute_structure(g, false);
  return g;
}

Group extraspecial_group(int p) {
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    fail(ErrorKind::InvalidParameter,
         "extraspecial parameter must be an odd prime, got " + std::to_string(p));
  const int64_t n = (int64_t)p * p * p;
  if (n > kMaxDenseOrder)
    fail(ErrorKind::InvalidParameter,
         "extraspecial:" + std::to_string(p) + " exceeds dense-table cap");
  // elements are unitriangular coordinates (a,b,c); b is the center coordinate
  // (a,b,c)*(a',b',c') = (a+a', b+b'+a*c', c+c')
  auto idx = [&](int a, int b, int c) { return (a * p + c) * p + b; };
  Group g;
  g.n = (int)n;
  g.name = "extraspecial:" + std::to_string(p);
  g.mul.resize((size_t)n * n);
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c)
      for (int b = 0; b < p; ++b)
        for (int a2 = 0; a2 < p; ++a2)
          for (int c2 = 0; c2 < p; ++c2)
            for (int b2 = 0; b2 < p; ++b2)
              g.mul[(size_t)idx(a, b, c) * n + idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
  compute_structure(g, false);
  return g;
}

Group direct_product(const Group& a, const Group& b) {
  const int64_t n = (int64_t)a.n * b.n;
  if (n > kMaxDenseOrder)
    fail(ErrorKind::InvalidParameter, "direct product exceeds dense-table cap");
  Group g;
  g.n = (int)n;
  g.name = "product(" + a.name + "," + b.name + ")";
  g.mul.resize((size_t)n * n);
  auto idx = [&](int32_t x, int32_t y) { return x * b.n + y; };
  for (int32_t xa = 0; xa < a.n; ++xa)
    for (int32_t ya = 0; ya < b.n; ++ya)
      for (int32_t xb = 0; xb < a.n; ++xb)
        for (int32_t yb = 0; yb < b.n; ++yb)
          g.mul[(size_t)idx(xa, ya) * n + idx(xb, yb)] =
              idx(a.op(xa, xb), b.op(ya, yb));
  g.names.resize(n);
  for (int32_t xa = 0; xa < a.n; ++xa)
    for (int32_t ya = 0; ya < b.n; ++ya)
      g.names[idx(xa, ya)] = "(" + a.names[xa] + "|" + b.names[ya] + ")";
  compute_structure(g, false);
  return g;
}

Group builtin_group(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (c != ' ') s += c;
  auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
  auto int_arg = [&](size_t off) {
    if (off >= s.size())
      fail(ErrorKind::InvalidParameter, "builtin spec needs a parameter: " + spec);
    try {
      return std::stoi(s.substr(off));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParameter, "bad builtin parameter in: " + spec);
    }
  };
  if (s == "quaternion8") return quaternion_group8();
  if (starts("symmetric:")) return symmetric_group(int_arg(10));
  if (starts("alternating:")) return alternating_group(int_arg(12));
  if (starts("dihedral:")) return dihedral_group(int_arg(9));
  if (starts("extraspecial:")) return extraspecial_group(int_arg(13));
  if (starts("product:")) {
    std::string body = s.substr(8);
    // split at the top-level comma (parentheses may wrap either side)
    int depth = 0;
    size_t cut = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')') --depth;
      else if (body[i] == ',' && depth == 0) {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos)
      fail(ErrorKind::InvalidParameter,
           "product spec needs two comma-separated parts: " + spec);
    auto strip = [](std::string t) {
      while (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        int d = 0;
        bool wraps = true;
        for (size_t i = 0; i + 1 < t.size(); ++i) {
          if (t[i] == '(') ++d;
          if (t[i] == ')') --d;
          if (d == 0) {
            wraps = false;
            break;
          }
        }
        if (!wraps) break;
        t = t.substr(1, t.size() - 2);
      }
      return t;
    };
    Group a = builtin_group(strip(body.substr(0, cut)));
    Group b = builtin_group(strip(body.substr(cut + 1)));
    return direct_product(a, b);
  }
  fail(ErrorKind::InvalidParameter, "unknown builtin spec: " + spec);
}

// ---- derived structure -----------------------------------------------------

std::vector<int32_t> commutator_subgroup(const Group& g) {
  std::vector<char> in(g.n, 0);
  std::vector<int32_t> members;
  auto add = [&](int32_t v) {
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  add(0);
  for (int32_t x = 0; x < g.n; ++x)
    for (int32_t y = 0; y < g.n; ++y)
      add(g.op(g.op(g.inv[x], g.inv[y]), g.op(x, y)));
  // close under multiplication (inverses follow from finiteness)
  for (size_t head = 0; head < members.size(); ++head)
    for (size_t k = 0; k < members.size(); ++k)
      add(g.op(members[head], members[k]));
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

CommutingProbability commuting_probability_impl(const Group& g) {
  long long pairs = 0;
  for (int32_t x = 0; x < g.n; ++x)
    for (int32_t y = 0; y < g.n; ++y)
      if (g.commutes(x, y)) ++pairs;
  CommutingProbability out;
  out.by_classes = Rational(g.class_count(), g.n);
  out.by_pairs = Rational(pairs, (long long)g.n * g.n);
  if (out.by_classes != out.by_pairs)
    fail(ErrorKind::IdentityViolation,
         "commuting probability mismatch: classes give " +
             out.by_classes.str() + ", pair count gives " + out.by_pairs.str());
  return out;
}

}  // namespace

CommutingProbability commuting_probability(const Group& g) {
  return commuting_probability_impl(g);
}

CommutingProbability commuting_probability_of_table(
    const std::vector<std::vector<int32_t>>& table) {
  Group g = build_from_table(table, {}, /*allow_abelian=*/true, "");
  return commuting_probability_impl(g);
}

// ---- homomorphisms ---------------------------------------------------------

Homomorphism make_homomorphism(const Group& source, const Group& target,
                               std::vector<int32_t> map) {
  if ((int)map.size() != source.n)
    fail(ErrorKind::InvalidParameter, "homomorphism map size mismatch");
  for (int32_t v : map)
    if (v < 0 || v >= target.n)
      fail(ErrorKind::InvalidParameter, "homomorphism image out of range");
  for (int32_t x = 0; x < source.n; ++x)
    for (int32_t y = 0; y < source.n; ++y)
      if (map[source.op(x, y)] != target.op(map[x], map[y]))
        fail(ErrorKind::InvalidParameter,
             "not a homomorphism at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");
  // must be injective on the commutator subgroup for the face map to exist
  for (int32_t s : commutator_subgroup(source))
    if (s != 0 && map[s] == 0)
      fail(ErrorKind::NotInjectiveOnCommutators,
           "kernel meets the commutator subgroup at element " +
               std::to_string(s));
  Homomorphism h;
  h.source = &source;
  h.target = &target;
  h.map = std::move(map);
  return h;
}

}  // namespace gsurf
