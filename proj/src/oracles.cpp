#include "gsurf/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gsurf/errors.hpp"

namespace gsurf {

namespace {

long long euler_phi(long long d) {
  long long result = d;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

std::string sym(int n, int l1, int l2) {
  std::ostringstream os;
  os << "{" << n << "," << l1;
  if (l2 != l1) os << "-" << l2;
  os << "}";
  return os.str();
}

ExpectedRow dihedron_row(int d, long long count) {
  // {d,2}: two d-gons glued along the rim.
  return {sym(d, 2, 2), 0, count, d, d, 2};
}

ExpectedRow double_hoso_row(int k, long long count) {
  // {4,2-k} = D{2,k}; at k = 2 the symbol collapses to the {4,2} dihedron.
  if (k == 2) return dihedron_row(4, count);
  return {sym(4, 2, k), 0, count, k + 2, 2 * k, k};
}

void add_row(std::map<std::pair<long long, std::string>, ExpectedRow>& acc,
             const ExpectedRow& row) {
  auto key = std::make_pair(row.genus, row.schlafli);
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, row);
  } else {
    if (it->second.V != row.V || it->second.E != row.E ||
        it->second.F != row.F)
      fail(ErrorKind::IdentityViolation,
           "oracle rows with one symbol but different counts");
    it->second.count += row.count;
  }
}

}  // namespace

ExpectedCensus dihedral_expected(int n) {
  if (n < 3) fail(ErrorKind::InvalidParameter, "dihedral parameter below 3");
  ExpectedCensus ec;
  {
    std::ostringstream os;
    os << "dihedral:" << n;
    ec.family = os.str();
  }
  std::map<std::pair<long long, std::string>, ExpectedRow> acc;
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const long long base = euler_phi(d) * n / (2 * d);  // phi(d)n/(2d)
    if (n % 2 == 1) {
      add_row(acc, dihedron_row(d, base));
      add_row(acc, double_hoso_row(d, base));
    } else if (d >= 3) {
      add_row(acc, dihedron_row(d, base));
      if (d % 2 == 1)
        add_row(acc, double_hoso_row(d, base));
      else
        add_row(acc, double_hoso_row(d / 2, 2 * base));  // phi(d)n/d of them
    }
  }
  for (auto& [key, row] : acc) {
    ec.rows.push_back(row);
    ec.component_total += row.count;
  }
  return ec;
}

ExpectedCensus extraspecial_expected(int p) {
  if (p < 3 || p % 2 == 0)
    fail(ErrorKind::InvalidParameter, "extraspecial parameter not an odd prime");
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0)
      fail(ErrorKind::InvalidParameter,
           "extraspecial parameter not an odd prime");
  ExpectedCensus ec;
  {
    std::ostringstream os;
    os << "extraspecial:" << p;
    ec.family = os.str();
  }
  const long long pp = p;
  ExpectedRow row;
  row.schlafli = sym(2 * p, p, p);
  row.genus = pp * (pp - 3) / 2 + 1;
  row.count = (pp * pp - 1) * (pp * pp - pp) / 2;
  row.V = 2 * pp;
  row.E = pp * pp;
  row.F = pp;
  ec.rows.push_back(row);
  ec.component_total = row.count;
  ec.require_regular = true;
  return ec;
}

OracleComparison census_matches_expected(const Census& census,
                                         const ExpectedCensus& expected) {
  OracleComparison out;
  auto flunk = [&](const std::string& why) {
    out.pass = false;
    if (out.detail.empty()) out.detail = expected.family + ": " + why;
  };
  if (census.component_count != expected.component_total) {
    std::ostringstream os;
    os << "component count " << census.component_count << " != expected "
       << expected.component_total;
    flunk(os.str());
    return out;
  }
  // Multiset of observed (genus, symbol, V, E, F) rows.
  std::map<std::pair<long long, std::string>, ExpectedRow> seen;
  for (const ComponentSummary& s : census.components) {
    ExpectedRow row{s.schlafli, s.cells.genus, 1,
                    s.cells.V, s.cells.E, s.cells.F};
    auto key = std::make_pair(row.genus, row.schlafli);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, row);
    } else if (it->second.V != row.V || it->second.E != row.E ||
               it->second.F != row.F) {
      flunk("two components share symbol " + row.schlafli +
            " with different counts");
      return out;
    } else {
      ++it->second.count;
    }
    if (expected.require_regular &&
        s.cells.regular_sufficient != TriBool::True) {
      flunk("component " + row.schlafli + " not proven regular");
      return out;
    }
  }
  if (seen.size() != expected.rows.size()) {
    std::ostringstream os;
    os << seen.size() << " distinct rows, expected " << expected.rows.size();
    flunk(os.str());
    return out;
  }
  for (const ExpectedRow& want : expected.rows) {
    auto it = seen.find(std::make_pair(want.genus, want.schlafli));
    if (it == seen.end()) {
      flunk("expected row " + want.schlafli + " missing");
      return out;
    }
    const ExpectedRow& got = it->second;
    if (got.count != want.count || got.V != want.V || got.E != want.E ||
        got.F != want.F) {
      std::ostringstream os;
      os << "row " << want.schlafli << ": got count " << got.count << " (V,E,F)=("
         << got.V << "," << got.E << "," << got.F << "), expected count "
         << want.count << " (" << want.V << "," << want.E << "," << want.F
         << ")";
      flunk(os.str());
      return out;
    }
  }
  return out;
}

}  // namespace gsurf
