#include "pel/tables.hpp"

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"
#include "pel/multi_polyeuler.hpp"
#include "pel/serialize.hpp"
#include "pel/symmetrized.hpp"

#include <algorithm>
#include <sstream>

namespace pel {

using nlohmann::json;

const std::vector<std::string>& registered_families() {
  static const std::vector<std::string> ids = {"pe", "penum", "multi", "sym-d", "multi-d", "ohno"};
  return ids;
}

namespace {

bool bivariate(const std::string& family) { return family == "sym-d" || family == "multi-d"; }

void check_family(const TableSpec& spec) {
  const auto& ids = registered_families();
  if (std::find(ids.begin(), ids.end(), spec.family) == ids.end()) {
    throw UnknownFamily("unknown family '" + spec.family + "'");
  }
  spec.logs.validate();
  if (spec.conventions.empty()) throw InvalidGrid("no polylog convention selected");
}

std::vector<int> kset_of(const TableSpec& spec) {
  if (spec.kset) {
    if (spec.kset->empty()) throw InvalidGrid("empty k-set");
    return *spec.kset;
  }
  if (spec.family == "multi") return {-1, 0, 1, 2};
  return {-3, -2, -1, 0, 1, 2, 3};
}

std::vector<unsigned> rset_of(const TableSpec& spec) {
  std::vector<unsigned> r = spec.rset.value_or(
      spec.family == "multi-d" ? std::vector<unsigned>{2, 3} : std::vector<unsigned>{2});
  if (r.empty()) throw InvalidGrid("empty r-set");
  for (unsigned v : r) {
    if (v == 0) throw InvalidGrid("ranks must be >= 1");
    if (spec.family == "multi-d" && v < 2) throw InvalidGrid("multi-d needs r >= 2");
  }
  return r;
}

std::vector<MultiIndex> indices(const TableSpec& spec) {
  std::vector<MultiIndex> out;
  const auto entries = kset_of(spec);
  for (unsigned r : rset_of(spec)) {
    std::vector<std::vector<int>> tuples{{}};
    for (unsigned i = 0; i < r; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples) {
        for (int e : entries) {
          auto u = t;
          u.push_back(e);
          next.push_back(std::move(u));
        }
      }
      tuples = std::move(next);
    }
    for (const auto& t : tuples) {
      for (Convention c : spec.conventions) out.push_back({t, c});
    }
  }
  return out;
}

GridPoint point(unsigned n, std::optional<unsigned> m = std::nullopt,
                std::optional<std::vector<int>> k = std::nullopt,
                std::optional<unsigned> r = std::nullopt,
                std::optional<Convention> c = std::nullopt) {
  GridPoint p;
  p.n = n;
  p.m = m;
  p.k = std::move(k);
  p.r = r;
  p.convention = c;
  return p;
}

json config_json(const TableSpec& spec) {
  json c;
  c["family"] = spec.family;
  c["nmax"] = spec.nmax ? json(*spec.nmax) : json(nullptr);
  c["mmax"] = spec.mmax ? json(*spec.mmax) : json(nullptr);
  c["kset"] = spec.kset ? json(*spec.kset) : json(nullptr);
  c["rset"] = spec.rset ? json(*spec.rset) : json(nullptr);
  json convs = json::array();
  for (Convention cv : spec.conventions) convs.push_back(convention_name(cv));
  c["convention"] = convs;
  c["mode"] = spec.logs.symbolic_ab() ? "symbolic" : "assigned";
  auto q = [](const std::optional<BigRational>& v) { return v ? json(to_string(*v)) : json(nullptr); };
  c["la"] = q(spec.logs.la);
  c["lb"] = q(spec.logs.lb);
  c["lc"] = q(spec.logs.lc);
  if (spec.family == "multi-d") {
    c["variant"] = spec.variant == FormulaVariant::printed ? "printed" : "corrected";
  }
  return c;
}

/// Li_k(1 - e^-4t) / (4t cosh t) through t^order.
EgfSeries ohno_series(int k, unsigned order) {
  const unsigned o = order + 1;
  const auto inner = EgfSeries::constant(1, o) - ps_exp(LocPoly(-4), o);
  const auto li = ps_div_t(ps_compose_polylog(k, inner));
  const auto cosh2 = ps_exp(LocPoly(1), order) + ps_exp(LocPoly(-1), order);
  return li.truncated(order) * ps_inv(cosh2) * LocPoly(make_rational(1, 2));
}

}  // namespace

Table emit_table(const TableSpec& spec) {
  check_family(spec);
  const unsigned N = spec.nmax.value_or(4);
  const unsigned M = spec.mmax.value_or(4);
  Table t{spec.family, "values", config_json(spec), {}};
  const std::string& f = spec.family;

  if (f == "pe" || f == "penum") {
    for (int k : kset_of(spec)) {
      const PolyEulerParams p{spec.logs, k};
      const auto vals = pe_values(p, N);
      for (unsigned n = 0; n <= N; ++n) {
        LocPoly v = f == "pe" ? vals[n] : vals[n].substitute(Var::x, MPoly(0));
        t.rows.push_back({point(n, std::nullopt, std::vector<int>{k}), std::move(v)});
      }
    }
  } else if (f == "ohno") {
    for (int k : kset_of(spec)) {
      for (unsigned n = 0; n <= N; ++n) {
        t.rows.push_back({point(n, std::nullopt, std::vector<int>{k}), LocPoly(ohno_sasaki_number(k, n))});
      }
    }
  } else if (f == "multi") {
    for (const auto& idx : indices(spec)) {
      const auto vals = mpe_values({spec.logs, idx}, N);
      for (unsigned n = 0; n <= N; ++n) {
        t.rows.push_back({point(n, std::nullopt, idx.k, static_cast<unsigned>(idx.rank()), idx.convention),
                          vals[n]});
      }
    }
  } else if (f == "sym-d") {
    const auto D = d_def_table(N, M, spec.logs);
    for (unsigned n = 0; n <= N; ++n) {
      for (unsigned m = 0; m <= M; ++m) t.rows.push_back({point(n, m), D[n][m]});
    }
  } else {  // multi-d
    for (unsigned r : rset_of(spec)) {
      for (Convention c : spec.conventions) {
        const auto D = multi_d_def_table(N, M, {spec.logs, r, c});
        for (unsigned n = 0; n <= N; ++n) {
          for (unsigned m = 0; m <= M; ++m) {
            t.rows.push_back({point(n, m, std::nullopt, r, c), D[n][m]});
          }
        }
      }
    }
  }
  return t;
}

Table emit_egf(const TableSpec& spec, unsigned order_t, std::optional<unsigned> order_u) {
  check_family(spec);
  Table t{spec.family, "egf", config_json(spec), {}};
  t.config["order"] = order_t;
  const std::string& f = spec.family;
  if (!bivariate(f) && order_u) throw InvalidGrid("family '" + f + "' has a single order");
  const unsigned U = order_u.value_or(order_t);
  if (bivariate(f)) t.config["order_u"] = U;

  if (f == "pe" || f == "penum") {
    for (int k : kset_of(spec)) {
      const auto s = pe_series({spec.logs, k}, order_t);
      for (unsigned n = 0; n <= order_t; ++n) {
        LocPoly v = f == "pe" ? s[n] : s[n].substitute(Var::x, MPoly(0));
        t.rows.push_back({point(n, std::nullopt, std::vector<int>{k}), std::move(v)});
      }
    }
  } else if (f == "ohno") {
    for (int k : kset_of(spec)) {
      const auto s = ohno_series(k, order_t);
      for (unsigned n = 0; n <= order_t; ++n) {
        t.rows.push_back({point(n, std::nullopt, std::vector<int>{k}), s[n]});
      }
    }
  } else if (f == "multi") {
    for (const auto& idx : indices(spec)) {
      const auto s = mpe_series({spec.logs, idx}, order_t);
      for (unsigned n = 0; n <= order_t; ++n) {
        t.rows.push_back({point(n, std::nullopt, idx.k, static_cast<unsigned>(idx.rank()), idx.convention),
                          s[n]});
      }
    }
  } else if (f == "sym-d") {
    const auto s = thm25_rhs_series(order_t, U, spec.logs);
    for (unsigned n = 0; n <= order_t; ++n) {
      for (unsigned m = 0; m <= U; ++m) t.rows.push_back({point(n, m), s.at(n, m)});
    }
  } else {  // multi-d
    for (unsigned r : rset_of(spec)) {
      for (Convention c : spec.conventions) {
        const auto s = thm36_rhs_series(order_t, U, {spec.logs, r, c}, spec.variant);
        for (unsigned n = 0; n <= order_t; ++n) {
          for (unsigned m = 0; m <= U; ++m) {
            t.rows.push_back({point(n, m, std::nullopt, r, c), s.at(n, m)});
          }
        }
      }
    }
  }
  return t;
}

namespace {

std::string k_text(const GridPoint& p) {
  std::string out;
  for (std::size_t i = 0; p.k && i < p.k->size(); ++i) {
    if (i) out += ';';
    out += std::to_string((*p.k)[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Columns {
  bool m = false, k = false, r = false, convention = false;
};

Columns columns_of(const Table& t) {
  Columns c;
  for (const auto& row : t.rows) {
    c.m = c.m || row.point.m.has_value();
    c.k = c.k || row.point.k.has_value();
    c.r = c.r || row.point.r.has_value();
    c.convention = c.convention || row.point.convention.has_value();
  }
  return c;
}

}  // namespace

json table_to_json(const Table& t) {
  json j;
  j["version"] = kToolVersion;
  j["family"] = t.family;
  j["kind"] = t.kind;
  j["config"] = t.config;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["n"] = row.point.n;
    r["m"] = row.point.m ? json(*row.point.m) : json(nullptr);
    r["k"] = row.point.k ? json(*row.point.k) : json(nullptr);
    r["r"] = row.point.r ? json(*row.point.r) : json(nullptr);
    r["convention"] = row.point.convention ? json(convention_name(*row.point.convention)) : json(nullptr);
    r["value"] = serialize_locpoly(row.value);
    r["text"] = to_string(row.value);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string table_to_text(const Table& t) { return table_to_json(t).dump(2) + "\n"; }

std::string table_to_csv(const Table& t) {
  std::ostringstream os;
  os << "n,m,k,r,convention,value\n";
  for (const auto& row : t.rows) {
    const auto& p = row.point;
    os << p.n << ',' << (p.m ? std::to_string(*p.m) : "") << ',' << k_text(p) << ','
       << (p.r ? std::to_string(*p.r) : "") << ','
       << (p.convention ? convention_name(*p.convention) : "") << ','
       << csv_field(to_string(row.value)) << '\n';
  }
  return os.str();
}

std::string table_to_latex(const Table& t) {
  const Columns c = columns_of(t);
  std::string spec = "r";
  std::string head = "$n$";
  if (c.m) spec += "r", head += " & $m$";
  if (c.k) spec += "r", head += " & $k$";
  if (c.r) spec += "r", head += " & $r$";
  if (c.convention) spec += "l", head += " & convention";
  spec += "l";
  head += t.kind == "egf" ? " & coefficient" : " & value";

  std::ostringstream os;
  os << "\\begin{tabular}{" << spec << "}\n\\hline\n" << head << " \\\\\n\\hline\n";
  for (const auto& row : t.rows) {
    const auto& p = row.point;
    os << p.n;
    if (c.m) os << " & " << (p.m ? std::to_string(*p.m) : "");
    if (c.k) {
      os << " & ";
      if (p.k) {
        if (p.k->size() > 1) os << "$(";
        for (std::size_t i = 0; i < p.k->size(); ++i) os << (i ? "," : "") << (*p.k)[i];
        if (p.k->size() > 1) os << ")$";
      }
    }
    if (c.r) os << " & " << (p.r ? std::to_string(*p.r) : "");
    if (c.convention) os << " & " << (p.convention ? convention_name(*p.convention) : "");
    os << " & $" << to_latex(row.value) << "$ \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

std::string render_table(const Table& t, const std::string& format) {
  if (format == "json") return table_to_text(t);
  if (format == "csv") return table_to_csv(t);
  if (format == "latex") return table_to_latex(t);
  throw InvalidGrid("unknown format '" + format + "'");
}

}  // namespace pel
