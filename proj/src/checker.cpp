#include "pel/checker.hpp"

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"
#include "pel/multi_polyeuler.hpp"
#include "pel/serialize.hpp"
#include "pel/symmetrized.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace pel {

using nlohmann::json;

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::discrepancy:
      return "discrepancy";
    case Status::error:
      return "error";
  }
  return "error";
}

namespace {

struct Grid {
  unsigned nmax = 0;
  unsigned mmax = 0;
  std::vector<int> kset;     // single-index orders
  std::vector<int> entries;  // multi-index entries
  std::vector<unsigned> rset;
  std::vector<Convention> conventions;
  LogParams logs;
};

using Task = std::function<std::vector<Verdict>()>;
using Sides = std::function<std::pair<LocPoly, LocPoly>()>;

struct SuiteDef {
  std::string id;
  unsigned nmax;
  unsigned mmax;
  std::vector<unsigned> rset;
  void (*build)(const std::string& id, const Grid& g, std::vector<Task>& tasks);
};

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

Verdict error_verdict(const std::string& suite, const std::string& variant, GridPoint pt,
                      const std::string& what) {
  Verdict v{suite, variant, std::move(pt), Status::error, std::nullopt, std::nullopt, what};
  return v;
}

Verdict judge(const std::string& suite, const std::string& variant, GridPoint pt,
              const Sides& sides, std::string note = {}) {
  try {
    auto [lhs, rhs] = sides();
    Verdict v{suite, variant, std::move(pt), Status::pass, std::nullopt, std::nullopt,
              std::move(note)};
    if (!(lhs == rhs)) {
      v.status = Status::discrepancy;
      v.lhs = std::move(lhs);
      v.rhs = std::move(rhs);
    }
    return v;
  } catch (const std::exception& e) {
    return error_verdict(suite, variant, std::move(pt), e.what());
  }
}

/// Runs `body`; an exception before any verdict is produced becomes one
/// error verdict at `where`.
Task guarded(std::string suite, GridPoint where, std::function<void(std::vector<Verdict>&)> body) {
  return [suite = std::move(suite), where = std::move(where), body = std::move(body)] {
    std::vector<Verdict> out;
    try {
      body(out);
    } catch (const std::exception& e) {
      out.push_back(error_verdict(suite, "", where, e.what()));
    }
    return out;
  };
}

GridPoint single_point(unsigned n, int k) {
  GridPoint p;
  p.n = n;
  p.k = std::vector<int>{k};
  return p;
}

GridPoint multi_point(unsigned n, const MultiIndex& idx) {
  GridPoint p;
  p.n = n;
  p.k = idx.k;
  p.r = static_cast<unsigned>(idx.rank());
  p.convention = idx.convention;
  return p;
}

GridPoint bi_point(unsigned n, unsigned m, std::optional<unsigned> r = std::nullopt,
                   std::optional<Convention> c = std::nullopt) {
  GridPoint p;
  p.n = n;
  p.m = m;
  p.r = r;
  p.convention = c;
  return p;
}

/// All r-tuples over `entries` in lexicographic order.
std::vector<std::vector<int>> tuples(const std::vector<int>& entries, unsigned r) {
  std::vector<std::vector<int>> out{{}};
  for (unsigned i = 0; i < r; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out) {
      for (int e : entries) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<MultiIndex> multi_indices(const Grid& g, unsigned min_rank = 1) {
  std::vector<MultiIndex> out;
  for (unsigned r : g.rset) {
    if (r < min_rank) continue;
    for (const auto& t : tuples(g.entries, r)) {
      for (Convention c : g.conventions) out.push_back({t, c});
    }
  }
  return out;
}

// single-index suites

void build_thm21(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (int k : g.kset) {
    tasks.push_back(guarded(id, single_point(0, k), [=](std::vector<Verdict>& out) {
      const PolyEulerParams p{g.logs, k};
      const auto vals = pe_values(p, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", single_point(n, k),
                            [&] { return std::pair{vals[n], thm21_rhs(p, n)}; }));
      }
    }));
  }
}

void build_thm22(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (int k : g.kset) {
    tasks.push_back(guarded(id, single_point(0, k), [=](std::vector<Verdict>& out) {
      const PolyEulerParams p{g.logs, k};
      const auto vals = pe_values(p, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", single_point(n, k),
                            [&] { return std::pair{vals[n], thm22_rhs(p, n)}; }));
      }
    }));
  }
}

void derivative_suite(const std::string& id, const Grid& g, const LogParams& logs,
                      std::vector<Task>& tasks) {
  for (int k : g.kset) {
    tasks.push_back(guarded(id, single_point(0, k), [=](std::vector<Verdict>& out) {
      const PolyEulerParams p{logs, k};
      const auto vals = pe_values(p, g.nmax + 1);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", single_point(n, k), [&] {
          return std::pair{d_dx(vals[n + 1]),
                           vals[n] * LocPoly(logs.Lc() * static_cast<long>(n + 1))};
        }));
      }
    }));
  }
}

void build_thm23(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  derivative_suite(id, g, g.logs, tasks);
}

void build_appell(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  derivative_suite(id, g, g.logs.with_lc(1), tasks);
}

void build_addition(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (int k : g.kset) {
    tasks.push_back(guarded(id, single_point(0, k), [=](std::vector<Verdict>& out) {
      const PolyEulerParams p{g.logs, k};
      const PolyEulerParams pe{g.logs.with_lc(1), k};
      for (unsigned n = 0; n <= g.nmax; ++n) {
        const LocPoly rhs = addition_rhs(p, n);
        out.push_back(judge(id, "x+y", single_point(n, k),
                            [&] { return std::pair{addition_lhs(p, n), rhs}; }));
        out.push_back(judge(id, "y-specialization", single_point(n, k), [&] {
          const LocPoly spec =
              rhs.substitute(Var::x, MPoly(0)).substitute(Var::y, MPoly::var(Var::x));
          return std::pair{thm21_rhs(pe, n), spec};
        }));
      }
    }));
  }
}

template <int W>
void build_cauchy(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  const std::vector<unsigned> orders =
      W >= 3 ? std::vector<unsigned>{1, 2} : std::vector<unsigned>{0};
  for (int k : g.kset) {
    for (unsigned s : orders) {
      GridPoint where = single_point(0, k);
      if (W >= 3) where.s = s;
      tasks.push_back(guarded(id, where, [=](std::vector<Verdict>& out) {
        const PolyEulerParams p{g.logs, k};
        const auto vals = pe_values({g.logs.with_lc(1), k}, g.nmax);
        for (unsigned n = 0; n <= g.nmax; ++n) {
          GridPoint pt = single_point(n, k);
          if (W >= 3) pt.s = s;
          out.push_back(judge(id, "printed", pt, [&] {
            return std::pair{vals[n], cauchy_identity_rhs(W, p, n, s)};
          }));
          if (W == 1) {
            out.push_back(judge(id, "corrected", pt, [&] {
              return std::pair{vals[n],
                               cauchy_identity_rhs(W, p, n, s, FormulaVariant::corrected)};
            }, "without the 1/m! factor"));
          }
        }
      }));
    }
  }
}

void build_eq5(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (int k : g.kset) {
    tasks.push_back(guarded(id, single_point(0, k), [=](std::vector<Verdict>& out) {
      const PolyEulerParams p{g.logs, k};
      const auto vals = pe_values(p, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", single_point(n, k),
                            [&] { return std::pair{vals[n], eq5_explicit(p, n)}; }));
      }
    }));
  }
}

// multi-index suites

void build_thm32a(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (const auto& idx : multi_indices(g)) {
    tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
      const MultiPolyEulerParams p{g.logs, idx};
      const auto vals = mpe_values(p, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", multi_point(n, idx),
                            [&] { return std::pair{vals[n], thm32_rhs(1, p, n)}; }));
      }
    }));
  }
}

void build_thm32b(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (const auto& idx : multi_indices(g)) {
    tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
      const MultiPolyEulerParams p{g.logs, idx};
      const auto vals = mpe_values(p, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", multi_point(n, idx), [&] {
          return std::pair{vals[n], thm32_rhs(2, p, n, FormulaVariant::printed)};
        }, "argument (r x Lc + La)/(La + Lb)"));
        out.push_back(judge(id, "corrected", multi_point(n, idx), [&] {
          return std::pair{vals[n], thm32_rhs(2, p, n, FormulaVariant::corrected)};
        }, "argument (x Lc + La)/(La + Lb)"));
      }
    }));
  }
}

void build_thm32c(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (const auto& idx : multi_indices(g)) {
    tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
      const MultiPolyEulerParams p{g.logs, idx};
      const auto vals = mpe_values(p, g.nmax + 1);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", multi_point(n, idx),
                            [&] { return std::pair{d_dx(vals[n + 1]), thm32_rhs(3, p, n)}; }));
      }
    }));
  }
}

void build_multi_addition(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (const auto& idx : multi_indices(g)) {
    tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
      const MultiPolyEulerParams p{g.logs, idx};
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "printed", multi_point(n, idx), [&] {
          return std::pair{mpe_addition_lhs(p, n), mpe_addition_rhs(p, n)};
        }));
      }
    }));
  }
}

void build_eq14(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (const auto& idx : multi_indices(g)) {
    tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
      const MultiPolyEulerParams p{g.logs, idx};
      const auto vals = mpe_values(p, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        out.push_back(judge(id, "derived", multi_point(n, idx), [&] {
          return std::pair{vals[n], eq14_explicit(p, n, Eq14Weights::derived)};
        }, "weights (-1)^s C(s+r-1, r-1)"));
        out.push_back(judge(id, "printed-c", multi_point(n, idx), [&] {
          return std::pair{vals[n], eq14_explicit(p, n, Eq14Weights::printed_c)};
        }, "weights r!/prod c_i! with the zero exponents filling r"));
      }
    }));
  }
}

// symmetrized suites

void build_thm25(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  tasks.push_back(guarded(id, bi_point(0, 0), [=](std::vector<Verdict>& out) {
    const auto D = d_def_table(g.nmax, g.mmax, g.logs);
    const auto S = thm25_rhs_series(g.nmax, g.mmax, g.logs);
    for (unsigned n = 0; n <= g.nmax; ++n) {
      for (unsigned m = 0; m <= g.mmax; ++m) {
        out.push_back(judge(id, "printed", bi_point(n, m),
                            [&] { return std::pair{D[n][m], egf_coeff(S, n, m)}; }));
      }
    }
  }));
}

void build_thm26(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  for (unsigned n = 0; n <= g.nmax; ++n) {
    tasks.push_back(guarded(id, bi_point(n, 0), [=](std::vector<Verdict>& out) {
      for (unsigned m = 0; m <= g.mmax; ++m) {
        out.push_back(judge(id, "printed", bi_point(n, m), [&] {
          return std::pair{d_def(n, m, g.logs), thm26_explicit(n, m, g.logs)};
        }, "i-sum Abel-regularized"));
      }
    }));
  }
}

std::vector<unsigned> symmetrized_ranks(const Grid& g) {
  std::vector<unsigned> out;
  for (unsigned r : g.rset) {
    if (r >= 2) out.push_back(r);
  }
  if (out.empty()) throw InvalidGrid("the symmetrized suites need a rank r >= 2");
  return out;
}

void build_thm36(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  const auto ranks = symmetrized_ranks(g);
  for (unsigned r : ranks) {
    for (Convention c : g.conventions) {
      tasks.push_back(guarded(id, bi_point(0, 0, r, c), [=](std::vector<Verdict>& out) {
        const SymParams p{g.logs, r, c};
        const auto D = multi_d_def_table(g.nmax, g.mmax, p);
        const auto P = thm36_rhs_series(g.nmax, g.mmax, p, FormulaVariant::printed);
        std::optional<BiSeries> C;
        if (r >= 3) C = thm36_rhs_series(g.nmax, g.mmax, p, FormulaVariant::corrected);
        for (unsigned n = 0; n <= g.nmax; ++n) {
          for (unsigned m = 0; m <= g.mmax; ++m) {
            out.push_back(judge(id, "printed", bi_point(n, m, r, c),
                                [&] { return std::pair{D[n][m], egf_coeff(P, n, m)}; },
                                "beta = ((r-1) x Lc + La)/(La + Lb)"));
            if (C) {
              out.push_back(judge(id, "corrected-shift", bi_point(n, m, r, c),
                                  [&] { return std::pair{D[n][m], egf_coeff(*C, n, m)}; },
                                  "beta = (x Lc + La)/(La + Lb)"));
            }
          }
        }
      }));
    }
  }
  if (std::find(ranks.begin(), ranks.end(), 2u) != ranks.end()) {
    tasks.push_back(guarded(id, bi_point(0, 0, 2), [=](std::vector<Verdict>& out) {
      const auto S25 = thm25_rhs_series(g.nmax, g.mmax, g.logs);
      const auto S36 = thm36_rhs_series(g.nmax, g.mmax, {g.logs, 2, Convention::weak});
      for (unsigned n = 0; n <= g.nmax; ++n) {
        for (unsigned m = 0; m <= g.mmax; ++m) {
          out.push_back(judge(id, "r2-collapse", bi_point(n, m, 2), [&] {
            return std::pair{S25.at(n, m), S36.at(n, m)};
          }, "termwise against the rank-one closed form"));
        }
      }
    }));
  }
}

std::string quadratic_note(const QuadraticValue& q) {
  if (q.sqrt5_part.is_zero()) return "no irrational part";
  return "irrational part (" + to_string(q.sqrt5_part) + ")/sqrt(5)";
}

void build_thm37(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  const auto ranks = symmetrized_ranks(g);
  for (unsigned r : ranks) {
    tasks.push_back(guarded(id, bi_point(0, 0, r), [=](std::vector<Verdict>& out) {
      const unsigned N = g.nmax;
      const unsigned M = g.mmax;
      const SymParams base{g.logs, r, Convention::weak};
      std::vector<std::vector<std::optional<LocPoly>>> printed(N + 1), corrected(N + 1);
      std::vector<std::vector<std::optional<QuadraticValue>>> printed_q(N + 1);
      std::vector<std::vector<std::string>> failure(N + 1);
      for (unsigned n = 0; n <= N; ++n) {
        printed[n].resize(M + 1);
        corrected[n].resize(M + 1);
        printed_q[n].resize(M + 1);
        failure[n].resize(M + 1);
        for (unsigned m = 0; m <= M; ++m) {
          try {
            printed[n][m] = thm37_explicit(n, m, base, FormulaVariant::printed);
            corrected[n][m] = thm37_explicit(n, m, base, FormulaVariant::corrected);
            printed_q[n][m] = thm37_printed_q(n, m, base);
          } catch (const std::exception& e) {
            failure[n][m] = e.what();
          }
        }
      }
      auto side = [&](const std::vector<std::vector<std::optional<LocPoly>>>& t, unsigned n,
                      unsigned m) -> LocPoly {
        if (!t[n][m]) throw Error(failure[n][m]);
        return *t[n][m];
      };
      for (Convention c : g.conventions) {
        std::vector<std::vector<LocPoly>> D;
        std::string d_failure;
        try {
          D = multi_d_def_table(N, M, {g.logs, r, c});
        } catch (const std::exception& e) {
          d_failure = e.what();
        }
        auto lhs = [&](unsigned n, unsigned m) -> LocPoly {
          if (!d_failure.empty()) throw Error(d_failure);
          return D[n][m];
        };
        for (unsigned n = 0; n <= N; ++n) {
          for (unsigned m = 0; m <= M; ++m) {
            const GridPoint pt = bi_point(n, m, r, c);
            out.push_back(judge(id, "printed", pt,
                                [&] { return std::pair{lhs(n, m), side(printed, n, m)}; },
                                "q-weight (-1)^q C(q+r-2, q)"));
            Verdict q = judge(id, "printed-q", pt, [&] {
              if (!printed_q[n][m]) throw Error(failure[n][m]);
              return std::pair{lhs(n, m), printed_q[n][m]->rational};
            });
            if (printed_q[n][m]) {
              q.note = "printed q-coefficient, " + quadratic_note(*printed_q[n][m]);
              if (q.status == Status::pass && !printed_q[n][m]->sqrt5_part.is_zero()) {
                q.status = Status::discrepancy;
                q.lhs = lhs(n, m);
                q.rhs = printed_q[n][m]->rational;
              }
            }
            out.push_back(std::move(q));
            out.push_back(judge(id, "corrected", pt,
                                [&] { return std::pair{lhs(n, m), side(corrected, n, m)}; },
                                "factor 2, C(m,l), e^((r-1)t), exponent (r-1) x Lc"));
          }
        }
      }
      if (r == 2) {
        for (unsigned n = 0; n <= N; ++n) {
          for (unsigned m = 0; m <= M; ++m) {
            out.push_back(judge(id, "vs-thm2.6", bi_point(n, m, 2), [&] {
              return std::pair{thm26_explicit(n, m, g.logs), side(printed, n, m)};
            }, "rank-two formula against the rank-one explicit formula"));
          }
        }
      }
    }));
  }
}

// reductions

void build_reductions(const std::string& id, const Grid& g, std::vector<Task>& tasks) {
  tasks.push_back(guarded(id, GridPoint{}, [=](std::vector<Verdict>& out) {
    for (unsigned n = 0; n <= g.nmax; ++n) {
      out.push_back(judge(id, "k1-collapse", single_point(n, 1), [&] {
        const MPoly rhs = n == 0 ? MPoly(0) : euler_polynomial(n - 1) * static_cast<long>(n);
        return std::pair{LocPoly(pe_classical(1, n)), LocPoly(rhs)};
      }, "E_n(x) = n E_(n-1)(x) at k = 1"));
    }
  }));

  for (int k : g.kset) {
    for (Convention c : g.conventions) {
      const MultiIndex idx{{k}, c};
      tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
        const auto multi = mpe_values({g.logs, idx}, g.nmax);
        const auto single = pe_values({g.logs, k}, g.nmax);
        for (unsigned n = 0; n <= g.nmax; ++n) {
          out.push_back(judge(id, "r1-reduction", multi_point(n, idx),
                              [&] { return std::pair{multi[n], single[n]}; }));
        }
      }));
    }
  }

  tasks.push_back(guarded(id, GridPoint{}, [=](std::vector<Verdict>& out) {
    const LocPoly zero;
    for (int k : g.kset) {
      out.push_back(judge(id, "zero-structure", single_point(0, k), [&] {
        return std::pair{pe_oracle({g.logs, k}, 0), zero};
      }, "E_0 of the single-index family"));
    }
    for (const auto& idx : multi_indices(g)) {
      out.push_back(judge(id, "zero-structure", multi_point(0, idx), [&] {
        return std::pair{mpe_oracle({g.logs, idx}, 0), zero};
      }, "E_0 of the multi-index family"));
    }
  }));

  tasks.push_back(guarded(id, GridPoint{}, [=](std::vector<Verdict>& out) {
    for (int k : g.kset) {
      for (unsigned n = 1; n <= g.nmax; ++n) {
        out.push_back(judge(id, "leading-coefficient", single_point(n, k), [&] {
          const MPoly e = pe_classical(k, n);
          const MPoly lead = e.terms_with_degree_at_least(Var::x, n - 1);
          return std::pair{LocPoly(lead), LocPoly(MPoly::var(Var::x, n - 1) * static_cast<long>(n))};
        }, "degree n-1 in x with leading coefficient n at a = 1, b = c = e"));
      }
    }
  }));

  for (const auto& idx : multi_indices(g)) {
    tasks.push_back(guarded(id, multi_point(0, idx), [=](std::vector<Verdict>& out) {
      const MultiPolyEulerParams sym{LogParams::symbolic(), idx};
      const auto vals = mpe_values(sym, g.nmax);
      for (unsigned n = 0; n <= g.nmax; ++n) {
        const auto parts = mpe_particulars({g.logs, idx}, n);
        out.push_back(judge(id, "multi-particulars", multi_point(n, idx), [&] {
          const LocPoly expect = vals[n]
                                     .substitute(Var::La, MPoly(0))
                                     .substitute(Var::Lb, MPoly(1))
                                     .substitute(Var::Lc, MPoly(1));
          return std::pair{parts.classical, expect};
        }, "classical specialization a = 1, b = c = e"));
        out.push_back(judge(id, "multi-particulars", multi_point(n, idx), [&] {
          LocPoly expect = vals[n].substitute(Var::x, MPoly(0));
          if (g.logs.la) {
            expect = expect.substitute(Var::La, MPoly(*g.logs.la))
                         .substitute(Var::Lb, MPoly(*g.logs.lb));
          }
          return std::pair{parts.numbers, expect};
        }, "numbers at x = 0"));
      }
    }));
  }

  tasks.push_back(guarded(id, GridPoint{}, [=](std::vector<Verdict>& out) {
    // 2/(e^t + e^-t) through t^nmax
    const EgfSeries sech =
        ps_inv(ps_exp(LocPoly(1), g.nmax) + ps_exp(LocPoly(-1), g.nmax)) * LocPoly(2);
    for (unsigned n = 0; n <= g.nmax; ++n) {
      GridPoint pt;
      pt.n = n;
      out.push_back(judge(id, "euler-numbers", pt, [&] {
        const MPoly en = euler_polynomial(n).substitute(Var::x, MPoly(make_rational(1, 2)));
        return std::pair{LocPoly(en * pow2(static_cast<int>(n))), egf_coeff(sech, n)};
      }, "2^n E_n(1/2) against the secant-type generating function"));
    }
  }));
}

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table = {
      {"thm2.1", 8, 0, {}, build_thm21},
      {"thm2.2", 8, 0, {}, build_thm22},
      {"thm2.3", 8, 0, {}, build_thm23},
      {"appell", 8, 0, {}, build_appell},
      {"addition", 8, 0, {}, build_addition},
      {"cauchy1", 8, 0, {}, build_cauchy<1>},
      {"cauchy2", 8, 0, {}, build_cauchy<2>},
      {"cauchy3", 8, 0, {}, build_cauchy<3>},
      {"cauchy4", 8, 0, {}, build_cauchy<4>},
      {"eq5", 8, 0, {}, build_eq5},
      {"thm3.2a", 6, 0, {1, 2, 3}, build_thm32a},
      {"thm3.2b", 6, 0, {1, 2, 3}, build_thm32b},
      {"thm3.2c", 6, 0, {1, 2, 3}, build_thm32c},
      {"multi-addition", 6, 0, {1, 2, 3}, build_multi_addition},
      {"eq14", 4, 0, {1, 2, 3}, build_eq14},
      {"thm2.5", 5, 5, {}, build_thm25},
      {"thm2.6", 4, 4, {}, build_thm26},
      {"thm3.6", 4, 4, {2, 3}, build_thm36},
      {"thm3.7", 4, 4, {2, 3}, build_thm37},
      {"reductions", 10, 0, {1, 2, 3}, build_reductions},
  };
  return table;
}

const SuiteDef& find_suite(const std::string& id) {
  for (const auto& d : suite_table()) {
    if (d.id == id) return d;
  }
  throw UnknownSuite("unknown suite '" + id + "'");
}

Grid resolve(const SuiteDef& d, const SuiteSpec& spec) {
  Grid g;
  g.nmax = spec.nmax.value_or(d.nmax);
  g.mmax = spec.mmax.value_or(d.mmax);
  g.kset = spec.kset.value_or(range(-3, 3));
  g.entries = spec.kset.value_or(range(-1, 2));
  g.rset = spec.rset.value_or(d.rset);
  g.conventions = spec.conventions;
  g.logs = spec.logs;
  return g;
}

json point_to_json(const GridPoint& p) {
  json j;
  j["n"] = p.n;
  j["m"] = p.m ? json(*p.m) : json(nullptr);
  j["k"] = p.k ? json(*p.k) : json(nullptr);
  j["r"] = p.r ? json(*p.r) : json(nullptr);
  j["convention"] = p.convention ? json(convention_name(*p.convention)) : json(nullptr);
  if (p.s) j["s"] = *p.s;
  return j;
}

json config_to_json(const SuiteSpec& spec) {
  json c;
  c["suite"] = spec.suite;
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
  return c;
}

std::vector<std::vector<Verdict>> execute(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<Verdict>> results(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(jobs, tasks.size());
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
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

}  // namespace

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : suite_table()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& proven_suites() {
  static const std::vector<std::string> ids = {
      "thm2.1", "thm2.2",  "thm2.3",  "appell",         "addition",
      "thm3.2a", "thm3.2b", "thm3.2c", "multi-addition", "reductions"};
  return ids;
}

Report run_suite(const SuiteSpec& spec) {
  spec.logs.validate();
  if (spec.conventions.empty()) throw InvalidGrid("no polylog convention selected");
  if (spec.kset && spec.kset->empty()) throw InvalidGrid("empty k-set");
  if (spec.rset) {
    if (spec.rset->empty()) throw InvalidGrid("empty r-set");
    for (unsigned r : *spec.rset) {
      if (r == 0) throw InvalidGrid("ranks must be >= 1");
    }
  }

  std::vector<std::string> ids;
  if (spec.suite == "all") {
    ids = registered_suites();
  } else if (spec.suite == "proven") {
    ids = proven_suites();
  } else {
    ids = {find_suite(spec.suite).id};
  }

  std::vector<Task> tasks;
  for (const auto& id : ids) {
    const SuiteDef& d = find_suite(id);
    d.build(d.id, resolve(d, spec), tasks);
  }

  Report rep;
  rep.config = config_to_json(spec);
  for (auto& chunk : execute(tasks, spec.jobs)) {
    for (auto& v : chunk) {
      switch (v.status) {
        case Status::pass:
          ++rep.pass;
          break;
        case Status::discrepancy:
          ++rep.discrepancy;
          break;
        case Status::error:
          ++rep.error;
          break;
      }
      rep.verdicts.push_back(std::move(v));
    }
  }
  return rep;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["suite"] = v.suite;
  j["variant"] = v.variant;
  j["point"] = point_to_json(v.point);
  j["status"] = status_name(v.status);
  if (v.lhs) j["lhs"] = serialize_locpoly(*v.lhs);
  if (v.rhs) j["rhs"] = serialize_locpoly(*v.rhs);
  j["note"] = v.note;
  return j;
}

json report_to_json(const Report& r) {
  json j;
  j["version"] = r.version;
  j["config"] = r.config;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(verdicts);

  struct Tally {
    std::size_t pass = 0, discrepancy = 0, error = 0;
    void add(Status s) {
      (s == Status::pass ? pass : s == Status::discrepancy ? discrepancy : error) += 1;
    }
    json to_json() const { return {{"pass", pass}, {"discrepancy", discrepancy}, {"error", error}}; }
  };
  std::map<std::string, Tally> per_suite;
  std::map<std::string, std::map<std::string, Tally>> per_variant;
  // suite -> "variant r=R" -> convention -> all pass
  std::map<std::string, std::map<std::string, std::map<std::string, bool>>> validating;
  for (const auto& v : r.verdicts) {
    per_suite[v.suite].add(v.status);
    if (!v.variant.empty()) per_variant[v.suite][v.variant].add(v.status);
    if (v.point.convention && v.point.r) {
      const std::string key = v.variant + " r=" + std::to_string(*v.point.r);
      auto [it, fresh] = validating[v.suite][key].try_emplace(convention_name(*v.point.convention), true);
      (void)fresh;
      if (v.status != Status::pass) it->second = false;
    }
  }
  json by_suite = json::object();
  for (const auto& [suite, t] : per_suite) {
    json s = t.to_json();
    json variants = json::object();
    for (const auto& [name, vt] : per_variant[suite]) variants[name] = vt.to_json();
    s["variants"] = std::move(variants);
    if (validating.count(suite)) {
      json vc = json::object();
      for (const auto& [key, convs] : validating[suite]) {
        json list = json::array();
        for (const auto& [name, ok] : convs) {
          if (ok) list.push_back(name);
        }
        vc[key] = std::move(list);
      }
      s["validating_conventions"] = std::move(vc);
    }
    by_suite[suite] = std::move(s);
  }
  j["summary"] = {{"pass", r.pass},
                  {"discrepancy", r.discrepancy},
                  {"error", r.error},
                  {"by_suite", std::move(by_suite)}};
  return j;
}

std::string report_to_text(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,variant,n,m,k,r,convention,s,status,lhs,rhs,note\n";
  for (const auto& v : r.verdicts) {
    std::string k;
    if (v.point.k) {
      for (std::size_t i = 0; i < v.point.k->size(); ++i) {
        if (i) k += ';';
        k += std::to_string((*v.point.k)[i]);
      }
    }
    auto opt = [](const std::optional<unsigned>& x) { return x ? std::to_string(*x) : std::string(); };
    os << csv_field(v.suite) << ',' << csv_field(v.variant) << ',' << v.point.n << ','
       << opt(v.point.m) << ',' << k << ',' << opt(v.point.r) << ','
       << (v.point.convention ? convention_name(*v.point.convention) : "") << ','
       << opt(v.point.s) << ',' << status_name(v.status) << ','
       << (v.lhs ? csv_field(serialize_locpoly(*v.lhs).dump()) : "") << ','
       << (v.rhs ? csv_field(serialize_locpoly(*v.rhs).dump()) : "") << ','
       << csv_field(v.note) << '\n';
  }
  return os.str();
}

int exit_code(const Report& r) {
  if (r.error > 0) return 2;
  if (r.discrepancy > 0) return 1;
  return 0;
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InvalidGrid("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<int> parse_int_set(std::string_view text) {
  std::vector<int> out;
  std::set<int> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t dots = item.find("..");
    int a = 0, b = 0;
    if (dots == std::string_view::npos) {
      a = b = parse_int(item);
    } else {
      a = parse_int(item.substr(0, dots));
      b = parse_int(item.substr(dots + 2));
      if (a > b) throw InvalidGrid("empty range '" + std::string(item) + "'");
    }
    for (int v = a; v <= b; ++v) {
      if (seen.insert(v).second) out.push_back(v);
    }
    start = comma + 1;
  }
  return out;
}

Convention parse_convention(std::string_view text) {
  if (text == "weak") return Convention::weak;
  if (text == "strict") return Convention::strict;
  throw InvalidGrid("unknown convention '" + std::string(text) + "'");
}

}  // namespace pel
