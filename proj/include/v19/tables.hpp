#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "v19/expr.hpp"
#include "v19/solver.hpp"

namespace v19 {

/// One coefficient of the L=2, mu=0 solution as a rational function of q,
/// normalized by phi[0,0,0]. For phi: (lattice, v1, v2) exponents; for
/// phibar: (v1, v2, lattice) exponents.
struct TableEntry {
  int i, j, k;
  const char* expr;
};

namespace tables {

inline const std::vector<TableEntry>& ik_phi() {
  static const std::vector<TableEntry> t{
    {0, 0, 0, "1"},
    {0, 0, 1, "-(2 (2 q^4-2q-1))/(q^2 (q^2+1)(q^2+q+1))"},
    {0, 0, 2, "(q^7+q^5-8 q^4-3q^3+q^2+q+1)/(q^5 (q^2+1) (q^2+q+1))"},
    {0, 0, 3, "(2 (q^4-q-1))/(q^5 (q^2+1) (q^2+q+1))"},
    {1, 0, 0, "-(2 (q^4-2 q^3-2 q+1))/((q-1) q(q^2+1) (q^2+q+1))"},
    {1, 0, 1, "-(q^10-4 q^8+5q^7-q^6+17 q^5-13 q^4-3 q^3+q+1)/(q^5 (q^5+q^3-q^2-1))"},
    {1, 0, 2, "-(2 (q^7-8 q^6+7 q^5+q^4+5 q^3-2 q^2-3 q+1))/(q^6 (q^5+q^3-q^2-1))"},
    {1, 0, 3, "-(q^8-4 q^7+2q^6-8 q^5+2 q^4+4 q^3-1)/(q^8 (q^5+q^3-q^2-1))"},
    {2, 0, 0, "-(q^4+q^3+6 q^2+q+1)/(q^3 (q^2+1) (q^2+q+1))"},
    {2, 0, 1, "(2 (6q^4-q^3-3 q-1))/(q^5 (q^2+1) (q^2+q+1))"},
    {2, 0, 2, "-(5 q^7-4 q^6+q^5-12 q^4-3 q^3+q^2+q+1)/(q^8 (q^2+1) (q^2+q+1))"},
    {2, 0, 3, "-(2 (q^6+2 q^4-q-1))/(q^8 (q^2+1) (q^2+q+1))"},
    {3, 0, 0, "(2)/(q^3-q^6)"},
    {3, 0, 1, "(4 q^3-q^2-1)/(q^6 (q^3-1))"},
    {3, 0, 2, "-(2 (q^3-q^2-1))/(q^6 (q^3-1))"},
    {3, 0, 3, "-(q^2+1)/(q^6 (q^3-1))"},
    {0, 1, 0, "-(2)/(q^2+1)"},
    {0, 1, 1, "(q^7+q^6+5 q^5-3q^4-4 q^3-3 q^2+1)/(q^5 (q^2+1) (q^2+q+1))"},
    {0, 1, 2, "-(2 (q^5-q^4-q^3-4 q^2+2))/(q^5 (q^2+1) (q^2+q+1))"},
    {0, 1, 3, "-(3 q^4-q^3-2q^2-q-1)/(q^7 (q^2+1) (q^2+q+1))"},
    {1, 1, 0, "(q^6+q^4-8 q^3+q^2+1)/(q^3 (q^5+q^3-q^2-1))"},
    {1, 1, 1, "-(2 (2 q^6-7 q^5+q^4-4 q^3+8 q^2+q-3))/(q^5 (q^5+q^3-q^2-1))"},
    {1, 1, 2, "(q^11-5 q^10+2 q^9-12 q^8+22 q^7+q^6-3 q^4-5 q^3+4 q^2-1)/(q^10 (q^5+q^3-q^2-1))"},
    {1, 1, 3, "(2 (q^6-4 q^5+q^4-2 q^3+q^2+2 q-1))/(q^8 (q^5+q^3-q^2-1))"},
    {2, 1, 0, "(2 (2 q^2+q+2))/(q^3 (q^2+1) (q^2+q+1))"},
    {2, 1, 1, "-(5 q^7+q^6+9 q^5-7 q^4-4 q^3-3 q^2+1)/(q^8 (q^2+1) (q^2+q+1))"},
    {2, 1, 2, "(2 (q^7+2 q^5-5 q^4-q^3-4 q^2+2))/(q^8 (q^2+1) (q^2+q+1))"},
    {2, 1, 3, "(4 q^4-q^2-q-1)/(q^10 (q^2+q+1))"},
    {3, 1, 0, "(q^2+1)/(q^5 (q^3-1))"},
    {3, 1, 1, "-(2 (q^3+q-1))/(q^6 (q^3-1))"},
    {3, 1, 2, "(q^3+q-4)/(q^6 (q^3-1))"},
    {3, 1, 3, "(2)/(q^6 (q^3-1))"},
  };
  return t;
}

inline const std::vector<TableEntry>& ik_phibar() {
  static const std::vector<TableEntry> t{
    {0, 0, 0, "q^4"},
    {0, 0, 1, "-(2 q^3 (q^4-2 q^3-2 q+1))/((q-1) (q^2+1) (q^2+q+1))"},
    {0, 0, 2, "-(q (q^4+q^3+6 q^2+q+1))/((q^2+1) (q^2+q+1))"},
    {0, 0, 3, "-(2 q)/((q-1) (q^2+q+1))"},
    {1, 0, 0, "-(2 q^3 (q^4+2 q^3-2))/((q^2+1) (q^2+q+1))"},
    {1, 0, 1, "(q^10+q^9-3 q^7-13 q^6+17 q^5-q^4+5 q^3-4 q^2+1)/((q-1) q^2 (q^2+1) (q^2+q+1))"},
    {1, 0, 2, "(2 (q^4+3 q^3+q-6))/((q^2+1) (q^2+q+1))"},
    {1, 0, 3, "(q^3+q-4)/((q-1) q^2 (q^2+q+1))"},
    {2, 0, 0, "(q^7+q^6+q^5-3 q^4-8 q^3+q^2+1)/((q^2+1) (q^2+q+1))"},
    {2, 0, 1, "-(2 (q^7-3 q^6-2 q^5+5 q^4+q^3+7 q^2-8 q+1))/((q-1) q(q^2+1) (q^2+q+1))"},
    {2, 0, 2, "-(q^7+q^6+q^5-3 q^4-12 q^3+q^2-4 q+5)/(q^3 (q^2+1) (q^2+q+1))"},
    {2, 0, 3, "(2 (q^3+q-1))/((q-1) q^5 (q^2+q+1))"},
    {3, 0, 0, "(2 (q^4+q^3-1))/((q^2+1) (q^2+q+1))"},
    {3, 0, 1, "-(q^8-4 q^5-2 q^4+8 q^3-2 q^2+4 q-1)/((q-1) q^3 (q^2+1) (q^2+q+1))"},
    {3, 0, 2, "-(2(q^6+q^5-2 q^2-1))/(q^5 (q^2+1) (q^2+q+1))"},
    {3, 0, 3, "(q^2+1)/((q-1) q^7 (q^2+q+1))"},
    {0, 1, 0, "(2 q^3)/(q^2+1)"},
    {0, 1, 1, "-(q^6+q^4-8 q^3+q^2+1)/((q-1) (q^2+1) (q^2+q+1))"},
    {0, 1, 2, "-(2 (2 q^2+q+2))/((q^2+1) (q^2+q+1))"},
    {0, 1, 3, "-(q^2+1)/((q-1) q^2 (q^2+q+1))"},
    {1, 1, 0, "(q^7-3 q^5-4 q^4-3 q^3+5 q^2+q+1)/((q^2+1) (q^2+q+1))"},
    {1, 1, 1, "(2 (3 q^6-q^5-8 q^4+4 q^3-q^2+7 q-2))/((q-1) q (q^2+1) (q^2+q+1))"},
    {1, 1, 2, "-(q^7-3 q^5-4 q^4-7 q^3+9 q^2+q+5)/(q^3 (q^2+1) (q^2+q+1))"},
    {1, 1, 3, "(2 (q^3-q^2-1))/((q-1) q^5 (q^2+q+1))"},
    {2, 1, 0, "(2 (2 q^5-4 q^3-q^2-q+1))/(q (q^2+1) (q^2+q+1))"},
    {2, 1, 1, "(q^11-4 q^9+5 q^8+3 q^7-q^5-22 q^4+12 q^3-2 q^2+5 q-1)/((q-1) q^4 (q^2+1) (q^2+q+1))"},
    {2, 1, 2, "-(2 (2 q^7-4 q^5-q^4-5 q^3+2 q^2+1))/(q^6 (q^2+1)(q^2+q+1))"},
    {2, 1, 3, "(4 q^3-q^2-1)/((q-1) q^8 (q^2+q+1))"},
    {3, 1, 0, "(q^4+q^3+2 q^2+q-3)/(q (q^2+1) (q^2+q+1))"},
    {3, 1, 1, "-(2 (q^6-2 q^5-q^4+2 q^3-q^2+4 q-1))/((q-1) q^4 (q^2+1) (q^2+q+1))"},
    {3, 1, 2, "-(q^4+q^3+q^2-4)/(q^6 (q^2+q+1))"},
    {3, 1, 3, "(2)/((q-1) q^8 (q^2+q+1))"},
  };
  return t;
}

inline const std::vector<TableEntry>& fz_phi() {
  static const std::vector<TableEntry> t{
    {0, 0, 0, "1"},
    {0, 0, 1, "-(2 (q+2))/(q^2+1)"},
    {0, 0, 2, "((2 q+1) (q^2+4 q+1))/(q (q^2+1) (q^2+q+1))"},
    {0, 0, 3, "-(2)/(q (q^2+1))"},
    {1, 0, 0, "-(2 (q+1))/(q^2+1)"},
    {1, 0, 1, "-((q+1) (q^4-q^3-8 q^2-9 q-1))/(q (q^2+1) (q^2+q+1))"},
    {1, 0, 2, "(2 (q+1) (q^3-2 q^2-5 q-3))/(q (q^2+1) (q^2+q+1))"},
    {1, 0, 3, "((q+1) (q^2+4 q+1))/(q^2 (q^2+1) (q^2+q+1))"},
    {2, 0, 0, "(q^2+4 q+1)/((q^2+1) (q^2+q+1))"},
    {2, 0, 1, "(2 (q^4-q^3-5 q^2-3 q-1))/(q (q^2+1) (q^2+q+1))"},
    {2, 0, 2, "-(q^5-4 q^3-9 q^2-5 q-1)/(q^2 (q^2+1) (q^2+q+1))"},
    {2, 0, 3, "-(2)/(q^2 (q^2+1))"},
    {3, 0, 0, "0"},
    {3, 0, 1, "0"},
    {3, 0, 2, "0"},
    {3, 0, 3, "0"},
    {0, 1, 0, "-(2)/(q^2+1)"},
    {0, 1, 1, "(q^5+5 q^4+9 q^3+4 q^2-1)/(q^3 (q^2+1) (q^2+q+1))"},
    {0, 1, 2, "-(2 (q^4+3 q^3+5 q^2+q-1))/(q^3 (q^2+1) (q^2+q+1))"},
    {0, 1, 3, "(q^2+4 q+1)/(q^2 (q^2+1) (q^2+q+1))"},
    {1, 1, 0, "((q+1) (q^2+4 q+1))/(q (q^2+1) (q^2+q+1))"},
    {1, 1, 1, "-(2 (q+1) (3 q^3+5 q^2+2 q-1))/(q^3 (q^2+1) (q^2+q+1))"},
    {1, 1, 2, "((q+1) (q^4+9 q^3+8 q^2+q-1))/(q^4 (q^2+1) (q^2+q+1))"},
    {1, 1, 3, "-(2 (q+1))/(q^3 (q^2+1))"},
    {2, 1, 0, "-(2)/(q (q^2+1))"},
    {2, 1, 1, "((q+2) (q^2+4 q+1))/(q^2 (q^2+1)(q^2+q+1))"},
    {2, 1, 2, "-(2 (2 q+1))/(q^3 (q^2+1))"},
    {2, 1, 3, "(1)/(q^4)"},
    {3, 1, 0, "0"},
    {3, 1, 1, "0"},
    {3, 1, 2, "0"},
    {3, 1, 3, "0"},
  };
  return t;
}

inline const std::vector<TableEntry>& fz_phibar() {
  static const std::vector<TableEntry> t{
    {0, 0, 0, "1"},
    {0, 0, 1, "-(2 (q+1))/(q^2+1)"},
    {0, 0, 2, "(q^2+4 q+1)/(q^4+q^3+2 q^2+q+1)"},
    {0, 0, 3, "0"},
    {1, 0, 0, "-(4 q+2)/(q^2+1)"},
    {1, 0, 1, "((q+1) (q^4+9 q^3+8 q^2+q-1))/(q^2 (q^2+1) (q^2+q+1))"},
    {1, 0, 2, "-(2 (q^4+3 q^3+5 q^2+q-1))/(q^2 (q^2+1) (q^2+q+1))"},
    {1, 0, 3, "0"},
    {2, 0, 0, "((q+2) (q^2+4 q+1))/((q^2+1) (q^2+q+1))"},
    {2, 0, 1, "-(2 (q+1) (3 q^3+5 q^2+2 q-1))/(q^2 (q^2+1) (q^2+q+1))"},
    {2, 0, 2, "(q^5+5 q^4+9 q^3+4 q^2-1)/(q^3 (q^2+1) (q^2+q+1))"},
    {2, 0, 3, "0"},
    {3, 0, 0, "-(2)/(q^2+1)"},
    {3, 0, 1, "(q^3+5 q^2+5 q+1)/(q^5+q^4+2 q^3+q^2+q)"},
    {3, 0, 2, "-(2)/(q^3+q)"},
    {3, 0, 3, "0"},
    {0, 1, 0, "-(2 q)/(q^2+1)"},
    {0, 1, 1, "((q+1) (q^2+4 q+1))/((q^2+1) (q^2+q+1))"},
    {0, 1, 2, "-(2)/(q^2+1)"},
    {0, 1, 3, "0"},
    {1, 1, 0, "(-q^5+4 q^3+9 q^2+5 q+1)/(q^4+q^3+2 q^2+q+1)"},
    {1, 1, 1, "(2 (q+1) (q^3-2 q^2-5 q-3))/((q^2+1) (q^2+q+1))"},
    {1, 1, 2, "(2 q^3+9 q^2+6 q+1)/(q^5+q^4+2 q^3+q^2+q)"},
    {1, 1, 3, "0"},
    {2, 1, 0, "(2 (q^4-q^3-5 q^2-3 q-1))/((q^2+1) (q^2+q+1))"},
    {2, 1, 1, "(-q^5+9 q^3+17 q^2+10 q+1)/(q^5+q^4+2 q^3+q^2+q)"},
    {2, 1, 2, "-(2 (q+2))/(q^3+q)"},
    {2, 1, 3, "0"},
    {3, 1, 0, "(q^2+4 q+1)/(q^4+q^3+2 q^2+q+1)"},
    {3, 1, 1, "-(2 (q+1))/(q^3+q)"},
    {3, 1, 2, "(1)/(q^2)"},
    {3, 1, 3, "0"},
  };
  return t;
}

}  // namespace tables

struct TableMismatch {
  std::string table;
  std::string label;
  std::string expected;
  std::string actual;
};

struct TableReport {
  Model model = Model::IK;
  Rational q;
  std::size_t compared = 0;
  std::size_t zeros = 0;
  std::vector<TableMismatch> mismatches;

  bool passed() const { return compared == 64 && mismatches.empty(); }
};

/// Compares an L=2, mu=0 solution against every tabulated coefficient at the
/// solution's q.
inline TableReport compare_tables(const ModelContext& ctx, const Solution& sol) {
  if (sol.L != 2 || ctx.L() != 2) throw ConfigError("coefficient tables exist for L = 2 only");
  for (const auto& mj : ctx.m)
    if (mj != 1) throw ConfigError("coefficient tables assume all inhomogeneities vanish (m_j = 1)");
  if (sol.layout.unknowns() != 64) throw ConfigError("unexpected ansatz layout");
  TableReport rep;
  rep.model = ctx.model;
  rep.q = ctx.q;
  const bool ik = ctx.model == Model::IK;
  auto run = [&](const char* name, const std::vector<TableEntry>& entries, bool bar) {
    for (const auto& e : entries) {
      const std::size_t col = bar ? sol.layout.hbar_index(e.i, e.j, static_cast<std::size_t>(e.k))
                                  : sol.layout.h_index(static_cast<std::size_t>(e.i), e.j, e.k);
      const Rational expected = evaluate_q_expression<Rational>(e.expr, ctx.q);
      const Rational& actual = sol.coeffs[col];
      ++rep.compared;
      rep.zeros += sgn(expected) == 0;
      if (expected != actual) rep.mismatches.push_back({name, sol.layout.label(col), to_string(expected), to_string(actual)});
    }
  };
  run(ik ? "ik_phi" : "fz_phi", ik ? tables::ik_phi() : tables::fz_phi(), false);
  run(ik ? "ik_phibar" : "fz_phibar", ik ? tables::ik_phibar() : tables::fz_phibar(), true);
  return rep;
}

}  // namespace v19
