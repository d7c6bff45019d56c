#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "v19/algebra.hpp"
#include "v19/checks.hpp"
#include "v19/tables.hpp"

namespace v19 {

using Json = nlohmann::json;

// Rationals always travel as "num/den" strings.
inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const CheckList& checks) {
  Json a = Json::array();
  for (const auto& it : checks.items)
    a.push_back({{"name", it.name}, {"expected", it.expected}, {"measured", it.measured}, {"pass", it.pass}});
  return a;
}

inline Json to_json(const RelationResidual& r) {
  Json j{{"relation", relation_name(r.relation)},
         {"L", r.L},
         {"holds", r.holds},
         {"method", r.method},
         {"p", to_json(r.p)},
         {"m", to_json(r.m)},
         {"x", to_json(r.xs)},
         {"attempts", r.attempts}};
  if (r.n >= 0) j["n"] = r.n;
  return j;
}

inline Json to_json(const TableReport& rep) {
  Json mism = Json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"table", m.table}, {"label", m.label}, {"expected", m.expected}, {"actual", m.actual}});
  return {{"model", to_string(rep.model)},
          {"q", to_json(rep.q)},
          {"compared", rep.compared},
          {"zeros", rep.zeros},
          {"mismatches", mism},
          {"passed", rep.passed()}};
}

inline Json to_json(const Solution& s) {
  Json phi = Json::object(), phibar = Json::object();
  for (std::size_t c = 0; c < s.coeffs.size(); ++c) (c < s.layout.block() ? phi : phibar)[s.layout.label(c)] = to_json(s.coeffs[c]);
  Json families = Json::object();
  for (const auto& [k, v] : s.pivots_by_family) families[k] = v;
  Json primes = Json::array();
  for (auto p : s.primes) primes.push_back(std::to_string(p));
  return {{"model", to_string(s.model)},
          {"L", s.L},
          {"p", to_json(s.p)},
          {"q", to_json(s.q)},
          {"m", to_json(s.m)},
          {"backend", backend_name(s.backend)},
          {"symmetrized", s.layout.symmetric},
          {"unknowns", s.layout.unknowns()},
          {"samples", s.samples},
          {"rows", s.rows},
          {"rank", s.rank},
          {"kernel_dim", s.kernel_dim},
          {"doubled", s.doubled},
          {"resamples", s.resamples},
          {"phi", phi},
          {"phibar", phibar},
          {"normalized_at", s.layout.label(s.normalization_index)},
          {"normalization_fallback", s.normalization_fallback},
          {"kappa", to_json(s.kappa)},
          {"pivots_by_family", families},
          {"primes", primes},
          {"prime_retries", s.prime_retries},
          {"max_entry_bits", s.max_entry_bits},
          {"checks", to_json(s.checks)}};
}

/// Canonical text: sorted keys (nlohmann's default object is an ordered
/// map), two-space indent, trailing newline.
inline std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

/// Writes to `path`, or to standard output when path is "-".
inline void emit(const Json& report, const std::string& path) {
  const std::string text = canonical(report);
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace v19
