#include "compdet/serialize.hpp"

#include <string>

namespace compdet {

using nlohmann::ordered_json;

ordered_json compositions_to_json(std::span<const Composition> cs) {
  ordered_json out = ordered_json::array();
  for (const auto& c : cs) out.push_back(ordered_json(std::vector<std::uint32_t>(c.parts().begin(), c.parts().end())));
  return out;
}

ordered_json matrix_to_json(const SymbolicMatrix& m) {
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.order(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.order(); ++c) row.push_back(m.entries(r, c).to_string());
    entries.push_back(std::move(row));
  }
  ordered_json out;
  out["family"] = std::string(to_string(m.family));
  out["domain"] = std::string(to_string(m.domain));
  out["n"] = m.n;
  out["k"] = m.k;
  out["order"] = m.order();
  out["row_order"] = compositions_to_json(m.index);
  out["entries"] = std::move(entries);
  return out;
}

ordered_json factored_to_json(const FactoredForm& f) {
  ordered_json factors = ordered_json::array();
  for (const auto& factor : f.factors()) {
    ordered_json item;
    item["base"] = factor.base.to_string();
    item["exp"] = factor.exponent;
    factors.push_back(std::move(item));
  }
  ordered_json out;
  out["scalar"] = to_string(f.scalar());
  out["factors"] = std::move(factors);
  return out;
}

ordered_json report_to_json(const VerificationReport& r, bool include_timing) {
  ordered_json out;
  out["theorem"] = r.subject;
  out["n"] = r.n;
  out["k"] = r.k;
  out["mode"] = std::string(to_string(r.mode));
  out["status"] = std::string(to_string(r.status));
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  if (include_timing) out["elapsed_ms"] = r.elapsed.count();
  if (r.witness.empty()) {
    out["witness"] = nullptr;
  } else {
    ordered_json w;
    for (const auto& [name, value] : r.witness) w[name] = value;
    out["witness"] = std::move(w);
  }
  if (!r.leading_term.empty()) out["leading_term"] = r.leading_term;
  if (!r.lhs.empty()) out["lhs"] = r.lhs;
  if (!r.rhs.empty()) out["rhs"] = r.rhs;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

}  // namespace compdet
