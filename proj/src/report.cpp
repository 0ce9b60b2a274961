#include "monomial/report.hpp"

#include <sstream>

#include "monomial/level_io.hpp"

namespace monomial {

using nlohmann::json;

json to_json(const LevelMatrix& m) { return m.rows(); }

json to_json(const WeylElement& w) {
  std::vector<std::size_t> perm;
  for (auto p : w.perm()) perm.push_back(p + 1);
  return {{"shifts", w.shifts()}, {"perm", perm}};
}

json to_json(const OrderCheck& c) {
  if (c.ok) return nullptr;
  const auto& v = *c.violation;
  if (v.kind == OrderViolation::Kind::diagonal) return {{"kind", "diagonal"}, {"i", v.i + 1}};
  return {{"kind", "triangle"}, {"i", v.i + 1}, {"j", v.j + 1}, {"k", v.k + 1}};
}

json to_json(const EichlerShape& s) {
  json j{{"period", s.period}, {"invariant", s.invariant}};
  j["a"] = s.a ? json(*s.a) : json(nullptr);
  return j;
}

json to_json(const GorensteinCheck& c) {
  json rows = json::array();
  for (const auto& w : c.witnesses) {
    rows.push_back({{"row", w.row + 1}, {"column", w.column + 1}, {"shift", w.shift}});
  }
  json j{{"rows", rows}};
  j["failing_row"] = c.failing_row ? json(*c.failing_row + 1) : json(nullptr);
  return j;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["n"] = r.input.size();
  j["input"] = to_json(r.input);
  j["is_order"] = r.is_order();
  json witnesses;
  witnesses["order_violation"] = to_json(r.order);
  if (!r.is_order()) {
    for (const char* key : {"canonical", "is_gorenstein", "eichler", "is_hereditary", "is_bass",
                            "bass_reason"}) {
      j[key] = nullptr;
    }
    j["witnesses"] = witnesses;
    return j;
  }
  j["canonical"] = to_json(r.canonical->level);
  j["is_gorenstein"] = r.is_gorenstein();
  j["eichler"] = r.eichler ? to_json(r.eichler->shape) : json(nullptr);
  j["is_hereditary"] = r.is_hereditary();
  j["is_bass"] = r.is_bass();
  j["bass_reason"] = std::string(to_string(r.bass->reason));
  witnesses["canonical"] = to_json(r.canonical->witness);
  witnesses["gorenstein"] = to_json(*r.gorenstein);
  if (r.eichler) {
    witnesses["eichler"] = {{"triangular", to_json(r.eichler->triangular)},
                            {"weyl", to_json(r.eichler->witness)},
                            {"blocks", r.eichler->blocks}};
  } else {
    witnesses["eichler"] = nullptr;
  }
  witnesses["bass_overorder"] =
      r.bass->overorder_witness ? to_json(*r.bass->overorder_witness) : json(nullptr);
  j["witnesses"] = witnesses;
  return j;
}

json to_json(const CensusClass& c) {
  json j = to_json(c.report);
  j["upper_triangular"] = c.upper_triangular;
  j["raw_count"] = c.raw_count;
  return j;
}

json to_json(const BassOracleVerdict& v) {
  json j{{"is_bass", v.is_bass}, {"overorders_examined", v.overorders_examined}};
  j["non_gorenstein_overorder"] =
      v.non_gorenstein_overorder ? to_json(*v.non_gorenstein_overorder) : json(nullptr);
  return j;
}

std::string describe(const OrderViolation& v) {
  std::ostringstream os;
  if (v.kind == OrderViolation::Kind::diagonal) {
    os << "diagonal entry m_(" << v.i + 1 << "," << v.i + 1 << ") is not zero";
  } else {
    os << "triple (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << "): m_(" << v.i + 1 << ","
       << v.k + 1 << ") > m_(" << v.i + 1 << "," << v.j + 1 << ") + m_(" << v.j + 1 << ","
       << v.k + 1 << ")";
  }
  return os.str();
}

std::string describe(const EichlerShape& s) {
  std::ostringstream os;
  os << "period " << s.period << ", invariant (";
  for (std::size_t i = 0; i < s.invariant.size(); ++i) os << (i ? "," : "") << s.invariant[i];
  os << ")";
  if (s.a) os << ", a=" << *s.a;
  return os.str();
}

std::string render_text(const ClassificationReport& r) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "level:       " << r.input << "\n";
  os << "order:       " << yes(r.is_order()) << "\n";
  if (!r.is_order()) {
    os << "violation:   " << describe(*r.order.violation) << "\n";
    return os.str();
  }
  os << "canonical:   " << r.canonical->level << "  via " << r.canonical->witness << "\n";
  os << "gorenstein:  " << yes(r.is_gorenstein()) << "\n";
  if (!r.is_gorenstein()) {
    os << "  row " << *r.gorenstein->failing_row + 1 << " has no matching column\n";
  }
  os << "eichler:     ";
  if (r.eichler) {
    os << describe(r.eichler->shape) << "  (triangular form " << r.eichler->triangular << ")\n";
  } else {
    os << "no\n";
  }
  os << "hereditary:  " << yes(r.is_hereditary()) << "\n";
  os << "bass:        " << yes(r.is_bass()) << " (" << to_string(r.bass->reason) << ")\n";
  if (r.bass->overorder_witness) {
    os << "  non-gorenstein overorder: " << *r.bass->overorder_witness << "\n";
  }
  return os.str();
}

}  // namespace monomial
