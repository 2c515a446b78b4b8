#include "cpmp/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cpmp/units.hpp"

namespace cpmp {

using nlohmann::json;

namespace {

std::vector<double> require_number_array(const json &j, const std::string &field,
                                         std::size_t count, const std::string &where) {
  if (!j.is_array())
    throw DatasetError(where + "." + field + ": expected an array");
  if (j.size() != count)
    throw DatasetError(where + "." + field + ": expected " + std::to_string(count) +
                       " components, got " + std::to_string(j.size()));
  std::vector<double> out;
  out.reserve(count);
  for (const auto &v : j) {
    if (!v.is_number())
      throw DatasetError(where + "." + field + ": non-numeric component");
    const double x = v.get<double>();
    if (!std::isfinite(x))
      throw DatasetError(where + "." + field + ": non-finite component");
    out.push_back(x);
  }
  return out;
}

} // namespace

//==============================================================================
AtomDataset parse_dataset(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw DatasetError(std::string("dataset: invalid JSON: ") + e.what());
  }

  if (!j.is_object())
    throw DatasetError("dataset: top level must be an object");
  if (!j.contains("atom") || !j["atom"].is_string())
    throw DatasetError("dataset.atom: required string field");
  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw DatasetError("dataset.transitions: required array field");

  AtomDataset ds;
  ds.atom = j["atom"].get<std::string>();
  ds.provenance = j.value("provenance", std::string{});

  std::set<std::string> seen;
  std::size_t idx = 0;
  for (const auto &t : j["transitions"]) {
    const std::string where = "transitions[" + std::to_string(idx) + "]";
    if (!t.is_object())
      throw DatasetError(where + ": expected an object");
    if (!t.contains("label") || !t["label"].is_string())
      throw DatasetError(where + ".label: required string field");
    if (!t.contains("omega_au") || !t["omega_au"].is_number())
      throw DatasetError(where + ".omega_au: required numeric field");

    TransitionRecord rec;
    rec.label = t["label"].get<std::string>();
    if (!seen.insert(rec.label).second)
      throw DatasetError(where + ".label: duplicate label '" + rec.label + "'");
    rec.omega = t["omega_au"].get<double>();
    if (!(rec.omega > 0.0))
      throw DatasetError(where + ".omega_au: must be > 0");

    if (t.contains("dipole_au")) {
      const auto v = require_number_array(t["dipole_au"], "dipole_au", 3, where);
      rec.d = {v[0], v[1], v[2]};
    }
    if (t.contains("quadrupole_au")) {
      const auto v = require_number_array(t["quadrupole_au"], "quadrupole_au", 6, where);
      rec.Q = {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    if (t.contains("octupole_au")) {
      const auto v = require_number_array(t["octupole_au"], "octupole_au", 10, where);
      for (int n = 0; n < 10; ++n)
        rec.O.component(n) = v[static_cast<std::size_t>(n)];
    }
    ds.transitions_au.push_back(std::move(rec));
    ++idx;
  }
  if (ds.transitions_au.empty())
    throw DatasetError("dataset.transitions: must not be empty");
  return ds;
}

AtomDataset load_dataset(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw DatasetError("dataset: cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dataset(ss.str());
}

//==============================================================================
std::vector<TransitionRecord> AtomDataset::to_internal() const {
  const double cd = units::dipole_au_to_internal();
  const double cq = units::quadrupole_au_to_internal();
  const double co = units::octupole_au_to_internal();

  std::vector<TransitionRecord> out;
  out.reserve(transitions_au.size());
  for (const auto &r : transitions_au) {
    TransitionRecord s = r;
    s.d = cd * r.d;
    s.Q = cq * r.Q;
    s.O = co * r.O;
    out.push_back(std::move(s));
  }
  return out;
}

//==============================================================================
std::string write_dataset(const AtomDataset &ds) {
  json j;
  j["atom"] = ds.atom;
  j["provenance"] = ds.provenance;
  j["transitions"] = json::array();
  for (const auto &r : ds.transitions_au) {
    json t;
    t["label"] = r.label;
    t["omega_au"] = r.omega;
    t["dipole_au"] = {r.d.x, r.d.y, r.d.z};
    t["quadrupole_au"] = {r.Q.xx, r.Q.yy, r.Q.zz, r.Q.xy, r.Q.xz, r.Q.yz};
    json oct = json::array();
    for (int n = 0; n < 10; ++n)
      oct.push_back(r.O.component(n));
    t["octupole_au"] = oct;
    j["transitions"].push_back(std::move(t));
  }
  return j.dump(2);
}

void save_dataset(const AtomDataset &ds, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw DatasetError("dataset: cannot write file '" + path + "'");
  out << write_dataset(ds) << "\n";
}

//==============================================================================
std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

} // namespace cpmp
