#include "largeset/report.hpp"

#include <sstream>

namespace largeset {

std::string exactness_name(Exactness e) {
  switch (e) {
    case Exactness::exact_on_window: return "exact-on-window";
    case Exactness::lower_bound: return "lower-bound";
    case Exactness::upper_bound: return "upper-bound";
  }
  return "?";
}

namespace {

nlohmann::json finite_set_json(const FiniteSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Element& e : s) arr.push_back(e.str());
  return arr;
}

}  // namespace

nlohmann::json report_to_json(const LargenessReport& r) {
  nlohmann::json j;
  j["predicate"] = r.predicate;
  j["set"] = r.set_name;
  j["window"] = r.window.str();
  j["decided"] = r.decided;
  j["exactness"] = exactness_name(r.exactness);
  if (r.value) j["value"] = *r.value;
  if (r.holds) j["holds"] = *r.holds;
  if (r.witness) j["witness"] = finite_set_json(*r.witness);
  if (r.witness_element) j["witness_element"] = r.witness_element->str();
  if (r.counterexample) j["counterexample"] = finite_set_json(*r.counterexample);
  if (r.counterexample_sequence) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Element& e : *r.counterexample_sequence) arr.push_back(e.str());
    j["counterexample_sequence"] = arr;
  }
  j["notes"] = r.notes;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv_header() {
  return "predicate,set,window,decided,exactness,value,holds,witness,counterexample,notes";
}

std::string report_to_csv_row(const LargenessReport& r) {
  std::ostringstream os;
  os << csv_escape(r.predicate) << ',' << csv_escape(r.set_name) << ','
     << csv_escape(r.window.str()) << ',' << (r.decided ? "true" : "false") << ','
     << exactness_name(r.exactness) << ',';
  if (r.value) os << *r.value;
  os << ',';
  if (r.holds) os << (*r.holds ? "true" : "false");
  os << ',';
  if (r.witness)
    os << csv_escape(r.witness->str());
  else if (r.witness_element)
    os << csv_escape(r.witness_element->str());
  os << ',';
  if (r.counterexample) os << csv_escape(r.counterexample->str());
  os << ',';
  std::string notes;
  for (size_t i = 0; i < r.notes.size(); ++i) notes += (i ? "; " : "") + r.notes[i];
  os << csv_escape(notes);
  return os.str();
}

}  // namespace largeset
