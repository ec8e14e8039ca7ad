#ifndef LARGESET_REPORT_HPP
#define LARGESET_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "largeset/finite_set.hpp"
#include "largeset/window.hpp"

namespace largeset {

// Direction of a windowed value relative to the window problem itself.
// Reports additionally note how the value relates to the ambient infinite
// group where that direction is known.
enum class Exactness { exact_on_window, lower_bound, upper_bound };

std::string exactness_name(Exactness e);

// Outcome of one windowed predicate: a value and/or verdict plus a
// machine-checkable witness or counterexample certificate.
struct LargenessReport {
  std::string predicate;
  std::string set_name;
  Window window;
  bool decided = true;
  Exactness exactness = Exactness::exact_on_window;
  std::optional<int64_t> value;
  std::optional<bool> holds;
  std::optional<FiniteSet> witness;
  std::optional<Element> witness_element;
  std::optional<FiniteSet> counterexample;
  std::optional<std::vector<Element>> counterexample_sequence;
  std::vector<std::string> notes;
  nlohmann::json extra = nlohmann::json::object();
};

nlohmann::json report_to_json(const LargenessReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const LargenessReport& r);

}  // namespace largeset

#endif
