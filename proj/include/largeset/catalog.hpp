#ifndef LARGESET_CATALOG_HPP
#define LARGESET_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "largeset/set_spec.hpp"

namespace largeset {

// Which word lengths a length-filtered set admits.
class LengthSet {
 public:
  static LengthSet of_list(std::vector<uint32_t> lengths);
  static LengthSet residue(uint32_t modulus, uint32_t remainder);
  static LengthSet of_intervals(std::vector<std::pair<uint32_t, uint32_t>> closed);
  // "even" | "odd" | "2,4" | "mod:M:R" | "ivl:A:B,A:B"
  static LengthSet parse(const std::string& s);

  bool contains(size_t len) const;
  std::string str() const;

 private:
  enum class Kind { list, residue, intervals };
  Kind kind_ = Kind::list;
  std::vector<uint32_t> list_;
  uint32_t modulus_ = 0, remainder_ = 0;
  std::vector<std::pair<uint32_t, uint32_t>> intervals_;
};

// Construction catalog. Every membership test evaluates the defining
// arithmetic condition directly, so windows can change freely.

// r + dZ in Z.
SetSpec make_coset(int64_t d, int64_t r, std::optional<Window> w = std::nullopt);

// Union of closed integer intervals [a,b].
SetSpec make_interval_union(std::vector<std::pair<int64_t, int64_t>> pairs,
                            std::optional<Window> w = std::nullopt);

// B(Z) minus the two-letter words {m,n} with n - m a positive cube.
SetSpec make_cube_gap_complement(std::optional<Window> w = std::nullopt);

// Words whose length lies in T.
SetSpec make_length_filtered(LengthSet T, std::optional<Window> w = std::nullopt);

// The layered construction over a syndetic S in Z and distinct shifts
// s_1..s_r: a word belongs iff it contains exactly one shift s_k and its
// letter sum lies in 2 s_k + S. The cover hypothesis (the s_k + S cover
// the validation range) is checked on S's window at construction.
SetSpec make_s_prime(const SetSpec& S, const FiniteSet& shifts,
                     std::optional<Window> w = std::nullopt);

// Free group of rank 2: words whose last letter is the first generator.
SetSpec make_ends_with_a(std::optional<Window> w = std::nullopt);

// Words whose letters all lie in r + dZ, optionally translated; the
// candidate family for quotient-containment searches.
SetSpec make_letter_coset(int64_t d, int64_t r, std::optional<Window> w = std::nullopt,
                          std::optional<Element> translate_by = std::nullopt);

// CLI-facing registry.
using ParamMap = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string name;
  std::string family;  // "integer" | "boolean" | "free"
  std::string params;  // parameter schema, human readable
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

// Builds a catalog set from its CLI name and parameters. Unknown names or
// parameters raise config_error.
SetSpec build_catalog_set(const std::string& name, const ParamMap& params);

}  // namespace largeset

#endif
