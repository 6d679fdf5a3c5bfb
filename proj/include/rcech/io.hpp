#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rcech/abelian.hpp"
#include "rcech/cochain.hpp"
#include "rcech/groupoid.hpp"
#include "rcech/nerve.hpp"
#include "rcech/types_algebra.hpp"

namespace rcech {

// Insertion ordered so rendered reports keep a stable, readable field order.
using Json = nlohmann::ordered_json;

// Both throw std::invalid_argument with the parser's message on bad input.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

// Groupoid files come in two shapes. The explicit form:
//
//   { "objects": 2 (or a list of names),
//     "arrows":  [{"id": 0, "src": 0, "tgt": 0}, ...],  (id optional)
//     "compose": [[g, h, gh], ...],                     (defined pairs only)
//     "inverse": [...],
//     "involution": {"objects": [...], "arrows": [...]} }
//
// or a recipe, {"kind": ..., ...} with kind one of
//   group       orders, involution "trivial"|"inversion"
//   pair        points, involution (object permutation, optional)
//   real_space  points, involution (optional)
//   swap_double of (a nested groupoid)
//   orientifold points, point_involution, group, action[x][g], allow_non_free
//
// The result is always validated; recipes are canonicalized to the
// explicit form by construction.
RealGroupoid groupoid_from_json(const Json& j);
RealGroupoid load_groupoid(const std::string& path);
Json groupoid_to_json(const RealGroupoid& g);

// Command line coefficient literals: "Z", "Z(0,1)" (integers with the sign
// involution), "Zm(m,+1)", "Zm(m,-1)", "S1", or "Z<m>" for Z/m with the
// trivial involution ("Z2", "Z8", ...).
RealCoefficient coefficient_from_token(const std::string& token);

// Complex matrices as {"re": [[...]], "im": [[...]]}, im optional on input.
CMat cmatrix_from_json(const Json& j);
Json cmatrix_to_json(const CMat& m);

// {"gamma": ..., "U": ..., "odd": bool, "lambda": +-1}, the last two optional.
TypeModel type_model_from_json(const Json& j);
Json type_model_to_json(const TypeModel& m);

// One nerve level of values, {"level": n, "values": [[simplex, [c...]], ...]}.
// Unlisted simplices are zero; the table must satisfy the Real condition.
ValueTable value_table_from_json(const Nerve& nv, const RealCoefficient& a, std::size_t level,
                                 const Json& j);
Json value_table_to_json(const ValueTable& t);

// Circle valued cochain with entries numerators[s]/den, serialized as
// {"level": n, "den": m, "values": [[simplex, num], ...]}. Checks the Real
// condition (conjugate simplices carry opposite values mod 1) and, when the
// nerve is deep enough, the cocycle condition d = 0 mod 1, exactly.
struct RationalCochain {
  std::size_t level = 0;
  Int den = 1;
  std::vector<Int> numerators;  // one per simplex of the level
};
RationalCochain rational_cochain_from_json(const Nerve& nv, std::size_t level, const Json& j);

std::uint64_t fnv1a(const std::string& bytes);
// "fnv1a:<16 hex digits>" over the file's raw bytes.
std::string fingerprint_file(const std::string& path);

// What every command emits: the text lines printed to standard output plus
// a structured version for --report. Identical inputs give identical bytes.
struct Report {
  std::vector<std::string> command;                          // argv echo
  std::vector<std::pair<std::string, std::string>> inputs;   // path, fingerprint
  Json results = Json::object();
  std::string oracle = "not run";
  std::vector<std::string> warnings;
  std::vector<std::string> lines;                            // stdout text

  void note_input(const std::string& path);
  Json to_json() const;
  std::string render() const;  // serialized report file content
};

// Header carried by every structured report: what this tool does and does
// not claim to compute.
extern const char* const kScopeNote;

}  // namespace rcech
