#ifndef FUBINI_IO_HPP
#define FUBINI_IO_HPP

#include <json.hpp>

#include <string>

#include "fubini/exact_linalg.hpp"
#include "fubini/orders.hpp"

namespace fubini {

/// Matrix file: {"rows": k, "cols": n, "entries": [[1, "2/3", ...], ...]}.
/// Entries are integers or "p/q" strings; fractions are canonicalized.
RationalMatrix matrix_from_json(const nlohmann::json& j);
RationalMatrix parse_matrix(const std::string& text);
RationalMatrix read_matrix_file(const std::string& path);
/// Integral entries become JSON integers when they fit in 64 bits; all others are "p/q".
nlohmann::json matrix_to_json(const RationalMatrix& m);
Rational parse_rational(const std::string& text);

enum class PosetFormat { Dot, Json };
PosetFormat parse_poset_format(const std::string& text);

/// {n, k, kind, elements, relations (strict pairs), hasse, codim}; with
/// hasse_only the relations array is omitted.
nlohmann::json poset_to_json(const Poset& p, bool hasse_only = false);
/// Inverse of poset_to_json; when relations are absent they are rebuilt
/// from the Hasse edges.
Poset poset_from_json(const nlohmann::json& j);
/// Hasse diagram as a digraph, edges lower -> upper, drawn bottom to top.
std::string poset_to_dot(const Poset& p);
std::string export_poset(const Poset& p, PosetFormat format, bool hasse_only = false);

} // namespace fubini

#endif
