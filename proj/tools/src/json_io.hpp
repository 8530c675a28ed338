#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fatcat/cocycle.hpp"
#include "fatcat/fincat.hpp"
#include "fatcat/homology.hpp"
#include "fatcat/simpset.hpp"

namespace fatcat::io {

using nlohmann::json;

/// Reads and parses a JSON file. Throws SchemaError on I/O or parse failure.
json read_file(const std::filesystem::path& path);

/// {"objects", "morphisms":[{"id","src","tgt"}], "identity":{object: morphism},
/// "compose":[[f,g,h]] with h = g∘f, "inverse":{f: g}?}
FinCategory category_from_json(const json& j);
/// Requires "inverse".
FinGroupoid groupoid_from_json(const json& j);
/// Objects, morphisms and composites sorted by id.
json to_json(const FinCategory& c);
json to_json(const FinGroupoid& g);

/// Builtin name ("terminal", "ord:n", "nat:n", "cyclic:m", "pair:n") or a
/// path to a category document.
FinCategory resolve_category(const std::string& spec);
FinGroupoid resolve_groupoid(const std::string& spec);

/// {"D", "cells":[[labels]], "faces":[[[…]]], "degeneracies":[[[…]]]?}
json to_json(const SemiSimplicialSet& x);
json to_json(const TruncatedSimplicialSet& x);
TruncatedSimplicialSet simplicial_from_json(const json& j);

/// {"D", "complete", "basis":[[labels]], "boundary":[[[row,col,value]…]…]}
json to_json(const IntegerChainComplex& c);
IntegerChainComplex complex_from_json(const json& j);
json to_json(const ChainMap& f);

/// {"degree","betti","torsion":[…]}
json to_json(const HomologyGroup& h);

json to_json(const Violation& v);
/// At most `limit` violations.
json to_json(const Report& r, std::size_t limit = 25);

/// {"vertices","faces","cover":[[faces]]}; faces list vertex names.
CoveredPtr covered_from_json(const json& j);
/// Covered complex plus "groupoid" (builtin name or inline document) and
/// "transitions":[{"a","b","component","morphism"}].
GCocycle cocycle_from_json(const json& j);
json to_json(const CoveredComplex& c);
json to_json(const GCocycle& u);

}  // namespace fatcat::io
