#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hybridcd/graph.hpp"

namespace hcd {

using Json = nlohmann::ordered_json;

// Any graph that can travel through the JSON schema.
using AnyGraph =
    std::variant<WindowGraph, PartialWindowGraph, ExtendedGraph, PartialExtendedGraph, SummaryGraph>;

// {"type", "gamma", "vars", "edges": [{"src","dst","lag","oriented"}], "self_loops"}
// Edges are sorted by (src index, dst index, lag) with a null lag first, so
// equal graphs serialize to identical bytes.
Json to_json(const WindowGraph& g);
Json to_json(const PartialWindowGraph& g);
Json to_json(const ExtendedGraph& g);
Json to_json(const PartialExtendedGraph& g);
Json to_json(const SummaryGraph& g);
Json to_json(const AnyGraph& g);

// Throws DataError on schema violations and InvalidArgument when the decoded
// graph is invalid.
AnyGraph graph_from_json(const Json& j);

// Summary graph of any decoded graph (deduced for wcg/ecg variants).
SummaryGraph summary_of(const AnyGraph& g);

std::string graph_type_name(const AnyGraph& g);

}  // namespace hcd
