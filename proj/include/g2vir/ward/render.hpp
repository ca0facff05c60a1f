#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "g2vir/ward/operator.hpp"

namespace g2vir::ward {

enum class Format { sexpr, latex, json };

/// Throws std::invalid_argument naming the accepted formats.
[[nodiscard]] Format parse_format(std::string_view name);

/// Deterministic serialization of an operator. sexpr and json are exact and
/// parseable; latex shows alpha_ab as d/dOmega_ab and is for reading only.
[[nodiscard]] std::string render_operator(const OperatorForm& op, Format format);

/// {"labels":[1,2],"monomials":N,"terms":[{"q":"1/12","c":1,"atoms":[["S",1]]},...]}
[[nodiscard]] nlohmann::ordered_json to_json(const OperatorForm& op);
[[nodiscard]] OperatorForm operator_from_json(const nlohmann::ordered_json& j);

}  // namespace g2vir::ward
