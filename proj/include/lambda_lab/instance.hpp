#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lambda_lab/graph.hpp"

namespace lambda_lab {

/// PP = P_m x P_n, PC = P_m x C_n, CC = C_m x C_n (direct products).
enum class Family { PP, PC, CC };

std::string to_string(Family f);
Family parse_family(std::string_view s);

/// Canonical identity of a problem instance. `component` is empty for the
/// whole graph, 0 for the component containing (0,0), 1 for the other one.
struct InstanceKey {
    Family family = Family::PP;
    int m = 2;
    int n = 2;
    int h = 1;
    int k = 1;
    std::optional<int> component;

    friend bool operator==(const InstanceKey&, const InstanceKey&) = default;
};

/// Throws InvalidSize / InvalidArgument when the fields leave the family's regime.
void validate(const InstanceKey& key);

/// "FAMILY:m×n:h,k:component" with component one of all, 0, 1.
std::string to_string(const InstanceKey& key);
/// Inverse of to_string; an ASCII 'x' is accepted for '×'. Throws ParseError.
InstanceKey parse_instance_key(std::string_view s);

/// The full product of the key's factors (component ignored).
Graph build_product(const InstanceKey& key);

/// The graph the key denotes: the full product, or one of its components with
/// grid coordinates kept. Asking for component 1 of a connected product throws.
Graph build_graph(const InstanceKey& key);

}  // namespace lambda_lab
