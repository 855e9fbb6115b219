#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "loopkit/manifold.hpp"

namespace loopkit {

// Reads a descriptor document:
//   {"name": ..., "n": int, "d": int, "generator_degrees": [int...],
//    "pairing": [[int | "p/q" ...] ...], "torsion_primes": [int...]}
// torsion_primes is optional. Floats, unknown keys and malformed fractions
// are ParseErrors; the message carries line and column when the JSON itself
// is broken. Shape and hypothesis problems are left to validate().
ManifoldDescriptor parse_descriptor(std::string_view text);

ManifoldDescriptor load_descriptor(const std::filesystem::path &path);

// Canonical form: fixed key order, integers as numbers, other rationals as
// reduced "p/q" strings.
nlohmann::ordered_json descriptor_to_json(const ManifoldDescriptor &desc);
std::string serialize_descriptor(const ManifoldDescriptor &desc);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_json(const Integer &x);
nlohmann::ordered_json rational_json(const Rational &x);

} // namespace loopkit
