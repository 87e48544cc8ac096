#pragma once

#include <string>

#include "dcfl/dpda.hpp"
#include "dcfl/lda.hpp"

namespace dcfl {

// JSON machine definitions. Epsilon is spelled "ε" (or "") in the read field;
// the end markers appear as themselves. Loading validates and throws
// Error(MalformedMachine) for both format and machine defects.
std::string dpda_to_json(const Dpda& m, int indent = 2);
Dpda dpda_from_json(const std::string& text);

Dpda load_dpda_file(const std::string& path);
void save_dpda_file(const Dpda& m, const std::string& path);

// Same conventions for the two-way layered machines: "layers" is an array of
// strings, one per layer bottom-up, and each transition carries from, read,
// to, write and dir (-1 or 1).
std::string lda_to_json(const Lda& m, int indent = 2);
Lda lda_from_json(const std::string& text);

Lda load_lda_file(const std::string& path);
void save_lda_file(const Lda& m, const std::string& path);

}  // namespace dcfl
