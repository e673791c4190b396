#pragma once

#include <string>
#include <vector>

#include "freewidth/amalgam.hpp"
#include "freewidth/group.hpp"
#include "freewidth/hnn.hpp"

namespace freewidth {

// Group file: { "name": str, "order": n, "mult": [[int;n];n], "names": [str;n]? }
FiniteGroup group_from_json_text(const std::string& text);
FiniteGroup load_group_file(const std::string& path);

enum class InstanceKind { kHnn, kAmalgam };

// HNN file:     { "group": <group or path>, "h1": [...], "h2": [...], "phi": [[a,b],...] }
// Amalgam file: { "g1": ..., "g2": ..., "h_in_g1": [...], "h_in_g2": [...], "h_iso": [[a,b],...] }
InstanceKind probe_instance(const std::string& path);
HnnInstance load_hnn_instance(const std::string& path);
AmalInstance load_amalgam_instance(const std::string& path);

// Word text: whitespace-separated tokens. HNN: `t`, `t^-1`, `g:<index-or-name>`;
// amalgam: `1:<index-or-name>`, `2:<index-or-name>`.
Letters parse_letters(const HnnInstance& inst, const std::string& text);
Letters parse_letters(const AmalInstance& inst, const std::string& text);

std::string format_word(const HnnInstance& inst, const HnnWord& w);
std::string format_word(const AmalInstance& inst, const AmalWord& w);

}  // namespace freewidth
