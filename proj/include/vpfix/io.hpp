#pragma once

#include <string>

#include "vpfix/digraph.hpp"
#include "vpfix/jset.hpp"
#include "vpfix/perm_group.hpp"

namespace vpfix {

// Plain-text single-file formats. '#' starts a comment (to end of line);
// blank lines are ignored. Writers emit canonical bytes: header line, then
// body lines in ascending order, no comments, '\n' endings.
//
//   digraph <n>                 one arc "u v" per line, ascending (u, v)
//   permgroup <degree> <gens>   one generator per line, space-separated images
//   jset <r> <k>                one tuple per line, space-separated entries
//
// Parsers throw ParseError with the 1-based line number on malformed input.

std::string format_digraph(const Digraph& g);
Digraph parse_digraph(const std::string& text);

std::string format_perm_group(const PermutationGroup& g);
PermutationGroup parse_perm_group(
    const std::string& text,
    unsigned long long element_cap = kDefaultElementCap);

std::string format_jset(const JSet& j);
JSet parse_jset(const std::string& text);

// Whole-file helpers. Writes go to a sibling temp file first and rename
// into place, so a crash never leaves a truncated target.
std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& text);

Digraph read_digraph(const std::string& path);
void write_digraph(const std::string& path, const Digraph& g);
PermutationGroup read_perm_group(
    const std::string& path,
    unsigned long long element_cap = kDefaultElementCap);
void write_perm_group(const std::string& path, const PermutationGroup& g);
JSet read_jset(const std::string& path);
void write_jset(const std::string& path, const JSet& j);

}  // namespace vpfix
