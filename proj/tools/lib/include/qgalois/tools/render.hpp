#pragma once

#include <string>
#include <vector>

#include "qgalois/classify.hpp"

namespace qgalois::tools {

// Character names of the diagonal part: (alpha1, alpha2) or (alpha, lambda).
struct CharacterNames {
  std::string first = "alpha1";
  std::string second = "alpha2";
};

std::string render_character(long m1, long m2, const CharacterNames& names);
std::string render_relation(const Relation& r, const CharacterNames& names);
std::string render_gm(const GmSubgroup& g, const std::string& name);
// delta(xi/alpha) = ... or xi/alpha = ..., in terms of dlog alpha.
std::string render_link(const ReducibleLink& link);
// One defining equation per line, preceded by the shape of the group.
std::vector<std::string> render_group(const GroupDesc& g);

}  // namespace qgalois::tools
