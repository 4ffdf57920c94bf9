#pragma once

#include "polysparse/polytope.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polysparse {

/// Thrown for malformed `.hpoly` / `.vpoly` text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// .hpoly:  H <dim> <rows>   then rows  a1 ... an <= b
// .vpoly:  V <dim> <rows>   then rows  x1 ... xn
// Numbers are integers or p/q; '#' starts a comment.
std::string format_hpoly(const HPolytope& p);
std::string format_vpoly(const VPolytope& v);
HPolytope parse_hpoly(std::string_view text);
VPolytope parse_vpoly(std::string_view text);

HPolytope read_hpoly(const std::filesystem::path& path);
VPolytope read_vpoly(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace polysparse
