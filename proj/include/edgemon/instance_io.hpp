#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgemon/cotree.hpp"
#include "edgemon/instance.hpp"
#include "edgemon/interval_realization.hpp"

namespace edgemon {

// An instance file: the instance plus optional class certificates.
//
//   # free text              (comment, kept verbatim)
//   p em <n> <m>
//   v <id> <num>[/<den>]     (weight, default 1)
//   e <u> <v> <c>
//   i <id> <a> <b>           (interval realization, all or none)
//   t <cotree-expression>
struct InstanceDocument {
    Instance instance;
    std::optional<IntervalRealization> realization;
    std::optional<Cotree> cotree;
    // Text following '#', one entry per comment line.
    std::vector<std::string> comments;
};

// Throws ParseError carrying the 1-based line number.
InstanceDocument parse_instance(std::istream& in);
InstanceDocument parse_instance(std::string_view text);
InstanceDocument read_instance_file(const std::string& path);

// Canonical form: comments, p, every v, edges sorted, i lines by id, t.
void write_instance(std::ostream& out, const InstanceDocument& doc);
std::string format_instance(const InstanceDocument& doc);

}  // namespace edgemon
