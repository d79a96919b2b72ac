#pragma once

#include <iosfwd>
#include <string>

#include "packtree/colouring.hpp"
#include "packtree/construct.hpp"
#include "packtree/tree.hpp"

namespace packtree {

/// Edge-list text: one "u v" pair per line, whitespace-separated
/// decimal ids, '#' starts a comment. Throws ParseError / NotATree.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
void write_edge_list(const Tree& t, std::ostream& out);

/// Colouring JSON: {"k": <int>, "colours": [<int>, ...]}.
Colouring read_colouring_json(std::istream& in);
Colouring read_colouring_json_file(const std::string& path);
std::string colouring_to_json(const Colouring& c);

/// Certificate JSON:
/// {"seed":"F1","ops":[{"kind":"O1","anchor":3},{"kind":"O7","u":0,"v":1}],
///  "relabel":[...]}  (relabel optional).
Certificate read_certificate_json(std::istream& in);
Certificate read_certificate_json_file(const std::string& path);
std::string certificate_to_json(const Certificate& cert);

/// DOT export: undirected graph, vertex label "id:colour".
void write_dot(const Tree& t, const Colouring& c, std::ostream& out);

}  // namespace packtree
