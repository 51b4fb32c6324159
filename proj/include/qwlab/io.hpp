#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwlab/algebra.hpp"

namespace qwlab {

/// Parsed `.alg` file. Exactly one of `algebra` (a `table ->` block) and
/// `product` (`table odot` plus `table star`) is present.
///
///   # leading comments are kept
///   size 4
///   elements 0 a b 1
///   unit 1
///   zero 0
///   table -> :
///   <size rows of size element names>
///   table meet :        optional, cross-checked; likewise join and star
struct AlgebraDocument {
  std::vector<std::string> header;  // leading comment lines, '#' included
  std::optional<FiniteAlgebra> algebra;
  std::optional<MBEAlgebra> product;
  bool declares_meet = false;
  bool declares_join = false;
  bool declares_star = false;
};

/// Throws ParseError (with line and column) on malformed text, unknown
/// element names, duplicate elements, and declared tables that disagree
/// with the recomputed ones; the message names the first differing cell.
AlgebraDocument parse_document(std::string_view text);

/// Normalized text: header, directives, then tables with aligned columns.
/// parse_document(render_document(d)) renders back to the same bytes.
std::string render_document(const AlgebraDocument& d);

AlgebraDocument load_document(const std::filesystem::path& path);
void save_document(const AlgebraDocument& d, const std::filesystem::path& path);

/// The implication algebra in a file; throws ParseError for product files.
FiniteAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const FiniteAlgebra& a, const std::filesystem::path& path);

AlgebraDocument document_for(const FiniteAlgebra& a);
AlgebraDocument document_for(const MBEAlgebra& m);

}  // namespace qwlab
