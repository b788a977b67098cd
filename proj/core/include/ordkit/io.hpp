#pragma once

#include <optional>
#include <string>

#include "ordkit/chain_product.hpp"
#include "ordkit/lattice.hpp"
#include "ordkit/leaps.hpp"
#include "ordkit/semilattice.hpp"
#include "ordkit/sigma.hpp"

namespace ordkit {

// Structure files.  Line-oriented, '#' comments, blank lines ignored:
//
//   kind semilattice            (or: lattice, chain-product)
//   elements 4
//   names zero x y top          (optional; defaults e0..e{n-1})
//   covers                      (or: meet)
//   zero < x
//   ...
//   end
//
// A "meet" body holds n rows of n element names, row a column b being
// meet(a,b).  Chain products replace elements/names with
//
//   chains 2 2
//   members
//   0 0
//   ...
//   end
//
// Function files:
//
//   function binary             (or: function rational)
//   x 1                         (element name, value; rationals as p/q)
//   ...
//   end
//
// Serialization is canonical (covers body, members sorted, one value line
// per element in host order), so parse -> serialize is byte-stable.

enum class StructureKind { Semilattice, Lattice, ChainProduct };

struct ParsedStructure {
  StructureKind kind = StructureKind::Semilattice;
  std::optional<FiniteSemilattice> semilattice;
  std::optional<FiniteDistributiveLattice> lattice;
  std::optional<ChainProductSublattice> product;

  // The meet-semilattice view, whatever the kind.
  const FiniteSemilattice& base() const;
};

// Throws ParseError with line diagnostics for syntax problems and lets
// certification errors from the validators pass through untouched.
ParsedStructure parse_structure_text(const std::string& text);
ParsedStructure parse_structure_file(const std::string& path);

std::string serialize_structure(const FiniteSemilattice& K);
std::string serialize_structure(const FiniteDistributiveLattice& L);
std::string serialize_structure(const ChainProductSublattice& K);
std::string serialize_structure(const ParsedStructure& s);

BinaryFunction parse_binary_function_text(const std::string& text,
                                          const FiniteSemilattice& host);
RealFunction parse_real_function_text(const std::string& text,
                                      const ChainProductSublattice& host);
BinaryFunction parse_binary_function_file(const std::string& path,
                                          const FiniteSemilattice& host);
RealFunction parse_real_function_file(const std::string& path,
                                      const ChainProductSublattice& host);

std::string serialize_function(const BinaryFunction& f);
std::string serialize_function(const RealFunction& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ordkit
