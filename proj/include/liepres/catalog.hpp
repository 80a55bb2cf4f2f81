#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liepres/relation.hpp"

namespace liepres {

// One catalog line: an identified relation plus an optional transcription
// note (textual caveats about the form it was copied from).
struct CatalogEntry {
  std::string id;    // "0.1", "2.1", "3.6N", "inf", ...
  std::string text;  // canonical relation text (print_relation of `relation`)
  std::string note;  // empty when there is nothing to flag
  Relation relation;
};

// A block of relations for one family, either generic in the rank n
// (min_n > 0, relations may mention n) or pinned to one exact rank.
struct CatalogBlock {
  std::string family;          // "sl", "o_odd", "sp", "o_even", "g2", ...,
                               // "sl_lambda", "osp_lambda", "sl_star", "osp_star"
  std::optional<long> exact_n; // set for rank-pinned blocks like sl:4
  long min_n = 0;              // generic blocks: smallest rank covered; 0 = rankless
  std::vector<CatalogEntry> entries;
};

// A key resolved against the catalog: the chosen block plus the bound rank.
struct ResolvedCatalog {
  std::string key;     // as requested, e.g. "sl:6"
  std::string family;
  std::optional<long> n;  // bound rank; empty for rankless families
  const CatalogBlock* block = nullptr;

  CoefEnv env() const {
    CoefEnv e;
    if (n) e.n = Rational(*n);
    return e;
  }
};

// The relation catalog.  Text format, one declaration per line:
//
//   @algebra KEY [n>=MIN]     starts a block; KEY is "family" or "family:N"
//   ID: RELATION [# note]     adds an entry to the current block
//
// Blank lines are ignored.  See builtin_catalog_text() for the built-in set.
class Catalog {
 public:
  static Catalog from_text(const std::string& text);
  // The built-in catalog (parsed once, cached).
  static const Catalog& builtin();

  const std::vector<CatalogBlock>& blocks() const { return blocks_; }

  // "sl:6" -> generic sl block with n = 6; "sl:4" -> the rank-pinned block;
  // "g2" -> the g2 block.  Throws UnknownType for unknown families or a
  // missing/forbidden rank suffix, RankTooSmall below the family minimum.
  ResolvedCatalog resolve(const std::string& key) const;

  // Keys touching every block once (exact ranks, plus each generic family at
  // its smallest covered rank).
  std::vector<std::string> representative_keys() const;

 private:
  std::vector<CatalogBlock> blocks_;
};

// The built-in catalog source text.
const std::string& builtin_catalog_text();

}  // namespace liepres
