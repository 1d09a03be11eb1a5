#pragma once

// Named, ready-made programs: listings, deciders and reductions.
// Sources are kept as assembler text and assembled on first use.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "enumlab/listing.hpp"

namespace enumlab {

enum class EntryKind : std::uint8_t { Listing, Decider, Reduction };
std::string_view to_string(EntryKind kind);

struct CorpusEntry {
  std::string name;
  EntryKind kind = EntryKind::Listing;
  Mode mode = Mode::Deterministic;
  std::string source;
  std::string notes;
  std::string set;      // set enumerated or decided (listings, deciders)
  std::string decider;  // listings: decider of their range
  std::string from;     // reductions: decider of the source set
  std::string to;       // reductions: decider of the target set
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(std::string_view name);
};

namespace corpus {

const std::vector<CorpusEntry>& entries();
const CorpusEntry& get(std::string_view name);
std::vector<std::string> names();

/// Assembled program of an entry; repeated calls share one instance.
std::shared_ptr<const Program> program(std::string_view name);

/// A listing entry wrapped with its mode and set.
Listing listing(std::string_view name);

}  // namespace corpus
}  // namespace enumlab
