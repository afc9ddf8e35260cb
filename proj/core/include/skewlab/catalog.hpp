#pragma once

// Builtin small rings with their endomorphisms and modules, and the text
// definition format for user-supplied structures.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/module.hpp"
#include "skewlab/properties.hpp"
#include "skewlab/ring.hpp"

namespace skewlab {

  enum class Provenance { builtin, file };

  char const* to_string(Provenance p) noexcept;

  struct CatalogEntry {
    std::string            id;
    RingPtr                ring;
    std::vector<EndoPtr>   endomorphisms;
    std::vector<ModulePtr> modules;
    Provenance             provenance = Provenance::builtin;
    // Definition file and line of the ring header; empty / 0 for builtins.
    std::string            source;
    std::size_t            line = 0;

    EndoPtr   endomorphism(std::string_view name) const;
    ModulePtr module(std::string_view name) const;
  };

  // Built once; every table has passed its verifier.
  std::vector<CatalogEntry> const& builtin_catalog();

  inline constexpr std::size_t max_endomorphism_enumeration = 8;

  // All unital ring endomorphisms in lexicographic order of their maps. The
  // identity is named "id", the others "e<k>" by position. Throws
  // CapacityError above max_endomorphism_enumeration elements.
  std::vector<EndoPtr> enumerate_endomorphisms(RingPtr const& ring);

  // Parses definition text. Rings must be declared before the endomorphisms
  // and modules that refer to them. Each ring receives the identity "id" and
  // the modules "regular" and "zero" unless the text declares those names.
  // Throws ParseError for syntax and DefinitionError for verification
  // failures and duplicate names.
  std::vector<CatalogEntry> parse_definitions(std::string_view text, std::string const& file);

  std::vector<CatalogEntry> load_definitions(std::filesystem::path const& path);

  // Text accepted by parse_definitions that reproduces the entry.
  std::string dump_definitions(CatalogEntry const& entry);

  // Builtin entries plus loaded files, with unique ring ids.
  class Catalog {
   public:
    Catalog();

    // Throws DefinitionError when a ring id is already present.
    void add(std::vector<CatalogEntry> entries);

    std::vector<CatalogEntry> const& entries() const noexcept {
      return _entries;
    }
    CatalogEntry const* find(std::string_view ring) const;

    // Throws UsageError naming the unresolved selector.
    Instance resolve(std::string_view ring,
                     std::string_view sigma,
                     std::string_view module) const;

    // Every (ring, sigma, module) combination, ordered by instance id.
    std::vector<Instance> instances() const;

   private:
    std::vector<CatalogEntry> _entries;
  };

}  // namespace skewlab
