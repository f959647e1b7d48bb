#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whlab/core/scalar.hpp"
#include "whlab/words/word.hpp"

namespace whlab {

struct Relator {
  std::string label;
  GroupWord word;

  friend bool operator==(Relator const&, Relator const&) = default;
};

/// Finite presentation together with the field and truncation used by the
/// completed-algebra computations.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  Field field;
  std::size_t truncation = 4;

  std::optional<std::size_t> generator_index(std::string_view name) const;
  /// Unique names and labels, relators over declared generators, truncation >= 1.
  void validate() const;

  friend bool operator==(Presentation const&, Presentation const&) = default;
};

/// Line-oriented format:
///
///   gens: x y
///   rels: r1 = [x,y] ; r2 = x^2*y^-1
///   field: Q            (or F<p>; default Q)
///   trunc: 4            (default 4)
///
/// `#` starts a comment, `*` between terms is optional, `1` is the empty
/// word, and `[u,v]` expands to u v u^-1 v^-1.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(Presentation const& p);
Presentation load_presentation(std::string const& path);

/// Same generators and configuration, relators restricted to `labels`
/// (kept in their original order).
Presentation subpresentation(Presentation const& p, std::vector<std::string> const& labels);

}  // namespace whlab
