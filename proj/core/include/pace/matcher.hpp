#pragma once

#include <string>
#include <vector>

#include "pace/intent.hpp"
#include "pace/scene.hpp"

namespace pace {

/// The three independent match results for one object.
struct MatchTriple {
    MatchLevel category_match = MatchLevel::Low;
    MatchLevel global_match = MatchLevel::Low;
    MatchLevel object_match = MatchLevel::Low;

    bool operator==(const MatchTriple&) const = default;
};

enum class PartKind { Category, Caption };

/// Lowercase, split on non-alphanumerics.
std::vector<std::string> tokenize(const std::string& text);

/// Deterministic stand-in for the text-model match.
///
/// Category kind: High when the category's token sequence occurs
/// contiguously in the intention text, Medium when any lexicon synonym of
/// it does, else Low. Caption kind: over the intention's target terms,
/// High when every term occurs in the caption (directly or via synonym),
/// Medium when some do, Low when none do (or there are no targets).
MatchLevel scripted_match(const std::string& part_text,
                          PartKind part_kind,
                          const Intention& intention,
                          const SynonymLexicon& lexicon);

/// Convenience: the full triple for one object via scripted_match.
MatchTriple scripted_match_triple(const SceneDescription& scene,
                                  const ObjectAnnotation& object,
                                  const Intention& intention,
                                  const SynonymLexicon& lexicon);

/// Strict-majority winner; ties resolve to the lowest tied level so an
/// ambiguous object is under- rather than over-transmitted.
MatchLevel vote(const std::vector<MatchLevel>& levels);

} // namespace pace
