#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pace/rng.hpp"
#include "pace/scene.hpp"

namespace pace {

/// Term -> semantically similar terms. Keys and entries are stored
/// lowercase; lookups are case-insensitive. No term maps to itself.
class SynonymLexicon {
public:
    SynonymLexicon() = default;
    explicit SynonymLexicon(std::map<std::string, std::vector<std::string>> entries);

    static SynonymLexicon load(const std::filesystem::path& path);

    bool contains(const std::string& term) const;
    const std::vector<std::string>& synonyms(const std::string& term) const;
    const std::map<std::string, std::vector<std::string>>& entries() const { return entries_; }

private:
    std::map<std::string, std::vector<std::string>> entries_;
};

/// Uniform draw from the term's synonym list. Throws if the term is
/// absent; callers decide the fallback.
std::string lookup_synonym(const std::string& term, const SynonymLexicon& lexicon, SplitMix64& rng);

inline constexpr const char* kDefaultIntentionTemplate = "Please transmit clearly: {labels}.";

struct GeneratedIntention {
    Intention intention;
    std::vector<std::string> warnings; // lexicon misses that fell back to keep
};

/// Per label, with the seeded stream: 1/3 keep (level 3), 1/3 replace by
/// a synonym (level 2), 1/3 delete (level 1, term kept in targets only).
/// Surviving terms are joined with ", " into the template's {labels}
/// placeholder. Deterministic for a fixed (labels, lexicon, seed, template).
GeneratedIntention generate_intention(const std::vector<std::string>& labels,
                                      const SynonymLexicon& lexicon,
                                      std::uint64_t seed,
                                      const std::string& tmpl = kDefaultIntentionTemplate);

} // namespace pace
