#include "pace/matcher.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "pace/error.hpp"

namespace pace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

namespace {

// Contiguous subsequence check, every start position tried.
bool occurs(const std::vector<std::string>& needle, const std::vector<std::string>& haystack) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) return true;
    }
    return false;
}

bool term_occurs(const std::string& term, const std::vector<std::string>& haystack,
                 const SynonymLexicon& lexicon) {
    if (occurs(tokenize(term), haystack)) return true;
    if (lexicon.contains(term)) {
        for (const auto& syn : lexicon.synonyms(term)) {
            if (occurs(tokenize(syn), haystack)) return true;
        }
    }
    return false;
}

} // namespace

MatchLevel scripted_match(const std::string& part_text,
                          PartKind part_kind,
                          const Intention& intention,
                          const SynonymLexicon& lexicon) {
    if (part_kind == PartKind::Category) {
        const auto intent_tokens = tokenize(intention.text);
        if (occurs(tokenize(part_text), intent_tokens)) return MatchLevel::High;
        if (lexicon.contains(part_text)) {
            for (const auto& syn : lexicon.synonyms(part_text)) {
                if (occurs(tokenize(syn), intent_tokens)) return MatchLevel::Medium;
            }
        }
        return MatchLevel::Low;
    }

    // Caption kind: count intention target terms present in the caption.
    const auto caption_tokens = tokenize(part_text);
    std::size_t present = 0;
    for (const auto& target : intention.targets) {
        if (term_occurs(target.term, caption_tokens, lexicon)) ++present;
    }
    if (intention.targets.empty() || present == 0) return MatchLevel::Low;
    if (present == intention.targets.size()) return MatchLevel::High;
    return MatchLevel::Medium;
}

MatchTriple scripted_match_triple(const SceneDescription& scene,
                                  const ObjectAnnotation& object,
                                  const Intention& intention,
                                  const SynonymLexicon& lexicon) {
    MatchTriple t;
    t.category_match = scripted_match(object.category, PartKind::Category, intention, lexicon);
    t.global_match = scripted_match(scene.global_caption, PartKind::Caption, intention, lexicon);
    t.object_match = scripted_match(object.caption, PartKind::Caption, intention, lexicon);
    return t;
}

MatchLevel vote(const std::vector<MatchLevel>& levels) {
    if (levels.empty()) throw Error("vote: empty level list");
    std::array<int, 4> counts{}; // indexed by numeric level 1..3
    for (MatchLevel m : levels) counts[static_cast<std::size_t>(level_value(m))]++;
    int best = std::max({counts[1], counts[2], counts[3]});
    for (int v = 1; v <= 3; ++v) {
        if (counts[v] == best) return static_cast<MatchLevel>(v);
    }
    return MatchLevel::Low; // unreachable
}

} // namespace pace
