#include "pace/intent.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pace/error.hpp"

namespace pace {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

SynonymLexicon::SynonymLexicon(std::map<std::string, std::vector<std::string>> entries) {
    for (auto& [term, syns] : entries) {
        std::string key = to_lower(term);
        if (syns.empty()) throw Error("lexicon: term '" + key + "' has no synonyms");
        std::vector<std::string> lowered;
        lowered.reserve(syns.size());
        for (auto& s : syns) {
            std::string v = to_lower(s);
            if (v == key) throw Error("lexicon: term '" + key + "' maps to itself");
            lowered.push_back(std::move(v));
        }
        entries_[key] = std::move(lowered);
    }
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("lexicon: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("lexicon: parse error in " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw Error("lexicon: top level must be an object: " + path.string());
    std::map<std::string, std::vector<std::string>> entries;
    for (const auto& [term, syns] : j.items()) {
        entries[term] = syns.get<std::vector<std::string>>();
    }
    return SynonymLexicon(std::move(entries));
}

bool SynonymLexicon::contains(const std::string& term) const {
    return entries_.count(to_lower(term)) > 0;
}

const std::vector<std::string>& SynonymLexicon::synonyms(const std::string& term) const {
    auto it = entries_.find(to_lower(term));
    if (it == entries_.end()) throw Error("lexicon: no entry for term '" + term + "'");
    return it->second;
}

std::string lookup_synonym(const std::string& term, const SynonymLexicon& lexicon, SplitMix64& rng) {
    const auto& syns = lexicon.synonyms(term); // throws on absent term
    return syns[rng.next_below(syns.size())];
}

GeneratedIntention generate_intention(const std::vector<std::string>& labels,
                                      const SynonymLexicon& lexicon,
                                      std::uint64_t seed,
                                      const std::string& tmpl) {
    const auto placeholder = tmpl.find("{labels}");
    if (placeholder == std::string::npos) {
        throw Error("generate_intention: template lacks a {labels} placeholder");
    }
    {
        std::set<std::string> dedup(labels.begin(), labels.end());
        if (dedup.size() != labels.size()) {
            throw Error("generate_intention: labels must be deduplicated");
        }
    }

    SplitMix64 rng(seed);
    GeneratedIntention out;
    std::vector<std::string> surviving;
    for (const auto& label : labels) {
        const std::uint64_t branch = rng.next_below(3);
        if (branch == 0) { // keep
            surviving.push_back(label);
            out.intention.targets.push_back({label, MatchLevel::High});
        } else if (branch == 1) { // replace with a semantically similar word
            if (lexicon.contains(label)) {
                surviving.push_back(lookup_synonym(label, lexicon, rng));
                out.intention.targets.push_back({label, MatchLevel::Medium});
            } else {
                // Lexicon miss: fall back to keep so the text never carries
                // an untraceable term.
                surviving.push_back(label);
                out.intention.targets.push_back({label, MatchLevel::High});
                out.warnings.push_back("no lexicon entry for '" + label + "', kept unchanged");
            }
        } else { // delete
            out.intention.targets.push_back({label, MatchLevel::Low});
        }
    }

    std::string joined;
    for (std::size_t i = 0; i < surviving.size(); ++i) {
        if (i) joined += ", ";
        joined += surviving[i];
    }
    out.intention.text = tmpl;
    out.intention.text.replace(placeholder, std::string("{labels}").size(), joined);
    return out;
}

} // namespace pace
