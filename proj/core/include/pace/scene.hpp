#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pace {

/// Axis-aligned pixel rectangle, top-left origin.
struct BBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
    bool operator==(const BBox&) const = default;
};

struct ObjectAnnotation {
    int index = 0;
    std::string category; // lowercase, possibly multiword
    std::string caption;
    BBox bbox;

    bool operator==(const ObjectAnnotation&) const = default;
};

/// One image's perception output: global caption plus detected objects.
/// Immutable after load; list order is the source-file order.
struct SceneDescription {
    std::string image_id;
    int width = 0;
    int height = 0;
    std::string global_caption;
    std::vector<ObjectAnnotation> objects;

    bool operator==(const SceneDescription&) const = default;
};

/// Three-valued term/intention alignment. Numeric values 1..3 are part
/// of the contract (they feed the correlation arithmetic).
enum class MatchLevel : int { Low = 1, Medium = 2, High = 3 };

inline int level_value(MatchLevel m) { return static_cast<int>(m); }

struct IntentionTarget {
    std::string term; // the original label, not the synonym
    MatchLevel ground_truth_level = MatchLevel::High;

    bool operator==(const IntentionTarget&) const = default;
};

struct Intention {
    std::string text;
    std::vector<IntentionTarget> targets;

    bool operator==(const Intention&) const = default;
};

enum class Modulation { Qam16 };

inline const char* modulation_name(Modulation m) {
    (void)m;
    return "qam16";
}

/// Channel state information visible to the allocator.
struct ChannelState {
    double snr_db = 20.0;
    Modulation modulation = Modulation::Qam16;
    double code_rate = 0.5; // info bits / coded bits
    std::int64_t wire_budget_bytes = 10000;
};

/// Parse / validate an annotation file. Invalid bboxes, duplicate
/// indices and empty categories are hard errors naming the object.
SceneDescription load_scene(const std::filesystem::path& path);
SceneDescription scene_from_json_text(const std::string& text, const std::string& context);

/// Canonical serialization: fixed field order, two-space indent,
/// trailing newline. load_scene(save_scene(s)) == s.
void save_scene(const SceneDescription& scene, const std::filesystem::path& path);
std::string scene_to_json_text(const SceneDescription& scene);

} // namespace pace
