#include "pace/scene.hpp"

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

void validate(const SceneDescription& s, const std::string& ctx) {
    if (s.width < 1 || s.height < 1) {
        throw Error(ctx + ": width and height must be >= 1");
    }
    std::set<int> seen;
    for (const auto& o : s.objects) {
        const std::string tag = ctx + ": object " + std::to_string(o.index);
        if (!seen.insert(o.index).second) throw Error(tag + ": duplicate index");
        if (o.category.empty()) throw Error(tag + ": empty category");
        const BBox& b = o.bbox;
        if (b.w < 1 || b.h < 1) throw Error(tag + ": bbox w and h must be >= 1");
        if (b.x < 0 || b.y < 0 || b.x + b.w > s.width || b.y + b.h > s.height) {
            throw Error(tag + ": bbox [" + std::to_string(b.x) + "," + std::to_string(b.y) +
                        "," + std::to_string(b.w) + "," + std::to_string(b.h) +
                        "] outside image bounds " + std::to_string(s.width) + "x" +
                        std::to_string(s.height));
        }
    }
}

} // namespace

SceneDescription scene_from_json_text(const std::string& text, const std::string& context) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(context + ": parse error: " + e.what());
    }
    SceneDescription s;
    try {
        s.image_id = j.at("image_id").get<std::string>();
        s.width = j.at("width").get<int>();
        s.height = j.at("height").get<int>();
        s.global_caption = j.at("global_caption").get<std::string>();
        for (const auto& jo : j.at("objects")) {
            ObjectAnnotation o;
            o.index = jo.at("index").get<int>();
            o.category = to_lower(jo.at("category").get<std::string>());
            o.caption = jo.at("caption").get<std::string>();
            const auto& b = jo.at("bbox");
            if (!b.is_array() || b.size() != 4) {
                throw Error(context + ": object " + std::to_string(o.index) +
                            ": bbox must be [x,y,w,h]");
            }
            o.bbox = BBox{b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), b[3].get<int>()};
            s.objects.push_back(std::move(o));
        }
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw Error(context + ": missing or mistyped field: " + e.what());
    }
    validate(s, context);
    return s;
}

SceneDescription load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("load_scene: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return scene_from_json_text(buf.str(), "load_scene(" + path.string() + ")");
}

std::string scene_to_json_text(const SceneDescription& scene) {
    nlohmann::ordered_json j;
    j["image_id"] = scene.image_id;
    j["width"] = scene.width;
    j["height"] = scene.height;
    j["global_caption"] = scene.global_caption;
    j["objects"] = nlohmann::ordered_json::array();
    for (const auto& o : scene.objects) {
        nlohmann::ordered_json jo;
        jo["index"] = o.index;
        jo["category"] = o.category;
        jo["caption"] = o.caption;
        jo["bbox"] = {o.bbox.x, o.bbox.y, o.bbox.w, o.bbox.h};
        j["objects"].push_back(std::move(jo));
    }
    return j.dump(2) + "\n";
}

void save_scene(const SceneDescription& scene, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("save_scene: cannot open " + path.string());
    out << scene_to_json_text(scene);
    if (!out) throw Error("save_scene: write failed: " + path.string());
}

} // namespace pace
