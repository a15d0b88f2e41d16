#include "pace/image.hpp"

#include <cctype>
#include <fstream>

#include "pace/error.hpp"

namespace pace {

RasterImage RasterImage::filled(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    RasterImage img;
    img.width = w;
    img.height = h;
    img.samples.resize(static_cast<std::size_t>(w) * h * 3);
    for (std::size_t i = 0; i < img.samples.size(); i += 3) {
        img.samples[i] = r;
        img.samples[i + 1] = g;
        img.samples[i + 2] = b;
    }
    return img;
}

RasterImage RasterImage::crop(const BBox& box) const {
    if (box.x < 0 || box.y < 0 || box.w < 1 || box.h < 1 ||
        box.x + box.w > width || box.y + box.h > height) {
        throw Error("crop: bbox outside image bounds");
    }
    RasterImage out;
    out.width = box.w;
    out.height = box.h;
    out.samples.resize(static_cast<std::size_t>(box.w) * box.h * 3);
    for (int y = 0; y < box.h; ++y) {
        const std::uint8_t* src = &samples[((static_cast<std::size_t>(box.y) + y) * width + box.x) * 3];
        std::uint8_t* dst = &out.samples[static_cast<std::size_t>(y) * box.w * 3];
        std::copy(src, src + static_cast<std::size_t>(box.w) * 3, dst);
    }
    return out;
}

void RasterImage::paste(const RasterImage& patch, int x, int y) {
    if (x < 0 || y < 0 || x + patch.width > width || y + patch.height > height) {
        throw Error("paste: patch outside canvas");
    }
    for (int row = 0; row < patch.height; ++row) {
        const std::uint8_t* src = &patch.samples[static_cast<std::size_t>(row) * patch.width * 3];
        std::uint8_t* dst = &samples[((static_cast<std::size_t>(y) + row) * width + x) * 3];
        std::copy(src, src + static_cast<std::size_t>(patch.width) * 3, dst);
    }
}

namespace {

// Reads one PPM token, skipping whitespace and '#' comments.
std::string ppm_token(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF && (std::isspace(c) || c == '#')) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        }
        c = in.get();
    }
    if (c == EOF) throw Error("load_image: truncated file: " + path);
    std::string tok;
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

int ppm_int(std::istream& in, const std::string& path, const char* what) {
    std::string tok = ppm_token(in, path);
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw Error("");
        return v;
    } catch (...) {
        throw Error(std::string("load_image: bad ") + what + " '" + tok + "' in " + path);
    }
}

} // namespace

RasterImage load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("load_image: cannot open " + path.string());
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() == 0) throw Error("load_image: truncated file: " + path.string());
    if (magic[0] != 'P' || magic[1] != '6') {
        throw Error("load_image: unsupported format (want binary PPM P6): " + path.string());
    }
    int w = ppm_int(in, path.string(), "width");
    int h = ppm_int(in, path.string(), "height");
    int maxval = ppm_int(in, path.string(), "maxval");
    if (w < 1 || h < 1) throw Error("load_image: bad dimensions in " + path.string());
    if (maxval != 255) throw Error("load_image: unsupported maxval (want 255): " + path.string());

    RasterImage img;
    img.width = w;
    img.height = h;
    img.samples.resize(static_cast<std::size_t>(w) * h * 3);
    in.read(reinterpret_cast<char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.samples.size())) {
        throw Error("load_image: truncated file: " + path.string());
    }
    return img;
}

void save_image(const RasterImage& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("save_image: cannot open " + path.string());
    out << "P6\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.samples.data()),
              static_cast<std::streamsize>(image.samples.size()));
    if (!out) throw Error("save_image: write failed: " + path.string());
}

} // namespace pace
