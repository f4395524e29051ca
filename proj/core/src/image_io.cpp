#include "glare/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace glare {

namespace {

uint8_t to_byte(double v) {
    double scaled = std::lround(std::clamp(v, 0.0, 1.0) * 255.0);
    return static_cast<uint8_t>(scaled);
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.string().c_str(), mode));
    if (!f) throw DataError("cannot open " + path.string());
    return f;
}

// Decodes any PNG into packed 8-bit RGB rows. Palette, gray, 16-bit and
// alpha variants are all normalized by libpng transforms.
std::vector<uint8_t> read_png_rgb8(const std::filesystem::path& path, int& width, int& height) {
    FilePtr f = open_file(path, "rb");

    png_byte header[8];
    if (std::fread(header, 1, 8, f.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
        throw DataError(path.string() + ": not a PNG file");
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DataError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DataError("png_create_info_struct failed");
    }
    std::vector<uint8_t> data;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DataError(path.string() + ": PNG decode error");
    }
    png_init_io(png, f.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    int color_type = png_get_color_type(png, info);
    int bit_depth = png_get_bit_depth(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    size_t rowbytes = png_get_rowbytes(png, info);
    if (rowbytes != static_cast<size_t>(width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DataError(path.string() + ": unexpected PNG row layout");
    }
    data.resize(static_cast<size_t>(height) * rowbytes);
    rows.resize(height);
    for (int r = 0; r < height; ++r) rows[r] = data.data() + static_cast<size_t>(r) * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return data;
}

void write_png(const std::filesystem::path& path, const uint8_t* data, int width, int height,
               int channels) {
    FilePtr f = open_file(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DataError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw DataError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw DataError(path.string() + ": PNG encode error");
    }
    png_init_io(png, f.get());
    png_set_IHDR(png, info, width, height, 8,
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(height);
    for (int r = 0; r < height; ++r) {
        rows[r] = const_cast<png_bytep>(data + static_cast<size_t>(r) * width * channels);
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

RasterImage from_rgb8(const std::vector<uint8_t>& data, int width, int height) {
    RasterImage img(width, height, ColorSpace::Rgb);
    size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        img.planes[0].values[i] = data[i * 3 + 0] / 255.0;
        img.planes[1].values[i] = data[i * 3 + 1] / 255.0;
        img.planes[2].values[i] = data[i * 3 + 2] / 255.0;
    }
    return img;
}

std::vector<uint8_t> to_rgb8(const RasterImage& img) {
    std::vector<uint8_t> data(img.pixel_count() * 3);
    for (size_t i = 0; i < img.pixel_count(); ++i) {
        data[i * 3 + 0] = to_byte(img.planes[0].values[i]);
        data[i * 3 + 1] = to_byte(img.planes[1].values[i]);
        data[i * 3 + 2] = to_byte(img.planes[2].values[i]);
    }
    return data;
}

std::string lower_ext(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

} // namespace

RasterImage load_png(const std::filesystem::path& path) {
    int w = 0, h = 0;
    auto data = read_png_rgb8(path, w, h);
    return from_rgb8(data, w, h);
}

void save_png(const RasterImage& img, const std::filesystem::path& path) {
    require_space(img, ColorSpace::Rgb, "save_png");
    auto data = to_rgb8(img);
    write_png(path, data.data(), img.width, img.height, 3);
}

RasterImage load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());

    auto next_token = [&in, &path]() -> std::string {
        std::string tok;
        for (;;) {
            int c = in.get();
            if (c == EOF) throw DataError(path.string() + ": truncated PPM header");
            if (c == '#') {
                while (c != EOF && c != '\n') c = in.get();
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty()) return tok;
                continue;
            }
            tok.push_back(static_cast<char>(c));
        }
    };

    if (next_token() != "P6") throw DataError(path.string() + ": not a P6 PPM");
    int w = std::stoi(next_token());
    int h = std::stoi(next_token());
    int maxval = std::stoi(next_token());
    if (w <= 0 || h <= 0) throw DataError(path.string() + ": bad PPM dimensions");
    if (maxval != 255) throw DataError(path.string() + ": only maxval 255 PPM supported");

    std::vector<uint8_t> data(static_cast<size_t>(w) * h * 3);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (static_cast<size_t>(in.gcount()) != data.size()) {
        throw DataError(path.string() + ": truncated PPM pixel data");
    }
    return from_rgb8(data, w, h);
}

void save_ppm(const RasterImage& img, const std::filesystem::path& path) {
    require_space(img, ColorSpace::Rgb, "save_ppm");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open " + path.string() + " for writing");
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    auto data = to_rgb8(img);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw DataError("write failed: " + path.string());
}

RasterImage load_image(const std::filesystem::path& path) {
    std::string ext = lower_ext(path);
    if (ext == ".png") return load_png(path);
    if (ext == ".ppm") return load_ppm(path);
    throw DataError(path.string() + ": unsupported image format (want .png or .ppm)");
}

void save_image(const RasterImage& img, const std::filesystem::path& path) {
    std::string ext = lower_ext(path);
    if (ext == ".png") {
        save_png(img, path);
    } else if (ext == ".ppm") {
        save_ppm(img, path);
    } else {
        throw DataError(path.string() + ": unsupported image format (want .png or .ppm)");
    }
}

BinaryMask load_mask(const std::filesystem::path& path) {
    int w = 0, h = 0;
    auto data = read_png_rgb8(path, w, h);
    BinaryMask mask(w, h);
    for (size_t i = 0; i < mask.bits.size(); ++i) {
        mask.bits[i] = data[i * 3] >= 128 ? 1 : 0;
    }
    return mask;
}

void save_mask(const BinaryMask& mask, const std::filesystem::path& path) {
    std::vector<uint8_t> data(mask.bits.size());
    for (size_t i = 0; i < data.size(); ++i) data[i] = mask.bits[i] ? 255 : 0;
    write_png(path, data.data(), mask.width, mask.height, 1);
}

std::optional<std::pair<int, int>> probe_dimensions(const std::filesystem::path& path) {
    std::string ext = lower_ext(path);
    try {
        if (ext == ".png") {
            FilePtr f = open_file(path, "rb");
            png_byte header[8];
            if (std::fread(header, 1, 8, f.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
                return std::nullopt;
            }
            png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
            if (!png) return std::nullopt;
            png_infop info = png_create_info_struct(png);
            if (!info) {
                png_destroy_read_struct(&png, nullptr, nullptr);
                return std::nullopt;
            }
            if (setjmp(png_jmpbuf(png))) {
                png_destroy_read_struct(&png, &info, nullptr);
                return std::nullopt;
            }
            png_init_io(png, f.get());
            png_set_sig_bytes(png, 8);
            png_read_info(png, info);
            auto dims = std::make_pair(static_cast<int>(png_get_image_width(png, info)),
                                       static_cast<int>(png_get_image_height(png, info)));
            png_destroy_read_struct(&png, &info, nullptr);
            return dims;
        }
        if (ext == ".ppm") {
            RasterImage img = load_ppm(path);
            return std::make_pair(img.width, img.height);
        }
    } catch (const DataError&) {
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace glare
