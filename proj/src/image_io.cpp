#include "texsim/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "texsim/errors.hpp"
#include "texsim/imgprep.hpp"

namespace texsim {

namespace {

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open image file: " + path.string());
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

bool is_png(const std::vector<uint8_t>& bytes) {
    static const uint8_t sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    return bytes.size() >= 8 && std::memcmp(bytes.data(), sig, 8) == 0;
}

bool is_bmp(const std::vector<uint8_t>& bytes) {
    return bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M';
}

uint32_t le32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t le16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

RgbImage decode_png(const std::vector<uint8_t>& bytes, const std::string& name,
                    bool* was_gray) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
        throw data_error("PNG decode failed for " + name + ": " + image.message);

    bool gray = (image.format & PNG_FORMAT_FLAG_COLOR) == 0;
    if (was_gray) *was_gray = gray;
    image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

    std::vector<uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw data_error("PNG decode failed for " + name + ": " + msg);
    }

    RgbImage out;
    out.rows = static_cast<int>(image.height);
    out.cols = static_cast<int>(image.width);
    size_t n = static_cast<size_t>(out.rows) * out.cols;
    out.r.resize(n);
    out.g.resize(n);
    out.b.resize(n);
    if (gray) {
        for (size_t i = 0; i < n; ++i) {
            double v = buffer[i] / 255.0;
            out.r[i] = out.g[i] = out.b[i] = v;
        }
    } else {
        for (size_t i = 0; i < n; ++i) {
            out.r[i] = buffer[3 * i + 0] / 255.0;
            out.g[i] = buffer[3 * i + 1] / 255.0;
            out.b[i] = buffer[3 * i + 2] / 255.0;
        }
    }
    return out;
}

// Uncompressed 24/32-bit and 8-bit palette BMP files.
RgbImage decode_bmp(const std::vector<uint8_t>& bytes, const std::string& name,
                    bool* was_gray) {
    if (bytes.size() < 54) throw data_error("truncated BMP header in " + name);
    uint32_t pixel_offset = le32(&bytes[10]);
    uint32_t header_size = le32(&bytes[14]);
    if (header_size < 40) throw data_error("unsupported BMP header in " + name);
    int32_t width = static_cast<int32_t>(le32(&bytes[18]));
    int32_t height_raw = static_cast<int32_t>(le32(&bytes[22]));
    uint16_t bpp = le16(&bytes[28]);
    uint32_t compression = le32(&bytes[30]);
    if (width <= 0 || height_raw == 0) throw data_error("bad BMP dimensions in " + name);
    if (width > (1 << 24) || std::abs(height_raw) > (1 << 24))
        throw data_error("implausible BMP dimensions in " + name);
    if (compression != 0)
        throw data_error("compressed BMP is not supported: " + name);
    if (bpp != 8 && bpp != 24 && bpp != 32)
        throw data_error("unsupported BMP bit depth in " + name);

    bool top_down = height_raw < 0;
    int rows = top_down ? -height_raw : height_raw;
    int cols = width;

    // 8-bit files carry a palette right after the info header.
    std::vector<std::array<uint8_t, 3>> palette;
    if (bpp == 8) {
        uint32_t colors = le32(&bytes[46]);
        if (colors == 0) colors = 256;
        if (colors > 256) throw data_error("oversized BMP palette in " + name);
        size_t pal_off = 14 + header_size;
        if (bytes.size() < pal_off + static_cast<size_t>(colors) * 4)
            throw data_error("truncated BMP palette in " + name);
        palette.resize(colors);
        for (uint32_t i = 0; i < colors; ++i) {
            const uint8_t* p = &bytes[pal_off + static_cast<size_t>(i) * 4];
            palette[i] = {p[2], p[1], p[0]};  // stored BGR
        }
    }

    int bytes_per_px = bpp / 8;
    size_t row_size = (static_cast<size_t>(cols) * bytes_per_px + 3) & ~size_t{3};
    if (bytes.size() < pixel_offset + row_size * rows)
        throw data_error("truncated BMP pixel data in " + name);

    RgbImage out;
    out.rows = rows;
    out.cols = cols;
    size_t n = static_cast<size_t>(rows) * cols;
    out.r.resize(n);
    out.g.resize(n);
    out.b.resize(n);
    bool all_gray = true;
    for (int r = 0; r < rows; ++r) {
        int src_row = top_down ? r : rows - 1 - r;
        const uint8_t* row = &bytes[pixel_offset + row_size * src_row];
        for (int c = 0; c < cols; ++c) {
            uint8_t red, green, blue;
            if (bpp == 8) {
                uint8_t idx = row[c];
                if (idx >= palette.size())
                    throw data_error("BMP palette index out of range in " + name);
                red = palette[idx][0];
                green = palette[idx][1];
                blue = palette[idx][2];
            } else {
                const uint8_t* px = row + static_cast<size_t>(c) * bytes_per_px;
                blue = px[0];
                green = px[1];
                red = px[2];
            }
            if (red != green || green != blue) all_gray = false;
            size_t i = static_cast<size_t>(r) * cols + c;
            out.r[i] = red / 255.0;
            out.g[i] = green / 255.0;
            out.b[i] = blue / 255.0;
        }
    }
    if (was_gray) *was_gray = all_gray;
    return out;
}

RgbImage decode_any(const std::filesystem::path& path, bool* was_gray) {
    std::vector<uint8_t> bytes = read_file(path);
    if (is_png(bytes)) return decode_png(bytes, path.string(), was_gray);
    if (is_bmp(bytes)) return decode_bmp(bytes, path.string(), was_gray);
    throw data_error("unrecognized image format (expected PNG or BMP): " + path.string());
}

}  // namespace

GrayImage load_gray(const std::filesystem::path& path) {
    bool was_gray = false;
    RgbImage rgb = decode_any(path, &was_gray);
    if (was_gray) {
        GrayImage out(rgb.rows, rgb.cols);
        out.pixels = rgb.r;
        return out;
    }
    return to_luminance(rgb);
}

RgbImage load_rgb(const std::filesystem::path& path) {
    return decode_any(path, nullptr);
}

void save_png_gray(const std::filesystem::path& path, const GrayImage& img) {
    validate(img);
    std::vector<uint8_t> buffer(img.size());
    for (size_t i = 0; i < img.pixels.size(); ++i) {
        double v = img.pixels[i] * 255.0;
        buffer[i] = static_cast<uint8_t>(std::clamp(v + 0.5, 0.0, 255.0));
    }
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.cols);
    image.height = static_cast<png_uint_32>(img.rows);
    image.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, buffer.data(), 0, nullptr))
        throw data_error("PNG encode failed for " + path.string() + ": " + image.message);
}

void save_png_rgb(const std::filesystem::path& path, const RgbImage& img) {
    size_t n = static_cast<size_t>(img.rows) * img.cols;
    if (img.r.size() != n || img.g.size() != n || img.b.size() != n)
        throw dimension_error("RGB channel planes disagree in shape");
    std::vector<uint8_t> buffer(n * 3);
    auto to_byte = [](double v) {
        return static_cast<uint8_t>(std::clamp(v * 255.0 + 0.5, 0.0, 255.0));
    };
    for (size_t i = 0; i < n; ++i) {
        buffer[3 * i + 0] = to_byte(img.r[i]);
        buffer[3 * i + 1] = to_byte(img.g[i]);
        buffer[3 * i + 2] = to_byte(img.b[i]);
    }
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.cols);
    image.height = static_cast<png_uint_32>(img.rows);
    image.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, buffer.data(), 0, nullptr))
        throw data_error("PNG encode failed for " + path.string() + ": " + image.message);
}

bool has_image_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return ext == ".png" || ext == ".bmp";
}

}  // namespace texsim
