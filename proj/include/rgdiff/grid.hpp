#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgdiff {

/// Scalar 2D image with physical pixel spacing in millimetres.
/// Data is row-major: index = y * width + x.
struct Grid2D {
    int width = 0;
    int height = 0;
    double spacing_x = 1.0;  // mm per pixel, x direction
    double spacing_y = 1.0;  // mm per pixel, y direction
    std::vector<float> data;

    Grid2D() = default;
    Grid2D(int w, int h, double sx = 1.0, double sy = 1.0, float fill = 0.0f)
        : width(w), height(h), spacing_x(sx), spacing_y(sy),
          data(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("Grid2D: non-positive shape");
        if (sx <= 0.0 || sy <= 0.0) throw std::invalid_argument("Grid2D: non-positive spacing");
    }

    size_t size() const { return data.size(); }
    float& at(int y, int x) { return data[static_cast<size_t>(y) * width + x]; }
    float at(int y, int x) const { return data[static_cast<size_t>(y) * width + x]; }

    bool same_shape(const Grid2D& o) const { return width == o.width && height == o.height; }

    /// Throws if any value is non-finite. Used at I/O and generator boundaries.
    void check_finite(const std::string& what = "Grid2D") const;
};

/// Per-pixel class ids. 0 = background, 1 = LV, 2 = MYO, 3 = RV.
struct LabelMap {
    int width = 0;
    int height = 0;
    double spacing_x = 1.0;
    double spacing_y = 1.0;
    std::vector<uint8_t> data;

    static constexpr int kNumClasses = 4;
    static const char* class_name(int c);  // "background", "LV", "MYO", "RV"

    LabelMap() = default;
    LabelMap(int w, int h, double sx = 1.0, double sy = 1.0, uint8_t fill = 0)
        : width(w), height(h), spacing_x(sx), spacing_y(sy),
          data(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("LabelMap: non-positive shape");
        if (sx <= 0.0 || sy <= 0.0) throw std::invalid_argument("LabelMap: non-positive spacing");
    }

    size_t size() const { return data.size(); }
    uint8_t& at(int y, int x) { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int y, int x) const { return data[static_cast<size_t>(y) * width + x]; }

    /// Throws if any value is outside {0,1,2,3}.
    void check_classes(const std::string& what = "LabelMap") const;
};

enum class DomainTag { SourceA, TargetB, SyntheticA, AdaptedB };

const char* to_string(DomainTag tag);
DomainTag domain_tag_from_string(const std::string& s);

/// One subject: image plus matching labels.
struct CaseRecord {
    Grid2D image;
    LabelMap labels;
    std::string subject_id;
    DomainTag domain_tag = DomainTag::SourceA;

    /// Throws unless image and labels share shape and spacing.
    void validate() const;
};

struct ClipRescaleResult {
    Grid2D grid;
    bool degenerate = false;  // lo percentile == hi percentile; grid is all zero
};

/// Nearest-rank percentile of the pixel multiset, pct in (0,100].
float percentile_nearest_rank(const Grid2D& img, double pct);

/// Clip to [lo_pct, hi_pct] percentiles and rescale linearly to [0, 255].
/// A degenerate percentile range yields an all-zero grid with the flag set.
ClipRescaleResult clip_rescale(const Grid2D& img, double lo_pct = 0.5, double hi_pct = 99.5);

/// Affine map [0,255] -> [-1,1]: v / 127.5 - 1.
Grid2D normalize_unit(const Grid2D& img);

/// Inverse of normalize_unit: (v + 1) * 127.5.
Grid2D denormalize_unit(const Grid2D& img);

}  // namespace rgdiff
