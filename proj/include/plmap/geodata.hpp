#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace plmap {

// Point in the raster's projected planar frame, metres.
struct GridPoint {
  double x = 0.0;
  double y = 0.0;
};

// Regular surface-height grid, metres above sea level, row-major.
// (origin_x, origin_y) is the centre of cell (row 0, col 0); the cell centre
// of (r, c) sits at (origin_x + c*cell_size, origin_y + r*cell_size).
struct DsmRaster {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double cell_size = 1.0;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<float> heights;

  float at(std::size_t r, std::size_t c) const { return heights[r * n_cols + c]; }
  float& at(std::size_t r, std::size_t c) { return heights[r * n_cols + c]; }

  double max_x() const { return origin_x + static_cast<double>(n_cols - 1) * cell_size; }
  double max_y() const { return origin_y + static_cast<double>(n_rows - 1) * cell_size; }

  // Bounding box spanned by the outermost cell centres, edges inclusive.
  bool contains(const GridPoint& p) const {
    return p.x >= origin_x && p.x <= max_x() && p.y >= origin_y && p.y <= max_y();
  }

  // Throws std::invalid_argument if any invariant fails.
  void validate() const;
};

enum class RasterFormat { Dsr1, AsciiGrid };

struct RasterLoadOptions {
  // Height substituted for no-data / non-finite cells. Absent: such cells
  // make the load fail.
  std::optional<double> fill_value;
};

DsmRaster load_raster(const std::filesystem::path& path, RasterFormat format,
                      const RasterLoadOptions& options = {});
void save_raster(const DsmRaster& raster, const std::filesystem::path& path);

// Height of the cell whose centre is closest to p. Equidistant centres
// resolve to the lower row-major index. Throws if p is out of bounds.
double nearest_neighbor_sample(const DsmRaster& raster, const GridPoint& p);

// Dense 2-D float grid used for corridors and model input channels.
struct Grid2D {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> v;

  Grid2D() = default;
  Grid2D(std::size_t r, std::size_t c, float fill = 0.0f) : rows(r), cols(c), v(r * c, fill) {}

  float at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  float& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  const float* row(std::size_t r) const { return v.data() + r * cols; }
  float* row(std::size_t r) { return v.data() + r * cols; }
};

// Linear resampling along the row axis: output row r maps to source row
// coordinate r*(src.rows-1)/(target_rows-1); columns are untouched. Source
// rows hit exactly are copied verbatim.
Grid2D bilinear_resample(const Grid2D& src, std::size_t target_rows = 256);

}  // namespace plmap
