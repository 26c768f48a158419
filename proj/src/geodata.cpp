#include "plmap/geodata.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "plmap/bytes.hpp"

namespace plmap {

namespace {

constexpr char kDsr1Magic[4] = {'D', 'S', 'R', '1'};

void apply_fill_policy(std::vector<float>& heights, const RasterLoadOptions& options,
                       std::optional<double> nodata) {
  for (auto& h : heights) {
    const bool is_nodata = !std::isfinite(h) || (nodata && static_cast<double>(h) == *nodata);
    if (!is_nodata) continue;
    if (!options.fill_value)
      throw std::runtime_error("raster contains no-data or non-finite heights and no fill value is configured");
    h = static_cast<float>(*options.fill_value);
  }
}

DsmRaster load_dsr1(const std::filesystem::path& path, const RasterLoadOptions& options) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open raster file: " + path.string());
  expect_magic(is, kDsr1Magic, "DSR1");
  DsmRaster r;
  r.origin_x = read_le<double>(is);
  r.origin_y = read_le<double>(is);
  r.cell_size = read_le<double>(is);
  r.n_rows = static_cast<std::size_t>(read_le<std::uint64_t>(is));
  r.n_cols = static_cast<std::size_t>(read_le<std::uint64_t>(is));
  if (r.n_rows < 2 || r.n_cols < 2) throw std::runtime_error("DSR1 header: grid must be at least 2x2");
  if (r.n_rows > (1u << 20) || r.n_cols > (1u << 20)) throw std::runtime_error("DSR1 header: implausible grid size");
  r.heights.resize(r.n_rows * r.n_cols);
  read_le_array(is, r.heights.data(), r.heights.size());
  apply_fill_policy(r.heights, options, std::nullopt);
  r.validate();
  return r;
}

// Whitespace-separated "key value" header lines, then rows of numbers.
// The first ASCII row is the northernmost; rows are flipped so that row 0 of
// the in-memory grid sits at the minimum y.
DsmRaster load_ascii_grid(const std::filesystem::path& path, const RasterLoadOptions& options) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open raster file: " + path.string());

  std::size_t ncols = 0, nrows = 0;
  double xll = 0.0, yll = 0.0, cell = 0.0;
  std::optional<double> nodata;
  bool saw_ncols = false, saw_nrows = false, saw_cell = false;

  std::string token;
  double first_value = 0.0;
  while (true) {
    if (!(is >> token)) throw std::runtime_error("ASCII grid: missing data rows");
    std::string key = token;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    if (key == "ncols" || key == "nrows") {
      long long v = 0;
      if (!(is >> v) || v < 2) throw std::runtime_error("ASCII grid: bad " + key);
      (key == "ncols" ? ncols : nrows) = static_cast<std::size_t>(v);
      (key == "ncols" ? saw_ncols : saw_nrows) = true;
    } else if (key == "xllcorner" || key == "yllcorner" || key == "cellsize" || key == "nodata_value") {
      double v = 0.0;
      if (!(is >> v)) throw std::runtime_error("ASCII grid: bad " + key);
      if (key == "xllcorner") xll = v;
      else if (key == "yllcorner") yll = v;
      else if (key == "cellsize") { cell = v; saw_cell = true; }
      else nodata = v;
    } else {
      char* end = nullptr;
      first_value = std::strtod(token.c_str(), &end);
      if (end == token.c_str() || *end != '\0')
        throw std::runtime_error("ASCII grid: unknown header key '" + token + "'");
      break;
    }
  }
  if (!saw_ncols || !saw_nrows || !saw_cell)
    throw std::runtime_error("ASCII grid: header must declare ncols, nrows and cellsize");

  std::vector<float> top_down(nrows * ncols);
  top_down[0] = static_cast<float>(first_value);
  for (std::size_t i = 1; i < top_down.size(); ++i) {
    double v = 0.0;
    if (!(is >> v)) throw std::runtime_error("ASCII grid: truncated data section");
    top_down[i] = static_cast<float>(v);
  }

  DsmRaster r;
  r.n_rows = nrows;
  r.n_cols = ncols;
  r.cell_size = cell;
  // xll/yll name the lower-left cell corner; our origin is that cell's centre.
  r.origin_x = xll + cell / 2.0;
  r.origin_y = yll + cell / 2.0;
  r.heights.resize(nrows * ncols);
  for (std::size_t row = 0; row < nrows; ++row) {
    const std::size_t src = (nrows - 1 - row) * ncols;
    std::memcpy(r.heights.data() + row * ncols, top_down.data() + src, ncols * sizeof(float));
  }
  apply_fill_policy(r.heights, options, nodata);
  r.validate();
  return r;
}

}  // namespace

void DsmRaster::validate() const {
  if (n_rows < 2 || n_cols < 2) throw std::invalid_argument("raster must be at least 2x2");
  if (!(cell_size > 0.0)) throw std::invalid_argument("raster cell size must be positive");
  if (heights.size() != n_rows * n_cols) throw std::invalid_argument("raster height count mismatch");
  for (const float h : heights)
    if (!std::isfinite(h)) throw std::invalid_argument("raster heights must be finite");
}

DsmRaster load_raster(const std::filesystem::path& path, RasterFormat format,
                      const RasterLoadOptions& options) {
  switch (format) {
    case RasterFormat::Dsr1: return load_dsr1(path, options);
    case RasterFormat::AsciiGrid: return load_ascii_grid(path, options);
  }
  throw std::invalid_argument("unknown raster format");
}

void save_raster(const DsmRaster& raster, const std::filesystem::path& path) {
  raster.validate();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot create raster file: " + path.string());
  write_magic(os, kDsr1Magic);
  write_le<double>(os, raster.origin_x);
  write_le<double>(os, raster.origin_y);
  write_le<double>(os, raster.cell_size);
  write_le<std::uint64_t>(os, raster.n_rows);
  write_le<std::uint64_t>(os, raster.n_cols);
  write_le_array(os, raster.heights.data(), raster.heights.size());
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

double nearest_neighbor_sample(const DsmRaster& raster, const GridPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw std::invalid_argument("sample point must be finite");
  if (!raster.contains(p))
    throw std::out_of_range("sample point outside raster extent");
  const double tx = (p.x - raster.origin_x) / raster.cell_size;
  const double ty = (p.y - raster.origin_y) / raster.cell_size;
  // ceil(t - 0.5) rounds to nearest with halves toward the lower index,
  // which realises the lower row-major winner on distance ties.
  auto to_index = [](double t, std::size_t n) {
    auto i = static_cast<long long>(std::ceil(t - 0.5));
    return static_cast<std::size_t>(std::clamp<long long>(i, 0, static_cast<long long>(n) - 1));
  };
  const std::size_t c = to_index(tx, raster.n_cols);
  const std::size_t r = to_index(ty, raster.n_rows);
  return static_cast<double>(raster.at(r, c));
}

Grid2D bilinear_resample(const Grid2D& src, std::size_t target_rows) {
  if (src.rows < 2) throw std::invalid_argument("resample needs at least 2 source rows");
  if (src.cols < 1) throw std::invalid_argument("resample needs at least 1 column");
  if (target_rows < 2) throw std::invalid_argument("resample target must have at least 2 rows");
  for (const float x : src.v)
    if (!std::isfinite(x)) throw std::invalid_argument("resample input must be finite");

  Grid2D out(target_rows, src.cols);
  const double scale = static_cast<double>(src.rows - 1) / static_cast<double>(target_rows - 1);
  for (std::size_t r = 0; r < target_rows; ++r) {
    const double pos = static_cast<double>(r) * scale;
    const auto i0 = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i0);
    if (frac == 0.0) {
      std::memcpy(out.row(r), src.row(i0), src.cols * sizeof(float));
      continue;
    }
    const float* a = src.row(i0);
    const float* b = src.row(i0 + 1);
    float* o = out.row(r);
    for (std::size_t c = 0; c < src.cols; ++c)
      o[c] = static_cast<float>((1.0 - frac) * a[c] + frac * b[c]);
  }
  return out;
}

}  // namespace plmap
