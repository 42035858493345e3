#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>

#include "qtent/husimi.hpp"

namespace qtent {

/// CSV with `# key=value` header lines followed by one column-name line and
/// comma-separated records. Numeric formatting is fixed at %.17g so identical
/// runs produce byte-identical files.
class CsvFile {
public:
    explicit CsvFile(const std::filesystem::path& path);

    void header(std::string_view key, std::string_view value);
    void header(std::string_view key, double value);
    void header(std::string_view key, long long value);
    void header(std::string_view key, std::uint64_t value);
    void columns(std::initializer_list<std::string_view> names);
    void row(std::initializer_list<double> values);
    void raw_line(std::string_view line);

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

std::string format_double(double v);

/// Binary P6 heatmap, width = height = sqrt(N), rows ordered p0 descending,
/// linear value scale [0, max] through a fixed blue-to-red colormap.
void write_ppm_heatmap(const std::filesystem::path& path, const HusimiGrid& grid);

/// CSV of (theta0, p0, value) triples plus the usual header block.
void write_husimi_csv(const std::filesystem::path& path, const HusimiGrid& grid,
                      std::initializer_list<std::pair<std::string_view, std::string>>
                          extra_headers = {});

} // namespace qtent
