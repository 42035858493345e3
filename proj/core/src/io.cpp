#include "qtent/io.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace qtent {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvFile::CsvFile(const std::filesystem::path& path) : path_(path)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    out_.open(path, std::ios::binary);
    if (!out_) throw std::runtime_error("cannot open " + path.string());
}

void CsvFile::header(std::string_view key, std::string_view value)
{
    out_ << "# " << key << "=" << value << "\n";
}

void CsvFile::header(std::string_view key, double value)
{
    header(key, std::string_view(format_double(value)));
}

void CsvFile::header(std::string_view key, long long value)
{
    header(key, std::string_view(std::to_string(value)));
}

void CsvFile::header(std::string_view key, std::uint64_t value)
{
    header(key, std::string_view(std::to_string(value)));
}

void CsvFile::columns(std::initializer_list<std::string_view> names)
{
    bool first = true;
    for (std::string_view n : names) {
        if (!first) out_ << ",";
        out_ << n;
        first = false;
    }
    out_ << "\n";
}

void CsvFile::row(std::initializer_list<double> values)
{
    bool first = true;
    for (double v : values) {
        if (!first) out_ << ",";
        out_ << format_double(v);
        first = false;
    }
    out_ << "\n";
}

void CsvFile::raw_line(std::string_view line)
{
    out_ << line << "\n";
}

namespace {

/// Fixed blue -> cyan -> yellow -> red ramp; t in [0,1].
std::array<unsigned char, 3> colormap(double t)
{
    t = std::min(1.0, std::max(0.0, t));
    double r, g, b;
    if (t < 1.0 / 3.0) {
        const double u = 3.0 * t;
        r = 0.0; g = u; b = 1.0;
    } else if (t < 2.0 / 3.0) {
        const double u = 3.0 * t - 1.0;
        r = u; g = 1.0; b = 1.0 - u;
    } else {
        const double u = 3.0 * t - 2.0;
        r = 1.0; g = 1.0 - u; b = 0.0;
    }
    return {static_cast<unsigned char>(255.0 * r + 0.5),
            static_cast<unsigned char>(255.0 * g + 0.5),
            static_cast<unsigned char>(255.0 * b + 0.5)};
}

} // namespace

void write_ppm_heatmap(const std::filesystem::path& path, const HusimiGrid& grid)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    const int n = grid.size;
    out << "P6\n" << n << " " << n << "\n255\n";
    const double vmax = grid.max_value();
    const double scale = vmax > 0.0 ? 1.0 / vmax : 0.0;
    for (int row = n - 1; row >= 0; --row) {  // p0 descending top row = largest p0
        for (int col = 0; col < n; ++col) {
            const auto rgb = colormap(grid.at(row, col) * scale);
            out.write(reinterpret_cast<const char*>(rgb.data()), 3);
        }
    }
}

void write_husimi_csv(const std::filesystem::path& path, const HusimiGrid& grid,
                      std::initializer_list<std::pair<std::string_view, std::string>>
                          extra_headers)
{
    CsvFile csv(path);
    const char* variant = grid.variant == HusimiVariant::gaussian ? "gaussian"
                          : grid.variant == HusimiVariant::modified_p ? "modified_p"
                                                                      : "modified_theta";
    csv.header("variant", variant);
    csv.header("n_q", static_cast<long long>(grid.n_q));
    csv.header("grid", static_cast<long long>(grid.size));
    for (const auto& [k, v] : extra_headers) csv.header(k, std::string_view(v));
    csv.columns({"theta0", "p0", "value"});
    for (int ip0 = 0; ip0 < grid.size; ++ip0)
        for (int il = 0; il < grid.size; ++il)
            csv.row({grid.theta0_of_col(il), grid.p0_of_row(ip0), grid.at(ip0, il)});
}

} // namespace qtent
