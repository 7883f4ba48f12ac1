#include "jcm/cli/format.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "jcm/error.hpp"

namespace jcm::cli {

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "cannot format number");
    return std::string(buf.data(), ptr);
}

void write_pnd_csv(std::ostream& out, const Pnd& pnd) {
    out << "n,p\n";
    for (std::size_t n = 0; n < pnd.probabilities.size(); ++n) {
        out << n << ',' << format_double(pnd.probabilities[n]) << '\n';
    }
}

void write_grid_csv(std::ostream& out, const PhaseGrid& grid) {
    out << "re,im,q\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
        const std::string im = format_double(grid.im(iy));
        for (int ix = 0; ix < grid.nx; ++ix) {
            out << format_double(grid.re(ix)) << ',' << im << ',' << format_double(grid.at(ix, iy)) << '\n';
        }
    }
}

void write_series_csv(std::ostream& out, std::string_view x_name, std::string_view y_name,
                      std::span<const double> x, std::span<const double> y) {
    out << x_name << ',' << y_name << '\n';
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        out << format_double(x[i]) << ',' << format_double(y[i]) << '\n';
    }
}

std::string slug(std::string_view expression) {
    std::string out;
    for (char c : expression) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') out.push_back(c);
        else if (c == '/') out.push_back('_');
        else if (c == '*') out.push_back('x');
    }
    return out.empty() ? "tau" : out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing " + path.string());
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace jcm::cli
