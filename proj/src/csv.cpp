#include "wiener/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wiener::csv {

namespace {

std::ofstream open_for_write(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + file.string() + " for writing");
    }
    return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) {
        throw IoError("write to " + file.string() + " failed");
    }
}

std::ifstream open_for_read(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + file.string() + " for reading");
    }
    return in;
}

[[noreturn]] void parse_fail(const std::filesystem::path& file,
                             std::size_t line, const std::string& what) {
    throw ValidationError(file.string() + ":" + std::to_string(line) + ": " +
                          what);
}

// Tolerates a trailing CR so foreign files still load; emitted files are LF.
void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

double parse_double(std::string_view field, const std::filesystem::path& file,
                    std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        parse_fail(file, line, "expected a number, got '" + std::string(field) + "'");
    }
    return v;
}

std::size_t parse_index(std::string_view field,
                        const std::filesystem::path& file, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        parse_fail(file, line, "expected an index, got '" + std::string(field) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

void expect_header(std::ifstream& in, const std::filesystem::path& file,
                   const std::string& expected) {
    std::string line;
    if (!std::getline(in, line)) {
        parse_fail(file, 1, "missing header row");
    }
    chomp(line);
    if (line != expected) {
        parse_fail(file, 1, "expected header '" + expected + "', got '" + line + "'");
    }
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_marginal(const std::filesystem::path& file,
                    std::span<const double> values) {
    auto out = open_for_write(file);
    out << "k,z\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << (k + 1) << ',' << format_double(values[k]) << '\n';
    }
    finish_write(out, file);
}

std::vector<double> read_marginal(const std::filesystem::path& file) {
    auto in = open_for_read(file);
    expect_header(in, file, "k,z");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != 2) {
            parse_fail(file, lineno, "expected 2 fields");
        }
        if (parse_index(fields[0], file, lineno) != values.size() + 1) {
            parse_fail(file, lineno, "k column must run 1..n");
        }
        values.push_back(parse_double(fields[1], file, lineno));
    }
    return values;
}

void write_paired(const std::filesystem::path& file,
                  std::span<const std::pair<double, double>> pairs) {
    auto out = open_for_write(file);
    out << "k,z1,z2\n";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        out << (k + 1) << ',' << format_double(pairs[k].first) << ','
            << format_double(pairs[k].second) << '\n';
    }
    finish_write(out, file);
}

std::vector<std::pair<double, double>>
read_paired(const std::filesystem::path& file) {
    auto in = open_for_read(file);
    expect_header(in, file, "k,z1,z2");
    std::vector<std::pair<double, double>> pairs;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != 3) {
            parse_fail(file, lineno, "expected 3 fields");
        }
        if (parse_index(fields[0], file, lineno) != pairs.size() + 1) {
            parse_fail(file, lineno, "k column must run 1..n");
        }
        pairs.emplace_back(parse_double(fields[1], file, lineno),
                           parse_double(fields[2], file, lineno));
    }
    return pairs;
}

void write_paths(const std::filesystem::path& file,
                 const std::vector<PathGrid>& paths) {
    if (paths.empty()) {
        throw ValidationError("no paths to write");
    }
    const auto& times = paths.front().times();
    for (const auto& p : paths) {
        if (p.times() != times) {
            throw ValidationError("all paths must share one time grid");
        }
    }
    auto out = open_for_write(file);
    out << 't';
    for (std::size_t j = 0; j < paths.size(); ++j) {
        out << ",path_" << (j + 1);
    }
    out << '\n';
    for (std::size_t i = 0; i < times.size(); ++i) {
        out << format_double(times[i]);
        for (const auto& p : paths) {
            out << ',' << format_double(p.values()[i]);
        }
        out << '\n';
    }
    finish_write(out, file);
}

void write_path_frame(const std::filesystem::path& file, const PathGrid& path) {
    auto out = open_for_write(file);
    out << "t,x\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
        out << format_double(path.times()[i]) << ','
            << format_double(path.values()[i]) << '\n';
    }
    finish_write(out, file);
}

void write_sweep(const std::filesystem::path& file, const SweepResult& sweep) {
    auto out = open_for_write(file);
    out << "n,estimate,true_value\n";
    for (const auto& row : sweep.rows) {
        out << row.n << ',' << format_double(row.estimate) << ','
            << format_double(row.true_value) << '\n';
    }
    finish_write(out, file);
}

void write_rmse(const std::filesystem::path& file,
                std::span<const RmseRow> rows) {
    auto out = open_for_write(file);
    out << "n,rmse\n";
    for (const auto& row : rows) {
        out << row.n << ',' << format_double(row.rmse) << '\n';
    }
    finish_write(out, file);
}

} // namespace wiener::csv
