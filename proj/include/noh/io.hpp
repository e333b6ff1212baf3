#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "noh/process.hpp"
#include "noh/stats.hpp"
#include "noh/theory.hpp"

namespace noh {

namespace detail {

/// Shortest decimal form that round-trips; locale-independent, so emitted
/// files are byte-stable across runs.
inline std::string format_double(double x)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view tok, const std::string &context)
{
    double out = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::runtime_error(context + ": bad number '" + std::string(tok) + "'");
    return out;
}

inline std::uint64_t parse_u64(std::string_view tok, const std::string &context)
{
    std::uint64_t out = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::runtime_error(context + ": bad integer '" + std::string(tok) + "'");
    return out;
}

inline std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::ofstream open_out(const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

inline std::ifstream open_in(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

inline void expect_header(std::ifstream &in, std::string_view expected,
                          const std::filesystem::path &path)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty file: " + path.string());
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != expected)
        throw std::runtime_error("unexpected header in " + path.string() + ": " + line);
}

} // namespace detail

// ---- size series ----

inline void write_size_series_csv(const std::filesystem::path &path, const size_series &s)
{
    auto out = detail::open_out(path);
    out << "t,size\n";
    for (std::size_t i = 0; i < s.t.size(); ++i)
        out << detail::format_double(s.t[i]) << ',' << s.size[i] << '\n';
}

inline size_series read_size_series_csv(const std::filesystem::path &path)
{
    auto in = detail::open_in(path);
    detail::expect_header(in, "t,size", path);
    size_series s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.back() == '\r')
            line.pop_back();
        const auto cols = detail::split(line, ',');
        if (cols.size() != 2)
            throw std::runtime_error("bad row in " + path.string() + ": " + line);
        s.t.push_back(detail::parse_double(cols[0], path.string()));
        s.size.push_back(detail::parse_u64(cols[1], path.string()));
    }
    return s;
}

// ---- online-degree series ----

struct online_degree_row {
    double t;
    vertex_id vertex;
    std::uint32_t online_degree;

    bool operator==(const online_degree_row &) const = default;
};

inline void write_online_degree_series_csv(const std::filesystem::path &path,
                                           std::span<const online_degree_row> rows)
{
    auto out = detail::open_out(path);
    out << "t,vertex,online_degree\n";
    for (const auto &r : rows)
        out << detail::format_double(r.t) << ',' << r.vertex << ',' << r.online_degree << '\n';
}

inline std::vector<online_degree_row>
read_online_degree_series_csv(const std::filesystem::path &path)
{
    auto in = detail::open_in(path);
    detail::expect_header(in, "t,vertex,online_degree", path);
    std::vector<online_degree_row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.back() == '\r')
            line.pop_back();
        const auto cols = detail::split(line, ',');
        if (cols.size() != 3)
            throw std::runtime_error("bad row in " + path.string() + ": " + line);
        rows.push_back({detail::parse_double(cols[0], path.string()),
                        static_cast<vertex_id>(detail::parse_u64(cols[1], path.string())),
                        static_cast<std::uint32_t>(detail::parse_u64(cols[2], path.string()))});
    }
    return rows;
}

// ---- snapshots ----

inline void write_snapshot_json(const std::filesystem::path &path, const online_snapshot &snap)
{
    nlohmann::json j;
    j["t"] = snap.t;
    j["online"] = snap.online;
    j["active_edges"] = snap.active_edges;
    auto out = detail::open_out(path);
    out << j.dump(2) << '\n';
}

struct snapshot_summary {
    double t = 0;
    std::vector<vertex_id> online;
    std::size_t active_edges = 0;
};

inline snapshot_summary read_snapshot_json(const std::filesystem::path &path)
{
    auto in = detail::open_in(path);
    nlohmann::json j;
    in >> j;
    snapshot_summary s;
    s.t = j.at("t").get<double>();
    s.online = j.at("online").get<std::vector<vertex_id>>();
    s.active_edges = j.at("active_edges").get<std::size_t>();
    return s;
}

// ---- theory PMF ----

inline void write_pmf_csv(const std::filesystem::path &path, const theory_params &p)
{
    auto out = detail::open_out(path);
    out << "n,prob,log_prob\n";
    const auto pmf = stationary_pmf(p);
    for (std::size_t n = 0; n <= p.n0; ++n)
        out << n << ',' << detail::format_double(pmf[n]) << ','
            << detail::format_double(log_stationary_pmf(p, n)) << '\n';
}

struct pmf_rows {
    std::vector<std::uint64_t> n;
    std::vector<double> prob;
    std::vector<double> log_prob;
};

inline pmf_rows read_pmf_csv(const std::filesystem::path &path)
{
    auto in = detail::open_in(path);
    detail::expect_header(in, "n,prob,log_prob", path);
    pmf_rows rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.back() == '\r')
            line.pop_back();
        const auto cols = detail::split(line, ',');
        if (cols.size() != 3)
            throw std::runtime_error("bad row in " + path.string() + ": " + line);
        rows.n.push_back(detail::parse_u64(cols[0], path.string()));
        rows.prob.push_back(detail::parse_double(cols[1], path.string()));
        rows.log_prob.push_back(detail::parse_double(cols[2], path.string()));
    }
    return rows;
}

// ---- histograms ----

inline void write_histogram_csv(const std::filesystem::path &path, const histogram &h)
{
    auto out = detail::open_out(path);
    out << "value,count,frequency\n";
    for (const auto &[value, count] : h.bins())
        out << value << ',' << count << ','
            << detail::format_double(static_cast<double>(count) /
                                     static_cast<double>(h.total()))
            << '\n';
}

inline histogram read_histogram_csv(const std::filesystem::path &path)
{
    auto in = detail::open_in(path);
    detail::expect_header(in, "value,count,frequency", path);
    histogram h;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.back() == '\r')
            line.pop_back();
        const auto cols = detail::split(line, ',');
        if (cols.size() != 3)
            throw std::runtime_error("bad row in " + path.string() + ": " + line);
        std::int64_t value = 0;
        const auto res = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), value);
        if (res.ec != std::errc{})
            throw std::runtime_error("bad value in " + path.string());
        h.add(value, detail::parse_u64(cols[1], path.string()));
    }
    return h;
}

// ---- rate matrix ----

inline void write_rate_matrix_csv(const std::filesystem::path &path, const rate_matrix &q)
{
    auto out = detail::open_out(path);
    for (std::size_t i = 0; i < q.dimension(); ++i) {
        for (std::size_t j = 0; j < q.dimension(); ++j) {
            if (j)
                out << ',';
            out << detail::format_double(q(i, j));
        }
        out << '\n';
    }
}

// ---- fit reports (Table-4 column names) ----

struct fit_report {
    double kl = 0;
    double clustering = 0;
    double mean_degree = 0;
    double assortativity = 0;
    double skewness = 0;
};

struct fit_row {
    std::string model;
    bool has_kl = true; // the real network's own row carries no KL
    fit_report report;
};

inline void write_fit_report_csv(const std::filesystem::path &path,
                                 std::span<const fit_row> rows)
{
    auto out = detail::open_out(path);
    out << "model,KL,Clustering,Mean degree,Assortativity,Skewness\n";
    for (const auto &r : rows) {
        out << r.model << ',';
        if (r.has_kl)
            out << detail::format_double(r.report.kl);
        out << ',' << detail::format_double(r.report.clustering) << ','
            << detail::format_double(r.report.mean_degree) << ','
            << detail::format_double(r.report.assortativity) << ','
            << detail::format_double(r.report.skewness) << '\n';
    }
}

inline std::vector<fit_row> read_fit_report_csv(const std::filesystem::path &path)
{
    auto in = detail::open_in(path);
    detail::expect_header(in, "model,KL,Clustering,Mean degree,Assortativity,Skewness", path);
    std::vector<fit_row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.back() == '\r')
            line.pop_back();
        const auto cols = detail::split(line, ',');
        if (cols.size() != 6)
            throw std::runtime_error("bad row in " + path.string() + ": " + line);
        fit_row r;
        r.model = std::string(cols[0]);
        r.has_kl = !cols[1].empty();
        if (r.has_kl)
            r.report.kl = detail::parse_double(cols[1], path.string());
        r.report.clustering = detail::parse_double(cols[2], path.string());
        r.report.mean_degree = detail::parse_double(cols[3], path.string());
        r.report.assortativity = detail::parse_double(cols[4], path.string());
        r.report.skewness = detail::parse_double(cols[5], path.string());
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace noh
