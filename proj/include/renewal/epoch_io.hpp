#pragma once

#include <charconv>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "renewal/simulate.hpp"

namespace renewal {

// Epoch-pair batches on disk: header `r0,r0_status,r1,r1_status`, one pair
// per row, infinities spelled `inf`. Values are printed with shortest
// round-trip precision so a write/read cycle is lossless.

namespace detail {

inline std::string format_epoch(double v) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_epoch(std::string_view field, std::size_t line) {
    if (field == "inf") return kInfinity;
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw std::runtime_error("bad epoch value '" + std::string(field) + "' on line " +
                                 std::to_string(line));
    return value;
}

inline EpochStatus parse_status(std::string_view field, std::size_t line) {
    if (field == "Observed") return EpochStatus::Observed;
    if (field == "InfiniteExact") return EpochStatus::InfiniteExact;
    if (field == "HorizonCensored") return EpochStatus::HorizonCensored;
    throw std::runtime_error("bad status '" + std::string(field) + "' on line " +
                             std::to_string(line));
}

} // namespace detail

inline void write_epoch_pairs_csv(std::ostream& os, std::span<const EpochPair> pairs) {
    os << "r0,r0_status,r1,r1_status\n";
    for (const auto& pair : pairs) {
        os << detail::format_epoch(pair.r0) << ',' << to_string(pair.r0_status) << ','
           << detail::format_epoch(pair.r1) << ',' << to_string(pair.r1_status) << '\n';
    }
}

inline std::vector<EpochPair> read_epoch_pairs_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("empty epoch-pair CSV");
    if (line.ends_with('\r')) line.pop_back();
    if (line != "r0,r0_status,r1,r1_status")
        throw std::runtime_error("unexpected CSV header '" + line + "'");

    std::vector<EpochPair> pairs;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.ends_with('\r')) line.pop_back();
        if (line.empty()) continue;
        std::string_view rest = line;
        std::string_view fields[4];
        for (int i = 0; i < 4; ++i) {
            const auto comma = rest.find(',');
            if (i < 3 && comma == std::string_view::npos)
                throw std::runtime_error("expected 4 fields on line " + std::to_string(lineno));
            fields[i] = i < 3 ? rest.substr(0, comma) : rest;
            if (i < 3) rest.remove_prefix(comma + 1);
        }
        if (fields[3].find(',') != std::string_view::npos)
            throw std::runtime_error("expected 4 fields on line " + std::to_string(lineno));
        EpochPair pair;
        pair.r0 = detail::parse_epoch(fields[0], lineno);
        pair.r0_status = detail::parse_status(fields[1], lineno);
        pair.r1 = detail::parse_epoch(fields[2], lineno);
        pair.r1_status = detail::parse_status(fields[3], lineno);
        pairs.push_back(pair);
    }
    return pairs;
}

inline void write_epoch_pairs_csv_file(const std::string& path,
                                       std::span<const EpochPair> pairs) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_epoch_pairs_csv(os, pairs);
}

inline std::vector<EpochPair> read_epoch_pairs_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_epoch_pairs_csv(is);
}

} // namespace renewal
